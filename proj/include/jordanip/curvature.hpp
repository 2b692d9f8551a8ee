#pragma once

/**
 * @file curvature.hpp
 * @brief Algebraic curvature tensors of the form sum_i lambda_i * R_phi_i,
 *        their dense expansion, symmetry validation, and the curvature
 *        operator attached to a 2-plane.
 */

#include "jordanip/linalg.hpp"
#include "jordanip/space.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace jordanip {

/// Fully covariant 4-index array of exact values on basis vectors.
class DenseTensor {
  public:
    explicit DenseTensor(std::size_t m) : m_(m), data_(m * m * m * m, Rational(0)) {}

    std::size_t dim() const { return m_; }
    Rational& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
        return data_[((i * m_ + j) * m_ + k) * m_ + l];
    }
    const Rational& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
        return data_[((i * m_ + j) * m_ + k) * m_ + l];
    }
    bool operator==(const DenseTensor& o) const { return m_ == o.m_ && data_ == o.data_; }

  private:
    std::size_t m_;
    std::vector<Rational> data_;
};

struct CurvatureTerm {
    Rational lambda;
    AdmissibleMap phi;
};

constexpr std::size_t kDefaultDenseLimit = 16;

class CurvatureTensor {
  public:
    CurvatureTensor(InnerProductSpace space, std::vector<CurvatureTerm> terms)
        : space_(std::move(space)), terms_(std::move(terms)) {
        for (const auto& t : terms_)
            if (t.phi.phi.rows() != space_.dim())
                throw std::invalid_argument("curvature: phi dimension mismatch with space");
    }

    /// A tensor given only by its dense values (e.g. loaded from a file).
    CurvatureTensor(InnerProductSpace space, DenseTensor dense)
        : space_(std::move(space)), loaded_dense_(std::move(dense)) {
        if (loaded_dense_->dim() != space_.dim())
            throw std::invalid_argument("curvature: dense dimension mismatch with space");
    }

    /// Structured terms plus an explicit dense block, as loaded from a
    /// file; the dense block is authoritative for symmetry validation.
    CurvatureTensor(InnerProductSpace space, std::vector<CurvatureTerm> terms,
                    std::optional<DenseTensor> loaded_dense)
        : space_(std::move(space)),
          terms_(std::move(terms)),
          loaded_dense_(std::move(loaded_dense)) {
        for (const auto& t : terms_)
            if (t.phi.phi.rows() != space_.dim())
                throw std::invalid_argument("curvature: phi dimension mismatch with space");
        if (loaded_dense_ && loaded_dense_->dim() != space_.dim())
            throw std::invalid_argument("curvature: dense dimension mismatch with space");
    }

    const InnerProductSpace& space() const { return space_; }
    const std::vector<CurvatureTerm>& terms() const { return terms_; }
    bool has_loaded_dense() const { return loaded_dense_.has_value(); }

    /// Dense expansion. Recomputed on demand from the structured form
    /// (compute-equal semantics); a loaded dense block takes precedence.
    DenseTensor dense(std::size_t dense_limit = kDefaultDenseLimit) const {
        if (loaded_dense_) return *loaded_dense_;
        const std::size_t m = space_.dim();
        if (m > dense_limit)
            throw std::domain_error("curvature: dense expansion over the dimension limit");
        DenseTensor d(m);
        for (const auto& term : terms_) {
            if (term.lambda == 0) continue;
            QMatrix a = space_.gram() * term.phi.phi;  // a(i,j) = (phi e_j, e_i), symmetric
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j)
                    for (std::size_t k = 0; k < m; ++k)
                        for (std::size_t l = 0; l < m; ++l)
                            d(i, j, k, l) +=
                                term.lambda * (a(k, j) * a(l, i) - a(k, i) * a(l, j));
        }
        return d;
    }

  private:
    InnerProductSpace space_;
    std::vector<CurvatureTerm> terms_;
    std::optional<DenseTensor> loaded_dense_;
};

inline CurvatureTensor build_r_phi(const InnerProductSpace& space, const AdmissibleMap& phi,
                                   const Rational& c) {
    return CurvatureTensor(space, {CurvatureTerm{c, phi}});
}

inline CurvatureTensor combine(const CurvatureTensor& t1, const CurvatureTensor& t2) {
    if (!(t1.space() == t2.space()))
        throw std::invalid_argument("combine: tensors live on different spaces");
    std::vector<CurvatureTerm> terms = t1.terms();
    for (const auto& t : t2.terms()) terms.push_back(t);
    return CurvatureTensor(t1.space(), std::move(terms));
}

struct SymmetryReport {
    bool ok = true;
    std::string violated;                   // "antisymmetry", "pair-exchange", "bianchi"
    std::array<std::size_t, 4> witness{};   // first failing index quadruple
};

/// Exhaustive check of the three curvature symmetries on all basis
/// index quadruples; reports the first violation.
inline SymmetryReport validate_symmetries(const CurvatureTensor& t,
                                          std::size_t dense_limit = kDefaultDenseLimit) {
    DenseTensor d = t.dense(dense_limit);
    const std::size_t m = d.dim();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k)
                for (std::size_t l = 0; l < m; ++l) {
                    if (d(i, j, k, l) != -d(j, i, k, l))
                        return {false, "antisymmetry", {i, j, k, l}};
                    if (d(i, j, k, l) != d(k, l, i, j))
                        return {false, "pair-exchange", {i, j, k, l}};
                    if (d(i, j, k, l) + d(j, k, i, l) + d(k, i, j, l) != 0)
                        return {false, "bianchi", {i, j, k, l}};
                }
    return {};
}

/// The endomorphism z -> sum_i lambda_i [(phi_i y, z) phi_i x - (phi_i x, z) phi_i y].
inline QMatrix curvature_operator(const CurvatureTensor& t, const QVector& x, const QVector& y) {
    const InnerProductSpace& sp = t.space();
    const std::size_t m = sp.dim();
    if (x.size() != m || y.size() != m)
        throw std::invalid_argument("curvature_operator: vector dimension mismatch");
    if (t.has_loaded_dense() && t.terms().empty()) {
        // raise the last index of the contracted dense tensor with gram^-1
        DenseTensor d = t.dense();
        QMatrix b(m, m);  // b(z, w) = R(x, y, e_z, e_w)
        for (std::size_t i = 0; i < m; ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) {
                if (y[j] == 0) continue;
                Rational c = x[i] * y[j];
                for (std::size_t z = 0; z < m; ++z)
                    for (std::size_t w = 0; w < m; ++w) b(z, w) += c * d(i, j, z, w);
            }
        }
        return sp.gram_inv() * b.transpose();
    }
    QMatrix op(m, m);
    for (const auto& term : t.terms()) {
        if (term.lambda == 0) continue;
        QVector px = term.phi.phi * x;
        QVector py = term.phi.phi * y;
        QVector gpx = sp.gram() * px;
        QVector gpy = sp.gram() * py;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                op(i, j) += term.lambda * (px[i] * gpy[j] - py[i] * gpx[j]);
    }
    return op;
}

/// The skew-symmetric curvature operator of a plane, carried as the
/// exact pair (raw matrix, det h). The irrational normalizer
/// |det h|^{-1/2} is never materialized; consumers use scale-free
/// invariants, or the exact quotient m_raw / s when det h = s^2.
struct SkewOperator {
    QMatrix m_raw;  // R(e1, e2) as an endomorphism
    Rational det_h;
    PlaneBasis plane;
    bool mixed = false;  // det_h < 0: the usual normalizer sqrt(det_h) is imaginary here
    // m_raw = factor_u * factor_v^T when the tensor is term-based; the
    // column count is at most twice the term count, so consumers can
    // work at the rank scale instead of the ambient dimension
    std::optional<std::pair<QMatrix, QMatrix>> factors;
};

inline SkewOperator skew_operator(const CurvatureTensor& t, const PlaneBasis& plane) {
    if (plane.det_h == 0) throw std::invalid_argument("skew_operator: degenerate plane");
    QMatrix m_raw = curvature_operator(t, plane.e1, plane.e2);
    SkewOperator op{std::move(m_raw), plane.det_h, plane, sgn(plane.det_h) < 0, std::nullopt};
    if (!t.has_loaded_dense() || !t.terms().empty()) {
        const InnerProductSpace& sp = t.space();
        const std::size_t m = sp.dim();
        std::size_t k = 0;
        for (const auto& term : t.terms())
            if (term.lambda != 0) k += 2;
        QMatrix u(m, k), v(m, k);
        std::size_t col = 0;
        for (const auto& term : t.terms()) {
            if (term.lambda == 0) continue;
            QVector px = term.phi.phi * plane.e1;
            QVector py = term.phi.phi * plane.e2;
            QVector gpx = sp.gram() * px;
            QVector gpy = sp.gram() * py;
            for (std::size_t i = 0; i < m; ++i) {
                u(i, col) = term.lambda * px[i];
                v(i, col) = gpy[i];
                u(i, col + 1) = -(term.lambda * py[i]);
                v(i, col + 1) = gpx[i];
            }
            col += 2;
        }
        op.factors = {std::move(u), std::move(v)};
    }
    return op;
}

struct RankProfile {
    bool constant = true;
    std::size_t rank_value = 0;
    std::size_t samples = 0;
    // two planes of distinct rank when not constant
    std::optional<std::pair<PlaneBasis, PlaneBasis>> witnesses;
    std::optional<std::pair<std::size_t, std::size_t>> witness_ranks;
};

/// Sample spacelike planes and test whether rank(R(e1,e2)) is constant;
/// rank is normalization-invariant, so no square roots are needed.
inline RankProfile spacelike_rank_profile(const CurvatureTensor& t, std::size_t n_samples,
                                          std::uint64_t seed, long bound) {
    RankProfile profile;
    SplitMix64 seeder(seed);
    std::optional<PlaneBasis> first_plane;
    for (std::size_t s = 0; s < n_samples; ++s) {
        PlaneBasis plane = sample_plane(t.space(), CausalType::spacelike, seeder.next(), bound);
        std::size_t r = rank(skew_operator(t, plane).m_raw);
        ++profile.samples;
        if (!first_plane) {
            first_plane = plane;
            profile.rank_value = r;
        } else if (r != profile.rank_value) {
            profile.constant = false;
            profile.witnesses = {*first_plane, plane};
            profile.witness_ranks = {profile.rank_value, r};
            return profile;
        }
    }
    return profile;
}

}  // namespace jordanip
