#pragma once

/**
 * @file space.hpp
 * @brief Pseudo-Riemannian vector spaces, causal classification of
 *        2-planes, Grassmannian sampling, and admissibility checking.
 */

#include "jordanip/linalg.hpp"
#include "jordanip/matrix.hpp"
#include "jordanip/prng.hpp"
#include "jordanip/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace jordanip {

using QMatrix = Matrix<Rational>;
using QVector = std::vector<Rational>;

enum class CausalType { spacelike, timelike, mixed, degenerate };

inline std::string to_string(CausalType t) {
    switch (t) {
        case CausalType::spacelike: return "spacelike";
        case CausalType::timelike: return "timelike";
        case CausalType::mixed: return "mixed";
        case CausalType::degenerate: return "degenerate";
    }
    throw std::logic_error("unreachable");
}

inline CausalType causal_type_from_string(const std::string& s) {
    if (s == "spacelike") return CausalType::spacelike;
    if (s == "timelike") return CausalType::timelike;
    if (s == "mixed") return CausalType::mixed;
    if (s == "degenerate") return CausalType::degenerate;
    throw std::invalid_argument("unknown causal type: " + s);
}

struct Signature {
    std::size_t p;  // negative squares
    std::size_t q;  // positive squares
    bool operator==(const Signature&) const = default;
};

/// Counts of negative and positive squares by exact symmetric congruence
/// diagonalization. p + q < dim signals a degenerate form.
inline Signature signature(const QMatrix& gram) {
    if (!gram.is_square()) throw std::invalid_argument("signature: non-square");
    if (gram != gram.transpose()) throw std::invalid_argument("signature: non-symmetric");
    QMatrix m = gram;
    const std::size_t n = m.rows();
    Signature sig{0, 0};
    auto swap_rc = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < n; ++j) std::swap(m(a, j), m(b, j));
        for (std::size_t i = 0; i < n; ++i) std::swap(m(i, a), m(i, b));
    };
    for (std::size_t r = 0; r < n; ++r) {
        // find a nonzero diagonal entry in the remaining block
        std::size_t piv = n;
        for (std::size_t k = r; k < n; ++k)
            if (m(k, k) != 0) { piv = k; break; }
        if (piv == n) {
            // all diagonals zero; a nonzero off-diagonal m(i,j) gives
            // m(i,i) = 2*m(i,j) != 0 after row_i += row_j (congruence)
            std::size_t oi = n, oj = n;
            for (std::size_t i = r; i < n && oi == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (m(i, j) != 0) { oi = i; oj = j; break; }
            if (oi == n) break;  // remaining block is zero: degenerate directions
            for (std::size_t j = 0; j < n; ++j) m(oi, j) += m(oj, j);
            for (std::size_t i = 0; i < n; ++i) m(i, oi) += m(i, oj);
            piv = oi;
        }
        swap_rc(r, piv);
        Rational d = m(r, r);
        if (sgn(d) > 0) ++sig.q; else ++sig.p;
        for (std::size_t i = r + 1; i < n; ++i) {
            if (m(i, r) == 0) continue;
            Rational f = m(i, r) / d;
            for (std::size_t j = 0; j < n; ++j) m(i, j) -= f * m(r, j);
            for (std::size_t j = 0; j < n; ++j) m(j, i) -= f * m(j, r);
        }
    }
    return sig;
}

class InnerProductSpace {
  public:
    explicit InnerProductSpace(QMatrix gram) : gram_(std::move(gram)) {
        if (!gram_.is_square()) throw std::invalid_argument("space: gram must be square");
        if (gram_ != gram_.transpose()) throw std::invalid_argument("space: gram must be symmetric");
        sig_ = signature(gram_);
        if (sig_.p + sig_.q != dim()) throw std::invalid_argument("space: gram is degenerate");
        gram_inv_ = inverse(gram_);
    }

    std::size_t dim() const { return gram_.rows(); }
    const QMatrix& gram() const { return gram_; }
    const QMatrix& gram_inv() const { return gram_inv_; }
    Signature sig() const { return sig_; }

    Rational inner(const QVector& x, const QVector& y) const {
        if (x.size() != dim() || y.size() != dim())
            throw std::invalid_argument("space: vector dimension mismatch");
        Rational acc(0);
        for (std::size_t i = 0; i < dim(); ++i) {
            if (x[i] == 0) continue;
            Rational row(0);
            for (std::size_t j = 0; j < dim(); ++j) row += gram_(i, j) * y[j];
            acc += x[i] * row;
        }
        return acc;
    }

    bool operator==(const InnerProductSpace& o) const { return gram_ == o.gram_; }

  private:
    QMatrix gram_;
    QMatrix gram_inv_;
    Signature sig_;
};

struct PlaneBasis {
    QVector e1;
    QVector e2;
    QMatrix h;       // 2x2 restriction of the inner product
    Rational det_h;  // h11*h22 - h12^2
    CausalType causal_type;
};

inline PlaneBasis classify_plane(const InnerProductSpace& space, const QVector& e1,
                                 const QVector& e2) {
    QMatrix span(space.dim(), 2);
    for (std::size_t i = 0; i < space.dim(); ++i) {
        span(i, 0) = e1[i];
        span(i, 1) = e2[i];
    }
    if (rank(span) != 2) throw std::invalid_argument("classify_plane: vectors are dependent");
    QMatrix h(2, 2);
    h(0, 0) = space.inner(e1, e1);
    h(0, 1) = h(1, 0) = space.inner(e1, e2);
    h(1, 1) = space.inner(e2, e2);
    Rational det = h(0, 0) * h(1, 1) - h(0, 1) * h(0, 1);
    CausalType type;
    if (det == 0)
        type = CausalType::degenerate;
    else if (sgn(det) < 0)
        type = CausalType::mixed;
    else
        type = sgn(h(0, 0)) > 0 ? CausalType::spacelike : CausalType::timelike;
    return PlaneBasis{e1, e2, std::move(h), std::move(det), type};
}

struct SamplerExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline QVector sample_vector(SplitMix64& rng, std::size_t dim, long bound) {
    QVector v(dim);
    for (auto& x : v) x = Rational(rng.next_int(bound));
    return v;
}

constexpr std::size_t kDefaultAttemptLimit = 20000;

/// Rejection-sample a plane of the wanted causal type; the returned basis
/// is orthogonal (one exact Gram-Schmidt step) whenever (e1,e1) != 0.
/// Deterministic given the seed.
inline PlaneBasis sample_plane(const InnerProductSpace& space, CausalType wanted,
                               std::uint64_t seed, long bound,
                               std::size_t attempt_limit = kDefaultAttemptLimit) {
    if (wanted == CausalType::degenerate)
        throw std::invalid_argument("sample_plane: degenerate planes are not sampled");
    SplitMix64 rng(seed);
    for (std::size_t attempt = 0; attempt < attempt_limit; ++attempt) {
        QVector e1 = sample_vector(rng, space.dim(), bound);
        QVector e2 = sample_vector(rng, space.dim(), bound);
        try {
            PlaneBasis plane = classify_plane(space, e1, e2);
            if (plane.causal_type != wanted) continue;
            if (plane.h(0, 0) != 0) {
                Rational f = plane.h(0, 1) / plane.h(0, 0);
                for (std::size_t i = 0; i < e2.size(); ++i) e2[i] -= f * e1[i];
                plane = classify_plane(space, e1, e2);
            }
            return plane;
        } catch (const std::invalid_argument&) {
            continue;  // dependent sample
        }
    }
    throw SamplerExhausted("sample_plane: attempt limit reached for " + to_string(wanted) +
                           " plane");
}

class ComplexStructure {
  public:
    ComplexStructure(const InnerProductSpace& space, QMatrix j) : j_(std::move(j)) {
        const std::size_t n = space.dim();
        if (!j_.is_square() || j_.rows() != n)
            throw std::invalid_argument("complex structure: dimension mismatch");
        if (n % 2 != 0) throw std::invalid_argument("complex structure: dimension must be even");
        if (j_ * j_ != -QMatrix::identity(n))
            throw std::invalid_argument("complex structure: J^2 != -Id");
        if (j_.transpose() * space.gram() * j_ != space.gram())
            throw std::invalid_argument("complex structure: J is not pseudo-Hermitian");
        if (space.sig().p % 2 != 0 || space.sig().q % 2 != 0)
            throw std::invalid_argument("complex structure: p and q must be even");
    }

    const QMatrix& mat() const { return j_; }
    QVector apply(const QVector& x) const { return j_ * x; }

  private:
    QMatrix j_;
};

/// Sample a complex line {x, Jx} with (x,x) of the wanted sign. The
/// restricted form is forced to be diag(s, s) with s = (x,x) because
/// (x, Jx) = 0 for any pseudo-Hermitian J.
inline PlaneBasis sample_complex_line(const InnerProductSpace& space, const ComplexStructure& j,
                                      CausalType wanted, std::uint64_t seed, long bound,
                                      std::size_t attempt_limit = kDefaultAttemptLimit) {
    if (wanted != CausalType::spacelike && wanted != CausalType::timelike)
        throw std::invalid_argument("sample_complex_line: there are no mixed complex lines");
    SplitMix64 rng(seed);
    int want_sign = wanted == CausalType::spacelike ? 1 : -1;
    for (std::size_t attempt = 0; attempt < attempt_limit; ++attempt) {
        QVector x = sample_vector(rng, space.dim(), bound);
        Rational s = space.inner(x, x);
        if (sgn(s) != want_sign) continue;
        PlaneBasis plane = classify_plane(space, x, j.apply(x));
        if (plane.h(0, 1) != 0 || plane.h(1, 1) != s)
            throw std::logic_error("sample_complex_line: J is not compatible with the metric");
        return plane;
    }
    throw SamplerExhausted("sample_complex_line: attempt limit reached for " + to_string(wanted) +
                           " complex line");
}

struct AdmissibleMap {
    QMatrix phi;
    int delta;  // phi^2 = delta * Id, with delta in {+1, -1, 0}
};

/// Verify the two admissibility conditions: phi self-adjoint with
/// phi^2 in {Id, -Id, 0}, and ker(phi) free of spacelike vectors.
inline AdmissibleMap check_admissible(const InnerProductSpace& space, const QMatrix& phi) {
    const std::size_t n = space.dim();
    if (!phi.is_square() || phi.rows() != n)
        throw std::invalid_argument("check_admissible: dimension mismatch");
    QMatrix gp = space.gram() * phi;
    if (gp != gp.transpose())
        throw std::invalid_argument("check_admissible: phi is not self-adjoint");
    QMatrix sq = phi * phi;
    int delta;
    if (sq == QMatrix::identity(n))
        delta = 1;
    else if (sq == -QMatrix::identity(n))
        delta = -1;
    else if (sq.is_zero())
        delta = 0;
    else
        throw std::invalid_argument("check_admissible: phi^2 is not Id, -Id, or 0");
    std::vector<QVector> ker = nullspace(phi);
    if (!ker.empty()) {
        QMatrix restricted(ker.size(), ker.size());
        for (std::size_t i = 0; i < ker.size(); ++i)
            for (std::size_t j = 0; j < ker.size(); ++j)
                restricted(i, j) = space.inner(ker[i], ker[j]);
        if (signature(restricted).q != 0)
            throw std::invalid_argument("check_admissible: kernel contains a spacelike vector");
    }
    return AdmissibleMap{phi, delta};
}

struct AdmissibleTriple {
    AdmissibleMap phi1;
    AdmissibleMap phi2;
    QMatrix j;
};

/// Verify the triple identities; the first violated one is reported by name.
inline AdmissibleTriple check_triple(const InnerProductSpace& space, const QMatrix& phi1,
                                     const QMatrix& phi2, const ComplexStructure& j) {
    AdmissibleMap m1 = check_admissible(space, phi1);
    AdmissibleMap m2 = check_admissible(space, phi2);
    const QMatrix& jm = j.mat();
    if (jm * phi1 != phi1 * jm)
        throw std::invalid_argument("check_triple: J*phi1 != phi1*J");
    if (jm * phi2 != -(phi2 * jm))
        throw std::invalid_argument("check_triple: J*phi2 != -phi2*J");
    if (!(phi1 * phi2 + phi2 * phi1).is_zero())
        throw std::invalid_argument("check_triple: phi1*phi2 + phi2*phi1 != 0");
    if (m1.delta == 0 && m2.delta == 0)
        throw std::invalid_argument("check_triple: phi1^2 = phi2^2 = 0 is not admissible");
    return AdmissibleTriple{std::move(m1), std::move(m2), jm};
}

}  // namespace jordanip
