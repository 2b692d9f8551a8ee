#pragma once

/**
 * @file jordan.hpp
 * @brief Scale-free Jordan-structure invariants of the skew-symmetric
 *        curvature operator, IP-constancy verification over sampled
 *        Grassmannians, almost-complex checks, and the block/spectrum
 *        verifiers for the structured two-term tensors.
 *
 * The normalized operator R(pi) = det(h)^{-1/2} R(e1,e2) is irrational in
 * general, but N := R(pi)^2 = m_raw^2 / det(h) is an exact rational
 * matrix, and rank(m_raw^k) = rank(R(pi)^k). The pair (invariant factors
 * of N, rank sequence of m_raw) is therefore an exactly computable,
 * scale-free fingerprint of the complex Jordan class.
 */

#include "jordanip/curvature.hpp"
#include "jordanip/gaussian.hpp"
#include "jordanip/linalg.hpp"
#include "jordanip/space.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace jordanip {

using QPoly = Polynomial<Rational>;
using GMatrix = Matrix<GaussianRational>;
using GPoly = Polynomial<GaussianRational>;

/// Raised when a spectrum computation leaves the rational world or the
/// tensor fails to be almost complex where that is required.
struct SpectrumError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Ranks of m^1, m^2, ... up to the first stabilization (repeat or zero).
inline std::vector<std::size_t> rank_sequence(const QMatrix& m) {
    std::vector<std::size_t> seq;
    QMatrix power = m;
    std::size_t r = rank(power);
    seq.push_back(r);
    while (r != 0) {
        power = power * m;
        std::size_t next = rank(power);
        seq.push_back(next);
        if (next == r) break;
        r = next;
    }
    return seq;
}

namespace detail {

/// Nilpotent Jordan block exponents (ascending) from a rank-by-power
/// table: ranks_by_power[p] = rank(M^p) for p = 0 .. stable + 1, where
/// the last two entries agree (rank d of the stable range).
inline std::vector<std::size_t> nilpotent_exponents(const std::vector<std::size_t>& ranks_by_power) {
    std::vector<std::size_t> exps;
    const std::size_t top = ranks_by_power.size() - 2;
    for (std::size_t size = 1; size <= top; ++size) {
        // blocks of size >= k: rank(M^{k-1}) - rank(M^k), d cancels
        std::size_t ge_k = ranks_by_power[size - 1] - ranks_by_power[size];
        std::size_t ge_k1 = ranks_by_power[size] - ranks_by_power[size + 1];
        for (std::size_t c = ge_k1; c < ge_k; ++c) exps.push_back(size);
    }
    std::sort(exps.begin(), exps.end());
    return exps;
}

/// Merge the invariant-factor chain of the invertible part with the t^e
/// chain of the nilpotent part: t is coprime to every core factor, so
/// the combined chain pairs them off aligned at the largest entries.
inline std::vector<QPoly> merge_chains(const std::vector<QPoly>& core_factors,
                                       const std::vector<std::size_t>& t_exponents) {
    const std::size_t total = std::max(core_factors.size(), t_exponents.size());
    std::vector<QPoly> out;
    out.reserve(total);
    const QPoly t = QPoly::t();
    for (std::size_t i = 0; i < total; ++i) {
        QPoly g = QPoly::constant(Rational(1));
        std::size_t ci = core_factors.size() + i;
        if (ci >= total) g = core_factors[ci - total];
        std::size_t ti = t_exponents.size() + i;
        if (ti >= total)
            for (std::size_t e = 0; e < t_exponents[ti - total]; ++e) g = g * t;
        out.push_back(std::move(g));
    }
    return out;
}

/// Restriction of the map w -> apply(w) to the span of `basis`, as a
/// small matrix in those coordinates.
inline QMatrix restrict_to_span(const std::vector<QVector>& basis,
                                const std::vector<QVector>& images) {
    const std::size_t d = basis.size();
    const std::size_t n = basis.front().size();
    QMatrix w(n, d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < n; ++i) w(i, j) = basis[j][i];
    QMatrix a(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        auto coords = solve(w, images[j]);
        if (!coords) throw std::logic_error("fitting: stable range is not invariant");
        for (std::size_t i = 0; i < d; ++i) a(i, j) = (*coords)[i];
    }
    return a;
}

/// Invariant factors through the Fitting decomposition: split V into the
/// stable range (where M is invertible) and the generalized kernel
/// (where M is nilpotent), handle each part, and merge the divisor
/// chains. Equal to invariant_factors(M) but far cheaper when
/// rank(M) << dim, which is the curvature case (rank <= 4).
inline std::vector<QPoly> invariant_factors_lowrank(const QMatrix& m_mat) {
    const std::size_t n = m_mat.rows();
    std::vector<QMatrix> powers{m_mat};
    std::vector<std::size_t> ranks{n, rank(m_mat)};  // ranks[p] = rank(M^p)
    while (ranks.back() != 0 && ranks.back() != ranks[ranks.size() - 2]) {
        powers.push_back(powers.back() * m_mat);
        ranks.push_back(rank(powers.back()));
    }
    if (ranks.back() == 0) ranks.push_back(0);  // pad so the last two entries agree
    const std::size_t stable = ranks.size() - 2;
    const std::size_t d = ranks.back();

    if (stable == 0) return invariant_factors(m_mat);  // invertible: no nilpotent part
    std::vector<QPoly> core_factors;
    if (d > 0) {
        std::vector<QVector> basis = column_space_basis(powers[stable - 1]);
        std::vector<QVector> images;
        images.reserve(d);
        for (const auto& b : basis) images.push_back(m_mat * b);
        core_factors = invariant_factors(restrict_to_span(basis, images));
    }
    return merge_chains(core_factors, nilpotent_exponents(ranks));
}

/// rank(U * W * V^T) without forming the ambient product: column-reduce
/// X = U*W so X = Xb * S, then rank = rank(S * V^T) = rank(V * S^T).
inline std::size_t rank_factored(const QMatrix& u, const QMatrix& w, const QMatrix& v) {
    QMatrix x = u * w;
    QMatrix red = x;
    std::size_t r = rref(red).size();
    if (r == 0) return 0;
    QMatrix s_t(x.cols(), r);  // S^T, S = top r rows of rref(X)
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) s_t(j, i) = red(i, j);
    return rank(v * s_t);
}

/// Factored analogue of invariant_factors_lowrank for M = U * V^T.
inline std::vector<QPoly> invariant_factors_factored(const QMatrix& u, const QMatrix& v) {
    const std::size_t n = u.rows();
    const std::size_t k = u.cols();
    QMatrix g = v.transpose() * u;  // M^p = U * G^{p-1} * V^T
    std::vector<QMatrix> g_powers{QMatrix::identity(k)};
    std::vector<std::size_t> ranks{n, rank_factored(u, g_powers[0], v)};
    while (ranks.back() != 0 && ranks.back() != ranks[ranks.size() - 2]) {
        g_powers.push_back(g_powers.back() * g);
        ranks.push_back(rank_factored(u, g_powers.back(), v));
    }
    if (ranks.back() == 0) ranks.push_back(0);
    const std::size_t stable = ranks.size() - 2;
    const std::size_t d = ranks.back();

    if (stable == 0) return invariant_factors(u * v.transpose());  // invertible case
    std::vector<QPoly> core_factors;
    if (d > 0) {
        // range(M^stable) = col(Y * V^T) = col(Y * P), P a basis of col(V^T)
        QMatrix y = u * g_powers[stable - 1];
        std::vector<QVector> p_cols = column_space_basis(v.transpose());
        QMatrix yp(n, p_cols.size());
        for (std::size_t j = 0; j < p_cols.size(); ++j) {
            QVector col = y * p_cols[j];
            for (std::size_t i = 0; i < n; ++i) yp(i, j) = col[i];
        }
        std::vector<QVector> basis = column_space_basis(yp);
        if (basis.size() != d) throw std::logic_error("fitting: stable range dimension mismatch");
        std::vector<QVector> images;
        images.reserve(d);
        for (const auto& b : basis) {
            QVector vt_b = v.transpose() * b;
            images.push_back(u * vt_b);
        }
        core_factors = invariant_factors(restrict_to_span(basis, images));
    }
    return merge_chains(core_factors, nilpotent_exponents(ranks));
}

/// Rank sequence of M = U * V^T without ambient products.
inline std::vector<std::size_t> rank_sequence_factored(const QMatrix& u, const QMatrix& v) {
    QMatrix g = v.transpose() * u;
    QMatrix g_power = QMatrix::identity(u.cols());
    std::vector<std::size_t> seq;
    std::size_t r = rank_factored(u, g_power, v);
    seq.push_back(r);
    while (r != 0) {
        g_power = g_power * g;
        std::size_t next = rank_factored(u, g_power, v);
        seq.push_back(next);
        if (next == r) break;
        r = next;
    }
    return seq;
}

}  // namespace detail

struct JordanInvariant {
    std::vector<QPoly> inv_factors_sq;  // invariant factors of m_raw^2 / det_h
    std::vector<std::size_t> rank_seq;  // ranks of m_raw powers, stabilized

    bool operator==(const JordanInvariant& o) const {
        return inv_factors_sq == o.inv_factors_sq && rank_seq == o.rank_seq;
    }
    bool operator!=(const JordanInvariant& o) const { return !(*this == o); }
};

inline JordanInvariant jordan_invariant(const SkewOperator& op) {
    if (op.det_h == 0) throw std::invalid_argument("jordan_invariant: degenerate plane");
    if (op.factors) {
        // N = m_raw^2 / det_h = (U G / det_h) V^T with G = V^T U
        const auto& [u, v] = *op.factors;
        Rational inv_det = Rational(1) / op.det_h;
        QMatrix u_n = inv_det * (u * (v.transpose() * u));
        return JordanInvariant{detail::invariant_factors_factored(u_n, v),
                               detail::rank_sequence_factored(u, v)};
    }
    Rational inv_det = Rational(1) / op.det_h;
    QMatrix n_mat = inv_det * (op.m_raw * op.m_raw);
    return JordanInvariant{detail::invariant_factors_lowrank(n_mat), rank_sequence(op.m_raw)};
}

struct IPReport {
    CausalType plane_type = CausalType::spacelike;
    bool complex_lines = false;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    JordanInvariant invariant;  // the common value when constant
    bool constant = true;
    std::optional<std::pair<PlaneBasis, PlaneBasis>> counterexample;
    std::optional<std::pair<JordanInvariant, JordanInvariant>> counterexample_invariants;
    // strict square-class mode: full invariant factors of m_raw compared
    // between planes whose det_h ratio is a rational square
    bool strict_mode = false;
    std::size_t strict_compared = 0;
    bool strict_ok = true;
};

/// Sample planes (or complex lines) and check that the Jordan fingerprint
/// of R(pi) is the same for all of them. Deterministic given the seed;
/// the counterexample, if any, pairs the first sample with the first
/// mismatching one.
inline IPReport ip_check(const CurvatureTensor& t, CausalType plane_type, std::size_t n_samples,
                         std::uint64_t seed, bool complex_lines_only = false,
                         const ComplexStructure* j = nullptr, long bound = 7,
                         bool strict_square_class = false) {
    if (complex_lines_only) {
        if (plane_type == CausalType::mixed)
            throw std::invalid_argument("ip_check: there are no mixed complex lines");
        if (j == nullptr)
            throw std::invalid_argument("ip_check: complex-lines mode needs a complex structure");
    }
    IPReport report;
    report.plane_type = plane_type;
    report.complex_lines = complex_lines_only;
    report.seed = seed;
    report.strict_mode = strict_square_class;
    SplitMix64 seeder(seed);
    std::optional<PlaneBasis> first_plane;
    std::optional<SkewOperator> first_op;
    std::vector<QPoly> first_raw_factors;
    for (std::size_t s = 0; s < n_samples; ++s) {
        PlaneBasis plane =
            complex_lines_only
                ? sample_complex_line(t.space(), *j, plane_type, seeder.next(), bound)
                : sample_plane(t.space(), plane_type, seeder.next(), bound);
        SkewOperator op = skew_operator(t, plane);
        JordanInvariant inv = jordan_invariant(op);
        ++report.samples;
        if (!first_plane) {
            first_plane = plane;
            first_op = op;
            report.invariant = inv;
            if (strict_square_class)
                first_raw_factors = op.factors ? detail::invariant_factors_factored(
                                                     op.factors->first, op.factors->second)
                                               : detail::invariant_factors_lowrank(op.m_raw);
            continue;
        }
        if (report.constant && inv != report.invariant) {
            report.constant = false;
            report.counterexample = {*first_plane, plane};
            report.counterexample_invariants = {report.invariant, inv};
            break;
        }
        if (strict_square_class) {
            Rational ratio = first_op->det_h / op.det_h;
            Rational root;
            if (rational_square_root(ratio, &root)) {
                // m_raw0 / sqrt(d0) similar to m_raw / sqrt(d)  iff
                // m_raw0 similar to sqrt(d0/d) * m_raw
                ++report.strict_compared;
                std::vector<QPoly> scaled_factors =
                    op.factors ? detail::invariant_factors_factored(root * op.factors->first,
                                                                    op.factors->second)
                               : detail::invariant_factors_lowrank(root * op.m_raw);
                if (scaled_factors != first_raw_factors) {
                    report.strict_ok = false;
                    report.constant = false;
                    report.counterexample = {*first_plane, plane};
                    break;
                }
            }
        }
    }
    return report;
}

struct AlmostComplexReport {
    bool ok = true;
    std::optional<QVector> witness;
};

/// Verify J R(x,Jx) = R(x,Jx) J. The map x -> R(x,Jx) is quadratic, so
/// the check runs over all basis vectors, all pairwise basis sums (which
/// polarize the quadratic map), and sampled random integer vectors.
inline AlmostComplexReport almost_complex_check(const CurvatureTensor& t,
                                                const ComplexStructure& j, std::size_t n_samples,
                                                std::uint64_t seed, long bound = 7) {
    const std::size_t m = t.space().dim();
    const QMatrix& jm = j.mat();
    auto commutes_at = [&](const QVector& x) {
        QMatrix op = curvature_operator(t, x, jm * x);
        return jm * op == op * jm;
    };
    std::vector<QVector> probes;
    for (std::size_t i = 0; i < m; ++i) {
        QVector e(m, Rational(0));
        e[i] = 1;
        probes.push_back(std::move(e));
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = i + 1; k < m; ++k) {
            QVector e(m, Rational(0));
            e[i] = 1;
            e[k] = 1;
            probes.push_back(std::move(e));
        }
    SplitMix64 rng(seed);
    for (std::size_t s = 0; s < n_samples; ++s) probes.push_back(sample_vector(rng, m, bound));
    for (const auto& x : probes)
        if (!commutes_at(x)) return {false, x};
    return {};
}

/// Theorem-level constraint on the nonzero eigenvalue multiplicities of
/// JR(.) beyond the dominant class, for a Riemannian space of dimension m.
inline bool multiplicity_pattern_check(std::size_t m, const std::vector<std::size_t>& nonzero_mults) {
    if (m % 2 != 0) throw std::invalid_argument("multiplicity_pattern_check: m must be even");
    if (nonzero_mults.empty()) return true;  // vacuous: no classes beyond the dominant one
    const std::size_t ell = nonzero_mults.size();
    if (m % 4 == 2) return ell == 1 && nonzero_mults[0] == 1;
    return (ell == 1 && nonzero_mults[0] <= 2) ||
           (ell == 2 && nonzero_mults[0] == 1 && nonzero_mults[1] == 1);
}

struct SpectrumReport {
    std::size_t dim = 0;
    // complex eigenvalue classes of J R(pi), value with complex multiplicity,
    // sorted by multiplicity (non-increasing), ties by value (decreasing)
    std::vector<std::pair<Rational, std::size_t>> eigenvalues;
    std::size_t ell = 0;  // classes beyond the dominant one
    bool pattern_ok = true;
};

namespace detail {

/// Roots in Q with multiplicities by candidate search and deflation.
/// Returns the degree left undeflated (0 when the spectrum is rational).
inline int rational_roots(QPoly p, std::vector<std::pair<Rational, std::size_t>>* roots) {
    // zero roots first
    std::size_t zero_mult = 0;
    while (!p.is_zero() && p.coeff(0) == 0) {
        std::vector<Rational> c(p.coeffs().begin() + 1, p.coeffs().end());
        p = QPoly(std::move(c));
        ++zero_mult;
    }
    if (zero_mult > 0) roots->push_back({Rational(0), zero_mult});
    if (p.degree() <= 0) return 0;

    // primitive integer form for the rational root theorem
    Integer denom_lcm = 1;
    for (const auto& c : p.coeffs())
        mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Integer> ic;
    for (const auto& c : p.coeffs()) {
        Rational scaled = c * Rational(denom_lcm);
        ic.push_back(scaled.get_num());  // integral: denom_lcm clears all denominators
    }
    Integer content = 0;
    for (const auto& c : ic) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    for (auto& c : ic) c /= content;

    auto divisors = [](Integer v) {
        v = abs(v);
        std::vector<Integer> d;
        for (Integer i = 1; i * i <= v; ++i)
            if (v % i == 0) {
                d.push_back(i);
                if (i * i != v) d.push_back(v / i);
            }
        return d;
    };
    std::vector<Integer> nums = divisors(ic.front());
    std::vector<Integer> dens = divisors(ic.back());
    for (const auto& nu : nums)
        for (const auto& de : dens)
            for (int s : {1, -1}) {
                Rational cand = make_rational(s * nu, de);
                std::size_t mult = 0;
                while (p.degree() > 0 && p.eval(cand) == 0) {
                    p = p / QPoly({-cand, Rational(1)});
                    ++mult;
                }
                if (mult > 0) roots->push_back({cand, mult});
                if (p.degree() == 0) return 0;
            }
    return p.degree();
}

}  // namespace detail

/// Spectrum of J R(pi) on a complex line {x, Jx}: the normalized operator
/// is the exact rational matrix m_raw / s with s = (x,x), and its complex
/// matrix on a J-adapted basis lives over the Gaussian rationals.
inline SpectrumReport jr_spectrum(const CurvatureTensor& t, const ComplexStructure& j,
                                  const PlaneBasis& line) {
    const InnerProductSpace& sp = t.space();
    const std::size_t m = sp.dim();
    if (line.e2 != j.apply(line.e1))
        throw std::invalid_argument("jr_spectrum: plane is not a complex line {x, Jx}");
    Rational s = line.h(0, 0);
    if (s == 0) throw std::invalid_argument("jr_spectrum: isotropic generator");

    QMatrix m_raw = curvature_operator(t, line.e1, line.e2);
    QMatrix k_mat = j.mat() * ((Rational(1) / s) * m_raw);
    if (k_mat * j.mat() != j.mat() * k_mat)
        throw SpectrumError("jr_spectrum: JR(pi) does not commute with J (tensor is not almost complex)");

    // J-adapted basis: real columns v_1..v_d, J v_1..J v_d
    const std::size_t d = m / 2;
    QMatrix basis(m, 2 * d);
    std::size_t have = 0;
    for (std::size_t cand = 0; cand < m && have < d; ++cand) {
        QVector v(m, Rational(0));
        v[cand] = 1;
        QVector jv = j.apply(v);
        QMatrix trial(m, 2 * have + 2);
        for (std::size_t c = 0; c < have; ++c)
            for (std::size_t i = 0; i < m; ++i) {
                trial(i, 2 * c) = basis(i, c);
                trial(i, 2 * c + 1) = basis(i, d + c);
            }
        for (std::size_t i = 0; i < m; ++i) {
            trial(i, 2 * have) = v[i];
            trial(i, 2 * have + 1) = jv[i];
        }
        if (rank(trial) != 2 * have + 2) continue;
        for (std::size_t i = 0; i < m; ++i) {
            basis(i, have) = v[i];
            basis(i, d + have) = jv[i];
        }
        ++have;
    }
    if (have != d) throw std::logic_error("jr_spectrum: failed to build a J-adapted basis");
    QMatrix basis_inv = inverse(basis);

    GMatrix complex_k(d, d);
    for (std::size_t col = 0; col < d; ++col) {
        QVector image = k_mat * basis.col(col);
        QVector coords = basis_inv * image;
        for (std::size_t row = 0; row < d; ++row)
            complex_k(row, col) = GaussianRational(coords[row], coords[d + row]);
    }

    GPoly cp = char_poly(complex_k);
    std::vector<Rational> real_coeffs;
    for (const auto& c : cp.coeffs()) {
        if (c.im != 0) throw SpectrumError("jr_spectrum: non-real characteristic polynomial");
        real_coeffs.push_back(c.re);
    }
    SpectrumReport report;
    report.dim = m;
    if (detail::rational_roots(QPoly(std::move(real_coeffs)), &report.eigenvalues) != 0)
        throw SpectrumError("jr_spectrum: non-rational eigenvalues");

    std::sort(report.eigenvalues.begin(), report.eigenvalues.end(),
              [](const auto& a, const auto& b) {
                  if (a.second != b.second) return a.second > b.second;
                  return a.first > b.first;
              });
    std::vector<std::size_t> beyond;
    for (std::size_t i = 1; i < report.eigenvalues.size(); ++i)
        beyond.push_back(report.eigenvalues[i].second);
    report.ell = beyond.size();
    report.pattern_ok = multiplicity_pattern_check(m, beyond);
    return report;
}

struct LemmaReport {
    bool precondition_ok = true;
    bool orthogonal = true;
    bool independent = true;
    std::vector<std::string> failed_pairs;
    bool ok() const { return precondition_ok && orthogonal && independent; }
};

/// Orthogonality and independence of {phi1 x, phi1 Jx, phi2 x, phi2 Jx}
/// for a spacelike x.
inline LemmaReport verify_lemma_orthogonality(const InnerProductSpace& space,
                                              const AdmissibleTriple& triple, const QVector& x) {
    LemmaReport report;
    if (sgn(space.inner(x, x)) <= 0) {
        report.precondition_ok = false;
        return report;
    }
    QVector jx = triple.j * x;
    std::vector<std::pair<std::string, QVector>> vecs{
        {"phi1*x", triple.phi1.phi * x},
        {"phi1*Jx", triple.phi1.phi * jx},
        {"phi2*x", triple.phi2.phi * x},
        {"phi2*Jx", triple.phi2.phi * jx},
    };
    for (std::size_t a = 0; a < vecs.size(); ++a)
        for (std::size_t b = a + 1; b < vecs.size(); ++b)
            if (space.inner(vecs[a].second, vecs[b].second) != 0) {
                report.orthogonal = false;
                report.failed_pairs.push_back(vecs[a].first + "," + vecs[b].first);
            }
    QMatrix span(space.dim(), 4);
    for (std::size_t c = 0; c < 4; ++c)
        for (std::size_t i = 0; i < space.dim(); ++i) span(i, c) = vecs[c].second[i];
    report.independent = rank(span) == 4;
    return report;
}

struct ProductReport {
    bool ok = true;
    std::string first_nonzero;  // "R1*R2" or "R2*R1"
};

/// Both operator products R_phi1(x,Jx) R_phi2(x,Jx) and the reverse must
/// vanish identically.
inline ProductReport verify_product_vanishing(const InnerProductSpace& space,
                                              const AdmissibleTriple& triple, const QVector& x) {
    QVector jx = triple.j * x;
    CurvatureTensor t1 = build_r_phi(space, triple.phi1, Rational(1));
    CurvatureTensor t2 = build_r_phi(space, triple.phi2, Rational(1));
    QMatrix op1 = curvature_operator(t1, x, jx);
    QMatrix op2 = curvature_operator(t2, x, jx);
    if (!(op1 * op2).is_zero()) return {false, "R1*R2"};
    if (!(op2 * op1).is_zero()) return {false, "R2*R1"};
    return {};
}

struct BlockCheck {
    std::string name;
    bool ok = true;
};

struct Theorem5Report {
    std::vector<BlockCheck> checks;
    std::size_t rank_m_raw = 0;
    std::size_t rank_squared = 0;
    bool ok() const {
        for (const auto& c : checks)
            if (!c.ok) return false;
        return true;
    }
};

/// Block structure of R(pi)^2 on a spacelike complex line, for the
/// two-term tensor lambda1 R_phi1 + lambda2 R_phi2 of a triple:
/// eigenvector checks on phi_i pi (delta_i != 0), vanishing on the
/// complement V0, and the rank pattern. With both lambdas nonzero the
/// four image vectors are independent, so rank(R(pi)) = 4 regardless of
/// the deltas; a zero delta instead drops the rank of R(pi)^2 to 2
/// ("two non-zero eigenvalues").
inline Theorem5Report verify_theorem5_blocks(const InnerProductSpace& space,
                                             const AdmissibleTriple& triple,
                                             const Rational& lambda1, const Rational& lambda2,
                                             const PlaneBasis& line) {
    if (line.causal_type != CausalType::spacelike)
        throw std::invalid_argument("verify_theorem5_blocks: spacelike complex line required");
    Rational s = line.h(0, 0);
    const QVector& x = line.e1;
    const QVector& jx = line.e2;

    CurvatureTensor t = combine(build_r_phi(space, triple.phi1, lambda1),
                                build_r_phi(space, triple.phi2, lambda2));
    QMatrix m_raw = curvature_operator(t, x, jx);
    QMatrix r_pi = (Rational(1) / s) * m_raw;
    QMatrix p = r_pi * r_pi;

    Theorem5Report report;
    report.rank_m_raw = rank(m_raw);
    report.rank_squared = rank(p);

    std::vector<QVector> plane_images;  // basis of phi1 pi (+) phi2 pi, lambdas nonzero
    auto eigen_block = [&](const AdmissibleMap& phi, const Rational& lambda, int index) {
        if (lambda == 0) return;
        QVector vs[2] = {phi.phi * x, phi.phi * jx};
        for (auto& v : vs) plane_images.push_back(v);
        if (phi.delta == 0) return;
        Rational want = -(lambda * lambda);
        for (int k = 0; k < 2; ++k) {
            bool good = p * vs[k] == want * vs[k];
            report.checks.push_back(
                {"P = -lambda" + std::to_string(index) + "^2 on phi" + std::to_string(index) +
                     (k == 0 ? "*x" : "*Jx"),
                 good});
        }
    };
    eigen_block(triple.phi1, lambda1, 1);
    eigen_block(triple.phi2, lambda2, 2);

    // V0: orthogonal complement of the nondegenerate phi_i pi blocks
    std::vector<QVector> constraint_rows;
    std::size_t img = 0;
    for (const auto* phi : {&triple.phi1, &triple.phi2}) {
        const Rational& lambda = phi == &triple.phi1 ? lambda1 : lambda2;
        if (lambda == 0) continue;
        if (phi->delta != 0) {
            constraint_rows.push_back(space.gram() * plane_images[img]);
            constraint_rows.push_back(space.gram() * plane_images[img + 1]);
        }
        img += 2;
    }
    if (!constraint_rows.empty()) {
        QMatrix constraints(constraint_rows.size(), space.dim());
        for (std::size_t i = 0; i < constraint_rows.size(); ++i)
            for (std::size_t jcol = 0; jcol < space.dim(); ++jcol)
                constraints(i, jcol) = constraint_rows[i][jcol];
        bool v0_ok = true;
        for (const auto& v : nullspace(constraints))
            if (!(p * v == QVector(space.dim(), Rational(0)))) {
                v0_ok = false;
                break;
            }
        report.checks.push_back({"P = 0 on V0", v0_ok});
    }

    std::size_t active = (lambda1 != 0 ? 1u : 0u) + (lambda2 != 0 ? 1u : 0u);
    std::size_t nondeg =
        (lambda1 != 0 && triple.phi1.delta != 0 ? 1u : 0u) +
        (lambda2 != 0 && triple.phi2.delta != 0 ? 1u : 0u);
    report.checks.push_back({"rank(R(pi)) = " + std::to_string(2 * active),
                             report.rank_m_raw == 2 * active});
    report.checks.push_back({"rank(R(pi)^2) = " + std::to_string(2 * nondeg),
                             report.rank_squared == 2 * nondeg});
    return report;
}

}  // namespace jordanip
