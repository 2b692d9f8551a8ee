#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jordanip/factory.hpp"
#include "jordanip/jordan.hpp"

using namespace jordanip;
using R = Rational;

namespace {

QVector basis_vector(std::size_t dim, std::size_t k) {
    QVector v(dim, R(0));
    v[k] = 1;
    return v;
}

QPoly linear(const R& root) { return QPoly({-root, R(1)}); }

QVector sample_with_sign(const InnerProductSpace& sp, SplitMix64& rng, int want, long bound) {
    for (;;) {
        QVector x = sample_vector(rng, sp.dim(), bound);
        if (sgn(sp.inner(x, x)) == want) return x;
    }
}

}  // namespace

TEST_CASE("rank_sequence on canonical matrices") {
    CHECK(rank_sequence(QMatrix::zero(3, 3)) == std::vector<std::size_t>{0});
    CHECK(rank_sequence(QMatrix::identity(2)) == std::vector<std::size_t>{2, 2});
    QMatrix nil{{R(0), R(1)}, {R(0), R(0)}};
    CHECK(rank_sequence(nil) == std::vector<std::size_t>{1, 0});
}

TEST_CASE("low-rank and factored invariant factors agree with the direct SNF") {
    SplitMix64 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        std::size_t n = 4 + trial % 3;
        std::size_t k = 1 + trial % 3;
        QMatrix u(n, k), v(n, k);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                u(i, j) = R(rng.next_int(3));
                v(i, j) = R(rng.next_int(3));
            }
        QMatrix m = u * v.transpose();
        auto direct = invariant_factors(m);
        CHECK(detail::invariant_factors_lowrank(m) == direct);
        CHECK(detail::invariant_factors_factored(u, v) == direct);
        CHECK(detail::rank_sequence_factored(u, v) == rank_sequence(m));
    }
    // invertible case takes the early-return path
    QMatrix a{{R(1), R(1), R(0)}, {R(0), R(1), R(1)}, {R(1), R(0), R(1)}};
    REQUIRE(rank(a) == 3);
    CHECK(detail::invariant_factors_lowrank(a) == invariant_factors(a));
    CHECK(detail::invariant_factors_factored(a, QMatrix::identity(3)) == invariant_factors(a));
}

TEST_CASE("jordan_invariant: zero tensor") {
    InnerProductSpace e4(QMatrix::identity(4));
    AdmissibleMap id = check_admissible(e4, QMatrix::identity(4));
    CurvatureTensor zero = build_r_phi(e4, id, R(0));
    PlaneBasis plane = classify_plane(e4, basis_vector(4, 0), basis_vector(4, 1));
    JordanInvariant inv = jordan_invariant(skew_operator(zero, plane));
    CHECK(inv.rank_seq == std::vector<std::size_t>{0});
    CHECK(inv.inv_factors_sq == std::vector<QPoly>(4, QPoly::t()));
}

TEST_CASE("jordan_invariant: R_Id on the Euclidean 4-space") {
    InnerProductSpace e4(QMatrix::identity(4));
    AdmissibleMap id = check_admissible(e4, QMatrix::identity(4));
    CurvatureTensor t = build_r_phi(e4, id, R(1));
    PlaneBasis plane = classify_plane(e4, basis_vector(4, 0), basis_vector(4, 1));
    SkewOperator op = skew_operator(t, plane);
    JordanInvariant inv = jordan_invariant(op);

    // oracle: N = m_raw^2 / det_h has eigenvalues {-1,-1,0,0} and is
    // diagonalizable, so the invariant factors are t(t+1) twice
    QPoly expected = QPoly::t() * linear(R(-1));
    CHECK(inv.inv_factors_sq == std::vector<QPoly>{expected, expected});
    CHECK(inv.rank_seq == std::vector<std::size_t>{2, 2});

    // cross-check against the direct SNF of the dense N
    QMatrix n_mat = (R(1) / op.det_h) * (op.m_raw * op.m_raw);
    CHECK(inv.inv_factors_sq == invariant_factors(n_mat));
}

TEST_CASE("jordan_invariant: delta = 0 gives the nilpotent rank pattern") {
    auto [tau0, gram_w] = tau(0);
    InnerProductSpace w(gram_w);
    AdmissibleMap phi = check_admissible(w, tau0);
    REQUIRE(phi.delta == 0);
    CurvatureTensor t = build_r_phi(w, phi, R(3));
    SplitMix64 seeder(8);
    for (int trial = 0; trial < 5; ++trial) {
        PlaneBasis plane = sample_plane(w, CausalType::spacelike, seeder.next(), 4);
        JordanInvariant inv = jordan_invariant(skew_operator(t, plane));
        CHECK(inv.rank_seq == std::vector<std::size_t>{2, 0});  // m_raw^2 = 0, rank 2
        CHECK(inv.inv_factors_sq == std::vector<QPoly>(4, QPoly::t()));
    }
}

TEST_CASE("jordan_invariant is scale-free and orientation-blind") {
    FactoryTriple f = build_triple(ExampleSpec{1, 1, R(2), R(3), true});
    CurvatureTensor t = combine(build_r_phi(f.space, f.triple.phi1, R(2)),
                                build_r_phi(f.space, f.triple.phi2, R(3)));
    SplitMix64 seeder(5);
    PlaneBasis p = sample_plane(f.space, CausalType::spacelike, seeder.next(), 4);
    JordanInvariant base = jordan_invariant(skew_operator(t, p));

    PlaneBasis scaled = classify_plane(f.space, R(3) * p.e1, R(-2) * p.e2);
    CHECK(jordan_invariant(skew_operator(t, scaled)) == base);
    PlaneBasis swapped = classify_plane(f.space, p.e2, p.e1);
    CHECK(jordan_invariant(skew_operator(t, swapped)) == base);
}

TEST_CASE("factored and dense jordan_invariant paths agree") {
    FactoryTriple f = build_triple(ExampleSpec{1, 1, R(2), R(3), true});
    CurvatureTensor t = combine(build_r_phi(f.space, f.triple.phi1, R(2)),
                                build_r_phi(f.space, f.triple.phi2, R(3)));
    SplitMix64 seeder(9);
    for (int trial = 0; trial < 3; ++trial) {
        PlaneBasis p = sample_plane(f.space, CausalType::spacelike, seeder.next(), 4);
        SkewOperator op = skew_operator(t, p);
        REQUIRE(op.factors.has_value());
        SkewOperator dense = op;
        dense.factors.reset();
        CHECK(jordan_invariant(op) == jordan_invariant(dense));
    }
}

TEST_CASE("ip_check: constancy, zero tensor, and the mixed-lines contradiction") {
    FactoryTriple f = build_triple(ExampleSpec{1, 1, R(2), R(3), true});
    CurvatureTensor t = combine(build_r_phi(f.space, f.triple.phi1, R(2)),
                                build_r_phi(f.space, f.triple.phi2, R(3)));
    ComplexStructure j(f.space, f.triple.j);

    IPReport r = ip_check(t, CausalType::spacelike, 30, 42, true, &j);
    CHECK(r.constant);
    CHECK(r.samples == 30);
    CHECK_FALSE(r.counterexample.has_value());
    CHECK(r.invariant.rank_seq == std::vector<std::size_t>{4, 4});

    // determinism: identical seeds give identical reports
    IPReport r2 = ip_check(t, CausalType::spacelike, 30, 42, true, &j);
    CHECK(r2.invariant == r.invariant);
    CHECK(r2.constant == r.constant);

    CurvatureTensor zero = build_r_phi(f.space, f.triple.phi1, R(0));
    IPReport rz = ip_check(zero, CausalType::spacelike, 10, 1, false);
    CHECK(rz.constant);
    CHECK(rz.invariant.rank_seq == std::vector<std::size_t>{0});

    CHECK_THROWS_AS(ip_check(t, CausalType::mixed, 10, 1, true, &j), std::invalid_argument);
    CHECK_THROWS_AS(ip_check(t, CausalType::spacelike, 10, 1, true, nullptr),
                    std::invalid_argument);

    // general (non-complex-line) spacelike planes: the verdict is recorded,
    // no constancy expectation off complex lines
    IPReport general = ip_check(t, CausalType::spacelike, 10, 7, false);
    CHECK(general.samples >= 1);
}

TEST_CASE("ip_check strict square-class mode on complex lines") {
    FactoryTriple f = build_triple(ExampleSpec{1, 1, R(2), R(3), true});
    CurvatureTensor t = combine(build_r_phi(f.space, f.triple.phi1, R(2)),
                                build_r_phi(f.space, f.triple.phi2, R(3)));
    ComplexStructure j(f.space, f.triple.j);
    IPReport r = ip_check(t, CausalType::spacelike, 20, 42, true, &j, 7, true);
    CHECK(r.constant);
    CHECK(r.strict_mode);
    // complex lines have det_h = s^2, so every ratio is a rational square
    CHECK(r.strict_compared == 19);
    CHECK(r.strict_ok);
}

TEST_CASE("almost_complex_check: admissible pair passes, broken map yields a witness") {
    FactoryTriple f = build_triple(ExampleSpec{1, 1, R(2), R(3), true});
    ComplexStructure j(f.space, f.triple.j);
    CurvatureTensor t1 = build_r_phi(f.space, f.triple.phi1, R(2));
    CHECK(almost_complex_check(t1, j, 10, 42).ok);
    CurvatureTensor t2 = build_r_phi(f.space, f.triple.phi2, R(3));
    CHECK(almost_complex_check(t2, j, 10, 42).ok);

    CurvatureTensor zero = build_r_phi(f.space, f.triple.phi1, R(0));
    CHECK(almost_complex_check(zero, j, 5, 1).ok);

    // phi = diag(1,1,1,-1) is admissible on Euclidean 4-space but
    // satisfies neither phi J = J phi nor phi J = -J phi for J = J0 (x) Id
    BaseMatrices b = base_matrices();
    InnerProductSpace e4(QMatrix::identity(4));
    QMatrix phi(4, 4);
    phi(0, 0) = 1;
    phi(1, 1) = 1;
    phi(2, 2) = 1;
    phi(3, 3) = -1;
    QMatrix jm = kron(b.j0, QMatrix::identity(2));
    REQUIRE(jm * phi != phi * jm);
    REQUIRE(jm * phi != -(phi * jm));
    ComplexStructure j4(e4, jm);
    AdmissibleMap broken = check_admissible(e4, phi);
    AlmostComplexReport r = almost_complex_check(build_r_phi(e4, broken, R(1)), j4, 10, 3);
    CHECK_FALSE(r.ok);
    REQUIRE(r.witness.has_value());
    QMatrix op = curvature_operator(build_r_phi(e4, broken, R(1)), *r.witness,
                                    jm * *r.witness);
    CHECK(jm * op != op * jm);  // the witness really violates the identity
}

TEST_CASE("multiplicity_pattern_check implements the case split") {
    CHECK(multiplicity_pattern_check(8, {1, 1}));
    CHECK_FALSE(multiplicity_pattern_check(10, {2}));
    CHECK(multiplicity_pattern_check(8, {2}));
    CHECK(multiplicity_pattern_check(10, {1}));
    CHECK_FALSE(multiplicity_pattern_check(10, {1, 1}));
    CHECK_FALSE(multiplicity_pattern_check(8, {2, 1}));
    CHECK_FALSE(multiplicity_pattern_check(8, {3}));
    CHECK(multiplicity_pattern_check(8, {}));  // vacuous
    CHECK_THROWS_AS(multiplicity_pattern_check(7, {1}), std::invalid_argument);
}

TEST_CASE("jr_spectrum: two-term reduced example against a real-matrix oracle") {
    FactoryTriple f = build_triple(ExampleSpec{1, 1, R(2), R(3), true});
    CurvatureTensor t = combine(build_r_phi(f.space, f.triple.phi1, R(2)),
                                build_r_phi(f.space, f.triple.phi2, R(3)));
    ComplexStructure j(f.space, f.triple.j);
    PlaneBasis line = sample_complex_line(f.space, j, CausalType::spacelike, 42, 5);

    SpectrumReport sp = jr_spectrum(t, j, line);
    REQUIRE(sp.eigenvalues.size() == 3);
    CHECK(sp.eigenvalues[0] == std::pair<R, std::size_t>{R(0), 2});
    CHECK(sp.eigenvalues[1] == std::pair<R, std::size_t>{R(2), 1});
    CHECK(sp.eigenvalues[2] == std::pair<R, std::size_t>{R(-3), 1});
    CHECK(sp.ell == 2);
    CHECK(sp.pattern_ok);

    // independent oracle: the real 8x8 matrix K = J (m_raw / s) must have
    // real eigenspaces of dimension 2, 2, 4 for 2, -3, 0 (each complex
    // class doubles), and characteristic polynomial (t-2)^2 (t+3)^2 t^4
    R s = line.h(0, 0);
    QMatrix k = j.mat() * ((R(1) / s) * curvature_operator(t, line.e1, line.e2));
    CHECK(nullspace(k - R(2) * QMatrix::identity(8)).size() == 2);
    CHECK(nullspace(k + R(3) * QMatrix::identity(8)).size() == 2);
    CHECK(nullspace(k).size() == 4);
    QPoly expected = linear(R(2)) * linear(R(2)) * linear(R(-3)) * linear(R(-3)) * QPoly::t() *
                     QPoly::t() * QPoly::t() * QPoly::t();
    CHECK(char_poly(k) == expected);
}

TEST_CASE("jr_spectrum: one-term tensors have a single nonzero class") {
    FactoryTriple f = build_triple(ExampleSpec{1, 1, R(2), R(3), true});
    ComplexStructure j(f.space, f.triple.j);
    PlaneBasis line = sample_complex_line(f.space, j, CausalType::spacelike, 7, 5);

    SpectrumReport s1 = jr_spectrum(build_r_phi(f.space, f.triple.phi1, R(5)), j, line);
    std::size_t nonzero = 0;
    for (const auto& [value, mult] : s1.eigenvalues)
        if (value != 0) {
            ++nonzero;
            CHECK(abs(value) == 5);
            CHECK(mult == 1);
        }
    CHECK(nonzero == 1);

    SpectrumReport s0 = jr_spectrum(build_r_phi(f.space, f.triple.phi1, R(0)), j, line);
    REQUIRE(s0.eigenvalues.size() == 1);
    CHECK(s0.eigenvalues[0] == std::pair<R, std::size_t>{R(0), 4});
    CHECK(s0.pattern_ok);
}

TEST_CASE("jr_spectrum rejects non-complex-lines and non-almost-complex tensors") {
    FactoryTriple f = build_triple(ExampleSpec{1, 1, R(2), R(3), true});
    ComplexStructure j(f.space, f.triple.j);
    CurvatureTensor t = build_r_phi(f.space, f.triple.phi1, R(2));

    PlaneBasis plane = sample_plane(f.space, CausalType::spacelike, 3, 5);
    CHECK_THROWS_AS(jr_spectrum(t, j, plane), std::invalid_argument);

    BaseMatrices b = base_matrices();
    InnerProductSpace e4(QMatrix::identity(4));
    QMatrix phi(4, 4);
    phi(0, 0) = 1;
    phi(1, 1) = 1;
    phi(2, 2) = 1;
    phi(3, 3) = -1;
    ComplexStructure j4(e4, kron(b.j0, QMatrix::identity(2)));
    CurvatureTensor broken = build_r_phi(e4, check_admissible(e4, phi), R(1));
    PlaneBasis line = sample_complex_line(e4, j4, CausalType::spacelike, 11, 5);
    CHECK_THROWS_AS(jr_spectrum(broken, j4, line), SpectrumError);
}

TEST_CASE("lemma: orthogonality, independence, and product vanishing") {
    FactoryTriple reduced = build_triple(ExampleSpec{1, 1, R(2), R(3), true});
    LemmaReport lr = verify_lemma_orthogonality(reduced.space, reduced.triple,
                                                basis_vector(8, 0));
    CHECK(lr.ok());

    FactoryTriple f10 = build_triple(ExampleSpec{1, 0, R(2), R(3), false});
    SplitMix64 rng(13);
    QVector x = sample_with_sign(f10.space, rng, 1, 3);
    CHECK(verify_lemma_orthogonality(f10.space, f10.triple, x).ok());
    CHECK(verify_product_vanishing(f10.space, f10.triple, x).ok);

    QVector timelike = sample_with_sign(f10.space, rng, -1, 3);
    LemmaReport bad = verify_lemma_orthogonality(f10.space, f10.triple, timelike);
    CHECK_FALSE(bad.precondition_ok);

    CHECK(verify_product_vanishing(reduced.space, reduced.triple, QVector(8, R(0))).ok);

    // deliberately broken triple: phi2 replaced by phi1
    AdmissibleTriple broken{reduced.triple.phi1, reduced.triple.phi1, reduced.triple.j};
    ProductReport pr = verify_product_vanishing(reduced.space, broken, basis_vector(8, 0));
    CHECK_FALSE(pr.ok);
    CHECK(pr.first_nonzero == "R1*R2");
}

TEST_CASE("theorem 5 blocks on complex lines") {
    FactoryTriple f = build_triple(ExampleSpec{1, -1, R(1), R(2), false});
    ComplexStructure j(f.space, f.triple.j);
    PlaneBasis line = sample_complex_line(f.space, j, CausalType::spacelike, 42, 3);
    Theorem5Report r = verify_theorem5_blocks(f.space, f.triple, R(1), R(2), line);
    CHECK(r.ok());
    CHECK(r.rank_m_raw == 4);
    CHECK(r.rank_squared == 4);

    // oracle for the proof's spectrum {-1 (x2), -4 (x2), 0 (rest)}
    R s = line.h(0, 0);
    CurvatureTensor t = combine(build_r_phi(f.space, f.triple.phi1, R(1)),
                                build_r_phi(f.space, f.triple.phi2, R(2)));
    QMatrix r_pi = (R(1) / s) * curvature_operator(t, line.e1, line.e2);
    QMatrix p = r_pi * r_pi;
    CHECK(nullspace(p + QMatrix::identity(32)).size() == 2);
    CHECK(nullspace(p + R(4) * QMatrix::identity(32)).size() == 2);
    CHECK(nullspace(p).size() == 28);

    // lambda2 = 0 degenerates to the one-term case: rank 2
    Theorem5Report one = verify_theorem5_blocks(f.space, f.triple, R(1), R(0), line);
    CHECK(one.ok());
    CHECK(one.rank_m_raw == 2);
    CHECK(one.rank_squared == 2);

    // (delta1, delta2) = (+1, 0): rank(R(pi)) = 4 but rank(R(pi)^2) = 2
    FactoryTriple f10 = build_triple(ExampleSpec{1, 0, R(2), R(3), false});
    ComplexStructure j10(f10.space, f10.triple.j);
    PlaneBasis line10 = sample_complex_line(f10.space, j10, CausalType::spacelike, 5, 3);
    Theorem5Report r10 = verify_theorem5_blocks(f10.space, f10.triple, R(2), R(3), line10);
    CHECK(r10.ok());
    CHECK(r10.rank_m_raw == 4);
    CHECK(r10.rank_squared == 2);

    // timelike lines are rejected: the block statement is spacelike
    PlaneBasis tline = sample_complex_line(f.space, j, CausalType::timelike, 1, 3);
    CHECK_THROWS_AS(verify_theorem5_blocks(f.space, f.triple, R(1), R(2), tline),
                    std::invalid_argument);
}
