#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jordanip/curvature.hpp"
#include "jordanip/factory.hpp"
#include "jordanip/tensor_io.hpp"

#include <json.hpp>

using namespace jordanip;
using R = Rational;

namespace {

QVector basis_vector(std::size_t dim, std::size_t k) {
    QVector v(dim, R(0));
    v[k] = 1;
    return v;
}

/// Independent oracle: R_phi(x,y,z,w) = c * [(phi y, z)(phi x, w) - (phi x, z)(phi y, w)]
/// evaluated straight from the displayed definition.
R r_phi_oracle(const InnerProductSpace& sp, const QMatrix& phi, const R& c, const QVector& x,
               const QVector& y, const QVector& z, const QVector& w) {
    return c * (sp.inner(phi * y, z) * sp.inner(phi * x, w) -
                sp.inner(phi * x, z) * sp.inner(phi * y, w));
}

}  // namespace

TEST_CASE("build_r_phi matches the definition oracle") {
    InnerProductSpace e2(QMatrix::identity(2));
    AdmissibleMap id = check_admissible(e2, QMatrix::identity(2));

    CurvatureTensor t = build_r_phi(e2, id, R(1));
    DenseTensor d = t.dense();
    CHECK(d(0, 1, 1, 0) == 1);  // (phi e2, e2)(phi e1, e1) - (phi e1, e2)(phi e2, e1) = 1
    CHECK(d(0, 1, 0, 1) == -1);
    CHECK(build_r_phi(e2, id, R(0)).dense() == DenseTensor(2));

    BaseMatrices b = base_matrices();
    InnerProductSpace m11(QMatrix{{R(-1), R(0)}, {R(0), R(1)}});
    AdmissibleMap gamma = check_admissible(m11, b.gamma);
    CurvatureTensor tg = build_r_phi(m11, gamma, R(1));
    DenseTensor dg = tg.dense();
    QVector e1 = basis_vector(2, 0), e2v = basis_vector(2, 1);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l)
                    CHECK(dg(i, j, k, l) ==
                          r_phi_oracle(m11, b.gamma, R(1), basis_vector(2, i), basis_vector(2, j),
                                       basis_vector(2, k), basis_vector(2, l)));
    CHECK(dg(0, 1, 1, 0) == r_phi_oracle(m11, b.gamma, R(1), e1, e2v, e2v, e1));

    CHECK_THROWS_AS(build_r_phi(e2, AdmissibleMap{QMatrix::identity(3), 1}, R(1)),
                    std::invalid_argument);
}

TEST_CASE("combine: zero neutral, additivity, cancellation") {
    InnerProductSpace e4(QMatrix::identity(4));
    BaseMatrices b = base_matrices();
    AdmissibleMap phi1 = check_admissible(e4, b.e1);
    AdmissibleMap phi2 = check_admissible(e4, b.e2);

    CurvatureTensor t1 = build_r_phi(e4, phi1, R(2));
    CurvatureTensor zero = build_r_phi(e4, phi2, R(0));
    CHECK(combine(t1, zero).dense() == t1.dense());

    CurvatureTensor t2 = build_r_phi(e4, phi2, R(3));
    CurvatureTensor sum = combine(t1, t2);
    CHECK(sum.terms().size() == 2);
    DenseTensor ds = sum.dense(), d1 = t1.dense(), d2 = t2.dense();
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(ds(i, j, 1, 0) == d1(i, j, 1, 0) + d2(i, j, 1, 0));

    CurvatureTensor neg = build_r_phi(e4, phi1, R(-2));
    CHECK(combine(t1, neg).dense() == DenseTensor(4));

    InnerProductSpace e2(QMatrix::identity(2));
    CHECK_THROWS_AS(combine(t1, build_r_phi(e2, check_admissible(e2, QMatrix::identity(2)), R(1))),
                    std::invalid_argument);
}

TEST_CASE("validate_symmetries: passes on R_phi, catches an injected fault") {
    InnerProductSpace e4(QMatrix::identity(4));
    BaseMatrices b = base_matrices();
    CurvatureTensor t = build_r_phi(e4, check_admissible(e4, b.e1), R(3));
    CHECK(validate_symmetries(t).ok);
    CHECK(validate_symmetries(CurvatureTensor(e4, DenseTensor(4))).ok);  // zero tensor

    DenseTensor corrupted = t.dense();
    corrupted(0, 0, 0, 0) += 1;  // breaks antisymmetry at (0,0,0,0)
    SymmetryReport r = validate_symmetries(CurvatureTensor(e4, corrupted));
    CHECK_FALSE(r.ok);
    CHECK(r.violated == "antisymmetry");
    CHECK(r.witness == std::array<std::size_t, 4>{0, 0, 0, 0});
}

TEST_CASE("curvature_operator: antisymmetry, rotation generator, bilinearity") {
    InnerProductSpace e4(QMatrix::identity(4));
    AdmissibleMap id = check_admissible(e4, QMatrix::identity(4));
    CurvatureTensor t = build_r_phi(e4, id, R(1));

    QVector x = basis_vector(4, 0), y = basis_vector(4, 1);
    CHECK(curvature_operator(t, x, x).is_zero());

    QMatrix op = curvature_operator(t, x, y);
    CHECK(op == outer(x, y) - outer(y, x));  // z -> (y,z)x - (x,z)y for gram = Id
    CHECK(op * x == R(-1) * y);
    CHECK(op * y == x);

    CHECK(curvature_operator(t, R(2) * x, y) == R(2) * op);
    CHECK(curvature_operator(t, y, x) == -op);
    CHECK_THROWS_AS(curvature_operator(t, QVector(3, R(0)), y), std::invalid_argument);
}

TEST_CASE("dense and term-based operators agree") {
    BaseMatrices b = base_matrices();
    InnerProductSpace sp(kron(QMatrix{{R(-1), R(0)}, {R(0), R(1)}}, QMatrix::identity(2)));
    AdmissibleMap phi = check_admissible(sp, kron(b.beta, QMatrix::identity(2)));
    CurvatureTensor t = build_r_phi(sp, phi, R(5));
    CurvatureTensor dense_only(sp, t.dense());
    SplitMix64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        QVector x = sample_vector(rng, 4, 4);
        QVector y = sample_vector(rng, 4, 4);
        CHECK(curvature_operator(t, x, y) == curvature_operator(dense_only, x, y));
    }
}

TEST_CASE("skew_operator: zero tensor, 90-degree rotation, orientation, factors") {
    InnerProductSpace e4(QMatrix::identity(4));
    AdmissibleMap id = check_admissible(e4, QMatrix::identity(4));

    PlaneBasis plane = classify_plane(e4, basis_vector(4, 0), basis_vector(4, 1));
    CurvatureTensor zero = build_r_phi(e4, id, R(0));
    CHECK(skew_operator(zero, plane).m_raw.is_zero());

    CurvatureTensor t = build_r_phi(e4, id, R(1));
    SkewOperator op = skew_operator(t, plane);
    CHECK(rank(op.m_raw) == 2);
    QMatrix sq = op.m_raw * op.m_raw;
    CHECK(sq * plane.e1 == R(-1) * plane.e1);  // m_raw^2 = -Id on the plane
    CHECK(sq * plane.e2 == R(-1) * plane.e2);
    CHECK(sq * basis_vector(4, 2) == QVector(4, R(0)));  // 0 on the complement
    CHECK_FALSE(op.mixed);

    // swapping the basis negates m_raw and keeps det_h
    PlaneBasis swapped = classify_plane(e4, plane.e2, plane.e1);
    SkewOperator op2 = skew_operator(t, swapped);
    CHECK(op2.m_raw == -op.m_raw);
    CHECK(op2.det_h == op.det_h);

    // the factored form reproduces the raw matrix
    REQUIRE(op.factors.has_value());
    CHECK(op.factors->first * op.factors->second.transpose() == op.m_raw);

    // degenerate plane (null e1 orthogonal to e2) is rejected
    InnerProductSpace m12(QMatrix{{R(-1), R(0), R(0)}, {R(0), R(1), R(0)}, {R(0), R(0), R(1)}});
    CurvatureTensor t3 = build_r_phi(m12, check_admissible(m12, QMatrix::identity(3)), R(1));
    PlaneBasis deg = classify_plane(m12, QVector{R(1), R(1), R(0)}, QVector{R(0), R(0), R(1)});
    REQUIRE(deg.causal_type == CausalType::degenerate);
    CHECK_THROWS_AS(skew_operator(t3, deg), std::invalid_argument);
}

TEST_CASE("skew-adjointness and scale-free basis independence") {
    BaseMatrices b = base_matrices();
    InnerProductSpace sp(kron(kron(QMatrix::identity(2), QMatrix{{R(-1), R(0)}, {R(0), R(1)}}),
                              QMatrix::identity(2)));
    AdmissibleMap phi = check_admissible(sp, kron(kron(QMatrix::identity(2), b.beta),
                                                  QMatrix::identity(2)));
    CurvatureTensor t = build_r_phi(sp, phi, R(2));
    SplitMix64 seeder(21);
    for (int trial = 0; trial < 8; ++trial) {
        PlaneBasis p = sample_plane(sp, CausalType::spacelike, seeder.next(), 4);
        SkewOperator op = skew_operator(t, p);
        QMatrix gm = sp.gram() * op.m_raw;
        CHECK(gm == -gm.transpose());  // skew-adjointness

        // another basis of the same plane
        QVector f1 = R(2) * p.e1 + R(1) * p.e2;
        QVector f2 = R(-1) * p.e1 + R(1) * p.e2;
        PlaneBasis q = classify_plane(sp, f1, f2);
        SkewOperator opq = skew_operator(t, q);
        CHECK(op.det_h * (opq.m_raw * opq.m_raw) == q.det_h * (op.m_raw * op.m_raw));
        CHECK(rank(op.m_raw) == rank(opq.m_raw));
    }
}

TEST_CASE("spacelike_rank_profile: one-term rank 2, zero tensor rank 0") {
    FactoryTriple f = build_triple(ExampleSpec{1, 1, R(2), R(3), true});
    CurvatureTensor one_term = build_r_phi(f.space, f.triple.phi1, R(3));
    RankProfile r = spacelike_rank_profile(one_term, 50, 42, 5);
    CHECK(r.constant);
    CHECK(r.rank_value == 2);
    CHECK(r.samples == 50);

    CurvatureTensor zero = build_r_phi(f.space, f.triple.phi1, R(0));
    RankProfile rz = spacelike_rank_profile(zero, 10, 42, 5);
    CHECK(rz.constant);
    CHECK(rz.rank_value == 0);
}

TEST_CASE("tensor JSON: round trip, delta verification, corrupted dense load") {
    FactoryTriple f = build_triple(ExampleSpec{1, 1, R(2), R(3), true});
    CurvatureTensor t = combine(build_r_phi(f.space, f.triple.phi1, R(2)),
                                build_r_phi(f.space, f.triple.phi2, R(3)));
    nlohmann::json j = tensor_to_json(t);
    CurvatureTensor back = tensor_from_json(j);
    CHECK(back.space() == t.space());
    REQUIRE(back.terms().size() == 2);
    CHECK(back.terms()[0].lambda == R(2));
    CHECK(back.terms()[0].phi.phi == t.terms()[0].phi.phi);
    CHECK(back.terms()[1].phi.delta == 1);

    // dense block round trip
    nlohmann::json jd = tensor_to_json(t, /*with_dense=*/true);
    CHECK(tensor_from_json(jd).dense() == t.dense());

    // stored delta must agree with phi^2
    nlohmann::json bad = j;
    bad["terms"][0]["delta"] = -1;
    CHECK_THROWS_AS(tensor_from_json(bad), std::invalid_argument);

    nlohmann::json empty = {{"space", {{"gram", matrix_to_json(QMatrix::identity(2))}}}};
    CHECK_THROWS_AS(tensor_from_json(empty), std::invalid_argument);

    // a corrupted dense block still loads, so check-symmetries can flag it
    nlohmann::json corrupt = tensor_to_json(build_r_phi(f.space, f.triple.phi1, R(1)), true);
    corrupt["terms"] = nlohmann::json::array();
    corrupt["dense"][0][0][0][0] = "1";
    CHECK_FALSE(validate_symmetries(tensor_from_json(corrupt)).ok);

    // triple sidecar round trip
    nlohmann::json tj = triple_to_json(f.space, f.triple, R(2), R(3));
    TripleFile tf = triple_from_json(tj);
    CHECK(tf.lambda1 == R(2));
    CHECK(tf.triple.phi2.delta == 1);
    CHECK(tf.triple.j == f.triple.j);
}
