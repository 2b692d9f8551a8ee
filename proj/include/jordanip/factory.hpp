#pragma once

/**
 * @file factory.hpp
 * @brief Explicit admissible triples for all 8 (delta1, delta2) cases,
 *        built from fixed 2x2 / 4x4 generators by Kronecker products,
 *        plus the reduced Riemannian 8-dimensional variant.
 *
 * The full construction lives on the uniform 32-dimensional space
 * (0,4) (x) (0,2) (x) (1,1) (x) (1,1) of signature (16,16):
 *   phi1 = e1 (x) Id (x) tau1,  phi2 = e2 (x) alpha (x) tau2,
 *   J = Id (x) J0 (x) Id,
 * with tau_i = Id(x)Id, beta(x)Id, or Id(x)gamma for delta_i = +1, -1, 0.
 * Every instance is verified computationally at build time: the relation
 * table of the generators, admissibility of each phi, and the triple
 * identities.
 */

#include "jordanip/curvature.hpp"
#include "jordanip/space.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace jordanip {

struct BaseMatrices {
    QMatrix e1, e2;       // 4x4 anticommuting involutions on the (0,4) space
    QMatrix j0, alpha;    // 2x2 on the (0,2) space
    QMatrix beta, gamma;  // 2x2 on the (1,1) space with gram diag(-1,1)
    QMatrix gram11;       // diag(-1,1)
};

/// The fixed generator matrices; the full relation table is verified at
/// construction (a failure would be a build defect, hence logic_error).
inline BaseMatrices base_matrices() {
    using R = Rational;
    BaseMatrices b;
    b.e1 = QMatrix{{R(0), R(1), R(0), R(0)},
                   {R(1), R(0), R(0), R(0)},
                   {R(0), R(0), R(0), R(1)},
                   {R(0), R(0), R(1), R(0)}};
    b.e2 = QMatrix{{R(0), R(0), R(1), R(0)},
                   {R(0), R(0), R(0), R(-1)},
                   {R(1), R(0), R(0), R(0)},
                   {R(0), R(-1), R(0), R(0)}};
    b.j0 = QMatrix{{R(0), R(1)}, {R(-1), R(0)}};
    b.alpha = QMatrix{{R(0), R(1)}, {R(1), R(0)}};
    b.beta = QMatrix{{R(0), R(1)}, {R(-1), R(0)}};
    b.gamma = QMatrix{{R(1), R(-1)}, {R(1), R(-1)}};
    b.gram11 = QMatrix{{R(-1), R(0)}, {R(0), R(1)}};

    const QMatrix id4 = QMatrix::identity(4);
    const QMatrix id2 = QMatrix::identity(2);
    auto expect = [](bool ok, const char* what) {
        if (!ok) throw std::logic_error(std::string("base_matrices: relation failed: ") + what);
    };
    // adjoints w.r.t. each factor's gram
    expect(b.e1 == b.e1.transpose(), "e1* = e1");
    expect(b.e2 == b.e2.transpose(), "e2* = e2");
    expect(b.e1 * b.e1 == id4, "e1^2 = Id");
    expect(b.e2 * b.e2 == id4, "e2^2 = Id");
    expect((b.e1 * b.e2 + b.e2 * b.e1).is_zero(), "e1 e2 + e2 e1 = 0");
    expect(b.j0.transpose() == -b.j0, "J0* = -J0");
    expect(b.j0 * b.j0 == -id2, "J0^2 = -Id");
    expect(b.alpha == b.alpha.transpose(), "alpha* = alpha");
    expect(b.alpha * b.alpha == id2, "alpha^2 = Id");
    expect(b.j0 * b.alpha == -(b.alpha * b.j0), "J0 alpha = -alpha J0");
    expect(b.gram11 * b.beta == (b.gram11 * b.beta).transpose(), "beta* = beta");
    expect(b.beta * b.beta == -id2, "beta^2 = -Id");
    expect(b.gram11 * b.gamma == (b.gram11 * b.gamma).transpose(), "gamma* = gamma");
    expect((b.gamma * b.gamma).is_zero(), "gamma^2 = 0");
    expect(rank(b.gamma) == 1 && column_space_basis(b.gamma) == nullspace(b.gamma),
           "Range gamma = ker gamma");
    return b;
}

/// tau_i on the fixed 4-dimensional factor W = (1,1) (x) (1,1).
inline std::pair<QMatrix, QMatrix> tau(int delta) {
    BaseMatrices b = base_matrices();
    QMatrix gram_w = kron(b.gram11, b.gram11);
    const QMatrix id2 = QMatrix::identity(2);
    switch (delta) {
        case 1: return {QMatrix::identity(4), gram_w};
        case -1: return {kron(b.beta, id2), gram_w};
        case 0: return {kron(id2, b.gamma), gram_w};
        default: throw std::invalid_argument("tau: delta must be +1, -1, or 0");
    }
}

struct ExampleSpec {
    int delta1 = 1;
    int delta2 = 1;
    Rational lambda1 = Rational(2);
    Rational lambda2 = Rational(3);
    bool reduced = false;  // Riemannian 8-dim variant, only for (+1, +1)
};

struct FactoryTriple {
    InnerProductSpace space;
    AdmissibleTriple triple;
};

inline FactoryTriple build_triple(const ExampleSpec& spec) {
    if (spec.delta1 == 0 && spec.delta2 == 0)
        throw std::invalid_argument("build_triple: (0, 0) is not an admissible case");
    for (int d : {spec.delta1, spec.delta2})
        if (d != 1 && d != -1 && d != 0)
            throw std::invalid_argument("build_triple: delta must be +1, -1, or 0");
    BaseMatrices b = base_matrices();
    const QMatrix id4 = QMatrix::identity(4);
    const QMatrix id2 = QMatrix::identity(2);

    if (spec.reduced) {
        if (spec.delta1 != 1 || spec.delta2 != 1)
            throw std::invalid_argument("build_triple: reduced variant requires delta1 = delta2 = +1");
        InnerProductSpace space(QMatrix::identity(8));
        QMatrix phi1 = kron(b.e1, id2);
        QMatrix phi2 = kron(b.e2, b.alpha);
        ComplexStructure j(space, kron(id4, b.j0));
        AdmissibleTriple triple = check_triple(space, phi1, phi2, j);
        return {std::move(space), std::move(triple)};
    }

    auto [tau1, gram_w] = tau(spec.delta1);
    QMatrix tau2 = tau(spec.delta2).first;
    InnerProductSpace space(kron(kron(id4, id2), gram_w));
    QMatrix phi1 = kron(kron(b.e1, id2), tau1);
    QMatrix phi2 = kron(kron(b.e2, b.alpha), tau2);
    ComplexStructure j(space, kron(kron(id4, b.j0), QMatrix::identity(4)));
    AdmissibleTriple triple = check_triple(space, phi1, phi2, j);
    if (triple.phi1.delta != spec.delta1 || triple.phi2.delta != spec.delta2)
        throw std::logic_error("build_triple: detected deltas disagree with the requested ones");
    return {std::move(space), std::move(triple)};
}

inline CurvatureTensor build_example_tensor(const ExampleSpec& spec) {
    FactoryTriple f = build_triple(spec);
    return combine(build_r_phi(f.space, f.triple.phi1, spec.lambda1),
                   build_r_phi(f.space, f.triple.phi2, spec.lambda2));
}

/// All 8 admissible (delta1, delta2) pairs.
inline std::vector<std::pair<int, int>> all_delta_pairs() {
    std::vector<std::pair<int, int>> out;
    for (int d1 : {1, -1, 0})
        for (int d2 : {1, -1, 0})
            if (d1 != 0 || d2 != 0) out.emplace_back(d1, d2);
    return out;
}

}  // namespace jordanip
