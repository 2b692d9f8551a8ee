#pragma once

/**
 * @file tensor_io.hpp
 * @brief Tensor and triple file formats (JSON, all scalars as strings).
 *
 * Tensor file:
 *   { "space": { "gram": [[...]] },
 *     "terms": [ { "lambda": "2", "phi": [[...]], "delta": 1 }, ... ],
 *     "dense": [[[[ ... ]]]]            // optional
 *   }
 * Triple sidecar:
 *   { "gram": [[...]], "phi1": [[...]], "phi2": [[...]], "j": [[...]],
 *     "delta1": 1, "delta2": 0, "lambda1": "2", "lambda2": "3" }
 */

#include "jordanip/curvature.hpp"
#include "jordanip/factory.hpp"
#include "jordanip/json_io.hpp"
#include "jordanip/space.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace jordanip {

inline nlohmann::json dense_to_json(const DenseTensor& d) {
    const std::size_t m = d.dim();
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t i = 0; i < m; ++i) {
        nlohmann::json ji = nlohmann::json::array();
        for (std::size_t j = 0; j < m; ++j) {
            nlohmann::json jk = nlohmann::json::array();
            for (std::size_t k = 0; k < m; ++k) {
                nlohmann::json jl = nlohmann::json::array();
                for (std::size_t l = 0; l < m; ++l)
                    jl.push_back(rational_to_string(d(i, j, k, l)));
                jk.push_back(std::move(jl));
            }
            ji.push_back(std::move(jk));
        }
        out.push_back(std::move(ji));
    }
    return out;
}

inline DenseTensor dense_from_json(const nlohmann::json& j) {
    std::size_t m = j.size();
    DenseTensor d(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t k = 0; k < m; ++k)
                for (std::size_t l = 0; l < m; ++l)
                    d(i, a, k, l) = parse_rational(j.at(i).at(a).at(k).at(l).get<std::string>());
    return d;
}

inline nlohmann::json tensor_to_json(const CurvatureTensor& t, bool with_dense = false,
                                     std::size_t dense_limit = kDefaultDenseLimit) {
    nlohmann::json out;
    out["space"] = {{"gram", matrix_to_json(t.space().gram())}};
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& term : t.terms())
        terms.push_back({{"lambda", rational_to_string(term.lambda)},
                         {"phi", matrix_to_json(term.phi.phi)},
                         {"delta", term.phi.delta}});
    out["terms"] = std::move(terms);
    if (with_dense) out["dense"] = dense_to_json(t.dense(dense_limit));
    return out;
}

/// Parse and re-verify: every phi must pass check_admissible and its
/// delta must match the stored one. A present dense block is loaded
/// as-is (so that corrupted tensors can be fed to check-symmetries).
inline CurvatureTensor tensor_from_json(const nlohmann::json& j) {
    InnerProductSpace space(matrix_from_json(j.at("space").at("gram")));
    std::vector<CurvatureTerm> terms;
    if (j.contains("terms"))
        for (const auto& term : j.at("terms")) {
            Rational lambda = parse_rational(term.at("lambda").get<std::string>());
            AdmissibleMap phi = check_admissible(space, matrix_from_json(term.at("phi")));
            if (term.contains("delta") && term.at("delta").get<int>() != phi.delta)
                throw std::invalid_argument("tensor json: stored delta disagrees with phi^2");
            terms.push_back({std::move(lambda), std::move(phi)});
        }
    std::optional<DenseTensor> dense;
    if (j.contains("dense")) dense = dense_from_json(j.at("dense"));
    if (terms.empty() && !dense)
        throw std::invalid_argument("tensor json: neither terms nor dense present");
    return CurvatureTensor(std::move(space), std::move(terms), std::move(dense));
}

struct TripleFile {
    InnerProductSpace space;
    AdmissibleTriple triple;
    Rational lambda1;
    Rational lambda2;
};

inline nlohmann::json triple_to_json(const InnerProductSpace& space, const AdmissibleTriple& triple,
                                     const Rational& lambda1, const Rational& lambda2) {
    return {{"gram", matrix_to_json(space.gram())},
            {"phi1", matrix_to_json(triple.phi1.phi)},
            {"phi2", matrix_to_json(triple.phi2.phi)},
            {"j", matrix_to_json(triple.j)},
            {"delta1", triple.phi1.delta},
            {"delta2", triple.phi2.delta},
            {"lambda1", rational_to_string(lambda1)},
            {"lambda2", rational_to_string(lambda2)}};
}

inline TripleFile triple_from_json(const nlohmann::json& j) {
    InnerProductSpace space(matrix_from_json(j.at("gram")));
    ComplexStructure cs(space, matrix_from_json(j.at("j")));
    AdmissibleTriple triple =
        check_triple(space, matrix_from_json(j.at("phi1")), matrix_from_json(j.at("phi2")), cs);
    Rational l1 = parse_rational(j.at("lambda1").get<std::string>());
    Rational l2 = parse_rational(j.at("lambda2").get<std::string>());
    return TripleFile{std::move(space), std::move(triple), std::move(l1), std::move(l2)};
}

}  // namespace jordanip
