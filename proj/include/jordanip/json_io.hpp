#pragma once

/**
 * @file json_io.hpp
 * @brief JSON serialization of exact values.
 *
 * Matrices are arrays of arrays of decimal integer-or-fraction strings
 * ("3", "-1/2"); polynomials are coefficient-string arrays, lowest
 * degree first. Rationals are always strings, never JSON numbers.
 */

#include "jordanip/matrix.hpp"
#include "jordanip/polynomial.hpp"
#include "jordanip/rational.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace jordanip {

using QMatrix = Matrix<Rational>;
using QPoly = Polynomial<Rational>;
using QVector = std::vector<Rational>;

inline nlohmann::json matrix_to_json(const QMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline QMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix json: expected non-empty array of rows");
    std::size_t rows = j.size();
    if (!j[0].is_array() || j[0].empty())
        throw std::invalid_argument("matrix json: expected non-empty rows");
    std::size_t cols = j[0].size();
    std::vector<Rational> entries;
    entries.reserve(rows * cols);
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != cols)
            throw std::invalid_argument("matrix json: ragged rows");
        for (const auto& v : row) {
            if (!v.is_string()) throw std::invalid_argument("matrix json: entries must be strings");
            entries.push_back(parse_rational(v.get<std::string>()));
        }
    }
    return QMatrix(rows, cols, std::move(entries));
}

inline nlohmann::json vector_to_json(const QVector& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& x : v) a.push_back(rational_to_string(x));
    return a;
}

inline QVector vector_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("vector json: expected array");
    QVector v;
    v.reserve(j.size());
    for (const auto& x : j) v.push_back(parse_rational(x.get<std::string>()));
    return v;
}

inline nlohmann::json poly_to_json(const QPoly& p) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& c : p.coeffs()) a.push_back(rational_to_string(c));
    return a;
}

inline QPoly poly_from_json(const nlohmann::json& j) {
    std::vector<Rational> c;
    for (const auto& x : j) c.push_back(parse_rational(x.get<std::string>()));
    return QPoly(std::move(c));
}

}  // namespace jordanip
