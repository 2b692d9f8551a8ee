#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational scalars backed by GMP.
 *
 * All core computation in this library is exact; no floating point is
 * used anywhere on the primary paths. Rationals are kept in canonical
 * form: gcd(|num|, den) = 1, den > 0, zero is 0/1. gmpxx arithmetic
 * preserves canonical form, so canonicalization only happens at
 * construction boundaries (parsing, integer pairs).
 */

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace jordanip {

using Integer = mpz_class;
using Rational = mpq_class;

/// Build a canonical rational from an integer pair.
inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Serialize as "n" or "n/d" (canonical form, denominator positive).
inline std::string rational_to_string(const Rational& r) {
    return r.get_str();
}

/// Parse "n" or "n/d" decimal strings; anything else is rejected.
inline Rational parse_rational(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("rational: empty string");
    std::size_t pos = 0;
    auto digits_ok = [&](std::size_t from, std::size_t to) {
        if (from >= to) return false;
        for (std::size_t i = from; i < to; ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    if (s[0] == '-') pos = 1;
    std::size_t slash = s.find('/');
    if (slash == std::string_view::npos) {
        if (!digits_ok(pos, s.size()))
            throw std::invalid_argument("rational: bad integer literal: " + std::string(s));
        return Rational(mpz_class(std::string(s), 10));
    }
    if (!digits_ok(pos, slash) || !digits_ok(slash + 1, s.size()))
        throw std::invalid_argument("rational: bad fraction literal: " + std::string(s));
    Integer num(std::string(s.substr(0, slash)), 10);
    Integer den(std::string(s.substr(slash + 1)), 10);
    return make_rational(num, den);
}

inline int sign(const Rational& r) { return sgn(r); }

/// True if r = (p/q)^2 for some rational; on success *root >= 0.
inline bool rational_square_root(const Rational& r, Rational* root) {
    if (sgn(r) < 0) return false;
    const Integer& num = r.get_num();
    const Integer& den = r.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
    Integer sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    if (root) *root = make_rational(sn, sd);
    return true;
}

}  // namespace jordanip
