#pragma once

/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials over an exact field.
 *
 * Coefficients are stored lowest degree first; the zero polynomial is the
 * empty sequence and the leading coefficient of a nonzero polynomial is
 * always nonzero.
 */

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace jordanip {

template <typename F>
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Polynomial constant(F v) { return Polynomial(std::vector<F>{std::move(v)}); }
    /// The monomial t.
    static Polynomial t() { return Polynomial(std::vector<F>{F(0), F(1)}); }

    bool is_zero() const { return c_.empty(); }
    /// Degree of the zero polynomial is -1 by convention.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<F>& coeffs() const { return c_; }

    const F& operator[](std::size_t k) const { return c_[k]; }
    F coeff(std::size_t k) const { return k < c_.size() ? c_[k] : F(0); }
    const F& lead() const {
        if (is_zero()) throw std::domain_error("polynomial: zero has no leading coefficient");
        return c_.back();
    }
    bool is_monic() const { return !is_zero() && lead() == F(1); }
    bool is_one() const { return c_.size() == 1 && c_[0] == F(1); }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<F> r(std::max(a.c_.size(), b.c_.size()), F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<F> r(std::max(a.c_.size(), b.c_.size()), F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator-(const Polynomial& a) {
        std::vector<F> r = a.c_;
        for (auto& x : r) x = -x;
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<F> r(a.c_.size() + b.c_.size() - 1, F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const F& s, const Polynomial& a) {
        std::vector<F> r = a.c_;
        for (auto& x : r) x = s * x;
        return Polynomial(std::move(r));
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Euclidean division: *this = q*d + r with deg r < deg d.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
        if (d.is_zero()) throw std::domain_error("polynomial: division by zero");
        Polynomial r = *this;
        std::vector<F> q;
        if (degree() >= d.degree()) q.assign(degree() - d.degree() + 1, F(0));
        while (!r.is_zero() && r.degree() >= d.degree()) {
            F k = r.lead() / d.lead();
            int shift = r.degree() - d.degree();
            q[shift] = k;
            std::vector<F> rc = r.c_;
            for (std::size_t i = 0; i < d.c_.size(); ++i) rc[i + shift] -= k * d.c_[i];
            rc.pop_back();  // leading term cancels exactly
            r = Polynomial(std::move(rc));
        }
        return {Polynomial(std::move(q)), std::move(r)};
    }
    Polynomial operator/(const Polynomial& d) const { return divmod(d).first; }
    Polynomial operator%(const Polynomial& d) const { return divmod(d).second; }
    bool divides(const Polynomial& other) const { return other.divmod(*this).second.is_zero(); }

    Polynomial monic() const {
        if (is_zero()) return {};
        F inv = F(1) / lead();
        return inv * *this;
    }

    F eval(const F& x) const {
        F acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == F(0)) c_.pop_back();
    }
    std::vector<F> c_;  // lowest degree first
};

template <typename F>
Polynomial<F> poly_gcd(Polynomial<F> a, Polynomial<F> b) {
    while (!b.is_zero()) {
        Polynomial<F> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

}  // namespace jordanip
