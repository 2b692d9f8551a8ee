#pragma once

/**
 * @file linalg.hpp
 * @brief Exact linear algebra: rank, nullspace, solving, characteristic
 *        polynomials, and invariant factors via Smith normal form of the
 *        characteristic matrix.
 */

#include "jordanip/matrix.hpp"
#include "jordanip/polynomial.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace jordanip {

/// Reduced row echelon form in place; returns pivot column indices.
template <typename F>
std::vector<std::size_t> rref(Matrix<F>& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == F(0)) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        F inv = F(1) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = inv * m(r, j);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == F(0)) continue;
            F f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <typename F>
std::size_t rank(const Matrix<F>& a) {
    Matrix<F> m = a;
    return rref(m).size();
}

/// Basis of the right nullspace, one vector per free column.
template <typename F>
std::vector<std::vector<F>> nullspace(const Matrix<F>& a) {
    Matrix<F> m = a;
    std::vector<std::size_t> pivots = rref(m);
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t c = 0; c < a.cols(); ++c) {
        if (is_pivot[c]) continue;
        std::vector<F> v(a.cols(), F(0));
        v[c] = F(1);
        for (std::size_t k = 0; k < pivots.size(); ++k)
            if (pivots[k] < c) v[pivots[k]] = -m(k, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Basis of the column space: the pivot columns of A.
template <typename F>
std::vector<std::vector<F>> column_space_basis(const Matrix<F>& a) {
    Matrix<F> m = a;
    std::vector<std::size_t> pivots = rref(m);
    std::vector<std::vector<F>> basis;
    basis.reserve(pivots.size());
    for (std::size_t c : pivots) basis.push_back(a.col(c));
    return basis;
}

/// One solution of A x = b, if any.
template <typename F>
std::optional<std::vector<F>> solve(const Matrix<F>& a, const std::vector<F>& b) {
    if (a.rows() != b.size()) throw std::invalid_argument("solve: shape mismatch");
    Matrix<F> m(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
        m(i, a.cols()) = b[i];
    }
    std::vector<std::size_t> pivots = rref(m);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;  // inconsistent
    std::vector<F> x(a.cols(), F(0));
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = m(k, a.cols());
    return x;
}

template <typename F>
Matrix<F> inverse(const Matrix<F>& a) {
    if (!a.is_square()) throw std::invalid_argument("inverse: non-square");
    std::size_t n = a.rows();
    Matrix<F> m(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
        m(i, n + i) = F(1);
    }
    std::vector<std::size_t> pivots = rref(m);
    if (pivots.size() != n || pivots.back() != n - 1)
        throw std::domain_error("inverse: singular matrix");
    Matrix<F> r(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r(i, j) = m(i, n + j);
    return r;
}

/// Monic characteristic polynomial det(t*Id - A) by the Faddeev-LeVerrier
/// recurrence; the only divisions are by the integers 1..n.
template <typename F>
Polynomial<F> char_poly(const Matrix<F>& a) {
    if (!a.is_square()) throw std::invalid_argument("char_poly: non-square");
    std::size_t n = a.rows();
    std::vector<F> coeffs(n + 1, F(0));
    coeffs[n] = F(1);
    Matrix<F> m = Matrix<F>::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = a * m;
        F c = -(m.trace() / F(static_cast<int>(k)));
        coeffs[n - k] = c;
        for (std::size_t i = 0; i < n; ++i) m(i, i) += c;
    }
    return Polynomial<F>(std::move(coeffs));
}

/// Horner evaluation of p at a square matrix.
template <typename F>
Matrix<F> eval_at(const Polynomial<F>& p, const Matrix<F>& a) {
    if (!a.is_square()) throw std::invalid_argument("eval_at: non-square");
    std::size_t n = a.rows();
    Matrix<F> acc(n, n);
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        acc = a * acc;
        F c = p.coeffs()[i];
        for (std::size_t d = 0; d < n; ++d) acc(d, d) += c;
    }
    return acc;
}

namespace detail {

/// Smith normal form diagonal of a square polynomial matrix, in the
/// divisibility order d1 | d2 | ... . Pivot choice: nonzero entry of
/// minimal degree, ties broken by smallest (row, col).
template <typename F>
std::vector<Polynomial<F>> smith_diagonal(std::vector<std::vector<Polynomial<F>>> p) {
    using Poly = Polynomial<F>;
    const std::size_t n = p.size();
    std::vector<Poly> diag;
    for (std::size_t r = 0; r < n; ++r) {
        for (;;) {
            // pick the pivot
            bool found = false;
            std::size_t pi = r, pj = r;
            int best = -1;
            for (std::size_t i = r; i < n; ++i)
                for (std::size_t j = r; j < n; ++j) {
                    if (p[i][j].is_zero()) continue;
                    int d = p[i][j].degree();
                    if (!found || d < best) {
                        found = true;
                        best = d;
                        pi = i;
                        pj = j;
                    }
                }
            if (!found) {
                for (std::size_t k = r; k < n; ++k) diag.push_back(Poly{});
                return diag;
            }
            std::swap(p[pi], p[r]);
            if (pj != r)
                for (std::size_t i = 0; i < n; ++i) std::swap(p[i][pj], p[i][r]);

            bool reduced = true;
            for (std::size_t i = r + 1; i < n; ++i) {
                if (p[i][r].is_zero()) continue;
                auto [q, rem] = p[i][r].divmod(p[r][r]);
                for (std::size_t j = r; j < n; ++j) p[i][j] = p[i][j] - q * p[r][j];
                if (!rem.is_zero()) reduced = false;
            }
            for (std::size_t j = r + 1; j < n; ++j) {
                if (p[r][j].is_zero()) continue;
                auto [q, rem] = p[r][j].divmod(p[r][r]);
                for (std::size_t i = r; i < n; ++i) p[i][j] = p[i][j] - q * p[i][r];
                if (!rem.is_zero()) reduced = false;
            }
            if (!reduced) continue;  // smaller-degree remainders became new pivot candidates

            // pivot divides its row and column; enforce divisibility of the block
            bool chain_ok = true;
            for (std::size_t i = r + 1; i < n && chain_ok; ++i)
                for (std::size_t j = r + 1; j < n && chain_ok; ++j)
                    if (!p[i][j].is_zero() && !(p[i][j] % p[r][r]).is_zero()) {
                        for (std::size_t k = r; k < n; ++k) p[r][k] = p[r][k] + p[i][k];
                        chain_ok = false;
                    }
            if (chain_ok) break;
        }
        diag.push_back(p[r][r]);
    }
    return diag;
}

}  // namespace detail

/// Invariant factor sequence of a square matrix: the Smith normal form
/// diagonal of t*Id - A over F[t], monic, trivial (constant) factors
/// elided, in divisibility order. A complete similarity invariant.
template <typename F>
std::vector<Polynomial<F>> invariant_factors(const Matrix<F>& a) {
    if (!a.is_square()) throw std::invalid_argument("invariant_factors: non-square");
    using Poly = Polynomial<F>;
    std::size_t n = a.rows();
    std::vector<std::vector<Poly>> p(n, std::vector<Poly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<F> c{-a(i, j)};
            if (i == j) c.push_back(F(1));
            p[i][j] = Poly(std::move(c));
        }
    std::vector<Poly> diag = detail::smith_diagonal(std::move(p));
    std::vector<Poly> out;
    for (auto& d : diag) {
        if (d.is_zero()) throw std::logic_error("invariant_factors: characteristic matrix degenerate");
        if (d.degree() == 0) continue;
        out.push_back(d.monic());
    }
    return out;
}

}  // namespace jordanip
