/*
   Copyright 2026 The brauer-residues Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef BRAUER_LINALG_HPP
#define BRAUER_LINALG_HPP

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <vector>

#include "arith.hpp"

namespace brauer {

/// Dense row-major matrix.
template <typename T>
struct Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<T> data;

    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, T{}) {}
    T& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

namespace detail {

inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw SizeGuardError("integer overflow in Smith normal form");
    return r;
}
inline i64 checked_sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r)) throw SizeGuardError("integer overflow in Smith normal form");
    return r;
}

} // namespace detail

/**
 * Nonzero diagonal entries of a diagonal form of an integer matrix.
 *
 * The entries are not normalized into a divisibility chain; the cokernel
 * is the direct sum of Z/d over them plus a free part of rank cols - count.
 */
inline std::vector<i64> integer_diagonal(Matrix<i64> a) {
    std::vector<i64> diag;
    const std::size_t lim = std::min(a.rows, a.cols);
    for (std::size_t t = 0; t < lim; ++t) {
        for (;;) {
            std::size_t pi = a.rows, pj = a.cols;
            i64 best = 0;
            for (std::size_t i = t; i < a.rows; ++i)
                for (std::size_t j = t; j < a.cols; ++j) {
                    const i64 v = std::llabs(a(i, j));
                    if (v != 0 && (best == 0 || v < best)) {
                        best = v;
                        pi = i;
                        pj = j;
                        if (best == 1) goto found;
                    }
                }
        found:
            if (best == 0) return diag;
            if (pi != t)
                for (std::size_t j = 0; j < a.cols; ++j) std::swap(a(pi, j), a(t, j));
            if (pj != t)
                for (std::size_t i = 0; i < a.rows; ++i) std::swap(a(i, pj), a(i, t));
            const i64 piv = a(t, t);
            bool clean = true;
            for (std::size_t i = t + 1; i < a.rows; ++i) {
                if (a(i, t) == 0) continue;
                const i64 q = a(i, t) / piv;
                if (q != 0)
                    for (std::size_t j = t; j < a.cols; ++j) a(i, j) = detail::checked_sub(a(i, j), detail::checked_mul(q, a(t, j)));
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < a.cols; ++j) {
                if (a(t, j) == 0) continue;
                const i64 q = a(t, j) / piv;
                if (q != 0)
                    for (std::size_t i = t; i < a.rows; ++i) a(i, j) = detail::checked_sub(a(i, j), detail::checked_mul(q, a(i, t)));
                if (a(t, j) != 0) clean = false;
            }
            if (clean) break;
        }
        diag.push_back(std::llabs(a(t, t)));
    }
    return diag;
}

/// Invariant factors d_1 | d_2 | ... (ascending, 1s dropped) of a direct sum of cyclic groups.
inline std::vector<u64> invariant_factors(const std::vector<u64>& cyclic_orders) {
    std::map<u64, std::vector<u64>> by_prime;  // prime -> prime powers
    for (u64 c : cyclic_orders) {
        for (auto [p, e] : factor_integer(c)) by_prime[p].push_back(checked_pow(p, e));
    }
    std::size_t len = 0;
    for (auto& [p, v] : by_prime) {
        std::sort(v.begin(), v.end(), std::greater<>());
        len = std::max(len, v.size());
    }
    std::vector<u64> out(len, 1);
    for (auto& [p, v] : by_prime)
        for (std::size_t i = 0; i < v.size(); ++i) out[i] *= v[i];
    std::reverse(out.begin(), out.end());
    return out;
}

/**
 * Solves A x = b over Z/m (any m >= 1) by diagonalizing A with unimodular
 * Bezout row and column operations. Returns one solution, or nullopt.
 */
inline std::optional<std::vector<u64>> solve_mod(Matrix<u64> a, std::vector<u64> b, u64 m) {
    const std::size_t R = a.rows, C = a.cols;
    for (auto& v : a.data) v %= m;
    for (auto& v : b) v %= m;
    Matrix<u64> V(C, C);
    for (std::size_t i = 0; i < C; ++i) V(i, i) = 1 % m;
    auto lin = [&](i64 s, u64 x, i64 u, u64 y) {
        return (mul_mod(mod_floor(s, m), x, m) + mul_mod(mod_floor(u, m), y, m)) % m;
    };
    // Replace rows (t, i) by (s*t + u*i, v*t + w*i), det = 1.
    auto row_op = [&](std::size_t t, std::size_t i, i64 s, i64 u, i64 v, i64 w) {
        for (std::size_t j = 0; j < C; ++j) {
            const u64 x = a(t, j), y = a(i, j);
            a(t, j) = lin(s, x, u, y);
            a(i, j) = lin(v, x, w, y);
        }
        const u64 x = b[t], y = b[i];
        b[t] = lin(s, x, u, y);
        b[i] = lin(v, x, w, y);
    };
    auto col_op = [&](std::size_t t, std::size_t j, i64 s, i64 u, i64 v, i64 w) {
        for (std::size_t i = 0; i < R; ++i) {
            const u64 x = a(i, t), y = a(i, j);
            a(i, t) = lin(s, x, u, y);
            a(i, j) = lin(v, x, w, y);
        }
        for (std::size_t i = 0; i < C; ++i) {
            const u64 x = V(i, t), y = V(i, j);
            V(i, t) = lin(s, x, u, y);
            V(i, j) = lin(v, x, w, y);
        }
    };
    std::size_t rank = 0;
    for (std::size_t t = 0; t < std::min(R, C); ++t) {
        std::size_t pi = R, pj = C;
        for (std::size_t i = t; i < R && pi == R; ++i)
            for (std::size_t j = t; j < C; ++j)
                if (a(i, j) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == R) break;
        if (pi != t) {
            for (std::size_t j = 0; j < C; ++j) std::swap(a(pi, j), a(t, j));
            std::swap(b[pi], b[t]);
        }
        if (pj != t) {
            for (std::size_t i = 0; i < R; ++i) std::swap(a(i, pj), a(i, t));
            for (std::size_t i = 0; i < C; ++i) std::swap(V(i, pj), V(i, t));
        }
        for (;;) {
            for (std::size_t i = t + 1; i < R; ++i) {
                const i64 x = static_cast<i64>(a(t, t)), y = static_cast<i64>(a(i, t));
                if (y == 0) continue;
                if (x != 0 && y % x == 0) {
                    row_op(t, i, 1, 0, -(y / x), 1);
                } else {
                    auto [g, s, u] = extended_gcd(x, y);
                    row_op(t, i, s, u, -(y / g), x / g);
                }
            }
            bool clean = true;
            for (std::size_t j = t + 1; j < C; ++j) {
                const i64 x = static_cast<i64>(a(t, t)), y = static_cast<i64>(a(t, j));
                if (y == 0) continue;
                if (x != 0 && y % x == 0) {
                    col_op(t, j, 1, 0, -(y / x), 1);
                } else {
                    auto [g, s, u] = extended_gcd(x, y);
                    col_op(t, j, s, u, -(y / g), x / g);
                    clean = false;
                }
            }
            if (clean) break;
            bool column_clear = true;
            for (std::size_t i = t + 1; i < R; ++i)
                if (a(i, t) != 0) column_clear = false;
            if (column_clear) break;
        }
        ++rank;
    }
    std::vector<u64> y(C, 0);
    for (std::size_t k = 0; k < rank; ++k) {
        const u64 s = a(k, k), c = b[k];
        const u64 g = std::gcd(s, m);
        if (c % g != 0) return std::nullopt;
        const u64 mg = m / g;
        const u64 inv = inverse_mod((s / g) % mg, mg).value_or(0);
        y[k] = mg == 1 ? 0 : mul_mod(c / g, inv, mg);
    }
    for (std::size_t k = rank; k < R; ++k)
        if (b[k] != 0) return std::nullopt;
    std::vector<u64> x(C, 0);
    for (std::size_t i = 0; i < C; ++i) {
        u64 acc = 0;
        for (std::size_t k = 0; k < C; ++k) acc = (acc + mul_mod(V(i, k), y[k], m)) % m;
        x[i] = acc;
    }
    return x;
}

} // namespace brauer

#endif // BRAUER_LINALG_HPP
