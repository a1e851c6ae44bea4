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

#ifndef BRAUER_ARITH_HPP
#define BRAUER_ARITH_HPP

#include <cstdint>
#include <numeric>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "error.hpp"

namespace brauer {

using u64 = std::uint64_t;
using i64 = std::int64_t;

/// Least non-negative residue of a modulo m.
inline u64 mod_floor(i64 a, u64 m) {
    const i64 r = a % static_cast<i64>(m);
    return static_cast<u64>(r < 0 ? r + static_cast<i64>(m) : r);
}

__extension__ using u128 = unsigned __int128;

inline u64 mul_mod(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

inline u64 pow_mod(u64 base, u64 exp, u64 m) {
    u64 result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1U) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1U;
    }
    return result;
}

/// Returns (g, s, t) with g = gcd(a, b) = s*a + t*b and g >= 0.
inline std::tuple<i64, i64, i64> extended_gcd(i64 a, i64 b) {
    i64 old_r = a, r = b;
    i64 old_s = 1, s = 0;
    i64 old_t = 0, t = 1;
    while (r != 0) {
        const i64 q = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
        std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
    }
    if (old_r < 0) return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

/// Inverse of a modulo m, if gcd(a, m) = 1.
inline std::optional<u64> inverse_mod(u64 a, u64 m) {
    auto [g, s, t] = extended_gcd(static_cast<i64>(a % m), static_cast<i64>(m));
    (void)t;
    if (g != 1) return std::nullopt;
    return mod_floor(s, m);
}

inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Distinct prime divisors in increasing order.
inline std::vector<u64> prime_divisors(u64 n) {
    std::vector<u64> out;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

/// Prime factorization as (prime, exponent) pairs.
inline std::vector<std::pair<u64, unsigned>> factor_integer(u64 n) {
    std::vector<std::pair<u64, unsigned>> out;
    for (u64 d = 2; d * d <= n; ++d) {
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e > 0) out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

/// Writes q = p^d with p prime, or returns nullopt.
inline std::optional<std::pair<u64, unsigned>> as_prime_power(u64 q) {
    if (q < 2) return std::nullopt;
    auto f = factor_integer(q);
    if (f.size() != 1) return std::nullopt;
    return f.front();
}

/// p^e, throwing when the result does not fit comfortably in 63 bits.
inline u64 checked_pow(u64 p, unsigned e) {
    u64 r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (r > (u64{1} << 62) / p) throw SizeGuardError("field order exceeds 2^62");
        r *= p;
    }
    return r;
}

} // namespace brauer

#endif // BRAUER_ARITH_HPP
