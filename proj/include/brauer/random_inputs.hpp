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

#ifndef BRAUER_RANDOM_INPUTS_HPP
#define BRAUER_RANDOM_INPUTS_HPP

#include <random>

#include "conic.hpp"

// Random generators for property checks (selftest command and test suites).

namespace brauer::random {

inline FieldElement element(const FiniteField& F, std::mt19937_64& rng) {
    return F.element(std::uniform_int_distribution<u64>(0, F.order() - 1)(rng));
}

inline FieldElement nonzero_element(const FiniteField& F, std::mt19937_64& rng) {
    return F.element(std::uniform_int_distribution<u64>(1, F.order() - 1)(rng));
}

/// Nonzero polynomial of degree at most max_deg.
inline Poly poly(const FiniteField& F, int max_deg, std::mt19937_64& rng) {
    const int deg = std::uniform_int_distribution<int>(0, max_deg)(rng);
    std::vector<FieldElement> c;
    for (int i = 0; i < deg; ++i) c.push_back(element(F, rng));
    c.push_back(nonzero_element(F, rng));
    return Poly(F, std::move(c));
}

inline RatFunc ratfunc(const FiniteField& F, int max_num_deg, int max_den_deg, std::mt19937_64& rng) {
    return RatFunc(poly(F, max_num_deg, rng), poly(F, max_den_deg, rng));
}

inline Poly monic_irreducible(const FiniteField& F, int deg, std::mt19937_64& rng) {
    for (;;) {
        std::vector<FieldElement> c;
        for (int i = 0; i < deg; ++i) c.push_back(element(F, rng));
        c.push_back(F.one());
        Poly f(F, std::move(c));
        if (is_irreducible(f)) return f;
    }
}

/// A finite place of degree 1..max_deg, or infinity with probability 1/(max_deg + 1).
inline Place place(const FiniteField& F, int max_deg, std::mt19937_64& rng) {
    const int d = std::uniform_int_distribution<int>(0, max_deg)(rng);
    if (d == 0) return Place::infinity(F);
    return Place::finite(monic_irreducible(F, d, rng));
}

/// A function with v_P = 0.
inline RatFunc unit_at(const Place& P, int max_deg, std::mt19937_64& rng) {
    const RatFunc f = ratfunc(P.base(), max_deg, max_deg, rng);
    return f * P.uniformizer().pow(-valuation(f, P));
}

inline SymbolClass symbol(const FiniteField& F, u64 n, int max_terms, int max_deg, std::mt19937_64& rng) {
    SymbolClass s(F, n);
    const int terms = std::uniform_int_distribution<int>(1, max_terms)(rng);
    std::uniform_int_distribution<i64> mult(1, static_cast<i64>(n) - 1 > 0 ? static_cast<i64>(n) - 1 : 1);
    for (int i = 0; i < terms; ++i) s.add(ratfunc(F, max_deg, max_deg / 2, rng), ratfunc(F, max_deg, max_deg / 2, rng), mult(rng));
    return s;
}

/// Conic with polynomial coefficients of degree at most max_deg.
inline ConicBundle conic(const FiniteField& F, int max_deg, std::mt19937_64& rng) {
    return ConicBundle(RatFunc(poly(F, max_deg, rng)), RatFunc(poly(F, max_deg, rng)));
}

} // namespace brauer::random

#endif // BRAUER_RANDOM_INPUTS_HPP
