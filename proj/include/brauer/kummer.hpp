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

#ifndef BRAUER_KUMMER_HPP
#define BRAUER_KUMMER_HPP

#include <string>

#include "field_tower.hpp"

namespace brauer {

/**
 * An element of Z/n standing for a class in kappa^* / (kappa^*)^n.
 *
 * The identification is u -> m with u^((|kappa| - 1)/n) = zeta^m; zeta is
 * recorded so that a value can always be traced back to the root of unity
 * that produced it.
 */
struct ResidueClass {
    u64 n;
    u64 value;
    FieldElement zeta;

    bool is_zero() const { return value == 0; }

    ResidueClass operator+(const ResidueClass& o) const {
        check(o);
        return {n, (value + o.value) % n, zeta};
    }
    ResidueClass operator-() const { return {n, (n - value) % n, zeta}; }
    ResidueClass scaled(i64 k) const { return {n, mul_mod(value, mod_floor(k, n), n), zeta}; }

    friend bool operator==(const ResidueClass& a, const ResidueClass& b) {
        return a.n == b.n && a.value == b.value && a.zeta == b.zeta;
    }

    std::string to_string() const { return std::to_string(value) + " (zeta=" + zeta.to_string() + ")"; }

private:
    void check(const ResidueClass& o) const {
        if (n != o.n || !(zeta == o.zeta)) throw DomainError("adding residue classes with different normalizations");
    }
};

/// Throws unless mu_n is contained in F, i.e. n | |F| - 1.
inline void require_roots_of_unity(const FiniteField& F, u64 n) {
    if (n == 0 || (F.order() - 1) % n != 0)
        throw ConstraintError("n must divide q-1 (n=" + std::to_string(n) + ", q=" + std::to_string(F.order()) + ")");
}

/// Smallest element (by index) of exact multiplicative order n.
inline FieldElement primitive_root_of_unity(const FiniteField& F, u64 n) {
    require_roots_of_unity(F, n);
    for (u64 idx = 1; idx < F.order(); ++idx) {
        const FieldElement x = F.element(idx);
        if (x.pow(n).is_one() && multiplicative_order(x) == n) return x;
    }
    throw DomainError("no root of unity of order " + std::to_string(n));  // unreachable
}

inline ResidueClass power_residue_character(const FieldElement& u, u64 n, const FieldElement& zeta) {
    if (u.is_zero()) throw DomainError("power residue character of zero");
    const FiniteField F = u.field();
    require_roots_of_unity(F, n);
    if (!(zeta.field() == F) || zeta.is_zero() || multiplicative_order(zeta) != n)
        throw DomainError("zeta is not a primitive " + std::to_string(n) + "-th root of unity");
    const FieldElement w = u.pow((F.order() - 1) / n);
    FieldElement z = F.one();
    for (u64 m = 0; m < n; ++m) {
        if (z == w) return {n, m, zeta};
        z = z * zeta;
    }
    throw DomainError("u^((q-1)/n) is not an n-th root of unity");  // unreachable for valid input
}

/**
 * Class of N(u) in F_q^* / (F_q^*)^n for u in an extension kappa of F_q.
 *
 * base_into_kappa fixes how F_q sits in kappa; zeta_base lives in F_q.
 */
inline ResidueClass corestrict(const FieldElement& u, const Embedding& base_into_kappa, u64 n, const FieldElement& zeta_base) {
    if (u.is_zero()) throw DomainError("corestriction of zero");
    const u64 big = base_into_kappa.target().order();
    const u64 small = base_into_kappa.source().order();
    require_roots_of_unity(base_into_kappa.source(), n);
    const FieldElement norm = u.pow((big - 1) / (small - 1));
    const auto down = base_into_kappa.preimage(norm);
    if (!down) throw DomainError("norm did not land in the base field");  // unreachable
    return power_residue_character(*down, n, zeta_base);
}

} // namespace brauer

#endif // BRAUER_KUMMER_HPP
