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

#ifndef BRAUER_FIELD_TOWER_HPP
#define BRAUER_FIELD_TOWER_HPP

#include <optional>
#include <string>
#include <vector>

#include "poly.hpp"

namespace brauer {

/// F_p[x]/(m) after checking that m is monic irreducible.
inline FiniteField finite_field_with_modulus(u64 p, const std::vector<i64>& modulus) {
    const FiniteField fp = FiniteField::prime(p);
    Poly m = Poly::from_ints(fp, modulus);
    if (!m.is_monic() || !is_irreducible(m)) throw ConstraintError("modulus is not monic irreducible over F_" + std::to_string(p));
    std::vector<u64> c;
    for (const auto& e : m.coeffs()) c.push_back(e.coeffs()[0]);
    return FiniteField::from_modulus_unchecked(p, std::move(c));
}

/// F_{p^d} defined by the smallest monic irreducible of degree d (lower coefficients read as a base-p index).
inline FiniteField finite_field_of_degree(u64 p, std::size_t d) {
    const FiniteField fp = FiniteField::prime(p);
    if (d == 0) throw DomainError("extension degree must be positive");
    if (d == 1) return fp;
    const u64 count = checked_pow(p, static_cast<unsigned>(d));
    for (u64 idx = 0; idx < count; ++idx) {
        std::vector<FieldElement> c;
        u64 rest = idx;
        for (std::size_t i = 0; i < d; ++i) {
            c.push_back(fp.from_int(static_cast<i64>(rest % p)));
            rest /= p;
        }
        c.push_back(fp.one());
        Poly m(fp, c);
        if (m.coeff(0).is_zero() || !is_irreducible(m)) continue;
        std::vector<u64> raw;
        for (const auto& e : m.coeffs()) raw.push_back(e.coeffs()[0]);
        return FiniteField::from_modulus_unchecked(p, std::move(raw));
    }
    throw DomainError("no irreducible polynomial found");  // unreachable
}

inline FiniteField finite_field_of_order(u64 q) {
    auto pp = as_prime_power(q);
    if (!pp) throw ConstraintError("q = " + std::to_string(q) + " is not a prime power");
    return finite_field_of_degree(pp->first, pp->second);
}

/**
 * A field embedding source -> target, fixed by the image of the source
 * generator (the smallest root of the source modulus in target).
 */
class Embedding {
public:
    Embedding(FiniteField source, FiniteField target)
        : source_(std::move(source)), target_(std::move(target)), gen_image_(target_.zero()) {
        if (source_.characteristic() != target_.characteristic() || target_.degree() % source_.degree() != 0)
            throw DomainError(source_.to_string() + " does not embed in " + target_.to_string());
        std::vector<i64> m;
        for (u64 c : source_.modulus()) m.push_back(static_cast<i64>(c));
        const auto rts = roots(Poly::from_ints(target_, m));
        if (rts.empty()) throw DomainError("source modulus has no root in target");
        gen_image_ = rts.front();
        build_basis();
    }

    static Embedding identity(const FiniteField& f) { return Embedding(f, f.generator()); }

    const FiniteField& source() const { return source_; }
    const FiniteField& target() const { return target_; }

    FieldElement operator()(const FieldElement& x) const {
        FieldElement acc = target_.zero();
        const auto& c = x.coeffs();
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i] != 0) acc += basis_[i] * target_.from_int(static_cast<i64>(c[i]));
        return acc;
    }

    Poly map(const Poly& f) const {
        std::vector<FieldElement> c;
        for (const auto& e : f.coeffs()) c.push_back((*this)(e));
        return Poly(target_, std::move(c));
    }

    /// Source element mapping to y, if y lies in the image.
    std::optional<FieldElement> preimage(const FieldElement& y) const {
        const u64 p = target_.characteristic();
        const std::size_t rows = target_.degree(), cols = source_.degree();
        // Augmented system over F_p: columns are basis images, last column is y.
        std::vector<std::vector<u64>> a(rows, std::vector<u64>(cols + 1));
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < cols; ++c) a[r][c] = basis_[c].coeffs()[r];
            a[r][cols] = y.coeffs()[r];
        }
        std::vector<std::size_t> pivot_col;
        std::size_t row = 0;
        for (std::size_t c = 0; c < cols && row < rows; ++c) {
            std::size_t sel = row;
            while (sel < rows && a[sel][c] == 0) ++sel;
            if (sel == rows) continue;
            std::swap(a[sel], a[row]);
            const u64 inv = *inverse_mod(a[row][c], p);
            for (auto& v : a[row]) v = v * inv % p;
            for (std::size_t r = 0; r < rows; ++r) {
                if (r == row || a[r][c] == 0) continue;
                const u64 f = a[r][c];
                for (std::size_t k = 0; k <= cols; ++k) a[r][k] = (a[r][k] + (p - f) * a[row][k]) % p;
            }
            pivot_col.push_back(c);
            ++row;
        }
        for (std::size_t r = row; r < rows; ++r)
            if (a[r][cols] != 0) return std::nullopt;
        std::vector<u64> x(cols, 0);
        for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = a[i][cols];
        return source_.from_coeffs(std::move(x));
    }

private:
    Embedding(const FiniteField& f, FieldElement gen) : source_(f), target_(f), gen_image_(std::move(gen)) { build_basis(); }

    void build_basis() {
        FieldElement pw = target_.one();
        for (std::size_t i = 0; i < source_.degree(); ++i) {
            basis_.push_back(pw);
            pw = pw * gen_image_;
        }
    }

    FiniteField source_, target_;
    FieldElement gen_image_;
    std::vector<FieldElement> basis_;
};

} // namespace brauer

#endif // BRAUER_FIELD_TOWER_HPP
