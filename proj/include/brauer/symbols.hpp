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

#ifndef BRAUER_SYMBOLS_HPP
#define BRAUER_SYMBOLS_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "cohomology.hpp"
#include "kummer.hpp"
#include "ratfunc.hpp"

namespace brauer {

struct SymbolTerm {
    RatFunc a;
    RatFunc b;
    u64 multiplicity;
};

/**
 * Formal sum of cyclic symbols m_i (a_i, b_i)_n over F_q(t), standing for
 * an element of Br(F_q(t))[n]. Requires n | q - 1 so that mu_n lies in F_q.
 *
 * Equality of classes is not decided; only residue data is computed.
 */
class SymbolClass {
public:
    SymbolClass(FiniteField base, u64 n) : base_(std::move(base)), n_(n), zeta_(primitive_root_of_unity(base_, n)) {}

    static SymbolClass single(const RatFunc& a, const RatFunc& b, u64 n) {
        SymbolClass s(a.field(), n);
        s.add(a, b, 1);
        return s;
    }

    SymbolClass& add(const RatFunc& a, const RatFunc& b, i64 multiplicity = 1) {
        if (a.is_zero() || b.is_zero()) throw DomainError("symbol arguments must be nonzero");
        if (!(a.field() == base_) || !(b.field() == base_)) throw DomainError("symbol arguments over a different field");
        terms_.push_back({a, b, mod_floor(multiplicity, n_)});
        return *this;
    }
    SymbolClass operator+(const SymbolClass& o) const {
        if (n_ != o.n_ || !(base_ == o.base_)) throw DomainError("adding symbol classes of different shape");
        SymbolClass r = *this;
        r.terms_.insert(r.terms_.end(), o.terms_.begin(), o.terms_.end());
        return r;
    }

    const FiniteField& base() const { return base_; }
    u64 n() const { return n_; }
    const FieldElement& zeta() const { return zeta_; }
    const std::vector<SymbolTerm>& terms() const { return terms_; }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            if (i > 0) s += " + ";
            if (terms_[i].multiplicity != 1) s += std::to_string(terms_[i].multiplicity) + "*";
            s += "(" + terms_[i].a.to_string() + ", " + terms_[i].b.to_string() + ")_" + std::to_string(n_);
        }
        return s;
    }

private:
    FiniteField base_;
    u64 n_;
    FieldElement zeta_;
    std::vector<SymbolTerm> terms_;
};

/// (-1)^{v(a)v(b)} a^{v(b)} b^{-v(a)} reduced into kappa(P).
inline FieldElement tame_symbol(const RatFunc& a, const RatFunc& b, const ResidueField& kappa) {
    const Place& P = kappa.place();
    const i64 va = valuation(a, P), vb = valuation(b, P);
    RatFunc unit = a.pow(vb) * b.pow(-va);
    if ((va * vb) % 2 != 0) unit = -unit;
    return kappa.reduce(unit);
}

/**
 * Residue of a symbol class at P in Z/n.
 *
 * Normalization: the tame symbol (-1)^{v(a)v(b)} a^{v(b)} b^{-v(a)}, so a
 * uniformizer paired with a unit u has residue -[u].
 */
inline ResidueClass tame_residue(const SymbolClass& alpha, const Place& P) {
    const ResidueField kappa(P);
    const FieldElement zeta = kappa.base_embedding()(alpha.zeta());
    u64 total = 0;
    for (const auto& term : alpha.terms()) {
        const auto chi = power_residue_character(tame_symbol(term.a, term.b, kappa), alpha.n(), zeta);
        total = (total + mul_mod(chi.value, term.multiplicity, alpha.n())) % alpha.n();
    }
    return {alpha.n(), total, alpha.zeta()};
}

inline bool is_unramified_at(const SymbolClass& alpha, const Place& P) { return tame_residue(alpha, P).is_zero(); }

/**
 * Residue of theta^j cup gamma_u at P, computed through the Cech
 * representative on the (mu_n x Z/n)-torsor instead of the tame symbol.
 *
 * 1. (beta^{j b'}) represents the class on the torsor.
 * 2. The identity d(pi^{jb/n}) = eps^{-j} beta^{jb'} is checked exhaustively,
 *    so the class is also represented by eps^j, which does not depend on beta.
 * 3. eps^j = c^{[b+b' >= n]} with c = pi^{-j}: the cyclic-algebra cocycle of
 *    (gamma, c) on the unramified cover cut out by u^{1/n}.
 * 4. Its residue is v_P(c) times the Frobenius class of gamma, which is the
 *    power residue character of u mod P.
 */
inline ResidueClass residue_cocycle_route(i64 j, const RatFunc& u, const Place& P, u64 n) {
    const FiniteField& base = u.field();
    const FieldElement zeta_base = primitive_root_of_unity(base, n);
    if (u.is_zero() || valuation(u, P) != 0) throw DomainError("gamma must be unramified at P");
    const u64 jj = mod_floor(j, n);
    if (jj == 0) return {n, 0, zeta_base};

    if (!coboundary_identity_holds(n, static_cast<i64>(jj))) throw DomainError("Cech coboundary identity failed");  // unreachable

    const UnitTable eps = epsilon_cocycle(n);
    const FormalUnit c = eps.at(n - 1, 1).pow(static_cast<i64>(jj));
    for (u64 b = 0; b < n; ++b)
        for (u64 b2 = 0; b2 < n; ++b2) {
            const FormalUnit expected = (b + b2 >= n) ? c : FormalUnit::one(n);
            if (!(eps.at(b, b2).pow(static_cast<i64>(jj)) == expected)) throw DomainError("eps^j is not a cyclic-algebra cocycle");
        }
    const i64 v = c.valuation();

    // Frobenius moves a root w of w^n = u by w^(|kappa|-1) = u^((|kappa|-1)/n) = zeta^m.
    const ResidueField kappa(P);
    const u64 gamma_at_frobenius = power_residue_character(kappa.reduce(u), n, kappa.base_embedding()(zeta_base)).value;
    return {n, mul_mod(mod_floor(v, n), gamma_at_frobenius, n), zeta_base};
}

/// Places with nonzero residue, sorted (infinity last).
struct RamificationDivisor {
    std::vector<std::pair<Place, ResidueClass>> entries;

    bool empty() const { return entries.empty(); }
    std::string to_string() const {
        std::string s = "{";
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (i > 0) s += ", ";
            s += entries[i].first.to_string() + ":" + std::to_string(entries[i].second.value);
        }
        return s + "}";
    }
};

/// Support of every argument plus infinity; all other places see units only.
inline std::vector<Place> candidate_places(const SymbolClass& alpha) {
    std::vector<Place> places;
    for (const auto& term : alpha.terms())
        for (const RatFunc* f : {&term.a, &term.b})
            for (auto& P : finite_support(*f)) places.push_back(std::move(P));
    std::sort(places.begin(), places.end());
    places.erase(std::unique(places.begin(), places.end()), places.end());
    places.push_back(Place::infinity(alpha.base()));
    return places;
}

inline RamificationDivisor ramification_divisor(const SymbolClass& alpha) {
    RamificationDivisor D;
    for (const auto& P : candidate_places(alpha)) {
        auto r = tame_residue(alpha, P);
        if (!r.is_zero()) D.entries.emplace_back(P, std::move(r));
    }
    return D;
}

struct ReciprocityEntry {
    Place place;
    ResidueClass local;         // residue in H^1(kappa(P), Z/n)
    ResidueClass corestricted;  // its image in H^1(F_q, Z/n)
};

inline std::vector<ReciprocityEntry> reciprocity_breakdown(const SymbolClass& alpha) {
    std::vector<ReciprocityEntry> out;
    const u64 n = alpha.n();
    for (const auto& P : candidate_places(alpha)) {
        const ResidueField kappa(P);
        const FieldElement zeta = kappa.base_embedding()(alpha.zeta());
        u64 local = 0, down = 0;
        for (const auto& term : alpha.terms()) {
            const FieldElement u = tame_symbol(term.a, term.b, kappa);
            local = (local + mul_mod(power_residue_character(u, n, zeta).value, term.multiplicity, n)) % n;
            down = (down + mul_mod(corestrict(u, kappa.base_embedding(), n, alpha.zeta()).value, term.multiplicity, n)) % n;
        }
        out.push_back({P, {n, local, alpha.zeta()}, {n, down, alpha.zeta()}});
    }
    return out;
}

/// Sum over all places of the corestricted residues; always 0.
inline ResidueClass reciprocity_sum(const SymbolClass& alpha) {
    u64 total = 0;
    for (const auto& e : reciprocity_breakdown(alpha)) total = (total + e.corestricted.value) % alpha.n();
    return {alpha.n(), total, alpha.zeta()};
}

} // namespace brauer

#endif // BRAUER_SYMBOLS_HPP
