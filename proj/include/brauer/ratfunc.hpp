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

#ifndef BRAUER_RATFUNC_HPP
#define BRAUER_RATFUNC_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "field_tower.hpp"

namespace brauer {

/// Element of F_q(t): num/den with den monic and gcd(num, den) = 1.
class RatFunc {
public:
    explicit RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.field().one())) {}
    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static RatFunc from_int(const FiniteField& f, i64 v) { return RatFunc(Poly::constant(f.from_int(v))); }
    static RatFunc constant(const FieldElement& c) { return RatFunc(Poly::constant(c)); }
    static RatFunc t(const FiniteField& f) { return RatFunc(Poly::x(f)); }

    const FiniteField& field() const { return num_.field(); }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RatFunc operator*(const RatFunc& o) const { return {num_ * o.num_, den_ * o.den_}; }
    RatFunc operator/(const RatFunc& o) const {
        if (o.is_zero()) throw DomainError("division by zero rational function");
        return {num_ * o.den_, den_ * o.num_};
    }
    RatFunc operator+(const RatFunc& o) const { return {num_ * o.den_ + o.num_ * den_, den_ * o.den_}; }
    RatFunc operator-(const RatFunc& o) const { return {num_ * o.den_ - o.num_ * den_, den_ * o.den_}; }
    RatFunc operator-() const { return {-num_, den_}; }

    RatFunc pow(i64 e) const {
        if (e < 0) {
            if (is_zero()) throw DomainError("negative power of zero");
            return RatFunc(den_, num_).pow(-e);
        }
        RatFunc result = RatFunc::constant(field().one());
        RatFunc base = *this;
        auto k = static_cast<u64>(e);
        while (k > 0) {
            if (k & 1U) result = result * base;
            k >>= 1U;
            if (k > 0) base = base * base;
        }
        return result;
    }

    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    std::string to_string() const {
        if (is_polynomial()) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

private:
    void normalize() {
        if (den_.is_zero()) throw DomainError("zero denominator");
        if (num_.is_zero()) {
            den_ = Poly::constant(num_.field().one());
            return;
        }
        const Poly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        const FieldElement lead_inv = den_.leading().inverse();
        num_ = num_.scaled(lead_inv);
        den_ = den_.scaled(lead_inv);
    }

    Poly num_, den_;
};

/// A closed point of P^1 over F_q: a monic irreducible polynomial, or infinity.
class Place {
public:
    static Place finite(const Poly& pi) {
        if (pi.degree() < 1) throw ConstraintError("place polynomial must have positive degree");
        Poly m = pi.monic();
        if (!is_irreducible(m)) throw ConstraintError("place polynomial " + m.to_string() + " is not irreducible");
        FiniteField base = m.field();
        return Place(std::move(base), std::move(m));
    }
    static Place infinity(const FiniteField& base) { return Place(base, std::nullopt); }

    bool is_infinity() const { return !pi_.has_value(); }
    const FiniteField& base() const { return base_; }
    const Poly& generator() const {
        if (!pi_) throw DomainError("the place at infinity has no generating polynomial");
        return *pi_;
    }
    std::size_t degree() const { return pi_ ? static_cast<std::size_t>(pi_->degree()) : 1; }

    /// pi_P at finite places, 1/t at infinity.
    RatFunc uniformizer() const {
        if (pi_) return RatFunc(*pi_);
        return RatFunc(Poly::constant(base_.one()), Poly::x(base_));
    }

    std::string to_string() const { return pi_ ? "(" + pi_->to_string() + ")" : "inf"; }

    friend bool operator==(const Place& a, const Place& b) {
        if (a.is_infinity() || b.is_infinity()) return a.is_infinity() == b.is_infinity() && a.base_ == b.base_;
        return *a.pi_ == *b.pi_;
    }
    /// Degree, then coefficients from the constant term up; infinity last.
    friend bool operator<(const Place& a, const Place& b) {
        if (a.is_infinity()) return false;
        if (b.is_infinity()) return true;
        return poly_less(*a.pi_, *b.pi_);
    }

private:
    Place(FiniteField base, std::optional<Poly> pi) : base_(std::move(base)), pi_(std::move(pi)) {}

    FiniteField base_;
    std::optional<Poly> pi_;
};

/// v_P(f); throws for f = 0.
inline i64 valuation(const RatFunc& f, const Place& P) {
    if (f.is_zero()) throw DomainError("valuation of zero");
    if (P.is_infinity()) return static_cast<i64>(f.den().degree()) - f.num().degree();
    auto multiplicity = [&](Poly g) {
        i64 m = 0;
        for (;;) {
            auto [q, r] = divmod(g, P.generator());
            if (!r.is_zero()) return m;
            g = std::move(q);
            ++m;
        }
    };
    return multiplicity(f.num()) - multiplicity(f.den());
}

/**
 * kappa(P) together with the data needed to reduce functions into it:
 * the embedding of F_q and, at finite places, the chosen root of pi_P.
 *
 * Degree-one places reuse F_q itself. Higher degree places are realized as
 * F_p[x]/(m) with m the smallest irreducible of the absolute degree.
 */
class ResidueField {
public:
    explicit ResidueField(const Place& P) : place_(P), field_(make_field(P)), embed_(make_embedding(P, field_)) {
        if (!P.is_infinity()) root_ = roots(embed_.map(P.generator())).front();
    }

    const Place& place() const { return place_; }
    const FiniteField& field() const { return field_; }
    const Embedding& base_embedding() const { return embed_; }
    u64 order() const { return field_.order(); }

    /// Image of a polynomial in kappa(P) (finite places only).
    FieldElement reduce(const Poly& f) const {
        if (!root_) throw DomainError("polynomial reduction is not defined at infinity");
        return embed_.map(f).evaluate(*root_);
    }

    /// Image of f; requires v_P(f) = 0.
    FieldElement reduce(const RatFunc& f) const {
        if (f.is_zero() || valuation(f, place_) != 0) throw DomainError("not a unit at " + place_.to_string());
        if (place_.is_infinity()) return embed_(f.num().leading()) / embed_(f.den().leading());
        return reduce(f.num()) / reduce(f.den());
    }

private:
    static FiniteField make_field(const Place& P) {
        const FiniteField& base = P.base();
        if (P.degree() == 1) return base;
        return finite_field_of_degree(base.characteristic(), base.degree() * P.degree());
    }
    static Embedding make_embedding(const Place& P, const FiniteField& kappa) {
        if (P.degree() == 1) return Embedding::identity(kappa);
        return Embedding(P.base(), kappa);
    }

    Place place_;
    FiniteField field_;
    Embedding embed_;
    std::optional<FieldElement> root_;
};

inline ResidueField residue_field(const Place& P) { return ResidueField(P); }

inline FieldElement reduce_at(const RatFunc& f, const Place& P) { return ResidueField(P).reduce(f); }

/// Places dividing num or den of f, sorted, without infinity.
inline std::vector<Place> finite_support(const RatFunc& f) {
    std::vector<Place> out;
    for (const Poly* part : {&f.num(), &f.den()}) {
        if (part->degree() < 1) continue;
        for (auto& [g, m] : factor(*part)) {
            (void)m;
            out.push_back(Place::finite(g));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace brauer

#endif // BRAUER_RATFUNC_HPP
