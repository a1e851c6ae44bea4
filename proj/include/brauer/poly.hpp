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

#ifndef BRAUER_POLY_HPP
#define BRAUER_POLY_HPP

#include <algorithm>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "finite_field.hpp"

namespace brauer {

/// Univariate polynomial over a finite field, dense, lowest degree first.
class Poly {
public:
    explicit Poly(FiniteField f) : field_(std::move(f)) {}
    Poly(FiniteField f, std::vector<FieldElement> coeffs) : field_(std::move(f)), c_(std::move(coeffs)) { trim(); }

    static Poly constant(const FieldElement& c) {
        Poly r(c.field());
        r.c_.push_back(c);
        r.trim();
        return r;
    }
    static Poly monomial(const FieldElement& c, std::size_t deg) {
        Poly r(c.field());
        r.c_.assign(deg + 1, c.field().zero());
        r.c_[deg] = c;
        r.trim();
        return r;
    }
    static Poly x(const FiniteField& f) { return monomial(f.one(), 1); }
    /// Integer coefficients, constant term first, reduced mod p.
    static Poly from_ints(const FiniteField& f, const std::vector<i64>& coeffs) {
        std::vector<FieldElement> c;
        c.reserve(coeffs.size());
        for (i64 v : coeffs) c.push_back(f.from_int(v));
        return Poly(f, std::move(c));
    }

    const FiniteField& field() const { return field_; }
    const std::vector<FieldElement>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    FieldElement coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
    FieldElement leading() const { return is_zero() ? field_.zero() : c_.back(); }
    bool is_monic() const { return !is_zero() && c_.back().is_one(); }

    Poly monic() const {
        if (is_zero()) return *this;
        return scaled(c_.back().inverse());
    }
    Poly scaled(const FieldElement& s) const {
        std::vector<FieldElement> r;
        r.reserve(c_.size());
        for (const auto& c : c_) r.push_back(c * s);
        return Poly(field_, std::move(r));
    }

    Poly operator+(const Poly& o) const {
        const std::size_t n = std::max(c_.size(), o.c_.size());
        std::vector<FieldElement> r;
        r.reserve(n);
        for (std::size_t i = 0; i < n; ++i) r.push_back(coeff(i) + o.coeff(i));
        return Poly(field_, std::move(r));
    }
    Poly operator-(const Poly& o) const {
        const std::size_t n = std::max(c_.size(), o.c_.size());
        std::vector<FieldElement> r;
        r.reserve(n);
        for (std::size_t i = 0; i < n; ++i) r.push_back(coeff(i) - o.coeff(i));
        return Poly(field_, std::move(r));
    }
    Poly operator-() const { return scaled(-field_.one()); }
    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly(field_);
        std::vector<FieldElement> r(c_.size() + o.c_.size() - 1, field_.zero());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        }
        return Poly(field_, std::move(r));
    }

    /// Quotient and remainder; divisor must be nonzero.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw DomainError("polynomial division by zero");
        if (a.degree() < b.degree()) return {Poly(a.field_), a};
        std::vector<FieldElement> rem = a.c_;
        std::vector<FieldElement> quot(a.c_.size() - b.c_.size() + 1, a.field_.zero());
        const FieldElement inv_lead = b.c_.back().inverse();
        for (std::size_t i = quot.size(); i-- > 0;) {
            const FieldElement q = rem[i + b.c_.size() - 1] * inv_lead;
            quot[i] = q;
            if (q.is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) rem[i + j] -= q * b.c_[j];
        }
        rem.resize(b.c_.size() - 1, a.field_.zero());
        return {Poly(a.field_, std::move(quot)), Poly(a.field_, std::move(rem))};
    }
    Poly operator/(const Poly& b) const { return divmod(*this, b).first; }
    Poly operator%(const Poly& b) const { return divmod(*this, b).second; }

    FieldElement evaluate(const FieldElement& x) const {
        FieldElement acc = field_.zero();
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly(field_);
        std::vector<FieldElement> r;
        r.reserve(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * field_.from_int(static_cast<i64>(i % field_.characteristic())));
        return Poly(field_, std::move(r));
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

    std::string to_string(char var = 't') const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i].is_zero()) continue;
            if (!first) os << '+';
            first = false;
            const bool unit = c_[i].is_one();
            if (i == 0) {
                os << c_[i];
            } else {
                if (!unit) os << c_[i] << '*';
                os << var;
                if (i > 1) os << '^' << i;
            }
        }
        return os.str();
    }
    friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    FiniteField field_;
    std::vector<FieldElement> c_;
};

/// Deterministic total order: degree first, then coefficient indices from the constant term up.
inline bool poly_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        const u64 x = a.coeffs()[i].index(), y = b.coeffs()[i].index();
        if (x != y) return x < y;
    }
    return false;
}

/// Monic gcd; gcd(0, 0) = 0.
inline Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

inline Poly pow_mod(Poly base, u64 e, const Poly& mod) {
    Poly result = Poly::constant(mod.field().one()) % mod;
    base = base % mod;
    while (e > 0) {
        if (e & 1U) result = (result * base) % mod;
        e >>= 1U;
        if (e > 0) base = (base * base) % mod;
    }
    return result;
}

/// Ben-Or test: no irreducible factor of degree <= deg/2.
inline bool is_irreducible(const Poly& f) {
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    const Poly x = Poly::x(f.field());
    const u64 q = f.field().order();
    Poly h = x % f;
    for (int i = 1; i <= f.degree() / 2; ++i) {
        h = pow_mod(h, q, f);
        if (gcd(h - x, f).degree() > 0) return false;
    }
    return true;
}

namespace detail {

inline Poly pth_root(const Poly& f) {
    const auto& F = f.field();
    const u64 p = F.characteristic();
    const u64 root_exp = F.order() / p;
    std::vector<FieldElement> r;
    for (std::size_t i = 0; i < f.coeffs().size(); i += p) r.push_back(f.coeffs()[i].pow(root_exp));
    return Poly(F, std::move(r));
}

/// Squarefree decomposition of a monic polynomial: coprime squarefree parts with multiplicities.
inline std::vector<std::pair<Poly, unsigned>> squarefree_parts(const Poly& f) {
    std::vector<std::pair<Poly, unsigned>> out;
    if (f.degree() < 1) return out;
    const unsigned p = static_cast<unsigned>(f.field().characteristic());
    const Poly fp = f.derivative();
    if (fp.is_zero()) {
        for (auto& [g, m] : squarefree_parts(pth_root(f))) out.emplace_back(g, m * p);
        return out;
    }
    Poly c = gcd(f, fp);
    Poly w = f / c;
    unsigned i = 1;
    while (w.degree() > 0) {
        Poly y = gcd(w, c);
        Poly z = w / y;
        if (z.degree() > 0) out.emplace_back(z.monic(), i);
        ++i;
        w = y;
        c = c / y;
    }
    if (c.degree() > 0) {
        for (auto& [g, m] : squarefree_parts(pth_root(c.monic()))) out.emplace_back(g, m * p);
    }
    return out;
}

inline std::vector<std::pair<Poly, std::size_t>> distinct_degree(Poly f) {
    std::vector<std::pair<Poly, std::size_t>> out;
    const Poly x = Poly::x(f.field());
    const u64 q = f.field().order();
    Poly h = x % f;
    std::size_t i = 0;
    while (f.degree() >= 2 * static_cast<int>(i + 1)) {
        ++i;
        h = pow_mod(h, q, f);
        Poly g = gcd(h - x, f);
        if (g.degree() > 0) {
            out.emplace_back(g, i);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(f.monic(), static_cast<std::size_t>(f.degree()));
    return out;
}

inline Poly random_poly_below(const FiniteField& F, int deg, std::mt19937_64& rng) {
    std::uniform_int_distribution<u64> pick(0, F.order() - 1);
    std::vector<FieldElement> c;
    for (int i = 0; i < deg; ++i) c.push_back(F.element(pick(rng)));
    return Poly(F, std::move(c));
}

/// Splits a squarefree monic product of irreducibles of common degree d.
inline void equal_degree(const Poly& g, std::size_t d, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (g.degree() <= 0) return;
    if (static_cast<std::size_t>(g.degree()) == d) {
        out.push_back(g.monic());
        return;
    }
    const auto& F = g.field();
    const u64 q = F.order();
    const bool even = F.characteristic() == 2;
    const Poly one = Poly::constant(F.one());
    for (;;) {
        Poly a = random_poly_below(F, g.degree(), rng);
        if (a.degree() < 1) continue;
        Poly b(F);
        if (even) {
            const std::size_t terms = F.degree() * d;
            Poly t = a % g;
            b = t;
            for (std::size_t k = 1; k < terms; ++k) {
                t = (t * t) % g;
                b = b + t;
            }
        } else {
            Poly t = a % g;
            Poly acc = t;
            for (std::size_t k = 1; k < d; ++k) {
                t = pow_mod(t, q, g);
                acc = (acc * t) % g;
            }
            b = pow_mod(acc, (q - 1) / 2, g) - one;
        }
        Poly h = gcd(b, g);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            equal_degree(h, d, rng, out);
            equal_degree(g / h, d, rng, out);
            return;
        }
    }
}

} // namespace detail

/**
 * Factors f into monic irreducibles with multiplicities.
 *
 * Squarefree decomposition, then distinct-degree and equal-degree splitting
 * (Cantor-Zassenhaus; trace splitting in characteristic 2). Output is sorted
 * by poly_less and does not depend on the internal random choices.
 */
inline std::vector<std::pair<Poly, unsigned>> factor(const Poly& f) {
    if (f.is_zero()) throw DomainError("cannot factor zero");
    std::vector<std::pair<Poly, unsigned>> out;
    std::mt19937_64 rng(0x5eedULL);
    for (auto& [part, mult] : detail::squarefree_parts(f.monic())) {
        for (auto& [block, d] : detail::distinct_degree(part)) {
            std::vector<Poly> irr;
            detail::equal_degree(block, d, rng, irr);
            for (auto& g : irr) out.emplace_back(std::move(g), mult);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    return out;
}

/// Distinct roots in the coefficient field, sorted by element index.
inline std::vector<FieldElement> roots(const Poly& f) {
    if (f.is_zero()) throw DomainError("roots of the zero polynomial");
    std::vector<FieldElement> out;
    if (f.degree() < 1) return out;
    const Poly fm = f.monic();
    const Poly x = Poly::x(f.field());
    Poly g = gcd(pow_mod(x, f.field().order(), fm) - x, fm);
    std::mt19937_64 rng(0x700fULL);
    std::vector<Poly> lin;
    detail::equal_degree(g, 1, rng, lin);
    for (const auto& l : lin) out.push_back(-l.coeff(0));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace brauer

#endif // BRAUER_POLY_HPP
