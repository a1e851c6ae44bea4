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

#ifndef BRAUER_FINITE_FIELD_HPP
#define BRAUER_FINITE_FIELD_HPP

#include <compare>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "error.hpp"

namespace brauer {

namespace detail {

struct FieldData {
    u64 p = 0;
    std::size_t degree = 0;
    std::vector<u64> modulus;  // monic, low degree first, size degree + 1
    u64 order = 0;
};

} // namespace detail

class FieldElement;

/**
 * The finite field F_p[x]/(m(x)) for a monic irreducible m of degree d.
 *
 * Handles are cheap to copy and share immutable data. Prime fields use the
 * modulus m(x) = x, so their elements are plain residues mod p. Fields with
 * verified moduli are built by finite_field_of_order() and friends in
 * field_tower.hpp; the factories here do not test irreducibility.
 */
class FiniteField {
public:
    static FiniteField prime(u64 p) {
        if (!is_prime(p)) throw ConstraintError("characteristic " + std::to_string(p) + " is not prime");
        if (p >= (u64{1} << 31)) throw ConstraintError("characteristic must be below 2^31");
        return from_modulus_unchecked(p, {0, 1});
    }

    /// Trusts the caller that modulus is monic irreducible over F_p.
    static FiniteField from_modulus_unchecked(u64 p, std::vector<u64> modulus) {
        auto data = std::make_shared<detail::FieldData>();
        data->p = p;
        for (auto& c : modulus) c %= p;
        while (!modulus.empty() && modulus.back() == 0) modulus.pop_back();
        if (modulus.size() < 2 || modulus.back() != 1) throw DomainError("field modulus must be monic of degree >= 1");
        data->degree = modulus.size() - 1;
        data->modulus = std::move(modulus);
        data->order = checked_pow(p, static_cast<unsigned>(data->degree));
        return FiniteField(std::move(data));
    }

    u64 characteristic() const { return d_->p; }
    std::size_t degree() const { return d_->degree; }
    u64 order() const { return d_->order; }
    const std::vector<u64>& modulus() const { return d_->modulus; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_int(i64 v) const;
    /// Element with base-p digit expansion index = sum c_i p^i.
    FieldElement element(u64 index) const;
    /// Class of x.
    FieldElement generator() const;
    FieldElement from_coeffs(std::vector<u64> coeffs) const;

    bool same_as(const FiniteField& other) const {
        return d_ == other.d_ || (d_->p == other.d_->p && d_->modulus == other.d_->modulus);
    }
    friend bool operator==(const FiniteField& a, const FiniteField& b) { return a.same_as(b); }

    std::string to_string() const { return "F_" + std::to_string(order()); }

    const std::shared_ptr<const detail::FieldData>& data() const { return d_; }

private:
    friend class FieldElement;
    explicit FiniteField(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}
    std::shared_ptr<const detail::FieldData> d_;
};

class FieldElement {
public:
    FieldElement(std::shared_ptr<const detail::FieldData> f, std::vector<u64> c) : f_(std::move(f)), c_(std::move(c)) {}

    FiniteField field() const { return FiniteField(f_); }
    const std::shared_ptr<const detail::FieldData>& field_data() const { return f_; }
    const std::vector<u64>& coeffs() const { return c_; }

    u64 index() const {
        u64 idx = 0;
        for (std::size_t i = c_.size(); i-- > 0;) idx = idx * f_->p + c_[i];
        return idx;
    }

    bool is_zero() const {
        for (u64 c : c_)
            if (c != 0) return false;
        return true;
    }
    bool is_one() const {
        if (c_.empty() || c_[0] != 1) return false;
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    FieldElement operator+(const FieldElement& o) const {
        check(o);
        std::vector<u64> r(c_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = (c_[i] + o.c_[i]) % f_->p;
        return {f_, std::move(r)};
    }
    FieldElement operator-(const FieldElement& o) const {
        check(o);
        std::vector<u64> r(c_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = (c_[i] + f_->p - o.c_[i]) % f_->p;
        return {f_, std::move(r)};
    }
    FieldElement operator-() const {
        std::vector<u64> r(c_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = (f_->p - c_[i]) % f_->p;
        return {f_, std::move(r)};
    }
    FieldElement operator*(const FieldElement& o) const {
        check(o);
        const u64 p = f_->p;
        const std::size_t d = f_->degree;
        if (d == 1) return {f_, {c_[0] * o.c_[0] % p}};
        std::vector<u64> prod(2 * d - 1, 0);
        for (std::size_t i = 0; i < d; ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + c_[i] * o.c_[j]) % p;
        }
        const auto& m = f_->modulus;
        for (std::size_t i = prod.size(); i-- > d;) {
            const u64 lead = prod[i];
            if (lead == 0) continue;
            for (std::size_t j = 0; j < d; ++j) prod[i - d + j] = (prod[i - d + j] + (p - m[j]) * lead) % p;
            prod[i] = 0;
        }
        prod.resize(d);
        return {f_, std::move(prod)};
    }
    FieldElement operator/(const FieldElement& o) const { return *this * o.inverse(); }

    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    FieldElement pow(u64 e) const {
        FieldElement result{f_, unit_coeffs()};
        FieldElement base = *this;
        while (e > 0) {
            if (e & 1U) result = result * base;
            e >>= 1U;
            if (e > 0) base = base * base;
        }
        return result;
    }
    /// Negative exponents invert first.
    FieldElement pow_signed(i64 e) const {
        if (e >= 0) return pow(static_cast<u64>(e));
        return inverse().pow(static_cast<u64>(-(e + 1)) + 1);
    }
    FieldElement inverse() const {
        if (is_zero()) throw DomainError("division by zero in " + std::to_string(f_->order) + "-element field");
        return pow(f_->order - 2);
    }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.c_ == b.c_ && (a.f_ == b.f_ || (a.f_->p == b.f_->p && a.f_->modulus == b.f_->modulus));
    }
    /// Orders by index; only meaningful within one field.
    friend bool operator<(const FieldElement& a, const FieldElement& b) { return a.index() < b.index(); }

    std::string to_string() const {
        if (f_->degree == 1) return std::to_string(c_[0]);
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == 0) continue;
            if (!first) os << '+';
            first = false;
            if (i == 0 || c_[i] != 1) os << c_[i];
            if (i > 0) os << (c_[i] != 1 ? "*a" : "a");
            if (i > 1) os << '^' << i;
        }
        if (first) os << '0';
        return "(" + os.str() + ")";
    }
    friend std::ostream& operator<<(std::ostream& os, const FieldElement& e) { return os << e.to_string(); }

private:
    void check(const FieldElement& o) const {
        if (f_ != o.f_ && !(f_->p == o.f_->p && f_->modulus == o.f_->modulus))
            throw DomainError("field elements from different fields");
    }
    std::vector<u64> unit_coeffs() const {
        std::vector<u64> u(f_->degree, 0);
        u[0] = 1;
        return u;
    }

    std::shared_ptr<const detail::FieldData> f_;
    std::vector<u64> c_;
};

inline FieldElement FiniteField::zero() const { return {d_, std::vector<u64>(d_->degree, 0)}; }
inline FieldElement FiniteField::one() const {
    std::vector<u64> c(d_->degree, 0);
    c[0] = 1;
    return {d_, std::move(c)};
}
inline FieldElement FiniteField::from_int(i64 v) const {
    std::vector<u64> c(d_->degree, 0);
    c[0] = mod_floor(v, d_->p);
    return {d_, std::move(c)};
}
inline FieldElement FiniteField::element(u64 index) const {
    if (index >= d_->order) throw DomainError("element index out of range");
    std::vector<u64> c(d_->degree, 0);
    for (std::size_t i = 0; i < d_->degree; ++i) {
        c[i] = index % d_->p;
        index /= d_->p;
    }
    return {d_, std::move(c)};
}
inline FieldElement FiniteField::generator() const {
    if (d_->degree == 1) return {d_, {(d_->p - d_->modulus[0]) % d_->p}};
    std::vector<u64> c(d_->degree, 0);
    c[1] = 1;
    return {d_, std::move(c)};
}
inline FieldElement FiniteField::from_coeffs(std::vector<u64> coeffs) const {
    if (coeffs.size() > d_->degree) throw DomainError("too many coefficients for field element");
    coeffs.resize(d_->degree, 0);
    for (auto& c : coeffs) c %= d_->p;
    return {d_, std::move(coeffs)};
}

/// Multiplicative order of a nonzero element.
inline u64 multiplicative_order(const FieldElement& x) {
    if (x.is_zero()) throw DomainError("zero has no multiplicative order");
    const auto& f = *x.field_data();
    u64 ord = f.order - 1;
    for (u64 r : prime_divisors(ord)) {
        while (ord % r == 0 && x.pow(ord / r).is_one()) ord /= r;
    }
    return ord;
}

} // namespace brauer

#endif // BRAUER_FINITE_FIELD_HPP
