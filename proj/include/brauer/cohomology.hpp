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

#ifndef BRAUER_COHOMOLOGY_HPP
#define BRAUER_COHOMOLOGY_HPP

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "field_tower.hpp"
#include "kummer.hpp"
#include "linalg.hpp"

namespace brauer {

/// Largest cochain table (|G|^k entries) any computation may allocate.
inline constexpr u64 kTableGuard = 1'000'000;
/// Largest dense coboundary matrix handed to the integer diagonalization.
inline constexpr u64 kDenseGuard = 25'000'000;

/// Z/m_1 x ... x Z/m_r; elements are encoded with the first factor least significant.
class FiniteAbelianGroup {
public:
    explicit FiniteAbelianGroup(std::vector<u64> moduli) : moduli_(std::move(moduli)) {
        order_ = 1;
        for (u64 m : moduli_) {
            if (m < 1) throw DomainError("cyclic factor orders must be >= 1");
            if (order_ > kTableGuard / m) throw SizeGuardError("group order exceeds table guard");
            order_ *= m;
        }
    }

    const std::vector<u64>& moduli() const { return moduli_; }
    u64 order() const { return order_; }

    std::vector<u64> decode(u64 idx) const {
        std::vector<u64> out(moduli_.size());
        for (std::size_t i = 0; i < moduli_.size(); ++i) {
            out[i] = idx % moduli_[i];
            idx /= moduli_[i];
        }
        return out;
    }
    u64 encode(std::span<const u64> coords) const {
        u64 idx = 0;
        for (std::size_t i = moduli_.size(); i-- > 0;) idx = idx * moduli_[i] + coords[i] % moduli_[i];
        return idx;
    }
    u64 add(u64 a, u64 b) const {
        u64 idx = 0, scale = 1;
        for (u64 m : moduli_) {
            idx += ((a % m + b % m) % m) * scale;
            a /= m;
            b /= m;
            scale *= m;
        }
        return idx;
    }

    friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) { return a.moduli_ == b.moduli_; }

private:
    std::vector<u64> moduli_;
    u64 order_ = 1;
};

inline u64 cochain_table_size(const FiniteAbelianGroup& G, unsigned degree) {
    u64 s = 1;
    for (unsigned i = 0; i < degree; ++i) {
        if (s > kTableGuard / G.order()) {
            throw SizeGuardError("cochain table of degree " + std::to_string(degree) + " exceeds " +
                                 std::to_string(kTableGuard) + " entries");
        }
        s *= G.order();
    }
    return s;
}

/**
 * Inhomogeneous k-cochain G^k -> Z/m with trivial action.
 *
 * Arguments (g_1, ..., g_k) are flattened with g_1 most significant.
 */
class Cochain {
public:
    Cochain(FiniteAbelianGroup G, unsigned degree, u64 modulus)
        : group_(std::move(G)), degree_(degree), modulus_(modulus) {
        if (modulus_ < 1) throw DomainError("coefficient modulus must be >= 1");
        values_.assign(cochain_table_size(group_, degree_), 0);
    }

    template <typename Fn>
    static Cochain from_function(FiniteAbelianGroup G, unsigned degree, u64 modulus, Fn&& fn) {
        Cochain c(std::move(G), degree, modulus);
        std::vector<u64> args(degree);
        for (u64 flat = 0; flat < c.values_.size(); ++flat) {
            c.unflatten(flat, args);
            c.values_[flat] = mod_floor(static_cast<i64>(fn(std::span<const u64>(args))), modulus);
        }
        return c;
    }

    const FiniteAbelianGroup& group() const { return group_; }
    unsigned degree() const { return degree_; }
    u64 modulus() const { return modulus_; }
    std::size_t size() const { return values_.size(); }
    const std::vector<u64>& values() const { return values_; }

    u64 flatten(std::span<const u64> args) const {
        u64 flat = 0;
        for (u64 g : args) flat = flat * group_.order() + g;
        return flat;
    }
    void unflatten(u64 flat, std::vector<u64>& args) const {
        args.resize(degree_);
        for (unsigned i = degree_; i-- > 0;) {
            args[i] = flat % group_.order();
            flat /= group_.order();
        }
    }

    u64 operator()(std::span<const u64> args) const { return values_[flatten(args)]; }
    u64 at(std::initializer_list<u64> args) const { return values_[flatten(std::span<const u64>(args.begin(), args.size()))]; }
    u64 at_flat(u64 flat) const { return values_[flat]; }
    void set_flat(u64 flat, i64 v) { values_[flat] = mod_floor(v, modulus_); }

    Cochain operator+(const Cochain& o) const { return combine(o, 1); }
    Cochain operator-(const Cochain& o) const { return combine(o, -1); }
    Cochain scaled(i64 k) const {
        Cochain r = *this;
        const u64 kk = mod_floor(k, modulus_);
        for (auto& v : r.values_) v = mul_mod(v, kk, modulus_);
        return r;
    }
    bool is_zero() const {
        for (u64 v : values_)
            if (v != 0) return false;
        return true;
    }

    friend bool operator==(const Cochain& a, const Cochain& b) {
        return a.group_ == b.group_ && a.degree_ == b.degree_ && a.modulus_ == b.modulus_ && a.values_ == b.values_;
    }

private:
    Cochain combine(const Cochain& o, i64 sign) const {
        if (!(group_ == o.group_) || degree_ != o.degree_ || modulus_ != o.modulus_)
            throw DomainError("cochains live in different complexes");
        Cochain r = *this;
        for (std::size_t i = 0; i < values_.size(); ++i)
            r.values_[i] = mod_floor(static_cast<i64>(values_[i]) + sign * static_cast<i64>(o.values_[i]), modulus_);
        return r;
    }

    FiniteAbelianGroup group_;
    unsigned degree_;
    u64 modulus_;
    std::vector<u64> values_;
};

namespace detail {

/// Calls emit(flat_index_in_degree_k, sign) for each term of (dc)(args), |args| = k + 1.
template <typename Emit>
void coboundary_terms(const FiniteAbelianGroup& G, std::span<const u64> args, Emit&& emit) {
    const std::size_t k1 = args.size();
    const u64 N = G.order();
    auto flat_of = [&](auto&& pick, std::size_t len) {
        u64 f = 0;
        for (std::size_t i = 0; i < len; ++i) f = f * N + pick(i);
        return f;
    };
    const std::size_t k = k1 - 1;
    emit(flat_of([&](std::size_t i) { return args[i + 1]; }, k), 1);
    for (std::size_t i = 1; i <= k; ++i) {
        // merge g_i and g_{i+1} (1-based)
        auto pick = [&](std::size_t j) {
            if (j + 1 < i) return args[j];
            if (j + 1 == i) return G.add(args[j], args[j + 1]);
            return args[j + 1];
        };
        emit(flat_of(pick, k), (i % 2 == 0) ? 1 : -1);
    }
    emit(flat_of([&](std::size_t i) { return args[i]; }, k), (k1 % 2 == 0) ? 1 : -1);
}

} // namespace detail

/// (dc)(g_1..g_{k+1}) = c(g_2..) + sum_i (-1)^i c(.., g_i + g_{i+1}, ..) + (-1)^{k+1} c(g_1..g_k).
inline Cochain coboundary(const Cochain& c) {
    Cochain out(c.group(), c.degree() + 1, c.modulus());
    std::vector<u64> args;
    for (u64 flat = 0; flat < out.size(); ++flat) {
        out.unflatten(flat, args);
        i64 acc = 0;
        detail::coboundary_terms(c.group(), args, [&](u64 f, int sign) { acc += sign * static_cast<i64>(c.at_flat(f)); });
        out.set_flat(flat, acc);
    }
    return out;
}

inline bool is_cocycle(const Cochain& c) { return coboundary(c).is_zero(); }

/// Integer matrix of d: C^k -> C^{k+1} (rows indexed by degree k+1 arguments).
inline Matrix<i64> coboundary_matrix(const FiniteAbelianGroup& G, unsigned k) {
    const u64 rows = cochain_table_size(G, k + 1);
    const u64 cols = cochain_table_size(G, k);
    if (rows > kDenseGuard / cols) throw SizeGuardError("coboundary matrix exceeds dense size guard");
    Matrix<i64> D(rows, cols);
    Cochain shape(G, k + 1, 1);
    std::vector<u64> args;
    for (u64 r = 0; r < rows; ++r) {
        shape.unflatten(r, args);
        detail::coboundary_terms(G, args, [&](u64 f, int sign) { D(r, f) += sign; });
    }
    return D;
}

/// One x with dx = c, if c is a coboundary. Degree-0 cochains are coboundaries only when zero.
inline std::optional<Cochain> coboundary_preimage(const Cochain& c) {
    if (c.degree() == 0) {
        if (c.is_zero()) return c;
        return std::nullopt;
    }
    const Matrix<i64> D = coboundary_matrix(c.group(), c.degree() - 1);
    Matrix<u64> A(D.rows, D.cols);
    for (std::size_t i = 0; i < D.data.size(); ++i) A.data[i] = mod_floor(D.data[i], c.modulus());
    auto sol = solve_mod(std::move(A), c.values(), c.modulus());
    if (!sol) return std::nullopt;
    Cochain x(c.group(), c.degree() - 1, c.modulus());
    for (std::size_t i = 0; i < sol->size(); ++i) x.set_flat(i, static_cast<i64>((*sol)[i]));
    return x;
}

/// True iff c1 - c2 is a coboundary.
inline bool cocycles_cohomologous(const Cochain& c1, const Cochain& c2) {
    return coboundary_preimage(c1 - c2).has_value();
}

/**
 * H^k(G, Z/m) as invariant factors (ascending, trivial factors dropped).
 *
 * Diagonalizes the integral differentials d_{k-1} and d_k and applies the
 * universal coefficient theorem:
 * H^k(C (x) Z/m) = H^k(C) (x) Z/m  +  Tor(H^{k+1}(C), Z/m).
 */
inline std::vector<u64> cohomology_rank(const FiniteAbelianGroup& G, u64 m, unsigned k) {
    if (m < 1) throw DomainError("coefficient modulus must be >= 1");
    cochain_table_size(G, k + 1);
    const u64 nk = cochain_table_size(G, k);
    std::vector<i64> prev;  // diagonal of d_{k-1}
    if (k > 0) prev = integer_diagonal(coboundary_matrix(G, k - 1));
    const std::vector<i64> cur = integer_diagonal(coboundary_matrix(G, k));
    const u64 free_rank = nk - cur.size() - prev.size();
    std::vector<u64> cyclic(free_rank, m);
    for (i64 d : prev) cyclic.push_back(std::gcd(static_cast<u64>(d), m));
    for (i64 d : cur) cyclic.push_back(std::gcd(static_cast<u64>(d), m));
    return invariant_factors(cyclic);
}

/**
 * pi^(e/n) * zeta^m: the value group of the Cech cochains on the root-stack torsor.
 * The pi exponent is stored as the numerator over the fixed denominator n.
 */
struct FormalUnit {
    i64 pi_numerator = 0;
    u64 n = 1;
    u64 zeta_exponent = 0;

    static FormalUnit one(u64 n) { return {0, n, 0}; }
    static FormalUnit pi_power(i64 numerator, u64 n) { return {numerator, n, 0}; }
    static FormalUnit root_of_unity(i64 m, u64 n) { return {0, n, mod_floor(m, n)}; }

    FormalUnit operator*(const FormalUnit& o) const {
        return {pi_numerator + o.pi_numerator, n, (zeta_exponent + o.zeta_exponent) % n};
    }
    FormalUnit inverse() const { return {-pi_numerator, n, (n - zeta_exponent) % n}; }
    FormalUnit pow(i64 k) const { return {pi_numerator * k, n, mul_mod(zeta_exponent, mod_floor(k, n), n)}; }

    /// Effect of the torsor translation by beta on pi^(e/n): the coordinate pi^(1/n) is multiplied by zeta^beta.
    FormalUnit translated(u64 beta) const {
        return {pi_numerator, n, (zeta_exponent + mul_mod(beta % n, mod_floor(pi_numerator, n), n)) % n};
    }

    bool integral_pi_power() const { return pi_numerator % static_cast<i64>(n) == 0; }
    i64 valuation() const {
        if (!integral_pi_power()) throw DomainError("fractional power of pi has no integral valuation");
        return pi_numerator / static_cast<i64>(n);
    }

    friend bool operator==(const FormalUnit& a, const FormalUnit& b) {
        return a.n == b.n && a.pi_numerator == b.pi_numerator && a.zeta_exponent == b.zeta_exponent;
    }

    std::string to_string() const {
        std::string s = "pi^(" + std::to_string(pi_numerator) + "/" + std::to_string(n) + ")";
        if (zeta_exponent != 0) s += "*zeta^" + std::to_string(zeta_exponent);
        return s;
    }
};

/// Table (b, b') -> FormalUnit over b, b' in [0, n), stored row-major.
struct UnitTable {
    u64 n;
    std::vector<FormalUnit> values;
    const FormalUnit& at(u64 b, u64 b2) const { return values[b * n + b2]; }
};

/// eps_{b,b'} = 1 if b + b' < n, else pi^-1.
inline UnitTable epsilon_cocycle(u64 n) {
    if (n < 1) throw DomainError("n must be positive");
    UnitTable t{n, {}};
    for (u64 b = 0; b < n; ++b)
        for (u64 b2 = 0; b2 < n; ++b2) t.values.push_back(b + b2 < n ? FormalUnit::one(n) : FormalUnit::pi_power(-static_cast<i64>(n), n));
    return t;
}

/**
 * Checks d(pi^{jb/n})_{(beta,b)} = eps_{b,b'}^{-j} * beta^{j b'} for every pair of
 * elements of mu_n x Z/n. The Cech coboundary of a 1-cochain h is
 * translate_g(h_{g'}) * h_{g g'}^{-1} * h_g, where b + b' is reduced into [0, n)
 * before the exponent of h_{gg'} is read off.
 */
inline bool coboundary_identity_holds(u64 n, i64 j) {
    const UnitTable eps = epsilon_cocycle(n);
    const i64 jj = static_cast<i64>(mod_floor(j, n));
    auto h = [&](u64 b) { return FormalUnit::pi_power(jj * static_cast<i64>(b), n); };
    for (u64 beta = 0; beta < n; ++beta)
        for (u64 b = 0; b < n; ++b)
            for (u64 beta2 = 0; beta2 < n; ++beta2)
                for (u64 b2 = 0; b2 < n; ++b2) {
                    const FormalUnit lhs = h(b2).translated(beta) * h((b + b2) % n).inverse() * h(b);
                    const FormalUnit rhs = eps.at(b, b2).pow(-jj) * FormalUnit::root_of_unity(jj * static_cast<i64>(beta * b2 % n), n);
                    if (!(lhs == rhs)) return false;
                }
    return true;
}

inline bool verify_coboundary_identity(u64 n) { return coboundary_identity_holds(n, 1); }

/// mu_n x Z/n with mu_n written additively through a fixed zeta.
inline FiniteAbelianGroup torsor_group(u64 n) { return FiniteAbelianGroup({n, n}); }

/// The 2-cocycle ((beta,b),(beta',b')) -> beta * b' representing 1_{mu_n} boxtimes 1_{Z/n}.
inline Cochain cup_product_boxtimes(u64 n) {
    const FiniteAbelianGroup G = torsor_group(n);
    return Cochain::from_function(G, 2, n, [&](std::span<const u64> a) {
        const auto g = G.decode(a[0]), h = G.decode(a[1]);
        return static_cast<i64>(mul_mod(g[0], h[1], n));
    });
}

/**
 * Low-degree edge map H^2(mu_n x Z/n, Z/n) -> H^1(Z/n, Hom(mu_n, Z/n)) on
 * classes that die on the mu_n fiber.
 *
 * The cochain is first corrected by a coboundary so that it vanishes on
 * mu_n x mu_n; then b is sent to the homomorphism
 * beta -> c((beta,0),(0,b)) - c((0,b),(beta,0)), identified with its value at 1.
 */
inline Cochain lhs_edge_map(const Cochain& c) {
    if (c.degree() != 2 || c.group().moduli().size() != 2 || c.group().moduli()[0] != c.group().moduli()[1] ||
        c.modulus() != c.group().moduli()[0])
        throw DomainError("edge map expects a 2-cochain on mu_n x Z/n with Z/n coefficients");
    const u64 n = c.modulus();
    const FiniteAbelianGroup& G = c.group();
    if (!is_cocycle(c)) throw DomainError("not a 2-cocycle");
    const FiniteAbelianGroup fiber({n});
    auto elem = [&](u64 beta, u64 b) {
        const u64 coords[2] = {beta, b};
        return G.encode(coords);
    };
    const Cochain on_fiber = Cochain::from_function(fiber, 2, n, [&](std::span<const u64> a) {
        return static_cast<i64>(c.at({elem(a[0], 0), elem(a[1], 0)}));
    });
    const auto x = coboundary_preimage(on_fiber);
    if (!x) throw DomainError("class does not vanish on fiber");
    const Cochain x_ext = Cochain::from_function(G, 1, n, [&](std::span<const u64> a) {
        return static_cast<i64>(x->at({G.decode(a[0])[0]}));
    });
    const Cochain adjusted = c - coboundary(x_ext);
    for (u64 beta = 0; beta < n; ++beta)
        for (u64 beta2 = 0; beta2 < n; ++beta2)
            if (adjusted.at({elem(beta, 0), elem(beta2, 0)}) != 0) throw DomainError("fiber correction failed");  // unreachable
    auto commutator = [&](u64 beta, u64 b) {
        return mod_floor(static_cast<i64>(adjusted.at({elem(beta, 0), elem(0, b)})) -
                             static_cast<i64>(adjusted.at({elem(0, b), elem(beta, 0)})),
                         n);
    };
    Cochain out(FiniteAbelianGroup({n}), 1, n);
    for (u64 b = 0; b < n; ++b) {
        const u64 at_one = commutator(1 % n, b);
        for (u64 beta = 0; beta < n; ++beta)
            if (commutator(beta, b) != mul_mod(beta, at_one, n)) throw DomainError("commutator pairing is not a homomorphism on mu_n");
        out.set_flat(b, static_cast<i64>(at_one));
    }
    return out;
}

/// The identity homomorphism Z/n -> Z/n as a 1-cochain.
inline Cochain identity_homomorphism(u64 n) {
    return Cochain::from_function(FiniteAbelianGroup({n}), 1, n, [](std::span<const u64> a) { return static_cast<i64>(a[0]); });
}

/// ((beta,b),(beta',b')) -> beta' * b, the class the extension Gamma is claimed to have.
inline Cochain twisted_boxtimes(u64 n) {
    const FiniteAbelianGroup G = torsor_group(n);
    return Cochain::from_function(G, 2, n, [&](std::span<const u64> a) {
        const auto g = G.decode(a[0]), h = G.decode(a[1]);
        return static_cast<i64>(mul_mod(h[0], g[1], n));
    });
}

/// Factor set of a central extension, as a 2-cocycle with kernel values.
struct FactorSet {
    Cochain cocycle;
    u64 extension_order;
};

namespace detail {

using FqMatrix = std::vector<FieldElement>;  // n x n, row-major

inline FqMatrix mat_mul(const FqMatrix& a, const FqMatrix& b, std::size_t n, const FiniteField& F) {
    FqMatrix r(n * n, F.zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i * n + k].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) r[i * n + j] += a[i * n + k] * b[k * n + j];
        }
    return r;
}

inline std::vector<u64> mat_key(const FqMatrix& a) {
    std::vector<u64> k;
    k.reserve(a.size());
    for (const auto& e : a) k.push_back(e.index());
    return k;
}

inline u64 discrete_log(const FieldElement& x, const FieldElement& zeta, u64 n) {
    FieldElement z = zeta.field().one();
    for (u64 m = 0; m < n; ++m) {
        if (z == x) return m;
        z = z * zeta;
    }
    throw DomainError("element is not a power of zeta");
}

} // namespace detail

/**
 * Builds Gamma in GL_n(F_q) from the scalar n-th roots of unity, the n-cycle
 * permutation matrix and diag(1, zeta, ..., zeta^{n-1}); projects onto
 * mu_n x Z/n by (ratio of successive nonzero entries, column of the nonzero
 * entry in row 0); returns the factor set of the section that picks the
 * element whose row-0 entry is 1, optionally twisted by zeta^{shift(g)}.
 */
inline FactorSet extension_factor_set(u64 n, u64 q, const std::optional<Cochain>& section_shift = std::nullopt) {
    const FiniteField F = finite_field_of_order(q);
    require_roots_of_unity(F, n);
    if (n < 2) throw DomainError("extension factor set needs n >= 2");
    const FieldElement zeta = primitive_root_of_unity(F, n);
    const FiniteAbelianGroup G = torsor_group(n);
    using detail::FqMatrix;

    FqMatrix scalar(n * n, F.zero()), cycle(n * n, F.zero()), diag(n * n, F.zero()), ident(n * n, F.zero());
    for (std::size_t i = 0; i < n; ++i) {
        scalar[i * n + i] = zeta;
        cycle[i * n + (i + 1) % n] = F.one();
        diag[i * n + i] = zeta.pow(i);
        ident[i * n + i] = F.one();
    }
    const std::vector<FqMatrix> gens{scalar, cycle, diag};

    std::map<std::vector<u64>, FqMatrix> group;
    std::vector<FqMatrix> frontier{ident};
    group.emplace(detail::mat_key(ident), ident);
    while (!frontier.empty()) {
        std::vector<FqMatrix> next;
        for (const auto& a : frontier)
            for (const auto& g : gens) {
                FqMatrix p = detail::mat_mul(a, g, n, F);
                if (group.emplace(detail::mat_key(p), p).second) next.push_back(std::move(p));
            }
        frontier = std::move(next);
    }

    auto project = [&](const FqMatrix& a) {
        std::vector<std::size_t> col(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t nz = 0, where = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (!a[i * n + j].is_zero()) {
                    ++nz;
                    where = j;
                }
            if (nz != 1) throw DomainError("Gamma element is not monomial");
            col[i] = where;
        }
        const FieldElement ratio = a[1 * n + col[1]] / a[col[0]];
        for (std::size_t i = 1; i + 1 < n; ++i)
            if (!(a[(i + 1) * n + col[i + 1]] / a[i * n + col[i]] == ratio)) throw DomainError("ratios of successive entries differ");
        const u64 coords[2] = {detail::discrete_log(ratio, zeta, n), col[0]};
        return G.encode(coords);
    };

    std::vector<std::optional<FqMatrix>> section(G.order());
    for (const auto& [key, a] : group) {
        const u64 g = project(a);
        std::size_t c0 = 0;
        while (a[c0].is_zero()) ++c0;
        if (a[c0].is_one()) {
            FqMatrix s = a;
            if (section_shift) {
                const FieldElement lam = zeta.pow(section_shift->at({g}));
                for (auto& e : s) e = e * lam;
            }
            section[g] = std::move(s);
        }
    }
    for (const auto& s : section)
        if (!s) throw DomainError("projection onto mu_n x Z/n is not surjective");

    Cochain cocycle(G, 2, n);
    for (u64 g = 0; g < G.order(); ++g)
        for (u64 h = 0; h < G.order(); ++h) {
            const FqMatrix prod = detail::mat_mul(*section[g], *section[h], n, F);
            if (project(prod) != G.add(g, h)) throw DomainError("projection is not a homomorphism");
            const FqMatrix& target = *section[G.add(g, h)];
            std::size_t c0 = 0;
            while (target[c0].is_zero()) ++c0;
            const FieldElement lam = prod[c0] / target[c0];
            for (std::size_t i = 0; i < n * n; ++i)
                if (!(prod[i] == target[i] * lam)) throw DomainError("factor set value is not central");
            const u64 flat_args[2] = {g, h};
            cocycle.set_flat(cocycle.flatten(flat_args), static_cast<i64>(detail::discrete_log(lam, zeta, n)));
        }
    if (!is_cocycle(cocycle)) throw DomainError("factor set fails the cocycle condition");
    return {std::move(cocycle), group.size()};
}

} // namespace brauer

#endif // BRAUER_COHOMOLOGY_HPP
