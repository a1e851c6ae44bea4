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

#ifndef BRAUER_CONIC_HPP
#define BRAUER_CONIC_HPP

#include <string>
#include <vector>

#include "symbols.hpp"

namespace brauer {

/// The conic a x^2 + b y^2 = z^2 over F_q(t), q odd; its class is (a, b)_2.
class ConicBundle {
public:
    ConicBundle(RatFunc a, RatFunc b) : a_(std::move(a)), b_(std::move(b)) {
        if (a_.field().characteristic() == 2) throw ConstraintError("q must be odd for conic bundles");
        if (a_.is_zero() || b_.is_zero()) throw DomainError("conic coefficients must be nonzero");
        if (!(a_.field() == b_.field())) throw DomainError("conic coefficients over different fields");
    }

    const RatFunc& a() const { return a_; }
    const RatFunc& b() const { return b_; }
    const FiniteField& field() const { return a_.field(); }
    SymbolClass symbol() const { return SymbolClass::single(a_, b_, 2); }

private:
    RatFunc a_, b_;
};

/// Diagonal ternary form a x^2 + b y^2 + c z^2.
struct TernaryForm {
    RatFunc a, b, c;
};

namespace detail {

inline i64 floor_half(i64 v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); }

inline RatFunc strip_squares(const RatFunc& f, const Place& P) {
    const i64 k = floor_half(valuation(f, P));
    return f * P.uniformizer().pow(-2 * k);
}

} // namespace detail

/**
 * Local model at P with v(a0), v(b0) in {0, 1}, not both 1, and c0 = -1.
 * Even powers of the uniformizer are squares; when both coefficients still
 * have valuation one, (a, b) = (a, -ab) trades b for a unit.
 */
inline TernaryForm minimize_at(const ConicBundle& C, const Place& P) {
    RatFunc a0 = detail::strip_squares(C.a(), P);
    RatFunc b0 = detail::strip_squares(C.b(), P);
    if (valuation(a0, P) == 1 && valuation(b0, P) == 1) b0 = detail::strip_squares(-(a0 * b0), P);
    const i64 va = valuation(a0, P), vb = valuation(b0, P);
    if (va < 0 || va > 1 || vb < 0 || vb > 1 || va + vb > 1)
        throw NonStandardModelError("no rank-2 local model at " + P.to_string());
    return {a0, b0, RatFunc::from_int(C.field(), -1)};
}

/// Places where (a, b)_2 has nonzero residue.
inline std::vector<Place> discriminant_places(const ConicBundle& C) {
    std::vector<Place> out;
    for (auto& [P, r] : ramification_divisor(C.symbol()).entries) {
        (void)r;
        out.push_back(P);
    }
    return out;
}

/// Reduction of a rank-2 fiber: the binary form A X^2 + B XZ + C Z^2 in the surviving variable and z.
struct DegenerateFiber {
    Place place;
    FieldElement x2, xz, z2;
};

inline DegenerateFiber degenerate_fiber(const ConicBundle& C, const Place& P) {
    const TernaryForm form = minimize_at(C, P);
    const ResidueField kappa(P);
    const i64 va = valuation(form.a, P), vb = valuation(form.b, P);
    if (va == 0 && vb == 0) throw DomainError("fiber is smooth at " + P.to_string());
    const RatFunc& unit = (va == 0) ? form.a : form.b;
    return {P, kappa.reduce(unit), kappa.field().zero(), kappa.reduce(form.c)};
}

/// Z/2-torsor of components of the degenerate fiber, as a square class in kappa(P).
struct ComponentTorsor {
    ResidueClass discriminant_class;
};

/**
 * The two lines of the fiber are defined over kappa(P)(sqrt(disc)) with
 * disc = B^2 - 4AC; the torsor is trivial exactly when disc is a square.
 */
inline ComponentTorsor component_torsor(const ConicBundle& C, const Place& P) {
    const DegenerateFiber fiber = degenerate_fiber(C, P);
    const ResidueField kappa(P);
    const FieldElement four = kappa.field().from_int(4);
    const FieldElement disc = fiber.xz * fiber.xz - four * fiber.x2 * fiber.z2;
    const FieldElement zeta_base = primitive_root_of_unity(C.field(), 2);
    const ResidueClass chi = power_residue_character(disc, 2, kappa.base_embedding()(zeta_base));
    return {{2, chi.value, zeta_base}};
}

struct ArtinRow {
    Place place;
    ResidueClass geometric;
    ResidueClass residue;
    bool agree;
};

/// Compares the component torsor with the tame residue at every ramified place.
inline std::vector<ArtinRow> check_artin(const ConicBundle& C) {
    std::vector<ArtinRow> rows;
    const SymbolClass alpha = C.symbol();
    for (const auto& P : discriminant_places(C)) {
        ResidueClass geo = component_torsor(C, P).discriminant_class;
        ResidueClass res = tame_residue(alpha, P);
        const bool agree = geo == res;
        rows.push_back({P, std::move(geo), std::move(res), agree});
    }
    return rows;
}

/// Upper bound on |F| for the square-count table used by point counting.
inline constexpr u64 kPointCountFieldGuard = 4'000'000;
/// Upper bound on the number of enumerated affine tuples.
inline constexpr u64 kPointCountWorkGuard = 50'000'000;

/// Projective points of sum_i c_i x_i^2 = 0 in P^2(F), by enumeration of affine solutions.
inline u64 count_diagonal_conic_points(const FiniteField& F, const std::vector<FieldElement>& coeffs) {
    const u64 Q = F.order();
    std::vector<FieldElement> live;
    for (const auto& c : coeffs)
        if (!c.is_zero()) live.push_back(c);
    const std::size_t free_vars = coeffs.size() - live.size();
    u64 solutions = 1;  // solutions of sum over live variables in F^{|live|}
    if (live.size() >= 2) {
        if (Q > kPointCountFieldGuard) throw SizeGuardError("field too large for point counting");
        u64 work = 1;
        for (std::size_t i = 0; i + 1 < live.size(); ++i) {
            if (work > kPointCountWorkGuard / Q) throw SizeGuardError("point count enumeration too large");
            work *= Q;
        }
        std::vector<u64> square_of(Q);
        std::vector<std::uint32_t> root_count(Q, 0);
        for (u64 i = 0; i < Q; ++i) {
            const FieldElement x = F.element(i);
            square_of[i] = (x * x).index();
            ++root_count[square_of[i]];
        }
        const FieldElement scale = -live.back().inverse();
        solutions = 0;
        std::vector<u64> idx(live.size() - 1, 0);
        for (u64 step = 0; step < work; ++step) {
            FieldElement acc = F.zero();
            for (std::size_t v = 0; v < idx.size(); ++v) acc += live[v] * F.element(square_of[idx[v]]);
            solutions += root_count[(acc * scale).index()];
            for (std::size_t v = 0; v < idx.size(); ++v) {
                if (++idx[v] < Q) break;
                idx[v] = 0;
            }
        }
    }
    u64 affine = solutions;
    for (std::size_t i = 0; i < free_vars; ++i) affine *= Q;
    return (affine - 1) / (Q - 1);
}

/// Points of the minimized fiber at P over the degree-e extension of kappa(P).
inline u64 count_fiber_points(const ConicBundle& C, const Place& P, std::size_t e) {
    if (e == 0) throw DomainError("extension degree must be positive");
    const TernaryForm form = minimize_at(C, P);
    const ResidueField kappa(P);
    auto reduced = [&](const RatFunc& f) { return valuation(f, P) > 0 ? kappa.field().zero() : kappa.reduce(f); };
    std::vector<FieldElement> coeffs{reduced(form.a), reduced(form.b), reduced(form.c)};
    if (e == 1) return count_diagonal_conic_points(kappa.field(), coeffs);
    const FiniteField big = finite_field_of_degree(kappa.field().characteristic(), kappa.field().degree() * e);
    if (big.order() > kPointCountFieldGuard) throw SizeGuardError("field too large for point counting");
    const Embedding up(kappa.field(), big);
    for (auto& c : coeffs) c = up(c);
    return count_diagonal_conic_points(big, coeffs);
}

} // namespace brauer

#endif // BRAUER_CONIC_HPP
