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

#include <random>

#include <gtest/gtest.h>

#include "brauer/brauer.hpp"
#include "brauer/random_inputs.hpp"

using namespace brauer;

namespace {

const FiniteField& F5() {
    static const FiniteField F = FiniteField::prime(5);
    return F;
}

RatFunc R(const FiniteField& F, const char* text) { return parse_ratfunc(text, F); }
ConicBundle conic(const FiniteField& F, const char* a, const char* b) { return ConicBundle(R(F, a), R(F, b)); }
Place place(const FiniteField& F, const char* text) { return parse_place(text, F); }

// Naive count over normalized projective representatives (1:y:z), (0:1:z), (0:0:1).
u64 brute_projective_count(const FiniteField& F, const std::vector<FieldElement>& c) {
    auto zero_at = [&](const FieldElement& x, const FieldElement& y, const FieldElement& z) {
        return (c[0] * x * x + c[1] * y * y + c[2] * z * z).is_zero();
    };
    u64 count = zero_at(F.zero(), F.zero(), F.one()) ? 1 : 0;
    for (u64 z = 0; z < F.order(); ++z) {
        if (zero_at(F.zero(), F.one(), F.element(z))) ++count;
        for (u64 y = 0; y < F.order(); ++y)
            if (zero_at(F.one(), F.element(y), F.element(z))) ++count;
    }
    return count;
}

template <class Fn>
std::string error_text(Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST(ConicBundleTest, RejectsEvenCharacteristicAndZero) {
    const FiniteField F4 = finite_field_of_order(4);
    EXPECT_EQ(error_text([&] { ConicBundle(RatFunc::t(F4), RatFunc::from_int(F4, 1)); }), "q must be odd for conic bundles");
    EXPECT_THROW(ConicBundle(RatFunc(Poly(F5())), RatFunc::t(F5())), DomainError);
}

TEST(MinimizeTest, SpecExamples) {
    const Place Pt = place(F5(), "t");
    const TernaryForm f1 = minimize_at(conic(F5(), "2*t^3", "3"), Pt);
    EXPECT_EQ(f1.a, R(F5(), "2*t"));
    EXPECT_EQ(f1.b, R(F5(), "3"));
    EXPECT_EQ(f1.c, R(F5(), "-1"));
    for (const char* p : {"t", "t+2", "t^2+2", "inf"}) {
        const TernaryForm f2 = minimize_at(conic(F5(), "4", "9"), place(F5(), p));
        EXPECT_EQ(f2.a, R(F5(), "4"));
        EXPECT_EQ(f2.b, R(F5(), "9"));
        EXPECT_EQ(f2.c, R(F5(), "-1"));
    }
    const ConicBundle tt = conic(F5(), "t", "t");
    const TernaryForm f3 = minimize_at(tt, Pt);
    EXPECT_LE(valuation(f3.a, Pt) + valuation(f3.b, Pt), 1);
    EXPECT_EQ(tame_residue(SymbolClass::single(f3.a, f3.b, 2), Pt), tame_residue(tt.symbol(), Pt));
}

TEST(MinimizeTest, PreservesResidueOnRandomInputs) {
    std::mt19937_64 rng(2);
    for (u64 q : {3, 5, 9, 13}) {
        const FiniteField F = finite_field_of_order(q);
        for (int i = 0; i < 20; ++i) {
            const ConicBundle C(random::ratfunc(F, 5, 3, rng), random::ratfunc(F, 5, 3, rng));
            for (const auto& P : candidate_places(C.symbol())) {
                const TernaryForm m = minimize_at(C, P);
                const i64 va = valuation(m.a, P), vb = valuation(m.b, P);
                EXPECT_TRUE(va >= 0 && va <= 1 && vb >= 0 && vb <= 1 && va + vb <= 1);
                EXPECT_EQ(tame_residue(SymbolClass::single(m.a, m.b, 2), P), tame_residue(C.symbol(), P));
            }
        }
    }
}

TEST(DiscriminantTest, SpecExamples) {
    const auto d1 = discriminant_places(conic(F5(), "2", "t"));
    ASSERT_EQ(d1.size(), 2u);
    EXPECT_EQ(d1[0].to_string(), "(t)");
    EXPECT_TRUE(d1[1].is_infinity());
    const auto d2 = discriminant_places(conic(F5(), "4", "t"));
    for (const auto& P : d2) EXPECT_NE(P.to_string(), "(t)");
    EXPECT_TRUE(discriminant_places(conic(F5(), "2", "3")).empty());
}

TEST(ComponentTorsorTest, SpecExamples) {
    const Place Pt = place(F5(), "t");
    EXPECT_EQ(component_torsor(conic(F5(), "2", "t"), Pt).discriminant_class.value, 1u);
    EXPECT_EQ(component_torsor(conic(F5(), "4", "t"), Pt).discriminant_class.value, 0u);
    for (const char* u : {"1", "2", "t+1", "t^2+3"}) {
        const RatFunc uf = R(F5(), u);
        EXPECT_EQ(component_torsor(ConicBundle(uf * uf, RatFunc::t(F5())), Pt).discriminant_class.value, 0u) << u;
    }
}

TEST(ComponentTorsorTest, SmoothFiberIsRejected) {
    EXPECT_EQ(error_text([] { component_torsor(conic(F5(), "2", "3"), place(F5(), "t")); }).rfind("fiber is smooth", 0), 0u);
    const DegenerateFiber f = degenerate_fiber(conic(F5(), "2", "t"), place(F5(), "t"));
    EXPECT_EQ(f.x2.index(), 2u);
    EXPECT_TRUE(f.xz.is_zero());
    EXPECT_EQ(f.z2.index(), 4u);
}

TEST(ArtinTest, SpecExamples) {
    const auto rows = check_artin(conic(F5(), "2", "t"));
    ASSERT_EQ(rows.size(), 2u);
    for (const auto& r : rows) {
        EXPECT_EQ(r.geometric.value, 1u);
        EXPECT_EQ(r.residue.value, 1u);
        EXPECT_TRUE(r.agree);
    }
    EXPECT_TRUE(check_artin(conic(F5(), "2", "3")).empty());
}

TEST(ArtinTest, DegreeTwoPlaces) {
    // t^2+2 is irreducible over F_5 and its residue field is F_25
    const Place P = place(F5(), "t^2+2");
    EXPECT_EQ(ResidueField(P).order(), 25u);
    // 3 lies in F_5, hence is a square in F_25: the degenerate fiber splits
    const ConicBundle unsplit_free = conic(F5(), "3", "t^2+2");
    EXPECT_TRUE(tame_residue(unsplit_free.symbol(), P).is_zero());
    EXPECT_EQ(component_torsor(unsplit_free, P).discriminant_class.value, 0u);
    EXPECT_EQ(count_fiber_points(unsplit_free, P, 1), 51u);
    // t reduces to a square root of 3, which is not a square in F_25
    const ConicBundle C = conic(F5(), "t", "t^2+2");
    bool seen = false;
    for (const auto& r : check_artin(C)) {
        EXPECT_TRUE(r.agree);
        if (r.place == P) {
            seen = true;
            EXPECT_EQ(r.geometric.value, 1u);
            EXPECT_EQ(count_fiber_points(C, P, 1), 1u);
            EXPECT_EQ(count_fiber_points(C, P, 2), 2 * 625 + 1u);
        }
    }
    EXPECT_TRUE(seen);
}

TEST(PointCountTest, SpecExamples) {
    const Place Pt = place(F5(), "t");
    EXPECT_EQ(count_fiber_points(conic(F5(), "2", "t"), Pt, 1), 1u);
    EXPECT_EQ(count_fiber_points(conic(F5(), "2", "t"), Pt, 2), 51u);
    EXPECT_EQ(count_fiber_points(conic(F5(), "4", "t"), Pt, 1), 11u);
    EXPECT_THROW(count_fiber_points(conic(F5(), "4", "t"), Pt, 0), DomainError);
}

TEST(PointCountTest, SmoothConicsHaveQPlusOnePoints) {
    for (u64 q : {3, 5, 7, 9, 13}) {
        const FiniteField F = finite_field_of_order(q);
        for (u64 a = 1; a < q; ++a)
            EXPECT_EQ(count_diagonal_conic_points(F, {F.element(a), F.one(), F.from_int(-1)}), q + 1);
    }
}

TEST(PointCountTest, AgreesWithNaiveProjectiveEnumeration) {
    std::mt19937_64 rng(6);
    for (u64 q : {3, 5, 9, 13, 25}) {
        const FiniteField F = finite_field_of_order(q);
        for (int i = 0; i < 15; ++i) {
            std::vector<FieldElement> c{random::element(F, rng), random::element(F, rng), random::element(F, rng)};
            if (c[0].is_zero() && c[1].is_zero() && c[2].is_zero()) continue;
            EXPECT_EQ(count_diagonal_conic_points(F, c), brute_projective_count(F, c));
        }
    }
}

TEST(PointCountTest, SizeGuard) {
    u64 p = 4'000'001;
    while (!is_prime(p)) ++p;
    const FiniteField F = FiniteField::prime(p);
    EXPECT_THROW(count_diagonal_conic_points(F, {F.one(), F.one(), F.one()}), SizeGuardError);
}

TEST(ConicPropertiesTest, TorsorMatchesResidueAndPointCounts) {
    std::mt19937_64 rng(10);
    for (u64 q : {5, 13, 9}) {
        const FiniteField F = finite_field_of_order(q);
        for (int i = 0; i < 15; ++i) {
            const ConicBundle C = random::conic(F, 4, rng);
            for (const auto& r : check_artin(C)) {
                EXPECT_TRUE(r.agree) << C.a().to_string() << ", " << C.b().to_string() << " at " << r.place.to_string();
                const u64 kappa = ResidueField(r.place).order();
                const u64 pts = count_fiber_points(C, r.place, 1);
                EXPECT_EQ(r.geometric.value == 0, pts == 2 * kappa + 1);
                EXPECT_EQ(r.geometric.value == 1, pts == 1);
                if (kappa <= 25 && r.geometric.value == 1) {
                    EXPECT_EQ(count_fiber_points(C, r.place, 2), 2 * kappa * kappa + 1);
                }
            }
        }
    }
}

TEST(ConicPropertiesTest, SquareScalingAndSwap) {
    std::mt19937_64 rng(14);
    for (u64 q : {5, 13}) {
        const FiniteField F = finite_field_of_order(q);
        for (int i = 0; i < 15; ++i) {
            const ConicBundle C = random::conic(F, 3, rng);
            const RatFunc u = random::ratfunc(F, 2, 2, rng);
            const ConicBundle scaled(C.a() * u * u, C.b()), swapped(C.b(), C.a());
            const auto base = discriminant_places(C);
            EXPECT_EQ(discriminant_places(scaled), base);
            EXPECT_EQ(discriminant_places(swapped), base);
            for (const auto& P : base) {
                const u64 g = component_torsor(C, P).discriminant_class.value;
                EXPECT_EQ(component_torsor(scaled, P).discriminant_class.value, g);
                EXPECT_EQ(component_torsor(swapped, P).discriminant_class.value, g);
            }
        }
    }
}
