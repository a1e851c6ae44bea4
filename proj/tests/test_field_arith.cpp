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
#include <set>

#include <gtest/gtest.h>

#include "brauer/brauer.hpp"
#include "brauer/random_inputs.hpp"

using namespace brauer;

namespace {

Poly P(const FiniteField& F, std::vector<i64> c) { return Poly::from_ints(F, c); }
RatFunc R(const FiniteField& F, const char* text) { return parse_ratfunc(text, F); }

Poly reassemble(const Poly& f, const std::vector<std::pair<Poly, unsigned>>& parts) {
    Poly acc = Poly::constant(f.leading());
    for (const auto& [g, m] : parts)
        for (unsigned i = 0; i < m; ++i) acc = acc * g;
    return acc;
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

TEST(FiniteFieldTest, PrimeFieldArithmetic) {
    const FiniteField F = FiniteField::prime(7);
    EXPECT_EQ(F.order(), 7u);
    EXPECT_EQ((F.from_int(3) * F.from_int(5)).index(), 1u);
    EXPECT_EQ(F.from_int(-1).index(), 6u);
    EXPECT_EQ(F.from_int(3).inverse().index(), 5u);
    EXPECT_TRUE((F.from_int(3) / F.from_int(3)).is_one());
}

TEST(FiniteFieldTest, RejectsNonPrimeAndNonPrimePower) {
    EXPECT_THROW(FiniteField::prime(4), ConstraintError);
    EXPECT_THROW(finite_field_of_order(6), ConstraintError);
    EXPECT_THROW(finite_field_of_order(1), ConstraintError);
    EXPECT_THROW(finite_field_with_modulus(5, {1, 0, 1, 0, 1}), ConstraintError);  // reducible
}

TEST(FiniteFieldTest, ExtensionFieldAxiomsBySampling) {
    std::mt19937_64 rng(7);
    for (u64 q : {4, 9, 25, 49, 27, 121}) {
        const FiniteField F = finite_field_of_order(q);
        ASSERT_EQ(F.order(), q);
        for (int i = 0; i < 200; ++i) {
            const auto a = random::element(F, rng), b = random::element(F, rng), c = random::element(F, rng);
            EXPECT_EQ((a + b) * c, a * c + b * c);
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a + b, b + a);
            EXPECT_TRUE((a - a).is_zero());
            if (!a.is_zero()) {
                EXPECT_TRUE((a * a.inverse()).is_one());
                EXPECT_TRUE(a.pow(q - 1).is_one());
            }
        }
    }
}

TEST(FiniteFieldTest, MultiplicativeGroupIsCyclic) {
    const FiniteField F = finite_field_of_order(49);
    bool found = false;
    for (u64 i = 1; i < 49 && !found; ++i) found = multiplicative_order(F.element(i)) == 48;
    EXPECT_TRUE(found);
}

TEST(FactorTest, DifferenceOfSquaresOverF5) {
    const FiniteField F = FiniteField::prime(5);
    const auto parts = factor(P(F, {-1, 0, 1}));
    ASSERT_EQ(parts.size(), 2u);
    // t+1 and t-1 = t+4, each once
    EXPECT_EQ(parts[0].first, P(F, {1, 1}));
    EXPECT_EQ(parts[1].first, P(F, {-1, 1}));
    EXPECT_EQ(parts[0].second, 1u);
    EXPECT_EQ(parts[1].second, 1u);
}

TEST(FactorTest, LinearIsIrreducible) {
    const FiniteField F = FiniteField::prime(5);
    const auto parts = factor(P(F, {0, 1}));
    ASSERT_EQ(parts.size(), 1u);
    EXPECT_EQ(parts[0].first, P(F, {0, 1}));
    EXPECT_EQ(parts[0].second, 1u);
}

TEST(FactorTest, TSquaredPlusOneOverF7) {
    const FiniteField F = FiniteField::prime(7);
    const Poly f = P(F, {1, 0, 1});
    for (u64 x = 0; x < 7; ++x) EXPECT_FALSE(f.evaluate(F.element(x)).is_zero());
    const auto parts = factor(f);
    ASSERT_EQ(parts.size(), 1u);
    EXPECT_EQ(parts[0].first, f);
    EXPECT_EQ(parts[0].second, 1u);
}

TEST(FactorTest, ZeroIsRejected) {
    const FiniteField F = FiniteField::prime(5);
    EXPECT_EQ(error_text([&] { factor(Poly(F)); }), "cannot factor zero");
}

TEST(FactorTest, RepeatedFactorsAndInseparableCharacteristic) {
    const FiniteField F = FiniteField::prime(3);
    // (t+1)^3 (t^2+1)^2 over F_3: the cube is a p-th power
    const Poly a = P(F, {1, 1}), b = P(F, {1, 0, 1});
    const Poly f = a * a * a * b * b;
    const auto parts = factor(f);
    ASSERT_EQ(parts.size(), 2u);
    EXPECT_EQ(parts[0].first, P(F, {1, 1}));
    EXPECT_EQ(parts[0].second, 3u);
    EXPECT_EQ(parts[1].first, P(F, {1, 0, 1}));
    EXPECT_EQ(parts[1].second, 2u);
}

TEST(FactorTest, RandomReassemblyAndIrreducibility) {
    std::mt19937_64 rng(11);
    for (u64 q : {2, 3, 5, 9, 13, 16, 25}) {
        const FiniteField F = finite_field_of_order(q);
        for (int i = 0; i < 40; ++i) {
            const Poly f = random::poly(F, 12, rng);
            const auto parts = factor(f);
            EXPECT_EQ(reassemble(f, parts), f) << f.to_string();
            for (std::size_t k = 0; k < parts.size(); ++k) {
                EXPECT_TRUE(parts[k].first.is_monic());
                EXPECT_TRUE(is_irreducible(parts[k].first));
                if (k > 0) {
                    EXPECT_TRUE(poly_less(parts[k - 1].first, parts[k].first));
                }
            }
        }
    }
}

TEST(FactorTest, IrreducibilityCountsMatchNecklaceFormula) {
    // monic irreducibles of degree 3 over F_5: (125 - 5) / 3 = 40
    const FiniteField F = FiniteField::prime(5);
    int count = 0;
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
            for (int c = 0; c < 5; ++c) count += is_irreducible(P(F, {a, b, c, 1})) ? 1 : 0;
    EXPECT_EQ(count, 40);
}

TEST(ValuationTest, SpecExamples) {
    const FiniteField F = FiniteField::prime(5);
    const RatFunc f = R(F, "t^2/(t+1)");
    EXPECT_EQ(valuation(f, Place::finite(P(F, {0, 1}))), 2);
    EXPECT_EQ(valuation(f, Place::infinity(F)), -1);
    const RatFunc three = RatFunc::from_int(F, 3);
    EXPECT_EQ(valuation(three, Place::finite(P(F, {0, 1}))), 0);
    EXPECT_EQ(valuation(three, Place::finite(P(F, {2, 0, 1}))), 0);
    EXPECT_EQ(valuation(three, Place::infinity(F)), 0);
}

TEST(ValuationTest, ZeroIsRejected) {
    const FiniteField F = FiniteField::prime(5);
    EXPECT_EQ(error_text([&] { valuation(RatFunc(Poly(F)), Place::infinity(F)); }), "valuation of zero");
}

TEST(ValuationTest, AdditiveAndProductFormula) {
    std::mt19937_64 rng(3);
    for (u64 q : {5, 9, 13}) {
        const FiniteField F = finite_field_of_order(q);
        for (int i = 0; i < 50; ++i) {
            const RatFunc f = random::ratfunc(F, 5, 4, rng), g = random::ratfunc(F, 5, 4, rng);
            std::vector<Place> places = finite_support(f * g);
            places.push_back(Place::infinity(F));
            places.push_back(random::place(F, 3, rng));
            for (const auto& Pl : places) EXPECT_EQ(valuation(f * g, Pl), valuation(f, Pl) + valuation(g, Pl));
            i64 total = valuation(f, Place::infinity(F));
            for (const auto& Pl : finite_support(f)) total += static_cast<i64>(Pl.degree()) * valuation(f, Pl);
            EXPECT_EQ(total, 0) << f.to_string();
        }
    }
}

TEST(PlaceTest, RejectsReducibleAndConstant) {
    const FiniteField F = FiniteField::prime(5);
    EXPECT_THROW(Place::finite(P(F, {-1, 0, 1})), ConstraintError);
    EXPECT_THROW(Place::finite(P(F, {3})), ConstraintError);
    EXPECT_EQ(Place::finite(P(F, {0, 2})).to_string(), "(t)");
    EXPECT_EQ(Place::infinity(F).to_string(), "inf");
}

TEST(PlaceTest, OrderingPutsInfinityLast) {
    const FiniteField F = FiniteField::prime(5);
    const Place a = Place::finite(P(F, {0, 1})), b = Place::finite(P(F, {1, 1})), c = Place::finite(P(F, {2, 0, 1}));
    EXPECT_TRUE(a < b);
    EXPECT_TRUE(b < c);
    EXPECT_TRUE(c < Place::infinity(F));
    EXPECT_FALSE(Place::infinity(F) < a);
}

TEST(ResidueFieldTest, SpecExamples) {
    const FiniteField F7 = FiniteField::prime(7), F5 = FiniteField::prime(5);
    EXPECT_EQ(ResidueField(Place::finite(P(F7, {1, 0, 1}))).order(), 49u);
    EXPECT_EQ(ResidueField(Place::finite(P(F5, {0, 1}))).order(), 5u);
    EXPECT_EQ(ResidueField(Place::infinity(F5)).order(), 5u);
}

TEST(ResidueFieldTest, QuotientIsAFieldAndReductionIsAHomomorphism) {
    std::mt19937_64 rng(5);
    const FiniteField F = FiniteField::prime(7);
    const Place Pl = Place::finite(P(F, {1, 0, 1}));
    const ResidueField kappa(Pl);
    // t reduces to a root of t^2+1
    const FieldElement theta = kappa.reduce(Poly::x(F));
    EXPECT_TRUE((theta * theta + kappa.field().one()).is_zero());
    for (int i = 0; i < 100; ++i) {
        const Poly f = random::poly(F, 6, rng), g = random::poly(F, 6, rng);
        EXPECT_EQ(kappa.reduce(f * g), kappa.reduce(f) * kappa.reduce(g));
        EXPECT_EQ(kappa.reduce(f + g), kappa.reduce(f) + kappa.reduce(g));
    }
}

TEST(ReduceTest, SpecExamples) {
    const FiniteField F = FiniteField::prime(5);
    const Place Pt = Place::finite(P(F, {0, 1}));
    EXPECT_EQ(reduce_at(RatFunc::from_int(F, 2), Pt).index(), 2u);
    EXPECT_EQ(reduce_at(R(F, "(t+3)/(t+1)"), Pt).index(), 3u);
    EXPECT_EQ(error_text([&] { reduce_at(RatFunc::t(F), Pt); }), "not a unit at (t)");
}

TEST(ReduceTest, AtInfinityUsesLeadingCoefficients) {
    const FiniteField F = FiniteField::prime(5);
    EXPECT_EQ(reduce_at(R(F, "(2*t^2+1)/(t^2+t)"), Place::infinity(F)).index(), 2u);
    EXPECT_THROW(reduce_at(RatFunc::t(F), Place::infinity(F)), DomainError);
}

TEST(PowerResidueTest, SpecExamples) {
    const FiniteField F5 = FiniteField::prime(5), F7 = FiniteField::prime(7);
    EXPECT_EQ(power_residue_character(F5.one(), 2, F5.from_int(4)).value, 0u);
    EXPECT_EQ(power_residue_character(F7.one(), 3, F7.from_int(2)).value, 0u);
    EXPECT_EQ(power_residue_character(F5.from_int(3), 2, F5.from_int(4)).value, 1u);
    EXPECT_EQ(power_residue_character(F7.from_int(5), 3, F7.from_int(2)).value, 2u);
}

TEST(PowerResidueTest, ZetaIsSmallestOfExactOrder) {
    EXPECT_EQ(primitive_root_of_unity(FiniteField::prime(5), 2).index(), 4u);
    EXPECT_EQ(primitive_root_of_unity(FiniteField::prime(7), 3).index(), 2u);
    EXPECT_EQ(primitive_root_of_unity(FiniteField::prime(13), 4).index(), 5u);
    EXPECT_EQ(primitive_root_of_unity(FiniteField::prime(5), 1).index(), 1u);
}

TEST(PowerResidueTest, Errors) {
    const FiniteField F = FiniteField::prime(5);
    EXPECT_THROW(power_residue_character(F.zero(), 2, F.from_int(4)), DomainError);
    EXPECT_THROW(power_residue_character(F.from_int(2), 3, F.from_int(4)), ConstraintError);
    EXPECT_THROW(power_residue_character(F.from_int(2), 2, F.from_int(2)), DomainError);
    EXPECT_EQ(error_text([&] { primitive_root_of_unity(F, 3); }).rfind("n must divide q-1", 0), 0u);
}

TEST(PowerResidueTest, HomomorphismProperty) {
    std::mt19937_64 rng(9);
    const struct {
        u64 q, n;
    } cases[] = {{5, 4}, {13, 6}, {25, 8}, {49, 3}, {9, 4}, {16, 5}};
    for (const auto& c : cases) {
        const FiniteField F = finite_field_of_order(c.q);
        const FieldElement zeta = primitive_root_of_unity(F, c.n);
        for (int i = 0; i < 100; ++i) {
            const auto u = random::nonzero_element(F, rng), v = random::nonzero_element(F, rng);
            const u64 cu = power_residue_character(u, c.n, zeta).value, cv = power_residue_character(v, c.n, zeta).value;
            EXPECT_EQ(power_residue_character(u * v, c.n, zeta).value, (cu + cv) % c.n);
            EXPECT_EQ(power_residue_character(u.pow(c.n), c.n, zeta).value, 0u);
        }
    }
}

TEST(PowerResidueTest, ZeroExactlyOnNthPowers) {
    const FiniteField F = FiniteField::prime(13);
    const FieldElement zeta = primitive_root_of_unity(F, 3);
    std::set<u64> cubes;
    for (u64 x = 1; x < 13; ++x) cubes.insert(F.element(x).pow(3).index());
    for (u64 x = 1; x < 13; ++x)
        EXPECT_EQ(power_residue_character(F.element(x), 3, zeta).value == 0, cubes.count(x) == 1) << x;
}

TEST(CorestrictTest, TrivialExtensionIsIdentity) {
    const FiniteField F = FiniteField::prime(13);
    const FieldElement zeta = primitive_root_of_unity(F, 4);
    const Embedding id = Embedding::identity(F);
    for (u64 x = 1; x < 13; ++x)
        EXPECT_EQ(corestrict(F.element(x), id, 4, zeta), power_residue_character(F.element(x), 4, zeta));
}

TEST(CorestrictTest, GeneratorOfF49) {
    const FiniteField F7 = FiniteField::prime(7);
    const ResidueField kappa(Place::finite(P(F7, {1, 0, 1})));
    const FieldElement zeta = primitive_root_of_unity(F7, 3);
    FieldElement g = kappa.field().zero();
    for (u64 i = 1; i < 49; ++i)
        if (multiplicative_order(kappa.field().element(i)) == 48) {
            g = kappa.field().element(i);
            break;
        }
    ASSERT_FALSE(g.is_zero());
    const auto norm = kappa.base_embedding().preimage(g.pow(8));
    ASSERT_TRUE(norm.has_value());
    EXPECT_EQ(multiplicative_order(*norm), 6u);  // norm of a generator generates F_7^*
    const ResidueClass r = corestrict(g, kappa.base_embedding(), 3, zeta);
    EXPECT_EQ(r, power_residue_character(*norm, 3, zeta));
    EXPECT_NE(r.value, 0u);
    // multiplicativity by sampling
    for (u64 i = 1; i < 49; i += 5)
        for (u64 j = 1; j < 49; j += 7) {
            const auto a = kappa.field().element(i), b = kappa.field().element(j);
            EXPECT_EQ(corestrict(a * b, kappa.base_embedding(), 3, zeta),
                      corestrict(a, kappa.base_embedding(), 3, zeta) + corestrict(b, kappa.base_embedding(), 3, zeta));
        }
}

TEST(CorestrictTest, NthPowersAndInclusionTimesDegree) {
    std::mt19937_64 rng(13);
    const FiniteField F = FiniteField::prime(13);
    for (int deg : {2, 3}) {
        const ResidueField kappa(Place::finite(random::monic_irreducible(F, deg, rng)));
        for (u64 n : {2, 3, 4, 6}) {
            const FieldElement zeta = primitive_root_of_unity(F, n);
            for (u64 x = 1; x < 13; ++x) {
                const auto c = F.element(x);
                EXPECT_EQ(corestrict(kappa.base_embedding()(c), kappa.base_embedding(), n, zeta),
                          power_residue_character(c, n, zeta).scaled(deg));
            }
            for (int i = 0; i < 20; ++i) {
                const auto u = random::nonzero_element(kappa.field(), rng);
                EXPECT_EQ(corestrict(u.pow(n), kappa.base_embedding(), n, zeta).value, 0u);
            }
        }
    }
    EXPECT_THROW(corestrict(F.zero(), Embedding::identity(F), 2, F.from_int(12)), DomainError);
}

TEST(EmbeddingTest, IsARingHomomorphism) {
    std::mt19937_64 rng(17);
    const FiniteField small = finite_field_of_order(9), big = finite_field_of_order(729);
    const Embedding e(small, big);
    for (int i = 0; i < 100; ++i) {
        const auto a = random::element(small, rng), b = random::element(small, rng);
        EXPECT_EQ(e(a * b), e(a) * e(b));
        EXPECT_EQ(e(a + b), e(a) + e(b));
        EXPECT_EQ(e.preimage(e(a)), a);
    }
    EXPECT_THROW(Embedding(finite_field_of_order(25), finite_field_of_order(125)), DomainError);
}

TEST(ParseTest, PolynomialGrammar) {
    const FiniteField F = FiniteField::prime(5);
    EXPECT_EQ(parse_poly("t^2+3*t+1", F), P(F, {1, 3, 1}));
    EXPECT_EQ(parse_poly("2t - 7", F), P(F, {-7, 2}));
    EXPECT_EQ(parse_poly("(t+1)^2", F), P(F, {1, 2, 1}));
    EXPECT_EQ(parse_ratfunc("t^2/(t+1)", F), RatFunc(P(F, {0, 0, 1}), P(F, {1, 1})));
    EXPECT_EQ(parse_ratfunc("t^-1", F), RatFunc(P(F, {1}), P(F, {0, 1})));
    EXPECT_THROW(parse_poly("t^2/(t+1)", F), ParseError);
    EXPECT_THROW(parse_ratfunc("t +", F), ParseError);
    EXPECT_THROW(parse_ratfunc("x", F), ParseError);
    EXPECT_THROW(parse_ratfunc("1/(t-t)", F), ParseError);
}
