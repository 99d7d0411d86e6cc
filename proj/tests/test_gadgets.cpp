#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ffdef/gadgets.hpp"

using namespace ffdef;

namespace {

RatFunc rf(const FieldPtr& f, std::vector<long long> num, std::vector<long long> den = {1}) {
    return RatFunc(Poly::from_ints(f, num), Poly::from_ints(f, den));
}

} // namespace

TEST_CASE("ppe spec examples over F_3 at infinity") {
    auto f3 = Field::make(3, 1);
    Place inf = Place::infinity(f3);
    RatFunc w = rf(f3, {0, 1});

    auto d1 = ppe_decide(rf(f3, {0, 0, 0, 1}), w, inf, 10);
    CHECK(d1.semantic);
    CHECK(d1.k == 1);
    REQUIRE(d1.search.has_value());
    CHECK(*d1.search);

    auto d2 = ppe_decide(rf(f3, {0, 0, 1}), w, inf, 10);
    CHECK_FALSE(d2.semantic);
    REQUIRE(d2.search.has_value());
    CHECK_FALSE(*d2.search);

    // f = w demands k > 0: both paths refuse
    auto d3 = ppe_decide(w, w, inf, 10);
    CHECK_FALSE(d3.semantic);
    REQUIRE(d3.search.has_value());
    CHECK_FALSE(*d3.search);
}

TEST_CASE("ppe paths agree for f = t^k, k <= 9, over F_2 and F_3") {
    for (int p : {2, 3}) {
        auto F = Field::make(p, 1);
        Place inf = Place::infinity(F);
        RatFunc w = rf(F, {0, 1});
        for (int k = 1; k <= 9; ++k) {
            std::vector<long long> mono(k + 1, 0);
            mono[k] = 1;
            auto d = ppe_decide(rf(F, mono), w, inf, 12);
            bool is_ppow = (p == 2 && (k == 2 || k == 4 || k == 8)) || (p == 3 && (k == 3 || k == 9));
            CHECK(d.semantic == is_ppow);
            REQUIRE(d.search.has_value());
            CHECK(*d.search == is_ppow);
        }
    }
}

TEST_CASE("ppe ring discipline") {
    auto f3 = Field::make(3, 1);
    Place inf = Place::infinity(f3);
    CHECK_THROWS_AS(ppe_decide(rf(f3, {1}, {0, 1}), rf(f3, {0, 1}), inf), error);   // f outside the ring
    CHECK_THROWS_AS(ppe_decide(rf(f3, {0, 1}), rf(f3, {2}), inf), error);           // w a unit
    // finite place: the ring has no nonconstant polynomials
    Place pt = Place::finite(Poly::x(f3));
    RatFunc w = rf(f3, {1, 1}, {0, 1}); // (t+1)/t: pole only at (t), zero at (t+1)
    RatFunc f = w.frobenius_pow(1);
    auto d = ppe_decide(f, w, pt, 4);
    CHECK(d.semantic);
    REQUIRE(d.search.has_value());
    CHECK(*d.search);
}

TEST_CASE("sppe spec examples") {
    auto f3 = Field::make(3, 1);
    Place inf = Place::infinity(f3);
    auto r = sppe_decide(rf(f3, {0, 1}), rf(f3, {1, 1}), inf);
    REQUIRE(r.has_value());
    CHECK(r->s == 1);
    CHECK(r->h == rf(f3, {0, 0, 0, 1}));
    CHECK(r->f == rf(f3, {1, 1}).frobenius_pow(1));
    // degenerate: x = -1 makes y constant
    CHECK_THROWS_AS(sppe_decide(rf(f3, {0, 1}), rf(f3, {2}), inf), error);
}

TEST_CASE("expdiv spec examples and equivalence") {
    auto f3 = Field::make(3, 1);
    RatFunc g = rf(f3, {0, 1});
    CHECK(expdiv_decide(g, 2, 4));
    CHECK_FALSE(expdiv_decide(g, 2, 3));
    for (int s = 1; s <= 6; ++s) CHECK(expdiv_decide(g, 1, s));
    auto f2 = Field::make(2, 1);
    RatFunc g2 = rf(f2, {1, 1});
    for (int z = 1; z <= 4; ++z)
        for (int s = 1; s <= 6; ++s) CHECK(expdiv_decide(g2, z, s) == (s % z == 0));
    CHECK_THROWS_AS(expdiv_decide(rf(f3, {2}), 2, 4), error);
}

TEST_CASE("sppef semantic decisions") {
    auto f3 = Field::make(3, 1);
    RatFunc x = rf(f3, {0, 1}), f = rf(f3, {1, 1});
    CHECK(sppef_decide(x, x.frobenius_pow(1), f, f.frobenius_pow(1)) == 1);
    CHECK(sppef_decide(x, x, f, f) == 0);
    CHECK_FALSE(sppef_decide(x, x.frobenius_pow(1), f, f.frobenius_pow(2)).has_value());
}

TEST_CASE("sppef witness system: plant, check, perturb") {
    for (int p : {2, 3}) {
        auto F = Field::make(p, 1);
        RatFunc x = rf(F, {0, 1}), f = rf(F, {1, 1, 1}), t = rf(F, {0, 1});
        SppefWitness W = build_sppef_witness(x, f, t, 2);
        CHECK(check_sppef_witness(W));
        SppefWitness bad = W;
        bad.Y[0] = bad.Y[0] + RatFunc::one(bad.constants);
        CHECK_FALSE(check_sppef_witness(bad));
    }
}

TEST_CASE("frobenius ratio spec examples") {
    auto f3 = Field::make(3, 1);
    SUBCASE("f = t^2, s=1, plain: t^3 + t with no finite poles") {
        auto R = frobenius_ratio(rf(f3, {0, 0, 1}), 1, 1);
        CHECK(R.value == rf(f3, {0, 1, 0, 1}));
        CHECK(R.finite_poles.empty());
    }
    SUBCASE("f = t gives 1") {
        auto R = frobenius_ratio(rf(f3, {0, 1}), 2, 1);
        CHECK(R.value == RatFunc::one(f3));
    }
    SUBCASE("f = 1/t, q_power = 2: pole of order 7 at (t)") {
        auto R = frobenius_ratio(rf(f3, {1}, {0, 1}), 1, 2);
        REQUIRE(R.finite_poles.size() == 1);
        CHECK(R.finite_poles[0].first == Place::finite(Poly::x(f3)));
        CHECK(R.finite_poles[0].second == 7);
    }
}

TEST_CASE("lemma: polynomials have polynomial Frobenius ratios (sampled)") {
    for (auto [p, s] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
        auto F = Field::make(p, s);
        for (int d = 0; d <= 4; ++d) {
            long long count = poly_count(F, d, false);
            long long step = std::max(1LL, count / 40);
            for (long long i = 0; i < count; i += step) {
                Poly g = poly_from_index(F, d, i, false);
                if (g.is_zero()) continue;
                for (int e = 1; e <= 2; ++e) {
                    auto R = frobenius_ratio(RatFunc(g), e * s, 1);
                    CHECK(R.value.is_polynomial());
                }
            }
        }
    }
}

TEST_CASE("min_period_at") {
    auto f3 = Field::make(3, 1);
    CHECK(min_period_at(Place::finite(Poly::x(f3))) == 1);
    CHECK(min_period_at(Place::finite(Poly::from_ints(f3, {1, 0, 1}))) == 2);
    auto f2 = Field::make(2, 1);
    CHECK(min_period_at(Place::finite(Poly::from_ints(f2, {1, 1, 1}))) == 2);
    CHECK_THROWS_AS(min_period_at(Place::infinity(f3)), error);
    // order is exactly one at the period (rational base field)
    Place P = Place::finite(Poly::from_ints(f3, {1, 0, 1}));
    int sbar = min_period_at(P);
    RatFunc t = rf(f3, {0, 1});
    CHECK(ord_at(t.frobenius_pow(sbar) - t, P) == 1);
}

TEST_CASE("ordminus1 dichotomy at unramified places") {
    auto f3 = Field::make(3, 1);
    RatFunc t = rf(f3, {0, 1});
    std::vector<RatFunc> fs{rf(f3, {1, 1}), rf(f3, {2, 0, 1}), rf(f3, {1, 1, 0, 1}), rf(f3, {2})};
    for_each_monic_irreducible(f3, 2, [&](const Poly& g) {
        Place P = Place::finite(g);
        int sbar = min_period_at(P);
        for (auto& f : fs) {
            if (ord_at(f, P) < 0) continue;
            RatFunc ratio = (f.frobenius_pow(sbar) - f) / (t.frobenius_pow(sbar) - t);
            bool zero_up = (f.frobenius_pow(sbar) - f).is_zero() || ord_at(f.frobenius_pow(sbar) - f, P) > 0;
            if (!zero_up) CHECK(ord_at(ratio, P) == -1);
        }
        return true;
    });
}

TEST_CASE("pthpower3: pole orders of the q-twisted ratio avoid 0 mod q") {
    auto f3 = Field::make(3, 1);
    int q = 2;
    std::vector<RatFunc> fs{rf(f3, {1}, {0, 1}), rf(f3, {1, 1}, {2, 1}), rf(f3, {1}, {1, 0, 1})};
    for (auto& f : fs) {
        for (auto& P : pole_places(f)) {
            if (P.is_infinite()) continue;
            int sbar = min_period_at(P);
            for (int k = 1; k <= 2; ++k) {
                auto R = frobenius_ratio(f, sbar * k, q);
                long long o = ord_at(R.value, P);
                CHECK(o < 0);
                CHECK(o % q != 0);
            }
        }
    }
}

TEST_CASE("rational_subfield_decide") {
    auto f3 = Field::make(3, 1);
    SUBCASE("coefficients in the prime subfield") {
        CHECK(rational_subfield_decide(rf(f3, {1, 0, 1}), 2, 3));
    }
    SUBCASE("hypothesis failure is reported, not guessed") {
        // height too large relative to p^s - C
        CHECK_THROWS_AS(rational_subfield_decide(rf(f3, {1, 1, 1, 0, 0, 0, 0, 0, 0, 1}), 1, 3), error);
    }
    SUBCASE("constants pass") {
        CHECK(rational_subfield_decide(rf(f3, {1}), 2, 3));
    }
    SUBCASE("a genuinely non-rational coefficient trips the verification") {
        auto f9 = Field::make(3, 2);
        FElem u = f9->elem(3); // outside F_3
        REQUIRE(u.frobenius(1) != u);
        RatFunc g(Poly::from_coeffs(f9, {u, f9->one()})); // t + u
        // s = 1: hypotheses hold (no poles in the ratio? compute), conclusion must be false
        try {
            bool ok = rational_subfield_decide(g, 1, 2);
            CHECK_FALSE(ok);
        } catch (const error& e) {
            CHECK(e.code() == errc::hypothesis_failed);
        }
    }
}

TEST_CASE("zeros_below spec examples") {
    auto f3 = Field::make(3, 1);
    SUBCASE("f = t at (t-1): b = 1") {
        auto Z = zeros_below(rf(f3, {0, 1}), 1, Place::finite(Poly::from_ints(f3, {2, 1})));
        REQUIRE(Z.hits.size() == 1);
        CHECK(Z.hits[0].second == Z.extended_constants->one());
    }
    SUBCASE("f = t^2 at (t-1): b = 1") {
        auto Z = zeros_below(rf(f3, {0, 0, 1}), 1, Place::finite(Poly::from_ints(f3, {2, 1})));
        REQUIRE(Z.hits.size() == 1);
        CHECK(Z.hits[0].second == Z.extended_constants->one());
    }
    SUBCASE("degree-2 place: factors in the extension, residues land in F_9") {
        Place P = Place::finite(Poly::from_ints(f3, {1, 0, 1}));
        RatFunc f = rf(f3, {0, 1});
        // ord_P(f^(p^2) - f) = ord_P(t^9 - t) > 0
        auto Z = zeros_below(f, 2, P);
        CHECK(Z.extended_constants->size() == 9);
        CHECK(Z.hits.size() == 2);
        for (auto& [Pi, b] : Z.hits) CHECK(b.frobenius(2) == b);
    }
    SUBCASE("hypothesis failure") {
        CHECK_THROWS_AS(zeros_below(rf(f3, {0, 1}), 1, Place::finite(Poly::from_ints(f3, {1, 0, 1}))), error);
    }
}
