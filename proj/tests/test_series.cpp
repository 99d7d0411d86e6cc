#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ffdef/series.hpp"

using namespace ffdef;

namespace {

RatFunc rf(const FieldPtr& f, std::vector<long long> num, std::vector<long long> den = {1}) {
    return RatFunc(Poly::from_ints(f, num), Poly::from_ints(f, den));
}

} // namespace

TEST_CASE("expansion round trips orders") {
    auto f3 = Field::make(3, 1);
    std::vector<Place> places{Place::infinity(f3), Place::finite(Poly::x(f3)),
                              Place::finite(Poly::from_ints(f3, {1, 1})),
                              Place::finite(Poly::from_ints(f3, {1, 0, 1}))};
    std::vector<RatFunc> xs{rf(f3, {0, 1}), rf(f3, {1, 2, 1}, {0, 1}), rf(f3, {1}, {0, 0, 1}),
                            rf(f3, {2, 0, 0, 1}, {1, 1}), rf(f3, {2})};
    for (auto& P : places) {
        Completion C(P);
        for (auto& x : xs) {
            LaurentSeries s = C.expand(x, 12);
            CHECK(C.ord(s) == ord_at(x, P));
        }
        // additivity of expansion
        LaurentSeries s = C.expand(xs[0] + xs[1], 10);
        LaurentSeries t = C.add(C.expand(xs[0], 10), C.expand(xs[1], 10));
        CHECK(C.known_zero(C.sub(s, t)));
        // multiplicativity
        LaurentSeries m = C.expand(xs[0] * xs[3], 8);
        LaurentSeries mm = C.mul(C.expand(xs[0], 10), C.expand(xs[3], 10));
        CHECK(C.known_zero(C.sub(m, mm)));
    }
}

TEST_CASE("series inverse") {
    auto f3 = Field::make(3, 1);
    Completion C(Place::finite(Poly::x(f3)));
    RatFunc x = rf(f3, {1, 2, 0, 1}, {1, 1});
    LaurentSeries s = C.expand(x, 10);
    LaurentSeries prod = C.mul(s, C.inv(s));
    LaurentSeries one = C.expand(RatFunc::one(f3), 8);
    CHECK(C.known_zero(C.sub(prod, one)));
}

TEST_CASE("qth root by Newton") {
    auto f3 = Field::make(3, 1);
    Place P = Place::finite(Poly::from_ints(f3, {2, 1})); // t - 1
    Completion C(P);
    RatFunc d = rf(f3, {0, 1}); // t, residue 1 at t-1: square root starts at 1
    LaurentSeries ds = C.expand(d, 14);
    LaurentSeries r = C.qth_root(ds, 2, Poly::from_ints(f3, {1}));
    CHECK(C.known_zero(C.sub(C.mul(r, r), ds)));
}

TEST_CASE("hensel lift of the norm form: spec examples") {
    SUBCASE("z = 1 is exact at (0,1)") {
        auto f3 = Field::make(3, 1);
        Place P = Place::finite(Poly::x(f3));
        auto H = hensel_lift_norm_form(rf(f3, {0, 1}), RatFunc::one(f3), P, 10);
        Completion C(P);
        CHECK(C.known_zero(H.x0));
        CHECK(H.residual_ord >= 10);
        CHECK(H.steps == 0);
    }
    SUBCASE("p=2, a=t, z=1+t^3 at (t) reaches order 8") {
        auto f2 = Field::make(2, 1);
        Place P = Place::finite(Poly::x(f2));
        auto H = hensel_lift_norm_form(rf(f2, {0, 1}), rf(f2, {1, 0, 0, 1}), P, 8);
        CHECK(H.residual_ord >= 8);
    }
    SUBCASE("hypothesis violation p=3, ord(z-1)=1") {
        auto f3 = Field::make(3, 1);
        Place P = Place::finite(Poly::x(f3));
        CHECK_THROWS_AS(hensel_lift_norm_form(rf(f3, {0, 1}), rf(f3, {1, 1}), P, 8), error);
    }
}

TEST_CASE("hensel: residual reaches precision 16 on random admissible instances") {
    std::mt19937 rng(777);
    for (int i = 0; i < 20; ++i) {
        int p = (i % 2) ? 2 : 3;
        auto f = Field::make(p, 1);
        Place P = Place::finite(Poly::x(f));
        // a with ord 1..2 at (t), z = 1 + t^k u with k > 2(p-1) ord a
        int da = 1 + int(rng() % 2);
        RatFunc a = RatFunc(Poly::x(f).pow(da) + Poly::x(f).pow(da + 1) * Poly::constant(f->from_int(rng() % p)));
        int k = 2 * (p - 1) * da + 1 + int(rng() % 3);
        RatFunc z = RatFunc::one(f) + RatFunc(Poly::x(f).pow(k) * Poly::constant(f->from_int(1 + rng() % (p - 1))));
        auto H = hensel_lift_norm_form(a, z, P, 16);
        CHECK(H.residual_ord >= 16);
        // each Newton step at least doubles residual order minus 2 ord(derivative)
        CHECK(H.steps <= 12);
    }
}
