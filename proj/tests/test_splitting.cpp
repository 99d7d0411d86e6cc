#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ffdef/residue_tower.hpp"
#include "ffdef/splitting.hpp"

using namespace ffdef;

namespace {

RatFunc rf(const FieldPtr& f, std::vector<long long> num, std::vector<long long> den = {1}) {
    return RatFunc(Poly::from_ints(f, num), Poly::from_ints(f, den));
}

// brute-force oracle: factor T^q - u over the residue field by root counting
SplittingType kummer_oracle(const RatFunc& b, int q, const Place& P) {
    long long v = ord_at(b, P);
    if (v % q != 0) return SplittingType::Ramified;
    ResidueField R(P);
    Poly u = unit_residue_at(b, P);
    long long n = R.size();
    for (long long i = 1; i < n; ++i) {
        Poly x = R.element(i);
        if (R.sub(R.pow(x, q), u).is_zero()) return SplittingType::Split;
    }
    return SplittingType::Inert;
}

} // namespace

TEST_CASE("kummer classification spec examples") {
    auto f3 = Field::make(3, 1);
    RatFunc b = rf(f3, {0, 1}); // t
    CHECK(classify_kummer(b, 2, Place::finite(Poly::x(f3))) == SplittingType::Ramified);
    CHECK(classify_kummer(b, 2, Place::finite(Poly::from_ints(f3, {1, 1}))) == SplittingType::Inert);
    CHECK(classify_kummer(b, 2, Place::finite(Poly::from_ints(f3, {2, 1}))) == SplittingType::Split);

    CHECK_THROWS_AS(classify_kummer(rf(f3, {0, 0, 1}), 2, Place::infinity(f3)), error); // t^2 is a square
    auto f2 = Field::make(2, 1);
    CHECK_THROWS_AS(classify_kummer(rf(f2, {0, 1}), 2, Place::infinity(f2)), error); // no xi_2 in char 2
}

TEST_CASE("kummer unit-part cases at nonzero order divisible by q") {
    auto f3 = Field::make(3, 1);
    Place pt = Place::finite(Poly::x(f3));
    // b = 2 t^2 (1 + t): at (t), ord = 2, unit part 2(1+t) -> residue 2, a non-square
    RatFunc b = rf(f3, {0, 0, 2, 2});
    CHECK(classify_kummer(b, 2, pt) == SplittingType::Inert);
    // b = t^2 (1 + t): unit residue 1: splits
    CHECK(classify_kummer(rf(f3, {0, 0, 1, 1}), 2, pt) == SplittingType::Split);
}

TEST_CASE("kummer oracle equivalence on small inventory") {
    for (auto [p, s, q] : {std::tuple{3, 1, 2}, {5, 1, 2}, {2, 2, 3}}) {
        auto f = Field::make(p, s);
        std::vector<RatFunc> bs;
        bs.push_back(rf(f, {0, 1}));
        bs.push_back(rf(f, {1, 1}));
        bs.push_back(rf(f, {0, 0, 1, 1}));
        bs.push_back(rf(f, {2, 1}, {0, 1}));
        bs.push_back(rf(f, {1}, {0, 0, 1}));
        for_each_monic_irreducible(f, 2, [&](const Poly& g) {
            Place P = Place::finite(g);
            for (auto& b : bs) {
                if (is_qth_power_in_k(b, q)) continue;
                CHECK(classify_kummer(b, q, P) == kummer_oracle(b, q, P));
            }
            return true;
        });
    }
}

TEST_CASE("artin-schreier classification spec examples") {
    auto f2 = Field::make(2, 1);
    RatFunc a = rf(f2, {0, 1}); // t
    CHECK(classify_artin_schreier(a, Place::infinity(f2)) == SplittingType::Split);
    CHECK(classify_artin_schreier(a, Place::finite(Poly::x(f2))) == SplittingType::Ramified);
    CHECK(classify_artin_schreier(a, Place::finite(Poly::from_ints(f2, {1, 1}))) == SplittingType::Inert);
}

TEST_CASE("artin-schreier irreducibility by bounded root search") {
    auto f2 = Field::make(2, 1);
    CHECK(artin_schreier_irreducible_over_k(rf(f2, {1})));    // T^2+T+1 over F_2(t)
    CHECK(artin_schreier_irreducible_over_k(rf(f2, {0, 1}))); // a = t
    auto f4 = Field::make(2, 2);
    // over F_4 the class a=1 has a root (trace of 1 vanishes), so reducible
    CHECK_FALSE(artin_schreier_irreducible_over_k(RatFunc::constant(f4->one())));
}

TEST_CASE("a root in the residue field implies all p roots (shift by multiples of abar)") {
    auto f3 = Field::make(3, 1);
    Place P = Place::finite(Poly::from_ints(f3, {1, 0, 1}));
    ResidueField R(P);
    for (long long i = 1; i < R.size(); ++i) {
        Poly a = R.element(i);
        // count roots of T^3 - a^2 T - 1
        int roots = 0;
        for (long long x = 0; x < R.size(); ++x) {
            Poly t = R.element(x);
            Poly val = R.sub(R.sub(R.pow(t, 3), R.mul(R.pow(a, 2), t)), R.from_constant(f3->one()));
            if (val.is_zero()) ++roots;
        }
        CHECK((roots == 0 || roots == 3));
        CHECK((roots > 0) == R.artin_schreier_has_root(a));
    }
}

TEST_CASE("find_as_generator and its counting property") {
    auto f2 = Field::make(2, 1);
    CHECK(find_as_generator(f2) == f2->one());
    auto f3 = Field::make(3, 1);
    CHECK(find_as_generator(f3) == f3->one());
    auto f4 = Field::make(2, 2);
    FElem a4 = find_as_generator(f4);
    CHECK_FALSE(a4.is_zero());

    // (p^k - 1)/(p - 1) polynomial classes (distinct a^(p-1) values), with
    // pairwise disjoint root sets where nonempty
    for (auto fp : {f2, f3, f4}) {
        int p = fp->p();
        std::vector<int> classes;
        std::vector<std::vector<int>> nonempty_roots;
        for (int i = 1; i < fp->size(); ++i) {
            FElem a = fp->elem(i);
            int cls = a.pow(p - 1).index();
            if (std::find(classes.begin(), classes.end(), cls) != classes.end()) continue;
            classes.push_back(cls);
            std::vector<int> roots;
            for (int x = 0; x < fp->size(); ++x) {
                FElem t = fp->elem(x);
                if ((t.pow(p) - a.pow(p - 1) * t - fp->one()).is_zero()) roots.push_back(x);
            }
            if (!roots.empty()) nonempty_roots.push_back(roots);
        }
        CHECK(int(classes.size()) == (fp->size() - 1) / (p - 1));
        for (size_t i = 0; i < nonempty_roots.size(); ++i)
            for (size_t j = i + 1; j < nonempty_roots.size(); ++j)
                for (int r : nonempty_roots[i])
                    CHECK(std::find(nonempty_roots[j].begin(), nonempty_roots[j].end(), r) ==
                          nonempty_roots[j].end());
    }
}

TEST_CASE("residue towers") {
    auto f3 = Field::make(3, 1);
    Place P = Place::finite(Poly::from_ints(f3, {1, 1}));
    auto L0 = TowerField::leaf(P);
    CHECK(L0->size() == 3);

    // adjoin a square root of the nonresidue 2: minpoly x^2 - 2
    std::vector<TElem> mp{L0->from_int(-2), L0->zero(), L0->one()};
    auto L1 = L0->extend(mp);
    CHECK(L1->size() == 9);
    TElem r = L1->generator();
    CHECK(L1->eq(L1->mul(r, r), L1->from_int(2)));
    // 2 becomes a square upstairs
    CHECK_FALSE(L0->is_qth_power(L0->from_int(2), 2));
    CHECK(L1->is_qth_power(L1->from_int(2), 2));
    // inverse and Fermat
    TElem x = L1->add(r, L1->one());
    CHECK(L1->eq(L1->mul(x, L1->inv(x)), L1->one()));
    CHECK(L1->eq(L1->pow(x, L1->size()), x));

    // second level: adjoin a root of x^2 - r (r itself is not a square in L1:
    // norms down to -2 = 1... verify computationally instead)
    bool r_square = L1->is_qth_power(r, 2);
    if (!r_square) {
        auto L2 = L1->extend({L1->neg(r), L1->zero(), L1->one()});
        CHECK(L2->size() == 81);
        TElem rr = L2->generator();
        CHECK(L2->eq(L2->mul(rr, rr), L2->embed(r)));
        CHECK(L2->is_qth_power(L2->embed(r), 2));
    }

    // Artin-Schreier root existence matches the leaf computation
    ResidueField R(P);
    for (long long i = 1; i < R.size(); ++i) {
        CHECK(L0->artin_schreier_has_root(L0->embed_leaf(R.element(i))) ==
              R.artin_schreier_has_root(R.element(i)));
    }
}
