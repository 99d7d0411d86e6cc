#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ffdef/galois.hpp"

using namespace ffdef;

TEST_CASE("field construction") {
    auto f3 = Field::make(3, 1);
    CHECK(f3->size() == 3);

    auto f4 = Field::make(2, 2, std::vector<int>{1, 1, 1});
    CHECK(f4->size() == 4);

    // first irreducible quadratic over F_3 in ascending coefficient order is x^2+1
    auto f9 = Field::make(3, 2);
    CHECK(f9->modulus() == std::vector<int>{1, 0, 1});

    CHECK_THROWS_AS(Field::make(4, 1), error);
    CHECK_THROWS_AS(Field::make(2, 2, std::vector<int>{0, 0, 1}), error); // x^2 reducible
    try {
        Field::make(6, 1);
    } catch (const error& e) {
        CHECK(e.code() == errc::non_prime_characteristic);
    }
}

TEST_CASE("field axioms exhaustively for |F| <= 25") {
    for (auto [p, s] : {std::pair{2, 1}, {3, 1}, {5, 1}, {2, 2}, {3, 2}, {5, 2}, {2, 3}, {2, 4}}) {
        auto f = Field::make(p, s);
        if (f->size() > 25) continue;
        int n = f->size();
        for (int a = 0; a < n; ++a) {
            FElem x = f->elem(a);
            CHECK(x + f->zero() == x);
            CHECK(x * f->one() == x);
            if (a) CHECK(x * x.inv() == f->one());
            CHECK(x.frobenius(s) == x); // x^(p^s) = x
            for (int b = 0; b < n; ++b) {
                FElem y = f->elem(b);
                CHECK(x + y == y + x);
                CHECK(x * y == y * x);
                CHECK((x + y).frobenius() == x.frobenius() + y.frobenius());
                for (int c = 0; c < n; ++c) {
                    FElem z = f->elem(c);
                    CHECK((x + y) + z == x + (y + z));
                    CHECK((x * y) * z == x * (y * z));
                    CHECK(x * (y + z) == x * y + x * z);
                }
            }
        }
    }
}

TEST_CASE("q-th powers") {
    auto f3 = Field::make(3, 1);
    CHECK_FALSE(f3->is_qth_power(f3->from_int(2), 2));
    CHECK(f3->is_qth_power(f3->one(), 2));

    auto f5 = Field::make(5, 1);
    CHECK(f5->is_qth_power(f5->from_int(4), 2));
    CHECK_FALSE(f5->is_qth_power(f5->from_int(2), 2));

    // against exhaustive enumeration for fields up to 81 elements
    for (auto [p, s] : {std::pair{2, 2}, {3, 2}, {5, 1}, {3, 4}, {2, 4}}) {
        auto f = Field::make(p, s);
        for (int q : {2, 3}) {
            for (int a = 1; a < f->size(); ++a) {
                bool found = false;
                for (int x = 1; x < f->size() && !found; ++x)
                    if (f->elem(x).pow(q) == f->elem(a)) found = true;
                CHECK(f->is_qth_power(f->elem(a), q) == found);
            }
        }
    }
}

TEST_CASE("roots of unity") {
    auto f3 = Field::make(3, 1);
    CHECK(f3->primitive_root_of_unity(2) == f3->from_int(2));

    auto f4 = Field::make(2, 2, std::vector<int>{1, 1, 1});
    FElem xi = f4->primitive_root_of_unity(3);
    CHECK(xi.pow(3).is_one());
    CHECK_FALSE(xi.is_one());

    auto f5 = Field::make(5, 1);
    CHECK_THROWS_AS(f5->primitive_root_of_unity(3), error);
}

TEST_CASE("subfield embedding is a ring homomorphism picking the least root") {
    auto f3 = Field::make(3, 1);
    auto f9 = Field::make(3, 2);
    Embedding e(f3, f9);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            CHECK(e(f3->elem(a) + f3->elem(b)) == e(f3->elem(a)) + e(f3->elem(b)));
            CHECK(e(f3->elem(a) * f3->elem(b)) == e(f3->elem(a)) * e(f3->elem(b)));
        }

    auto f4 = Field::make(2, 2);
    auto f16 = Field::make(2, 4);
    Embedding e2(f4, f16);
    FElem g = f4->elem(2);
    CHECK(e2(g * g + g) == e2(g) * e2(g) + e2(g)); // x^2+x+1 = 0 transported
    // image satisfies the small modulus
    const auto& m = f4->modulus();
    FElem acc = f16->zero(), xp = f16->one();
    for (size_t k = 0; k < m.size(); ++k) {
        acc = acc + xp * f16->from_int(m[k]);
        xp = xp * e2(g);
    }
    CHECK(acc.is_zero());
}

TEST_CASE("frobenius is an automorphism") {
    auto f8 = Field::make(2, 3);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            FElem x = f8->elem(a), y = f8->elem(b);
            CHECK((x * y).frobenius() == x.frobenius() * y.frobenius());
            CHECK((x + y).frobenius() == x.frobenius() + y.frobenius());
        }
}
