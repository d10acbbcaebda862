#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ydlab/linmap.hpp"

using namespace ydlab;

TEST_CASE("rational parsing canonicalizes and rejects junk") {
    CHECK(parse_scalar("2/4") == Scalar(1, 2));
    CHECK(scalar_str(parse_scalar("2/4")) == "1/2");
    CHECK(parse_scalar("-6/4") == Scalar(-3, 2));
    CHECK(parse_scalar("7") == Scalar(7));
    CHECK(scalar_str(Scalar(5)) == "5");
    CHECK_THROWS_AS(parse_scalar("1/0"), Error);
    CHECK_THROWS_AS(parse_scalar("1.5"), Error);
    CHECK_THROWS_AS(parse_scalar("a/b"), Error);
    CHECK_THROWS_AS(parse_scalar(""), Error);
    CHECK_THROWS_AS(parse_scalar("1/-2"), Error);
}

TEST_CASE("flip permutes the row-major flat index") {
    // e_i (x) e_j of a 2 (x) 3 space sits at flat 3i+j and must land at
    // flat 2j+i of the 3 (x) 2 space.
    LinMap fl = LinMap::flip(2, 3);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j)
            for (int r = 0; r < 6; ++r)
                CHECK(fl.at(r, 3 * i + j) == Scalar(r == 2 * j + i ? 1 : 0));
    CHECK(compose(LinMap::flip(3, 2), fl).is_identity());
}

TEST_CASE("kron follows the first-factor-slowest convention and associates") {
    LinMap a = LinMap::from_rows({{"1", "2"}, {"3", "4"}});
    LinMap b = LinMap::from_rows({{"0", "1"}, {"1", "0"}});
    LinMap k = kron(a, b);
    CHECK(k.cod() == 4);
    CHECK(k.dom() == 4);
    // block (i,j) of kron is a(i,j) * b
    CHECK(k.at(0, 1) == Scalar(1));  // a(0,0)*b(0,1)
    CHECK(k.at(0, 3) == Scalar(2));  // a(0,1)*b(0,1)
    CHECK(k.at(3, 0) == Scalar(3));  // a(1,0)*b(1,0)
    LinMap c = LinMap::from_rows({{"1", "1"}, {"0", "1"}});
    CHECK(kron(kron(a, b), c) == kron(a, kron(b, c)));
    CHECK(kron(a, b, c) == kron(a, kron(b, c)));
}

TEST_CASE("compose checks shapes") {
    LinMap a(2, 3), b(3, 5);
    CHECK_NOTHROW(compose(a, b));
    CHECK_THROWS_AS(compose(b, a), Error);
}

TEST_CASE("exact inverse round-trips and rejects singular input") {
    LinMap m = LinMap::from_rows({{"1/2", "1", "0"}, {"0", "2/3", "1"}, {"1", "0", "1/5"}});
    LinMap inv = m.inverse();
    CHECK(compose(m, inv).is_identity());
    CHECK(compose(inv, m).is_identity());
    LinMap sing = LinMap::from_rows({{"1", "2"}, {"2", "4"}});
    CHECK_THROWS_AS(sing.inverse(), Error);
    CHECK_THROWS_AS(LinMap(2, 3).inverse(), Error);
}

TEST_CASE("first_difference reports the first differing coordinate") {
    LinMap a = LinMap::identity(3);
    LinMap b = LinMap::identity(3);
    CHECK(!LinMap::first_difference(a, b).has_value());
    b.at(1, 2) = Scalar(7, 3);
    auto d = LinMap::first_difference(a, b);
    REQUIRE(d.has_value());
    CHECK(d->row == 1);
    CHECK(d->col == 2);
    CHECK(d->lhs == "0");
    CHECK(d->rhs == "7/3");
    auto shape = LinMap::first_difference(a, LinMap(2, 3));
    REQUIRE(shape.has_value());
    CHECK(shape->row == -1);
}

TEST_CASE("matrix serialization round-trips") {
    LinMap m = LinMap::from_rows({{"1/2", "-3"}, {"0", "22/7"}});
    CHECK(LinMap::from_rows(m.to_rows()) == m);
    CHECK_THROWS_AS(LinMap::from_rows({{"1", "2"}, {"3"}}), Error);  // ragged
}

TEST_CASE("scalar and arithmetic helpers") {
    LinMap a = LinMap::from_rows({{"1", "2"}, {"3", "4"}});
    LinMap two = a * Scalar(2);
    CHECK(two.at(1, 1) == Scalar(8));
    CHECK((a + a) == two);
    CHECK(LinMap::scalar(Scalar(5, 2)).at(0, 0) == Scalar(5, 2));
}
