#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ydlab/group.hpp"

using namespace ydlab;

namespace {
GroupPtr share(FiniteGroup g) { return std::make_shared<FiniteGroup>(std::move(g)); }
}  // namespace

TEST_CASE("group construction verifies the table") {
    GroupPtr z6 = share(FiniteGroup::cyclic(6));
    CHECK(z6->order() == 6);
    CHECK(z6->mul(4, 5) == 3);
    CHECK(z6->inv(2) == 4);
    GroupPtr s3 = share(FiniteGroup::symmetric3());
    CHECK(s3->order() == 6);
    GroupPtr d4 = share(FiniteGroup::dihedral4());
    CHECK(d4->order() == 8);
    // non-associative table rejected
    std::vector<std::vector<int>> bad = {{0, 1}, {1, 1}};
    CHECK_THROWS_AS(FiniteGroup::from_table("bad", bad, 0), Error);
}

TEST_CASE("s3 is nonabelian, d4 is nonabelian") {
    GroupPtr s3 = share(FiniteGroup::symmetric3());
    bool noncomm = false;
    for (int a = 0; a < 6 && !noncomm; ++a)
        for (int b = 0; b < 6; ++b)
            if (s3->mul(a, b) != s3->mul(b, a)) {
                noncomm = true;
                break;
            }
    CHECK(noncomm);
}

TEST_CASE("fusion maps verify isomorphism structure") {
    GroupPtr z6 = share(FiniteGroup::cyclic(6));
    FusionMap id = FusionMap::identity(z6);
    CHECK(id.fwd(3) == 3);
    // x -> 5x mod 6 is an automorphism of Z6
    FusionMap neg = FusionMap::make(z6, z6, {0, 5, 4, 3, 2, 1});
    CHECK(neg.fwd(2) == 4);
    CHECK(neg.bwd(4) == 2);
    CHECK(neg.inverted().fwd(4) == 2);
    CHECK(neg.then(neg).fwd(2) == 2);
    // x -> x+1 is not a homomorphism
    CHECK_THROWS_AS(FusionMap::make(z6, z6, {1, 2, 3, 4, 5, 0}), Error);
    // no isomorphism between groups of different order -> EmptyHom
    GroupPtr z2 = share(FiniteGroup::cyclic(2));
    try {
        FusionMap::make(z6, z2, {0, 1, 0, 1, 0, 1});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::EmptyHom);
    }
    GroupPtr s3 = share(FiniteGroup::symmetric3());
    FusionMap inner = FusionMap::inner(s3, 1);
    CHECK(inner.fwd(s3->unit()) == s3->unit());
}

TEST_CASE("pair group product, inverse and conjugation are coherent") {
    GroupPtr s3 = share(FiniteGroup::symmetric3());
    FusionMap j = FusionMap::inner(s3, 1);
    GradedPair e{s3->unit(), s3->unit()};
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            GradedPair p{a, b};
            CHECK(pair_product(p, pair_inverse(p, j), j) == e);
            CHECK(pair_product(pair_inverse(p, j), p, j) == e);
            CHECK(pair_product(p, e, j) == p);
            CHECK(pair_product(e, p, j) == p);
            // closed conjugation formula agrees with a * p * a^-1
            GradedPair a2{(a + 1) % 6, (b + 2) % 6};
            CHECK(conjugate_grading(a2, p, j) ==
                  pair_product(a2, pair_product(p, pair_inverse(a2, j), j), j));
        }
}

TEST_CASE("system axiom suite passes exhaustively for z6, s3, d4 chains") {
    GroupPtr z6 = share(FiniteGroup::cyclic(6));
    GroupPtr s3 = share(FiniteGroup::symmetric3());
    GroupPtr d4 = share(FiniteGroup::dihedral4());
    {
        GradedGroupSystem sys("z6", {z6}, {});
        VerificationReport rep = verify_system_axioms(sys, 0);
        CHECK(rep.passed());
    }
    {
        GradedGroupSystem sys("s3", {s3, s3, s3},
                              {FusionMap::inner(s3, 1), FusionMap::inner(s3, 2)});
        VerificationReport rep = verify_system_axioms(sys, 0);
        for (const auto& c : rep.checks) {
            INFO(c.label);
            CHECK(c.passed);
        }
    }
    {
        GradedGroupSystem sys("d4", {d4, d4}, {FusionMap::inner(d4, 3)});
        CHECK(verify_system_axioms(sys, 0).passed());
    }
}

TEST_CASE("large groups fall back to seeded sampling deterministically") {
    GroupPtr z13 = share(FiniteGroup::cyclic(13));
    GradedGroupSystem sys("z13", {z13}, {});
    VerificationReport a = verify_system_axioms(sys, 7);
    VerificationReport b = verify_system_axioms(sys, 7);
    CHECK(a.passed());
    CHECK(a.to_text() == b.to_text());
}

TEST_CASE("a corrupted fusion map is rejected before any axiom runs") {
    GroupPtr s3 = share(FiniteGroup::symmetric3());
    // swapping two non-conjugate images breaks the homomorphism law
    FusionMap good = FusionMap::inner(s3, 1);
    std::vector<int> images = good.images();
    std::swap(images[0], images[1]);
    CHECK_THROWS_AS(FusionMap::make(s3, s3, images), Error);
}
