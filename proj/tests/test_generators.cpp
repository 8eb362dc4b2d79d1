#include <array>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "test_util.hpp"
#include "toricsod/generators.hpp"

using namespace toricsod;

namespace {

ChainDegrees cd(std::vector<long long> ds, std::vector<mpz_class> ls) {
    ChainDegrees c;
    c.ds = std::move(ds);
    c.ls = std::move(ls);
    return c;
}

}  // namespace

TEST_CASE("degree predicates on single-curve chains") {
    CHECK(reflexive_pushforward_test(cd({2}, {0})));
    CHECK(higher_pushforward_vanishes(cd({2}, {0})));
    CHECK(descends_test(cd({2}, {0})));

    // degree 2 cancels the chain self-degree exactly: not certified reflexive
    CHECK(!reflexive_pushforward_test(cd({2}, {2})));
    CHECK(higher_pushforward_vanishes(cd({2}, {2})));
    CHECK(!descends_test(cd({2}, {2})));

    CHECK(reflexive_pushforward_test(cd({2}, {1})));
    CHECK(higher_pushforward_vanishes(cd({2}, {1})));

    CHECK(reflexive_pushforward_test(cd({2}, {-1})));
    CHECK(!higher_pushforward_vanishes(cd({2}, {-1})));

    CHECK(reflexive_pushforward_test(cd({2}, {-2})));
    CHECK(!higher_pushforward_vanishes(cd({2}, {-2})));
}

TEST_CASE("degree predicates on a longer chain and the empty chain") {
    CHECK(reflexive_pushforward_test(cd({3, 2, 4}, {0, 0, 0})));
    CHECK(descends_test(cd({3, 2, 4}, {0, 0, 0})));
    // the zero bundle is not nef against a (-3)-curve
    CHECK(!higher_pushforward_vanishes(cd({3, 2, 4}, {0, 0, 0})));

    CHECK(reflexive_pushforward_test(cd({3, 2, 4}, {2, 0, 2})));
    CHECK(higher_pushforward_vanishes(cd({3, 2, 4}, {2, 0, 2})));
    CHECK(!descends_test(cd({3, 2, 4}, {2, 0, 2})));

    CHECK(reflexive_pushforward_test(cd({3, 2, 4}, {1, 0, 2})));
    CHECK(higher_pushforward_vanishes(cd({3, 2, 4}, {1, 0, 2})));

    ChainDegrees empty;
    CHECK(reflexive_pushforward_test(empty));
    CHECK(higher_pushforward_vanishes(empty));
    CHECK(descends_test(empty));
}

TEST_CASE("closed-form generator degrees on weighted projective planes") {
    CHECK((wpp_generators(1, 2, 3) == std::array<long long, 3>{0, 3, 4}));
    CHECK((wpp_generators(3, 2, 1) == std::array<long long, 3>{-4, -3, 0}));
    CHECK((wpp_generators(2, 3, 11) == std::array<long long, 3>{17, 28, 30}));
    CHECK((wpp_generators(1, 1, 1) == std::array<long long, 3>{-2, -1, 0}));
    CHECK((wpp_generators(1, 1, 2) == std::array<long long, 3>{-2, 0, 1}));

    // third weight 1: the shift vanishes and the degrees close up
    for (long long b = 2; b <= 7; ++b)
        for (long long a = 1; a < b; ++a) {
            if (std::gcd(a, b) != 1) continue;
            CHECK((wpp_generators(b, a, 1) ==
                   std::array<long long, 3>{-b - 1, -b, 0}));
        }

    CHECK(thrown_kind([] { wpp_generators(2, 4, 3); }) == "InvalidWeights");
    CHECK(thrown_kind([] { wpp_generators(0, 1, 1); }) == "InvalidWeights");
    CHECK(thrown_kind([] { wpp_generators(-1, 2, 3); }) == "InvalidWeights");
}

TEST_CASE("generator set on P(1,2,3), fully pinned") {
    Fan f = wpp_fan(1, 2, 3);
    ResolvedSurface s = minimal_resolution(f);
    GeneratorSet g = generator_classes(s);
    REQUIRE(g.classes.size() == 3);
    CHECK((g.ranks == std::vector<long long>{1, 2, 3}));

    FgAbelianGroup cl = class_group(f);
    GroupElement ref = ray_divisor_class(f, cl, 0);  // C_1, degree 2 > 0
    CHECK(rank_one_degree(ref, g.classes[0]) == 0);
    CHECK(rank_one_degree(ref, g.classes[1]) == 3);
    CHECK(rank_one_degree(ref, g.classes[2]) == 4);
    CHECK(rank_one_degree(ref, g.c) == 4);

    CHECK((g.locally_free_at ==
           std::vector<std::vector<bool>>{{true, true, true},
                                          {true, false, true},
                                          {true, true, false}}));
    for (const auto& row : g.reflexive_at)
        for (bool v : row) CHECK(v);

    // telescoping: consecutive differences are boundary classes, and the
    // last generator is the pushforward of the untwisting bundle itself
    CHECK((g.classes[1] - g.classes[0] == ray_divisor_class(f, cl, 1)));
    CHECK((g.classes[2] - g.classes[1] == ray_divisor_class(f, cl, 2)));
    CHECK((g.classes[2] == g.c));
}

TEST_CASE("generator set on P(2,3,11)") {
    Fan f = wpp_fan(2, 3, 11);
    ResolvedSurface s = minimal_resolution(f);
    GeneratorSet g = generator_classes(s);
    CHECK((g.ranks == std::vector<long long>{2, 3, 11}));

    FgAbelianGroup cl = class_group(f);
    GroupElement ref = ray_divisor_class(f, cl, 0);
    std::array<long long, 3> want = wpp_generators(2, 3, 11);
    for (int i = 0; i < 3; ++i)
        CHECK(rank_one_degree(ref, g.classes[i]) == zz(want[i]));

    CHECK((g.classes[1] - g.classes[0] == ray_divisor_class(f, cl, 1)));
    CHECK((g.classes[2] == g.c));

    // every point is singular here, so no generator descends at its own point
    // and the chains after a generator's block contain curves steeper than -2
    CHECK((g.locally_free_at ==
           std::vector<std::vector<bool>>{{false, false, false},
                                          {true, false, false},
                                          {true, true, false}}));
    for (const auto& row : g.reflexive_at)
        for (bool v : row) CHECK(v);
}

TEST_CASE("closed form and resolution computation agree across planes") {
    for (auto [w1, w2, w3] : {std::tuple<long long, long long, long long>{1, 3, 5},
                              {2, 5, 3}, {1, 1, 7}}) {
        Fan f = wpp_fan(w1, w2, w3);
        ResolvedSurface s = minimal_resolution(f);
        GeneratorSet g = generator_classes(s);
        FgAbelianGroup cl = class_group(f);
        GroupElement ref = ray_divisor_class(f, cl, 0);
        std::array<long long, 3> want = wpp_generators(w1, w2, w3);
        REQUIRE(g.classes.size() == 3);
        for (int i = 0; i < 3; ++i)
            CHECK(rank_one_degree(ref, g.classes[i]) == zz(want[i]));
    }
}

TEST_CASE("the Brauer obstruction blocks the generator construction") {
    for (const Fan& f : {validate_fan({{1, 1}, {-2, 1}, {1, -2}}),
                         validate_fan({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}})}) {
        ResolvedSurface s = minimal_resolution(f);
        CHECK(thrown_kind([&] { generator_classes(s); }) == "ObstructionPresent");
    }
}

TEST_CASE("rank-one degrees") {
    Fan p2 = wpp_fan(1, 1, 1);
    FgAbelianGroup cl = class_group(p2);
    GroupElement c0 = ray_divisor_class(p2, cl, 0);
    CHECK(rank_one_degree(c0, c0) == 1);
    CHECK(rank_one_degree(c0, c0.times(5)) == 5);
    CHECK(rank_one_degree(c0, c0.negated()) == -1);
    // flipping the reference flips every degree
    CHECK(rank_one_degree(c0.negated(), c0.times(5)) == -5);
    CHECK(thrown_kind([&] { rank_one_degree(cl.zero(), c0); }) == "InternalCheck");

    Fan quad = validate_fan({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
    FgAbelianGroup cl2 = class_group(quad);
    GroupElement d0 = ray_divisor_class(quad, cl2, 0);
    CHECK(thrown_kind([&] { rank_one_degree(d0, d0); }) == "InternalCheck");
}
