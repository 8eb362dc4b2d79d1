#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "doctest.h"
#include "test_util.hpp"
#include "toricsod/toricfan.hpp"

using namespace toricsod;

namespace {

std::vector<std::pair<long long, long long>> all_types(const Fan& f) {
    std::vector<std::pair<long long, long long>> out;
    for (int i = 0; i < f.size(); ++i) {
        PointData p = singularity_type(f, i);
        out.emplace_back(p.r, p.a);
    }
    return out;
}

}  // namespace

TEST_CASE("fan validation rejects malformed input by kind") {
    CHECK(thrown_kind([] { validate_fan({{1, 0}, {0, 1}}); }) == "TooFewRays");
    CHECK(thrown_kind([] { validate_fan({{2, 0}, {0, 1}, {-1, -1}}); }) ==
          "NonPrimitiveRay");
    CHECK(thrown_kind([] { validate_fan({{0, 0}, {0, 1}, {-1, -1}}); }) ==
          "NonPrimitiveRay");
    // clockwise order
    CHECK(thrown_kind([] { validate_fan({{1, 0}, {0, -1}, {-1, 0}, {0, 1}}); }) ==
          "NonConvexOrClockwise");
    // not complete: closing determinant is negative
    CHECK(thrown_kind([] { validate_fan({{1, 0}, {1, 1}, {1, 2}}); }) ==
          "NonConvexOrClockwise");
    // every consecutive determinant is positive but the rays wrap twice
    CHECK(thrown_kind([] {
              validate_fan({{1, 0}, {-4, 3}, {1, -3}, {1, 3}, {-4, -3}});
          }) == "WrongWinding");
}

TEST_CASE("singularity types of explicit fans") {
    Fan p123 = validate_fan({{1, 1}, {-2, 1}, {1, -1}});
    CHECK((all_types(p123) ==
           std::vector<std::pair<long long, long long>>{{3, 2}, {1, 0}, {2, 1}}));
    for (int i = 0; i < 3; ++i) CHECK(singularity_type(p123, i).gorenstein);

    Fan quadric = validate_fan({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
    for (int i = 0; i < 4; ++i) {
        CHECK(singularity_type(quadric, i).r == 1);
        CHECK(singularity_type(quadric, i).a == 0);
    }

    Fan p2mu3 = validate_fan({{1, 1}, {-2, 1}, {1, -2}});
    CHECK((all_types(p2mu3) ==
           std::vector<std::pair<long long, long long>>{{3, 2}, {3, 2}, {3, 2}}));

    Fan p1p1z2 = validate_fan({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}});
    for (int i = 0; i < 4; ++i) {
        CHECK(singularity_type(p1p1z2, i).r == 2);
        CHECK(singularity_type(p1p1z2, i).a == 1);
    }
}

TEST_CASE("weighted projective planes") {
    Fan w123 = wpp_fan(1, 2, 3);
    CHECK((all_types(w123) ==
           std::vector<std::pair<long long, long long>>{{1, 0}, {2, 1}, {3, 2}}));

    Fan w2311 = wpp_fan(2, 3, 11);
    CHECK((all_types(w2311) ==
           std::vector<std::pair<long long, long long>>{{2, 1}, {3, 1}, {11, 8}}));
    CHECK(singularity_type(w2311, 0).gorenstein);   // (2,1)
    CHECK(!singularity_type(w2311, 1).gorenstein);  // (3,1)
    CHECK(!singularity_type(w2311, 2).gorenstein);  // (11,8)

    Fan w117 = wpp_fan(1, 1, 7);
    CHECK((all_types(w117) ==
           std::vector<std::pair<long long, long long>>{{1, 0}, {1, 0}, {7, 1}}));

    CHECK(thrown_kind([] { wpp_fan(2, 4, 3); }) == "InvalidWeights");
    CHECK(thrown_kind([] { wpp_fan(0, 1, 1); }) == "InvalidWeights");
    CHECK(thrown_kind([] { wpp_fan(-1, 2, 3); }) == "InvalidWeights");
}

TEST_CASE("class group shapes") {
    ClassGroups p123 = divisor_class_groups(validate_fan({{1, 1}, {-2, 1}, {1, -1}}));
    CHECK(p123.cl.free_rank() == 1);
    CHECK(p123.cl.invariant_factors().empty());
    CHECK(p123.pic_rank == 1);

    ClassGroups mu3 = divisor_class_groups(validate_fan({{1, 1}, {-2, 1}, {1, -2}}));
    CHECK(mu3.cl.free_rank() == 1);
    CHECK((mu3.cl.invariant_factors() == std::vector<mpz_class>{3}));
    CHECK(mu3.pic_rank == 1);

    ClassGroups z2 =
        divisor_class_groups(validate_fan({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}));
    CHECK(z2.cl.free_rank() == 2);
    CHECK((z2.cl.invariant_factors() == std::vector<mpz_class>{2}));
    CHECK(z2.pic_rank == 2);

    ClassGroups quad =
        divisor_class_groups(validate_fan({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}));
    CHECK(quad.cl.free_rank() == 2);
    CHECK(quad.cl.invariant_factors().empty());
    CHECK(quad.pic_rank == 2);
}

TEST_CASE("Brauer groups and the order formula") {
    CHECK(brauer_from_rays(validate_fan({{1, 1}, {-2, 1}, {1, -1}})).is_trivial());
    CHECK(brauer_from_rays(wpp_fan(2, 3, 11)).is_trivial());

    FgAbelianGroup mu3 = brauer_from_rays(validate_fan({{1, 1}, {-2, 1}, {1, -2}}));
    CHECK(mu3.free_rank() == 0);
    CHECK((mu3.invariant_factors() == std::vector<mpz_class>{3}));

    FgAbelianGroup z2 =
        brauer_from_rays(validate_fan({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}));
    CHECK((z2.invariant_factors() == std::vector<mpz_class>{2}));

    // |Br| = gcd of the fixed-point orders
    std::vector<Fan> fans = {wpp_fan(1, 1, 1), wpp_fan(1, 2, 3),
                             validate_fan({{1, 1}, {-2, 1}, {1, -2}}),
                             validate_fan({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}),
                             validate_fan({{1, 0}, {0, 1}, {-1, 0}, {0, -1}})};
    for (const Fan& f : fans) {
        long long g = 0;
        for (int i = 0; i < f.size(); ++i) g = std::gcd(g, singularity_type(f, i).r);
        CHECK(brauer_from_rays(f).torsion_order() == zz(g));
    }
}

TEST_CASE("Br(X) is the Ext^1 torsion of Cl(X)") {
    std::vector<Fan> fans = {wpp_fan(1, 2, 3), wpp_fan(2, 3, 11),
                             validate_fan({{1, 1}, {-2, 1}, {1, -2}}),
                             validate_fan({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}),
                             validate_fan({{1, 0}, {0, 1}, {-1, 0}, {0, -1}})};
    for (const Fan& f : fans)
        CHECK(ext1_torsion(class_group(f)).same_shape(brauer_from_rays(f)));
}

TEST_CASE("divisor classes on projective planes") {
    // plain P^2: all three boundary classes coincide and generate
    Fan p2 = wpp_fan(1, 1, 1);
    FgAbelianGroup cl = class_group(p2);
    GroupElement c0 = ray_divisor_class(p2, cl, 0);
    CHECK((c0 == ray_divisor_class(p2, cl, 1)));
    CHECK((c0 == ray_divisor_class(p2, cl, 2)));
    CHECK(c0.free_part.size() == 1);
    CHECK((c0.free_part[0] == 1 || c0.free_part[0] == -1));

    // weighted case: degrees are (w2, w3, w1) up to one overall sign
    for (auto [w1, w2, w3] : {std::tuple<long long, long long, long long>{1, 2, 3},
                              {2, 3, 11}, {1, 1, 7}}) {
        Fan f = wpp_fan(w1, w2, w3);
        FgAbelianGroup g = class_group(f);
        std::vector<mpz_class> deg;
        for (int i = 0; i < 3; ++i) {
            GroupElement c = ray_divisor_class(f, g, i);
            REQUIRE(c.free_part.size() == 1);
            deg.push_back(c.free_part[0]);
        }
        mpz_class s = deg[0] > 0 ? 1 : -1;
        CHECK(deg[0] == s * zz(w2));
        CHECK(deg[1] == s * zz(w3));
        CHECK(deg[2] == s * zz(w1));
        CHECK(sgn(deg[1]) == sgn(deg[0]));
        CHECK(sgn(deg[2]) == sgn(deg[0]));
    }
}

TEST_CASE("analysis is invariant under rotating the ray list") {
    std::vector<Ray> rays = {{1, 1}, {-2, 1}, {1, -2}};
    Fan base = validate_fan(rays);
    std::rotate(rays.begin(), rays.begin() + 1, rays.end());
    Fan rot = validate_fan(rays);

    auto a = all_types(base);
    auto b = all_types(rot);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK((a == b));
    CHECK(class_group(base).same_shape(class_group(rot)));
    CHECK(brauer_from_rays(base).same_shape(brauer_from_rays(rot)));
    CHECK(divisor_class_groups(base).pic_rank == divisor_class_groups(rot).pic_rank);
}
