#include "doctest.h"

#include "vpcremona/error.hpp"
#include "vpcremona/surfaces.hpp"

#include <random>

using namespace vpcremona;

TEST_CASE("intersection form") {
    for (int n = 0; n <= 4; ++n) {
        const auto F = SurfaceModel::hirzebruch(n);
        CHECK(intersect(F, {n + 2, 2}, {0, 1}) == 2 - n);
        CHECK(intersect(F, {1, 0}, {1, 0}) == 0);
        CHECK(intersect(F, {0, 1}, {0, 1}) == -n);
    }
    CHECK(intersect(SurfaceModel::plane(), {3}, {3}) == 9);
    CHECK_THROWS_AS(intersect(SurfaceModel::plane(), {3, 1}, {3}), DimensionMismatch);
}

TEST_CASE("intersection form is symmetric and bilinear") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> d(-20, 20);
    for (int i = 0; i < 100; ++i) {
        const auto m = SurfaceModel::hirzebruch(i % 5);
        const DivisorClass a{d(rng), d(rng)}, b{d(rng), d(rng)}, c{d(rng), d(rng)};
        const long k = d(rng);
        CHECK(intersect(m, a, b) == intersect(m, b, a));
        const DivisorClass lin{a[0] + k * c[0], a[1] + k * c[1]};
        CHECK(intersect(m, lin, b) == intersect(m, a, b) + k * intersect(m, c, b));
    }
}

TEST_CASE("canonical classes") {
    CHECK(canonical_class(SurfaceModel::plane()) == DivisorClass{-3});
    CHECK(canonical_class(SurfaceModel::hirzebruch(2)) == DivisorClass{-4, -2});
    CHECK(canonical_class(SurfaceModel::hirzebruch(0)) == DivisorClass{-2, -2});
}

TEST_CASE("anticanonical boundary meets the negative section in 2 - n") {
    for (int n = 0; n <= 6; ++n) {
        const auto m = SurfaceModel::hirzebruch(n);
        const long meet = intersect(m, anticanonical_class(m), {0, 1});
        CHECK(meet == 2 - n);
        CHECK(is_mf_cy_admissible(m) == (meet >= 0));
        CHECK(is_mf_cy_admissible(m) == (n <= 2));
    }
    CHECK(is_mf_cy_admissible(SurfaceModel::plane()));
    CHECK_FALSE(is_mf_cy_admissible(SurfaceModel::hirzebruch(3)));
}

TEST_CASE("volume preserving blowups and blowdowns") {
    CHECK(blowup_vp(1).vp);
    CHECK(blowup_vp(1).discrepancy == 0);
    CHECK_FALSE(blowup_vp(0).vp);
    CHECK(blowup_vp(0).discrepancy == 1);
    CHECK_THROWS_AS(blowup_vp(2), InvalidArgument);
    for (int m : {0, 1}) CHECK(blowup_vp(m).discrepancy + m == 1);
    CHECK(blowdown_vp(1));
    CHECK_FALSE(blowdown_vp(0));
    CHECK_FALSE(blowdown_vp(2));
    CHECK_THROWS_AS(blowdown_vp(-1), InvalidArgument);
    CHECK(blowdown_discrepancy(1) == 0);
}

TEST_CASE("Sarkisov degree") {
    CHECK(sarkisov_degree(SurfaceModel::plane(), {4}) == Rational(4, 3));
    CHECK(sarkisov_degree(SurfaceModel::hirzebruch(1), {2, 1}) == Rational(1, 2));
    CHECK(sarkisov_degree(SurfaceModel::plane(), {1}) == Rational(1, 3));
}
