#include "doctest.h"

#include "vpcremona/elliptic.hpp"
#include "vpcremona/error.hpp"
#include "vpcremona/parse.hpp"
#include "vpcremona/upoly.hpp"
#include "vpcremona/zeros.hpp"

#include <random>

using namespace vpcremona;

namespace {

// Third intersection of the chord (or tangent) with the cubic, found by
// dividing the restricted cubic by the two known roots, then reflected.
CurvePoint chord_and_reflect(const WeierstrassCurve& c, const CurvePoint& a, const CurvePoint& b) {
    if (a.infinity) return b;
    if (b.infinity) return a;
    if (a.x == b.x && a.y == -b.y) return CurvePoint::O();
    const Rational lambda = a.x == b.x ? Rational((3 * a.x * a.x + c.p()) / (2 * a.y)) : Rational((b.y - a.y) / (b.x - a.x));
    const Rational nu = a.y - lambda * a.x;
    // x^3 + p x + q - (lambda x + nu)^2
    const UPoly restricted({c.q() - nu * nu, c.p() - 2 * lambda * nu, -lambda * lambda, Rational(1)});
    const UPoly known = UPoly({-a.x, Rational(1)}) * UPoly({-b.x, Rational(1)});
    const auto [quot, rem] = divmod(restricted, known);
    REQUIRE(rem.is_zero());
    REQUIRE(quot.degree() == 1);
    const Rational x3 = -quot.coeff(0) / quot.coeff(1);
    return CurvePoint::affine(x3, -(lambda * x3 + nu));
}

// The law with the third collinear point left unreflected.
CurvePoint add_unreflected(const WeierstrassCurve& c, const CurvePoint& a, const CurvePoint& b) {
    if (a.infinity) return b;
    if (b.infinity) return a;
    if (a.x == b.x && a.y == -b.y) return CurvePoint::O();
    const Rational lambda = a.x == b.x ? Rational((3 * a.x * a.x + c.p()) / (2 * a.y)) : Rational((b.y - a.y) / (b.x - a.x));
    const Rational x3 = lambda * lambda - a.x - b.x;
    return CurvePoint::affine(x3, lambda * (x3 - a.x) + a.y);
}

const WeierstrassCurve kC1(0, 1);  // y^2 = x^3 + 1

}  // namespace

TEST_CASE("curve construction") {
    CHECK(kC1.contains(CurvePoint::affine(2, 3)));
    CHECK(kC1.contains(ProjPoint{0, 1, 0}));
    CHECK_THROWS_AS(WeierstrassCurve(-3, 2), InvalidArgument);
    CHECK(WeierstrassCurve(-3, 2 + Rational(1, 1000)).discriminant() != 0);
}

TEST_CASE("add examples") {
    const auto P = CurvePoint::affine(2, 3);
    CHECK(add(kC1, CurvePoint::O(), P) == P);
    CHECK(add(kC1, P, neg(kC1, P)) == CurvePoint::O());
    CHECK(add(kC1, P, CurvePoint::affine(0, 1)) == CurvePoint::affine(-1, 0));
    CHECK(neg(kC1, P) == CurvePoint::affine(2, -3));
    CHECK(neg(kC1, CurvePoint::O()) == CurvePoint::O());
    CHECK_THROWS_AS(add(kC1, P, CurvePoint::affine(1, 1)), InvalidArgument);
    // (2,3) has order 6 on y^2 = x^3 + 1.
    CHECK(multiply(kC1, P, 6) == CurvePoint::O());
    CHECK(multiply(kC1, P, 3) == CurvePoint::affine(-1, 0));
}

TEST_CASE("inverses on sampled multiples") {
    const auto c = sampling_curve();
    CurvePoint Q = CurvePoint::O();
    for (int k = 1; k <= 20; ++k) {
        Q = add(c, Q, sampling_generator());
        CHECK(add(c, Q, neg(c, Q)) == CurvePoint::O());
    }
}

TEST_CASE("aut_order") {
    CHECK(aut_order(kC1) == 6);
    CHECK(aut_order(WeierstrassCurve(1, 0)) == 4);
    const WeierstrassCurve c(-2, 1);
    // j = 1728 * 4p^3 / (4p^3 + 27q^2) = 1728 * (-32)/(-5)
    const Rational j = 1728 * 4 * c.p() * c.p() * c.p() / (4 * c.p() * c.p() * c.p() + 27 * c.q() * c.q());
    CHECK(j != 0);
    CHECK(j != 1728);
    CHECK(aut_order(c) == 2);
}

TEST_CASE("group axioms agree with the chord-and-reflect oracle") {
    const auto c = sampling_curve();
    const auto pts = sample_points(c, sampling_generator(), 12, 42);
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
    for (int i = 0; i < 30; ++i) {
        const auto& P = pts[pick(rng)];
        const auto& Q = pts[pick(rng)];
        const auto& R = pts[pick(rng)];
        CHECK(add(c, add(c, P, Q), R) == add(c, P, add(c, Q, R)));
        CHECK(add(c, P, Q) == add(c, Q, P));
        CHECK(add(c, P, Q) == chord_and_reflect(c, P, Q));
        CHECK(c.contains(add(c, P, Q)));
    }
}

TEST_CASE("the unreflected chord law is not associative") {
    const auto c = sampling_curve();
    const auto G = sampling_generator();
    const auto G2 = add(c, G, G);
    const auto lhs = add_unreflected(c, add_unreflected(c, G, G2), G2);
    const auto rhs = add_unreflected(c, G, add_unreflected(c, G2, G2));
    CHECK_FALSE(lhs == rhs);
}

TEST_CASE("translation map") {
    const auto P = CurvePoint::affine(2, 3);
    const auto phi = translation_map(kC1, P);
    CHECK(phi.degree() == 4);
    CHECK(eval(phi.components()[0], ProjPoint{2, 3, 1}) == 0);
    const auto bs = common_zeros_plane(phi.components());
    CHECK(bs.components.empty());
    CHECK(bs.points == std::vector<ProjPoint>{ProjPoint{0, 1, 0}, ProjPoint{2, 3, 1}});
    CHECK(translation_map(kC1, CurvePoint::O()).is_identity());
    // (0,1) + (2,3) = (-1,0)
    CHECK(phi.apply(ProjPoint{0, 1, 1}).value() == ProjPoint{-1, 0, 1});
}

TEST_CASE("translation map restricts to the group translation") {
    const auto c = sampling_curve();
    const auto pts = sample_points(c, sampling_generator(), 10, 1);
    const auto P = multiply(c, sampling_generator(), 2);
    const auto phi = translation_map(c, P);
    const auto back = translation_map(c, neg(c, P));
    int checked = 0;
    for (const auto& Q : pts) {
        // Base points of phi and of its inverse are skipped.
        if (Q == P) continue;
        const auto img = phi.apply(Q.projective());
        REQUIRE(img);
        CHECK(*img == add(c, Q, P).projective());
        CHECK(c.contains(*img));
        const auto again = back.apply(*img);
        ++checked;
        if (*img == ProjPoint{0, 1, 0} || *img == neg(c, P).projective()) continue;
        REQUIRE(again);
        CHECK(*again == Q.projective());
    }
    CHECK(checked >= 8);
}

TEST_CASE("the printed second component does not preserve the curve") {
    const auto P = CurvePoint::affine(2, 3);
    const HomPoly f1 = parse_hom("z*(y-3*z)^2*(x-2*z) - (x^2-4*z^2)*(x-2*z)^2", 3);
    const HomPoly f2 = parse_hom("z*(y-3*z)^3 - (y-3*z)*(x+4*z)*(x-2*z)^2", 3);
    const HomPoly f3 = parse_hom("z*(x-2*z)^3", 3);
    const CremonaMap printed(f1, f2, f3);
    const HomPoly eq = kC1.equation();
    CHECK_FALSE(divide_exact(substitute(eq, printed.components()), eq).has_value());
    CHECK(printed.apply(ProjPoint{0, 1, 1}).value() == ProjPoint{-1, -3, 1});
    const auto fixed = translation_map(kC1, P);
    CHECK(divide_exact(substitute(eq, fixed.components()), eq).has_value());
}
