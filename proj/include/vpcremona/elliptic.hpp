#pragma once

#include "vpcremona/cremona_map.hpp"
#include "vpcremona/poly.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace vpcremona {

// Either the point at infinity O = (0:1:0) or an affine point (x, y).
struct CurvePoint {
    bool infinity = true;
    Rational x, y;

    static CurvePoint O() { return {}; }
    static CurvePoint affine(Rational x, Rational y) { return {false, std::move(x), std::move(y)}; }

    ProjPoint projective() const;
    friend bool operator==(const CurvePoint& a, const CurvePoint& b);
};

std::string to_string(const CurvePoint& p);

// y^2 z = x^3 + p x z^2 + q z^3. Construction rejects singular curves.
class WeierstrassCurve {
public:
    WeierstrassCurve(Rational p, Rational q);

    const Rational& p() const { return p_; }
    const Rational& q() const { return q_; }
    // -16 (4 p^3 + 27 q^2)
    Rational discriminant() const;
    HomPoly equation() const;
    bool contains(const CurvePoint& pt) const;
    bool contains(const ProjPoint& pt) const;

    friend bool operator==(const WeierstrassCurve& a, const WeierstrassCurve& b) { return a.p_ == b.p_ && a.q_ == b.q_; }

private:
    Rational p_, q_;
};

CurvePoint add(const WeierstrassCurve& c, const CurvePoint& a, const CurvePoint& b);
CurvePoint neg(const WeierstrassCurve& c, const CurvePoint& a);
CurvePoint multiply(const WeierstrassCurve& c, const CurvePoint& a, long k);
int aut_order(const WeierstrassCurve& c);

// The degree 4 map restricting to translation by P on the curve; the
// identity for P = O.
CremonaMap translation_map(const WeierstrassCurve& c, const CurvePoint& P);

// Affine curve points k*G for `count` distinct multipliers k drawn from a
// seeded generator. G should be non-torsion.
std::vector<CurvePoint> sample_points(const WeierstrassCurve& c, const CurvePoint& G, int count, std::uint64_t seed);

// The curve when `cubic` is a scalar multiple of y^2 z - x^3 - p x z^2 - q z^3
// with nonzero discriminant.
std::optional<WeierstrassCurve> weierstrass_form(const HomPoly& cubic);

// y^2 = x^3 - 2 with the non-torsion point (3, 5).
WeierstrassCurve sampling_curve();
CurvePoint sampling_generator();

}  // namespace vpcremona
