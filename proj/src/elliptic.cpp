#include "vpcremona/elliptic.hpp"

#include "vpcremona/error.hpp"

#include <algorithm>
#include <random>

namespace vpcremona {

ProjPoint CurvePoint::projective() const {
    if (infinity) return ProjPoint{0, 1, 0};
    return ProjPoint{x, y, 1};
}

bool operator==(const CurvePoint& a, const CurvePoint& b) {
    if (a.infinity || b.infinity) return a.infinity == b.infinity;
    return a.x == b.x && a.y == b.y;
}

std::string to_string(const CurvePoint& p) {
    if (p.infinity) return "O";
    return "(" + to_string(p.x) + ", " + to_string(p.y) + ")";
}

WeierstrassCurve::WeierstrassCurve(Rational p, Rational q) : p_(std::move(p)), q_(std::move(q)) {
    if (discriminant() == 0) throw InvalidArgument("singular Weierstrass cubic: 4p^3 + 27q^2 = 0");
}

Rational WeierstrassCurve::discriminant() const { return -16 * (4 * p_ * p_ * p_ + 27 * q_ * q_); }

HomPoly WeierstrassCurve::equation() const {
    const auto x = HomPoly::variable(3, 0), y = HomPoly::variable(3, 1), z = HomPoly::variable(3, 2);
    return y * y * z - x.pow(3) - x * z * z * p_ - z.pow(3) * q_;
}

bool WeierstrassCurve::contains(const CurvePoint& pt) const {
    if (pt.infinity) return true;
    return pt.y * pt.y == pt.x * pt.x * pt.x + p_ * pt.x + q_;
}

bool WeierstrassCurve::contains(const ProjPoint& pt) const {
    if (pt.dim() != 3) throw DimensionMismatch("curve points live in P^2");
    return eval(equation(), pt) == 0;
}

namespace {

void require_on(const WeierstrassCurve& c, const CurvePoint& pt) {
    if (!c.contains(pt)) throw InvalidArgument("point " + to_string(pt) + " is not on the curve");
}

}  // namespace

CurvePoint add(const WeierstrassCurve& c, const CurvePoint& a, const CurvePoint& b) {
    require_on(c, a);
    require_on(c, b);
    if (a.infinity) return b;
    if (b.infinity) return a;
    Rational lambda;
    if (a.x == b.x) {
        if (a.y + b.y == 0) return CurvePoint::O();
        lambda = (3 * a.x * a.x + c.p()) / (2 * a.y);
    } else {
        lambda = (b.y - a.y) / (b.x - a.x);
    }
    Rational x3 = lambda * lambda - a.x - b.x;
    Rational y3 = -(lambda * (x3 - a.x) + a.y);
    return CurvePoint::affine(std::move(x3), std::move(y3));
}

CurvePoint neg(const WeierstrassCurve& c, const CurvePoint& a) {
    require_on(c, a);
    if (a.infinity) return a;
    return CurvePoint::affine(a.x, -a.y);
}

CurvePoint multiply(const WeierstrassCurve& c, const CurvePoint& a, long k) {
    CurvePoint base = k < 0 ? neg(c, a) : a;
    unsigned long n = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
    CurvePoint acc = CurvePoint::O();
    while (n) {
        if (n & 1) acc = add(c, acc, base);
        base = add(c, base, base);
        n >>= 1;
    }
    return acc;
}

int aut_order(const WeierstrassCurve& c) {
    if (c.p() == 0) return 6;
    if (c.q() == 0) return 4;
    return 2;
}

CremonaMap translation_map(const WeierstrassCurve& c, const CurvePoint& P) {
    require_on(c, P);
    if (P.infinity) return CremonaMap::identity();
    const auto x = HomPoly::variable(3, 0), y = HomPoly::variable(3, 1), z = HomPoly::variable(3, 2);
    const HomPoly xa = x - z * P.x;
    const HomPoly yb = y - z * P.y;
    const HomPoly f1 = z * yb.pow(2) * xa - (x * x - z * z * (P.x * P.x)) * xa.pow(2);
    const HomPoly f3 = z * xa.pow(3);
    const HomPoly f2 = -(z * yb.pow(3)) + yb * (x + z * (2 * P.x)) * xa.pow(2) - f3 * P.y;
    return CremonaMap(f1, f2, f3);
}

std::vector<CurvePoint> sample_points(const WeierstrassCurve& c, const CurvePoint& G, int count, std::uint64_t seed) {
    if (G.infinity) throw InvalidArgument("sampling generator must be affine");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(-2 * count, 2 * count);
    std::vector<long> ks;
    while (static_cast<int>(ks.size()) < count) {
        const long k = dist(rng);
        if (k == 0 || std::find(ks.begin(), ks.end(), k) != ks.end()) continue;
        ks.push_back(k);
    }
    std::vector<CurvePoint> out;
    for (long k : ks) {
        CurvePoint pt = multiply(c, G, k);
        if (pt.infinity) throw InvalidArgument("sampling generator has finite order");
        out.push_back(std::move(pt));
    }
    return out;
}

std::optional<WeierstrassCurve> weierstrass_form(const HomPoly& cubic) {
    if (cubic.nvars() != 3 || cubic.degree() != 3 || cubic.is_zero()) return std::nullopt;
    const Rational lead = cubic.poly().coefficient({0, 2, 1, 0});
    if (lead == 0) return std::nullopt;
    const Poly f = cubic.poly() * (1 / lead);
    const Rational p = -f.coefficient({1, 0, 2, 0});
    const Rational q = -f.coefficient({0, 0, 3, 0});
    if (f.coefficient({3, 0, 0, 0}) != -1) return std::nullopt;
    if (4 * p * p * p + 27 * q * q == 0) return std::nullopt;
    WeierstrassCurve c(p, q);
    if (!(c.equation().poly() == f)) return std::nullopt;
    return c;
}

WeierstrassCurve sampling_curve() { return WeierstrassCurve(0, -2); }

CurvePoint sampling_generator() { return CurvePoint::affine(3, 5); }

}  // namespace vpcremona
