#include "vpcremona/zeros.hpp"

#include "vpcremona/error.hpp"
#include "vpcremona/upoly.hpp"

#include <algorithm>

namespace vpcremona {

namespace {

bool point_less(const ProjPoint& a, const ProjPoint& b) {
    return std::lexicographical_compare(a.coords().begin(), a.coords().end(), b.coords().begin(), b.coords().end());
}

void add_point(std::vector<ProjPoint>& out, ProjPoint p) {
    p = p.normalized();
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
}

// Rational roots shared by all nonzero univariate polynomials; nullopt when
// all of them vanish identically.
std::optional<std::vector<Rational>> shared_roots(const std::vector<UPoly>& polys) {
    UPoly g;
    for (const auto& p : polys) g = gcd(g, p);
    if (g.is_zero()) return std::nullopt;
    if (g.degree() <= 0) return std::vector<Rational>{};
    return rational_roots(g);
}

}  // namespace

std::vector<ProjPoint> common_zeros_line(std::span<const Poly> forms) {
    std::vector<ProjPoint> out;
    // t = 1 chart, then the point (1:0).
    std::vector<UPoly> at_t1;
    for (const auto& f : forms) {
        if (f.nvars() != 2) throw DimensionMismatch("binary forms expected");
        const Poly s = Poly::variable(1, 0);
        const Poly one = Poly::constant(1, 1);
        std::vector<Poly> subs{s, one};
        at_t1.push_back(to_upoly(f.substitute(subs), 0));
    }
    auto roots = shared_roots(at_t1);
    if (!roots) throw InvalidArgument("binary forms vanish identically");
    for (const auto& r : *roots) add_point(out, ProjPoint({r, Rational(1)}));
    const std::vector<Rational> inf{Rational(1), Rational(0)};
    if (std::all_of(forms.begin(), forms.end(), [&](const Poly& f) { return f.eval(inf) == 0; })) add_point(out, ProjPoint(inf));
    std::sort(out.begin(), out.end(), point_less);
    return out;
}

PlaneZeros common_zeros_plane(std::span<const HomPoly> polys) {
    if (polys.size() < 2) throw InvalidArgument("common_zeros_plane needs at least two polynomials");
    for (const auto& p : polys)
        if (p.nvars() != 3) throw DimensionMismatch("common_zeros_plane expects ternary forms");

    PlaneZeros result;
    Poly g(3);
    for (const auto& p : polys) g = gcd(g, p.poly());
    if (g.is_zero()) throw InvalidArgument("all polynomials are zero");

    std::vector<Poly> reduced;
    if (g.total_degree() > 0) {
        result.components.emplace_back(g);
        for (const auto& p : polys)
            if (!p.is_zero()) reduced.push_back(divide_exact(p.poly(), g).value());
    } else {
        for (const auto& p : polys)
            if (!p.is_zero()) reduced.push_back(p.poly());
    }
    if (std::any_of(reduced.begin(), reduced.end(), [](const Poly& p) { return p.is_constant(); })) return result;
    if (reduced.size() < 2) {
        // A single curve remains; all its points are "common zeros".
        result.components.emplace_back(reduced.front());
        return result;
    }

    // Affine chart z = 1 with local variables (x, y).
    std::vector<Poly> affine;
    {
        const std::vector<Poly> subs{Poly::variable(2, 0), Poly::variable(2, 1), Poly::constant(2, 1)};
        for (const auto& p : reduced) affine.push_back(p.substitute(subs));
    }

    // Resultant of the first form against a combination of the others.
    UPoly res;
    for (long c = 2; res.is_zero() && c < 40; ++c) {
        Poly comb(2);
        Rational w = 1;
        for (std::size_t i = 1; i < affine.size(); ++i) {
            comb += affine[i] * w;
            w *= c;
        }
        res = resultant(affine.front(), comb, 1);
    }
    if (res.is_zero()) throw ConsistencyError("could not find a nonvanishing resultant");

    if (res.degree() > 0) {
        for (const auto& x0 : rational_roots(res)) {
            std::vector<UPoly> in_y;
            const std::vector<Poly> subs{Poly::constant(1, x0), Poly::variable(1, 0)};
            for (const auto& a : affine) in_y.push_back(to_upoly(a.substitute(subs), 0));
            auto ys = shared_roots(in_y);
            if (!ys) throw ConsistencyError("a vertical line is a common component after gcd removal");
            for (const auto& y0 : *ys) add_point(result.points, ProjPoint({x0, y0, Rational(1)}));
        }
    }

    // Line at infinity z = 0.
    std::vector<Poly> at_infinity;
    const std::vector<Poly> subs{Poly::variable(2, 0), Poly::variable(2, 1), Poly(2)};
    for (const auto& p : reduced) at_infinity.push_back(p.substitute(subs));
    if (std::all_of(at_infinity.begin(), at_infinity.end(), [](const Poly& p) { return p.is_zero(); }))
        throw ConsistencyError("the line at infinity is a common component after gcd removal");
    std::vector<Poly> nonzero;
    for (auto& p : at_infinity)
        if (!p.is_zero()) nonzero.push_back(std::move(p));
    for (const auto& q : common_zeros_line(nonzero)) add_point(result.points, ProjPoint({q[0], q[1], Rational(0)}));

    std::sort(result.points.begin(), result.points.end(), point_less);
    return result;
}

}  // namespace vpcremona
