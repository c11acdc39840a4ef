#include "vpcremona/cremona_map.hpp"

#include "vpcremona/error.hpp"
#include "vpcremona/linalg.hpp"

namespace vpcremona {

namespace {

// Jacobian determinant at a handful of fixed points; a dominant map has a
// nonzero Jacobian at a general point.
bool jacobian_nonzero(const std::array<HomPoly, 3>& c) {
    static const int samples[][3] = {{3, -7, 11}, {-5, 2, 13}, {17, 19, -1}, {1, 29, 6}, {-23, 4, 31}, {37, -41, 8}};
    std::array<std::array<HomPoly, 3>, 3> jac;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) jac[i][j] = c[i].derivative(j);
    for (const auto& s : samples) {
        const ProjPoint pt{s[0], s[1], s[2]};
        Matrix m(3, std::vector<Rational>(3));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m[i][j] = eval(jac[i][j], pt);
        if (determinant(m) != 0) return true;
    }
    return false;
}

}  // namespace

CremonaMap::CremonaMap(std::span<const HomPoly> components) {
    if (components.size() != 3) throw InvalidArgument("a plane map needs exactly 3 components");
    for (const auto& c : components) {
        if (c.nvars() != 3) throw InvalidArgument("plane map components must be ternary forms");
        if (c.degree() != components[0].degree()) throw InvalidArgument("plane map components differ in degree");
    }
    const auto normalized = content_normalize(components);
    for (int i = 0; i < 3; ++i) comps_[i] = normalized[i];
    if (degree() < 1) throw ConsistencyError("plane map collapses to a point");
    if (!jacobian_nonzero(comps_)) throw ConsistencyError("plane map is not dominant");
}

CremonaMap::CremonaMap(const HomPoly& f1, const HomPoly& f2, const HomPoly& f3)
    : CremonaMap(std::array<HomPoly, 3>{f1, f2, f3}) {}

CremonaMap CremonaMap::identity() {
    return CremonaMap(HomPoly::variable(3, 0), HomPoly::variable(3, 1), HomPoly::variable(3, 2));
}

CremonaMap CremonaMap::standard_quadratic() {
    const auto x = HomPoly::variable(3, 0), y = HomPoly::variable(3, 1), z = HomPoly::variable(3, 2);
    return CremonaMap(y * z, x * z, x * y);
}

CremonaMap CremonaMap::linear(const std::array<std::array<Rational, 3>, 3>& m) {
    std::array<HomPoly, 3> c;
    for (int i = 0; i < 3; ++i) {
        c[i] = HomPoly::zero(3, 1);
        for (int j = 0; j < 3; ++j) c[i] = c[i] + HomPoly::variable(3, j) * m[i][j];
    }
    return CremonaMap(c);
}

CremonaMap CremonaMap::quadratic_through(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
    const ProjPoint* pts[] = {&a, &b, &c};
    Matrix n(3, std::vector<Rational>(3));
    for (int i = 0; i < 3; ++i) {
        if (pts[i]->dim() != 3) throw DimensionMismatch("plane points need 3 coordinates");
        for (int j = 0; j < 3; ++j) n[j][i] = (*pts[i])[j];
    }
    if (determinant(n) == 0) throw InvalidArgument("base points of a quadratic map must not be collinear");
    std::array<std::array<Rational, 3>, 3> inv;
    for (int k = 0; k < 3; ++k) {
        std::vector<Rational> e(3, Rational(0));
        e[k] = 1;
        const auto col = solve(n, e);
        for (int i = 0; i < 3; ++i) inv[i][k] = (*col)[i];
    }
    return compose(standard_quadratic(), linear(inv));
}

bool CremonaMap::is_identity() const { return *this == identity(); }

std::optional<ProjPoint> CremonaMap::apply(const ProjPoint& pt) const {
    std::vector<Rational> image;
    bool nonzero = false;
    for (const auto& c : comps_) {
        image.push_back(eval(c, pt));
        nonzero = nonzero || image.back() != 0;
    }
    if (!nonzero) return std::nullopt;
    return ProjPoint(std::move(image)).normalized();
}

CremonaMap compose(const CremonaMap& f, const CremonaMap& g) {
    std::array<HomPoly, 3> c;
    for (int i = 0; i < 3; ++i) c[i] = substitute(f.components()[i], g.components());
    bool all_zero = true;
    for (const auto& h : c) all_zero = all_zero && h.is_zero();
    if (all_zero) throw ConsistencyError("composition is degenerate");
    return CremonaMap(c);
}

std::string to_string(const CremonaMap& f) {
    std::string out = "(";
    for (int i = 0; i < 3; ++i) {
        if (i) out += " : ";
        out += to_string(f.components()[i]);
    }
    return out + ")";
}

}  // namespace vpcremona
