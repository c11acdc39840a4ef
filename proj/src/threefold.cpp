#include "vpcremona/threefold.hpp"

#include "vpcremona/error.hpp"
#include "vpcremona/linalg.hpp"
#include "vpcremona/parse.hpp"
#include "vpcremona/zeros.hpp"

#include <algorithm>

namespace vpcremona {

int quadric_rank(const HomPoly& q) {
    if (q.degree() != 2) throw InvalidArgument("expected a quadratic form");
    const int n = q.nvars();
    Matrix m(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Exponent e{};
            ++e[i];
            ++e[j];
            const Rational c = q.poly().coefficient(e);
            m[i][j] = i == j ? c : c / 2;
        }
    return rank(m);
}

QuarticData::QuarticData(HomPoly A, HomPoly B, HomPoly C) : a_(std::move(A)), b_(std::move(B)), c_(std::move(C)) {
    if (a_.nvars() != 3 || b_.nvars() != 3 || c_.nvars() != 3) throw InvalidArgument("A, B, C must be forms in x1, x2, x3");
    if (a_.degree() != 2 || b_.degree() != 3 || c_.degree() != 4) throw InvalidArgument("A, B, C must have degrees 2, 3, 4");
    if (quadric_rank(a_) != 3) throw InvalidArgument("A must be a quadratic form of rank 3");
    const HomPoly x0 = HomPoly::variable(4, 0);
    d_ = x0 * x0 * lift(a_) + x0 * lift(b_) + lift(c_);
}

HomPoly QuarticData::lift(const HomPoly& ternary) const {
    static const int mapping[] = {1, 2, 3};
    return HomPoly(ternary.poly().relabel(4, mapping), ternary.degree());
}

bool irreducibility_certificate(const QuarticData& q) {
    if (divide_exact(q.B(), q.A()) && divide_exact(q.C(), q.A())) return false;
    const HomPoly disc = q.B() * q.B() - HomPoly::constant(3, 4) * q.A() * q.C();
    static const int samples[][3] = {{1, 2, 3}, {2, -1, 5}, {3, 7, -2}, {-4, 1, 1}, {5, 3, 8}, {1, 1, 2}};
    for (const auto& s : samples) {
        const Rational v = eval(disc, ProjPoint{s[0], s[1], s[2]});
        if (v < 0) return true;
        if (!mpz_perfect_square_p(v.get_num_mpz_t()) || !mpz_perfect_square_p(v.get_den_mpz_t())) return true;
    }
    return false;
}

SpaceMap::SpaceMap(std::span<const HomPoly> components) {
    if (components.size() != 4) throw InvalidArgument("a map of P^3 needs exactly 4 components");
    for (const auto& c : components) {
        if (c.nvars() != 4) throw InvalidArgument("map components must be forms in 4 variables");
        if (c.degree() != components[0].degree()) throw InvalidArgument("map components differ in degree");
    }
    const auto normalized = content_normalize(components);
    for (int i = 0; i < 4; ++i) comps_[i] = normalized[i];
}

SpaceMap SpaceMap::identity() {
    std::array<HomPoly, 4> c;
    for (int i = 0; i < 4; ++i) c[i] = HomPoly::variable(4, i);
    return SpaceMap(c);
}

bool SpaceMap::is_identity() const { return *this == identity(); }

std::optional<ProjPoint> SpaceMap::apply(const ProjPoint& pt) const {
    std::vector<Rational> image;
    bool nonzero = false;
    for (const auto& c : comps_) {
        image.push_back(eval(c, pt));
        nonzero = nonzero || image.back() != 0;
    }
    if (!nonzero) return std::nullopt;
    return ProjPoint(std::move(image)).normalized();
}

SpaceMap compose(const SpaceMap& f, const SpaceMap& g) {
    std::array<HomPoly, 4> c;
    bool all_zero = true;
    for (int i = 0; i < 4; ++i) {
        c[i] = substitute(f.components()[i], g.components());
        all_zero = all_zero && c[i].is_zero();
    }
    if (all_zero) throw ConsistencyError("composition is degenerate");
    return SpaceMap(c);
}

SpaceMap build_involution(const QuarticData& q) {
    const HomPoly A = q.lift(q.A());
    const HomPoly B = q.lift(q.B());
    std::array<HomPoly, 4> c{-(A * HomPoly::variable(4, 0)) - B, A * HomPoly::variable(4, 1), A * HomPoly::variable(4, 2),
                             A * HomPoly::variable(4, 3)};
    return SpaceMap(c);
}

bool is_involution(const SpaceMap& f) { return compose(f, f).is_identity(); }

QuarticPreservation preserves_quartic(const SpaceMap& f, const QuarticData& q) {
    QuarticPreservation r;
    r.quotient = divide_exact(substitute(q.D(), f.components()), q.D());
    r.preserved = r.quotient.has_value();
    return r;
}

ProjPoint SpaceLine::point_at(const Rational& s, const Rational& t) const {
    return ProjPoint{s, t * direction[0], t * direction[1], t * direction[2]};
}

Poly restrict_to_line(const HomPoly& d, const SpaceLine& line) {
    const Poly s = Poly::variable(2, 0), t = Poly::variable(2, 1);
    const std::vector<Poly> subs{s, t * line.direction[0], t * line.direction[1], t * line.direction[2]};
    return d.poly().substitute(subs);
}

std::vector<SpaceLine> base_lines(const QuarticData& q) {
    const std::vector<HomPoly> ab{q.A(), q.B()};
    const auto zeros = common_zeros_plane(ab);
    if (!zeros.components.empty() || zeros.points.size() < 6)
        throw InvalidArgument("B not general enough: V(A, B) has " + std::to_string(zeros.points.size()) + " distinct rational points");
    const SpaceMap phi = build_involution(q);
    std::vector<SpaceLine> lines;
    for (const auto& p : zeros.points) {
        SpaceLine l{p};
        for (const auto& c : phi.components())
            if (!restrict_to_line(c, l).is_zero()) throw ConsistencyError("a map component does not vanish on the line through " + to_string(p));
        lines.push_back(l);
    }
    return lines;
}

bool bs_not_in_quartic(std::span<const SpaceLine> lines, const QuarticData& q) {
    return std::any_of(lines.begin(), lines.end(), [&](const SpaceLine& l) { return !restrict_to_line(q.D(), l).is_zero(); });
}

bool ordinary_double_point(const QuarticData& q) {
    return mult_at(q.D(), ProjPoint{1, 0, 0, 0}) == 2 && quadric_rank(q.A()) == 3;
}

namespace {

// B with B(s^2, t^2, s t) = prod (t - r s).
HomPoly cubic_through_conic_points(std::span<const Rational> roots) {
    if (roots.size() != 6) throw InvalidArgument("six roots are needed");
    // Target binary sextic in (s, t), coefficient of s^(6-k) t^k at index k.
    std::vector<Rational> target{Rational(1)};
    for (const auto& r : roots) {
        std::vector<Rational> next(target.size() + 1, Rational(0));
        for (std::size_t k = 0; k < target.size(); ++k) {
            next[k + 1] += target[k];
            next[k] -= r * target[k];
        }
        target = std::move(next);
    }
    // Cubic monomials x1^i x2^j x3^l map to s^(2i+l) t^(2j+l).
    std::vector<Exponent> monos;
    for (int i = 3; i >= 0; --i)
        for (int j = 3 - i; j >= 0; --j) monos.push_back({static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(j), static_cast<std::uint16_t>(3 - i - j), 0});
    Matrix m(7, std::vector<Rational>(monos.size(), Rational(0)));
    for (std::size_t c = 0; c < monos.size(); ++c) m[static_cast<std::size_t>(2 * monos[c][1] + monos[c][2])][c] = 1;
    const auto sol = solve(m, target);
    if (!sol) throw ConsistencyError("no cubic restricts to the requested sextic");
    Poly b(3);
    for (std::size_t c = 0; c < monos.size(); ++c) b.add_term(monos[c], (*sol)[c]);
    // Add a multiple of A so B is not a combination of the simplest monomials.
    b += parse_poly("(x*y - z^2)*(x + y + z)", 3);
    return HomPoly(b, 3);
}

HomPoly conic() { return parse_hom("x*y - z^2", 3); }

HomPoly desk_quartic() { return parse_hom("x^4 + 2*y^4 + 3*z^4 + x*y*z^2 - x^3*z", 3); }

}  // namespace

QuarticData desk_instance(std::span<const Rational> roots) {
    return QuarticData(conic(), cubic_through_conic_points(roots), desk_quartic());
}

QuarticData desk_instance() {
    const std::array<Rational, 6> roots{Rational(1), Rational(2), Rational(3), Rational(-1), Rational(-2), Rational(1, 2)};
    return desk_instance(roots);
}

QuarticData tangent_instance() {
    const std::array<Rational, 6> roots{Rational(1), Rational(1), Rational(3), Rational(-1), Rational(-2), Rational(1, 2)};
    return desk_instance(roots);
}

QuarticData rigged_instance() {
    const QuarticData base = desk_instance();
    return QuarticData(base.A(), base.B(), base.B() * HomPoly::variable(3, 0));
}

}  // namespace vpcremona
