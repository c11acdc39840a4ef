#include "vpcremona/cremona.hpp"

#include "vpcremona/error.hpp"
#include "vpcremona/upoly.hpp"
#include "vpcremona/zeros.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

namespace vpcremona {

std::string to_string(const HomaloidalType& t) {
    std::string out = "(" + std::to_string(t.degree) + ";";
    for (std::size_t i = 0; i < t.mults.size(); ++i) out += (i ? "," : "") + std::to_string(t.mults[i]);
    return out + ")";
}

bool noether_check(const HomaloidalType& t) {
    long s = 0, s2 = 0;
    for (int m : t.mults) {
        s += m;
        s2 += static_cast<long>(m) * m;
    }
    const long d = t.degree;
    return s == 3 * d - 3 && s2 == d * d - 1;
}

bool is_de_jonquieres(const HomaloidalType& t) {
    if (t.degree == 1) return t.mults.empty();
    const int d = t.degree;
    if (static_cast<int>(t.mults.size()) != 2 * d - 1) return false;
    if (t.mults[0] != d - 1) return false;
    return std::all_of(t.mults.begin() + 1, t.mults.end(), [](int m) { return m == 1; });
}

int composition_degree(const HomaloidalType& f, const HomaloidalType& g, std::span<const std::pair<int, int>> shared) {
    long deg = static_cast<long>(f.degree) * g.degree;
    for (const auto& [m, l] : shared) deg -= static_cast<long>(m) * l;
    if (deg < 0) throw ConsistencyError("shared base point data gives a negative degree");
    return static_cast<int>(deg);
}

std::vector<int> BubbleForest::children(int id) const {
    std::vector<int> out;
    for (const auto& n : nodes)
        if (n.parent && *n.parent == id) out.push_back(n.id);
    return out;
}

std::vector<int> BubbleForest::roots() const {
    std::vector<int> out;
    for (const auto& n : nodes)
        if (!n.parent) out.push_back(n.id);
    return out;
}

namespace {

// g(u, u t) / u^m in variables (u, t).
Poly blow_slope(const Poly& g, int m) {
    Poly out(2);
    for (const auto& [e, c] : g.terms()) {
        Exponent ne{};
        ne[0] = static_cast<std::uint16_t>(e[0] + e[1] - m);
        ne[1] = e[1];
        out.add_term(ne, c);
    }
    return out;
}

// g(s v, v) / v^m in variables (s, v).
Poly blow_vertical(const Poly& g, int m) {
    Poly out(2);
    for (const auto& [e, c] : g.terms()) {
        Exponent ne{};
        ne[0] = e[0];
        ne[1] = static_cast<std::uint16_t>(e[0] + e[1] - m);
        out.add_term(ne, c);
    }
    return out;
}

// Translates (u, t) -> (u, t + t0).
Poly shift_second(const Poly& g, const Rational& t0) {
    if (t0 == 0) return g;
    const std::vector<Poly> subs{Poly::variable(2, 0), Poly::variable(2, 1) + Poly::constant(2, t0)};
    return g.substitute(subs);
}

int order(const Poly& g) { return g.is_zero() ? -1 : g.lowest_degree(); }

struct LocalData {
    std::vector<Poly> system;
    std::optional<Poly> cubic;
};

class ForestBuilder {
public:
    ForestBuilder(const ForestOptions& opts) : opts_(opts), rng_(opts.seed) {}

    BubbleForest forest;

    // Multiplicity of the local system at the origin, cross-checked on
    // random members.
    int system_mult(const std::vector<Poly>& sys) {
        int m = -1;
        for (const auto& g : sys) {
            const int o = order(g);
            if (o >= 0 && (m < 0 || o < m)) m = o;
        }
        if (m < 0) throw ConsistencyError("linear system vanishes identically");
        std::uniform_int_distribution<int> coef(-50, 50);
        int generic = -1;
        for (int trial = 0; trial < 3; ++trial) {
            Poly comb(sys.front().nvars());
            for (const auto& g : sys) {
                int c = 0;
                while (c == 0) c = coef(rng_);
                comb += g * Rational(c);
            }
            const int o = order(comb);
            if (o >= 0 && (generic < 0 || o < generic)) generic = o;
        }
        if (generic != m) throw ConsistencyError("generic member multiplicity disagrees with component minimum");
        return m;
    }

    void add_node(ForestNode node, const LocalData& data, int depth) {
        const int m = node.mult;
        node.id = static_cast<int>(forest.nodes.size());
        node.cubic_mult = data.cubic ? std::max(order(*data.cubic), 0) : 0;
        node.on_cubic = node.cubic_mult > 0;
        forest.nodes.push_back(node);
        const int id = node.id;
        if (depth >= opts_.depth_cap) throw ConsistencyError("infinitely near base points exceed the depth cap");

        const int cm = node.cubic_mult;
        // Slope chart: directions (1 : t).
        std::vector<Poly> slope_sys;
        UPoly g;
        for (const auto& h : data.system) {
            slope_sys.push_back(blow_slope(h, m));
            g = gcd(g, to_upoly(slope_sys.back().coefficient_in(0, 0), 1));
        }
        std::optional<Poly> slope_cubic;
        if (data.cubic) slope_cubic = blow_slope(*data.cubic, cm);
        if (g.degree() > 0) {
            const auto roots = rational_roots(g);
            if (squarefree_part(g).degree() > static_cast<int>(roots.size()))
                throw IrrationalBasePoint("infinitely near base point with irrational slope");
            for (const auto& t0 : roots) {
                LocalData child;
                for (const auto& h : slope_sys) child.system.push_back(shift_second(h, t0));
                if (slope_cubic) child.cubic = shift_second(*slope_cubic, t0);
                ForestNode n;
                n.parent = id;
                n.level = node.level + 1;
                n.mult = system_mult(child.system);
                n.chart = Chart::Slope;
                n.slope = t0;
                add_node(n, child, depth + 1);
            }
        }
        // Vertical chart origin: direction (0 : 1).
        LocalData vert;
        bool base = true;
        for (const auto& h : data.system) {
            vert.system.push_back(blow_vertical(h, m));
            base = base && vert.system.back().coefficient({0, 0, 0, 0}) == 0;
        }
        if (base) {
            if (data.cubic) vert.cubic = blow_vertical(*data.cubic, cm);
            ForestNode n;
            n.parent = id;
            n.level = node.level + 1;
            n.mult = system_mult(vert.system);
            n.chart = Chart::Vertical;
            add_node(n, vert, depth + 1);
        }
    }

private:
    const ForestOptions& opts_;
    std::mt19937_64 rng_;
};

}  // namespace

BubbleForest base_forest(const CremonaMap& f, const ForestOptions& opts) {
    if (opts.cubic && (opts.cubic->nvars() != 3 || opts.cubic->is_zero()))
        throw InvalidArgument("tracked cubic must be a nonzero ternary form");
    if (f.degree() == 1) return {};
    std::vector<ProjPoint> proper;
    if (!opts.hints.empty()) {
        for (const auto& h : opts.hints) {
            for (const auto& c : f.components())
                if (eval(c, h) != 0) throw InvalidArgument("hint " + to_string(h) + " is not a base point");
            proper.push_back(h.normalized());
        }
    } else {
        const auto zeros = common_zeros_plane(f.components());
        if (!zeros.components.empty()) throw ConsistencyError("map components share a curve");
        proper = zeros.points;
    }

    ForestBuilder builder(opts);
    for (const auto& pt : proper) {
        LocalData data;
        for (const auto& c : f.components()) data.system.push_back(local_equation(c, pt));
        if (opts.cubic) data.cubic = local_equation(*opts.cubic, pt);
        ForestNode n;
        n.mult = builder.system_mult(data.system);
        if (n.mult == 0) throw ConsistencyError("proper point is not a base point");
        n.point = pt;
        builder.add_node(n, data, 0);
    }

    long s2 = 0;
    for (const auto& n : builder.forest.nodes) s2 += static_cast<long>(n.mult) * n.mult;
    const long d = f.degree();
    if (s2 < d * d - 1) throw IrrationalBasePoint("base locus has points that are not rational");
    return builder.forest;
}

HomaloidalType homaloidal_type(const CremonaMap& f, const BubbleForest& forest) {
    HomaloidalType t;
    t.degree = f.degree();
    for (const auto& n : forest.nodes) t.mults.push_back(n.mult);
    std::sort(t.mults.begin(), t.mults.end(), std::greater<>());
    if (!noether_check(t)) throw ConsistencyError("equations of condition fail for " + to_string(t));
    return t;
}

HomaloidalType homaloidal_type(const CremonaMap& f) { return homaloidal_type(f, base_forest(f)); }

namespace {

struct PathKey {
    ProjPoint root;
    std::vector<std::pair<Chart, Rational>> steps;
    friend bool operator==(const PathKey&, const PathKey&) = default;
};

PathKey path_of(const BubbleForest& forest, int id) {
    PathKey key;
    const ForestNode* n = &forest.node(id);
    while (n->parent) {
        key.steps.emplace_back(n->chart, n->chart == Chart::Slope ? n->slope : Rational(0));
        n = &forest.node(*n->parent);
    }
    std::reverse(key.steps.begin(), key.steps.end());
    key.root = n->point.normalized();
    return key;
}

}  // namespace

std::vector<std::pair<int, int>> shared_base_points(const BubbleForest& a, const BubbleForest& b) {
    std::vector<std::pair<int, int>> out;
    std::vector<PathKey> bkeys;
    for (const auto& n : b.nodes) bkeys.push_back(path_of(b, n.id));
    for (const auto& n : a.nodes) {
        const PathKey k = path_of(a, n.id);
        for (std::size_t j = 0; j < bkeys.size(); ++j)
            if (bkeys[j] == k) out.emplace_back(n.mult, b.nodes[j].mult);
    }
    return out;
}

bool is_nonsingular_cubic(const HomPoly& cubic) {
    if (cubic.nvars() != 3 || cubic.degree() != 3 || cubic.is_zero()) throw InvalidArgument("expected a ternary cubic form");
    if (weierstrass_form(cubic)) return true;
    std::vector<HomPoly> partials;
    for (int i = 0; i < 3; ++i) partials.push_back(cubic.derivative(i));
    const auto z = common_zeros_plane(partials);
    return z.points.empty() && z.components.empty();
}

bool is_in_dec(const CremonaMap& f, const HomPoly& cubic, std::span<const ProjPoint> samples) {
    if (!is_nonsingular_cubic(cubic)) throw InvalidArgument("cubic is singular");
    for (const auto& s : samples)
        if (eval(cubic, s) != 0) throw InvalidArgument("sample " + to_string(s) + " is not on the cubic");
    if (!divide_exact(substitute(cubic, f.components()), cubic)) return false;
    std::vector<ProjPoint> images;
    for (const auto& s : samples) {
        const auto img = f.apply(s);
        if (!img) continue;
        if (std::find(images.begin(), images.end(), *img) != images.end()) return false;
        images.push_back(*img);
    }
    return images.size() >= 2 || samples.size() < 2;
}

CremonaMap inertia_witness(const WeierstrassCurve& c, const CurvePoint& P, const CurvePoint& Q) {
    const CurvePoint S = add(c, P, Q);
    if (P.infinity || Q.infinity || S.infinity) throw InvalidArgument("inertia witness needs P, Q and P+Q different from O");
    return compose(translation_map(c, S), translation_map(c, neg(c, S)));
}

}  // namespace vpcremona
