#include "vpcremona/json_io.hpp"

#include "vpcremona/error.hpp"
#include "vpcremona/parse.hpp"

namespace vpcremona {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InvalidArgument(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

}  // namespace

Json rational_to_json(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    return to_string(c);
}

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
    throw InvalidArgument("rational must be a \"num/den\" string or an integer");
}

Json poly_to_json(const HomPoly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.poly().terms()) {
        Json exp = Json::array();
        for (int i = 0; i < p.nvars(); ++i) exp.push_back(e[static_cast<std::size_t>(i)]);
        terms.push_back({{"exp", exp}, {"coef", rational_to_json(c)}});
    }
    return {{"vars", p.nvars()}, {"terms", terms}};
}

HomPoly hompoly_from_json(const Json& j, int nvars) {
    if (j.is_string()) return parse_hom(j.get<std::string>(), nvars);
    const int vars = field(j, "vars").get<int>();
    if (vars != nvars) throw DimensionMismatch("expected a polynomial in " + std::to_string(nvars) + " variables");
    Poly p(vars);
    for (const auto& t : field(j, "terms")) {
        const auto& exp = field(t, "exp");
        if (!exp.is_array() || static_cast<int>(exp.size()) != vars) throw DimensionMismatch("exponent length differs from vars");
        Exponent e{};
        for (int i = 0; i < vars; ++i) {
            const int v = exp[static_cast<std::size_t>(i)].get<int>();
            if (v < 0) throw InvalidArgument("negative exponent");
            e[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(v);
        }
        p.add_term(e, rational_from_json(field(t, "coef")));
    }
    if (p.is_zero()) throw InvalidArgument("zero polynomial");
    return HomPoly(p);
}

Json point_to_json(const ProjPoint& p) {
    Json a = Json::array();
    for (const auto& c : p.coords()) a.push_back(rational_to_json(c));
    return a;
}

ProjPoint projpoint_from_json(const Json& j) {
    if (!j.is_array()) throw InvalidArgument("point must be an array of coordinates");
    std::vector<Rational> c;
    for (const auto& v : j) c.push_back(rational_from_json(v));
    return ProjPoint(std::move(c));
}

Json map_to_json(const CremonaMap& f) {
    Json comps = Json::array();
    for (const auto& c : f.components()) comps.push_back(poly_to_json(c));
    return {{"deg", f.degree()}, {"components", comps}};
}

CremonaMap map_from_json(const Json& j) {
    const Json& comps = j.is_array() ? j : field(j, "components");
    if (!comps.is_array() || comps.size() != 3) throw InvalidArgument("a plane map needs three components");
    std::array<HomPoly, 3> c;
    for (int i = 0; i < 3; ++i) c[i] = hompoly_from_json(comps[static_cast<std::size_t>(i)], 3);
    CremonaMap f(c);
    if (j.is_object() && j.contains("deg") && j.at("deg").get<int>() != f.degree())
        throw InvalidArgument("declared degree does not match the components");
    return f;
}

Json curve_to_json(const WeierstrassCurve& c) { return {{"p", rational_to_json(c.p())}, {"q", rational_to_json(c.q())}}; }

WeierstrassCurve curve_from_json(const Json& j) { return WeierstrassCurve(rational_from_json(field(j, "p")), rational_from_json(field(j, "q"))); }

Json curve_point_to_json(const CurvePoint& p) {
    if (p.infinity) return "O";
    return {{"x", rational_to_json(p.x)}, {"y", rational_to_json(p.y)}};
}

CurvePoint curve_point_from_json(const Json& j) {
    if (j.is_string() && j.get<std::string>() == "O") return CurvePoint::O();
    return CurvePoint::affine(rational_from_json(field(j, "x")), rational_from_json(field(j, "y")));
}

Json model_to_json(const SurfaceModel& m) {
    if (m.is_plane()) return {{"kind", "P2"}};
    return {{"kind", "Fn"}, {"n", m.n}};
}

SurfaceModel model_from_json(const Json& j) {
    const auto kind = field(j, "kind").get<std::string>();
    if (kind == "P2") return SurfaceModel::plane();
    if (kind == "Fn") return SurfaceModel::hirzebruch(field(j, "n").get<int>());
    throw InvalidArgument("model kind must be P2 or Fn");
}

Json type_to_json(const HomaloidalType& t) { return {{"degree", t.degree}, {"mults", t.mults}}; }

HomaloidalType type_from_json(const Json& j) {
    HomaloidalType t;
    t.degree = field(j, "degree").get<int>();
    t.mults = field(j, "mults").get<std::vector<int>>();
    if (t.degree < 1) throw InvalidArgument("degree must be positive");
    for (int m : t.mults)
        if (m <= 0) throw InvalidArgument("multiplicities must be positive");
    std::sort(t.mults.begin(), t.mults.end(), std::greater<>());
    return t;
}

Json forest_to_json(const BubbleForest& f) {
    Json nodes = Json::array();
    for (const auto& n : f.nodes) {
        Json o{{"id", n.id}, {"level", n.level}, {"mult", n.mult}, {"on_cubic", n.on_cubic}, {"cubic_mult", n.cubic_mult}};
        o["parent"] = n.parent ? Json(*n.parent) : Json(nullptr);
        switch (n.chart) {
            case Chart::Proper:
                o["chart"] = "proper";
                o["point"] = point_to_json(n.point);
                break;
            case Chart::Slope:
                o["chart"] = "slope";
                o["slope"] = rational_to_json(n.slope);
                break;
            case Chart::Vertical:
                o["chart"] = "vertical";
                break;
        }
        nodes.push_back(o);
    }
    return nodes;
}

BubbleForest forest_from_json(const Json& j) {
    if (!j.is_array()) throw InvalidArgument("forest must be an array of nodes");
    BubbleForest f;
    for (const auto& o : j) {
        ForestNode n;
        n.id = field(o, "id").get<int>();
        if (n.id != static_cast<int>(f.nodes.size())) throw InvalidArgument("forest node ids must be 0, 1, 2, ...");
        if (!field(o, "parent").is_null()) {
            n.parent = o.at("parent").get<int>();
            if (*n.parent < 0 || *n.parent >= n.id) throw InvalidArgument("forest parent must precede its child");
        }
        n.level = field(o, "level").get<int>();
        n.mult = field(o, "mult").get<int>();
        n.on_cubic = field(o, "on_cubic").get<bool>();
        n.cubic_mult = o.value("cubic_mult", n.on_cubic ? 1 : 0);
        const auto chart = field(o, "chart").get<std::string>();
        if (chart == "proper") {
            n.chart = Chart::Proper;
            n.point = projpoint_from_json(field(o, "point"));
        } else if (chart == "slope") {
            n.chart = Chart::Slope;
            n.slope = rational_from_json(field(o, "slope"));
        } else if (chart == "vertical") {
            n.chart = Chart::Vertical;
        } else {
            throw InvalidArgument("unknown chart " + chart);
        }
        if ((n.chart == Chart::Proper) == n.parent.has_value()) throw InvalidArgument("only roots are proper points");
        f.nodes.push_back(n);
    }
    return f;
}

Json link_to_json(const SarkisovLink& l) {
    Json o{{"kind", to_string(l.kind)}, {"vp", l.vp}, {"from", model_to_json(l.from)}, {"to", model_to_json(l.to)}, {"system", l.system}};
    o["center"] = l.center ? Json(*l.center) : Json(nullptr);
    if (l.kind == LinkKind::II) o["case"] = l.case_tag == 0 ? Json("off-cubic") : Json(l.case_tag);
    else o["case"] = nullptr;
    return o;
}

SarkisovLink link_from_json(const Json& j) {
    SarkisovLink l;
    const auto kind = field(j, "kind").get<std::string>();
    if (kind == "I") l.kind = LinkKind::I;
    else if (kind == "II") l.kind = LinkKind::II;
    else if (kind == "III") l.kind = LinkKind::III;
    else if (kind == "IV") l.kind = LinkKind::IV;
    else throw InvalidArgument("unknown link kind " + kind);
    if (!field(j, "center").is_null()) l.center = j.at("center").get<int>();
    l.vp = field(j, "vp").get<bool>();
    l.from = model_from_json(field(j, "from"));
    l.to = model_from_json(field(j, "to"));
    l.system = field(j, "system").get<DivisorClass>();
    const auto& c = field(j, "case");
    if (c.is_number_integer()) l.case_tag = c.get<int>();
    return l;
}

Json quartic_to_json(const QuarticData& q) {
    return {{"A", poly_to_json(q.A())}, {"B", poly_to_json(q.B())}, {"C", poly_to_json(q.C())}};
}

QuarticData quartic_from_json(const Json& j) {
    return QuarticData(hompoly_from_json(field(j, "A"), 3), hompoly_from_json(field(j, "B"), 3), hompoly_from_json(field(j, "C"), 3));
}

}  // namespace vpcremona
