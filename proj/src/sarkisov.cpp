#include "vpcremona/sarkisov.hpp"

#include "vpcremona/error.hpp"

#include <algorithm>
#include <sstream>

namespace vpcremona {

const EnginePoint& FactorizationState::point(int id) const {
    for (const auto& p : points)
        if (p.id == id) return p;
    throw InvalidArgument("no point with id " + std::to_string(id));
}

namespace {

std::string class_string(const DivisorClass& c) {
    std::string out = "[";
    for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + std::to_string(c[i]);
    return out + "]";
}

}  // namespace

std::string FactorizationState::dump() const {
    std::ostringstream os;
    os << "step " << step << " on " << to_string(model) << ", system " << class_string(system) << ", cubic "
       << class_string(cubic.cls) << "\n";
    for (const auto& p : points) {
        os << "  point " << p.id << " mult " << p.mult << " cubic_mult " << p.cubic_mult;
        if (p.parent) os << " over " << *p.parent;
        else os << " fibre " << p.fibre << (p.on_negative_section ? " on-section" : "") << (p.fiber_tangent ? " tangent" : "");
        os << "\n";
    }
    return os.str();
}

std::string to_string(LinkKind k) {
    switch (k) {
        case LinkKind::I: return "I";
        case LinkKind::II: return "II";
        case LinkKind::III: return "III";
        case LinkKind::IV: return "IV";
    }
    return "?";
}

std::string case_label(const SarkisovLink& l) {
    if (l.kind != LinkKind::II) return "";
    if (l.case_tag == 0) return "off-cubic";
    return std::to_string(l.case_tag);
}

namespace {

bool satellite_of(Chart parent, Chart child, const Rational& slope) {
    if (parent == Chart::Slope) return child == Chart::Vertical;
    if (parent == Chart::Vertical) return child == Chart::Slope && slope == 0;
    return false;
}

// Below a point reached through `parent`, the direction of the strict
// transform of the line through the blown up point.
bool along_line_chart(Chart parent, Chart child, const Rational& slope) {
    if (parent == Chart::Slope) return child == Chart::Slope && slope == 0;
    if (parent == Chart::Vertical) return child == Chart::Vertical;
    return false;
}

std::pair<Rational, Rational> direction(const EnginePoint& p) {
    if (p.chart == Chart::Vertical) return {Rational(0), Rational(1)};
    return {Rational(1), p.slope};
}

std::array<int, 2> local_indices(int pivot) {
    std::array<int, 2> idx{};
    int k = 0;
    for (int i = 0; i < 3; ++i)
        if (i != pivot) idx[static_cast<std::size_t>(k++)] = i;
    return idx;
}

ProjPoint cross(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    return ProjPoint({a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]}).normalized();
}

bool proportional(const std::pair<Rational, Rational>& a, const std::pair<Rational, Rational>& b) {
    return a.first * b.second == a.second * b.first;
}

class FibreKeys {
public:
    explicit FibreKeys(int& counter) : counter_(counter) {}
    int key(const ProjPoint& line) {
        for (const auto& [l, k] : seen_)
            if (l == line) return k;
        seen_.emplace_back(line, counter_);
        return counter_++;
    }

private:
    int& counter_;
    std::vector<std::pair<ProjPoint, int>> seen_;
};

void refresh_tracker(FactorizationState& s) {
    s.cubic.point_mults.clear();
    for (const auto& p : s.points)
        if (p.cubic_mult > 0) s.cubic.point_mults[p.id] = p.cubic_mult;
}

bool blowup_half(int m_c, long& discrepancy, CubicTracker& tracker) {
    discrepancy = 1 - m_c;
    if (m_c > 1) {
        tracker.nonsingular = false;
        return false;
    }
    return blowup_vp(m_c).vp;
}

// Link I: blow up the plane at `center`.
FactorizationState link_I_update(const FactorizationState& s, int center, SarkisovLink& link) {
    FactorizationState t = s;
    const EnginePoint A = s.point(center);
    if (!A.proper()) throw ConsistencyError("link I center must be a proper point");
    const long d = s.system[0];
    t.model = SurfaceModel::hirzebruch(1);
    t.system = {d, d - A.mult};
    t.cubic.cls = {s.cubic.cls[0], s.cubic.cls[0] - A.cubic_mult};
    long disc = 0;
    link.vp = blowup_half(A.cubic_mult, disc, t.cubic);
    link.blowup_discrepancy = disc;

    const bool coords = s.coords_known && s.cubic_equation.has_value();
    FibreKeys keys(t.next_fibre);
    std::optional<Poly> local_cubic;
    std::vector<Rational> a;
    std::array<int, 2> aidx{};
    if (coords) {
        a = A.point.normalized().coords();
        aidx = local_indices(A.point.pivot());
        local_cubic = local_equation(*s.cubic_equation, A.point);
    }

    t.points.clear();
    for (const auto& p : s.points) {
        if (p.id == A.id) continue;
        EnginePoint q = p;
        if (p.proper()) {
            q.on_negative_section = false;
            q.fibre = coords ? keys.key(cross(a, p.point.normalized().coords())) : t.next_fibre++;
            q.fiber_tangent = false;
            if (coords && p.on_cubic()) {
                Rational dot = 0;
                for (int k = 0; k < 3; ++k) dot += eval(s.cubic_equation->derivative(k), p.point) * A.point[k];
                q.fiber_tangent = dot == 0;
            }
        } else if (*p.parent == A.id) {
            q.parent.reset();
            q.on_negative_section = true;
            q.section_is_exceptional = true;
            q.fiber_tangent = false;
            if (coords) {
                const auto [du, dv] = direction(p);
                std::vector<Rational> b = a;
                b[static_cast<std::size_t>(aidx[0])] += du;
                b[static_cast<std::size_t>(aidx[1])] += dv;
                q.fibre = keys.key(cross(a, b));
                if (p.on_cubic()) {
                    const std::vector<Poly> subs{Poly::variable(1, 0) * du, Poly::variable(1, 0) * dv};
                    const Poly restricted = local_cubic->substitute(subs);
                    q.fiber_tangent = restricted.is_zero() || restricted.lowest_degree() >= 3;
                }
            } else {
                q.fibre = t.next_fibre++;
            }
        }
        t.points.push_back(q);
    }

    // Directions of second-order points relative to the new fibres.
    for (auto& q : t.points) {
        if (q.proper()) continue;
        const EnginePoint& par = s.point(*q.parent);
        q.along_fibre = false;
        if (!coords) continue;
        if (!par.proper() && *par.parent == A.id) {
            q.along_fibre = along_line_chart(par.chart, q.chart, q.slope);
        } else if (par.proper()) {
            const auto x = par.point.normalized().coords();
            const int piv = par.point.pivot();
            const auto idx = local_indices(piv);
            const std::pair<Rational, Rational> line_dir{A.point[idx[0]] - A.point[piv] * x[static_cast<std::size_t>(idx[0])],
                                                         A.point[idx[1]] - A.point[piv] * x[static_cast<std::size_t>(idx[1])]};
            q.along_fibre = proportional(direction(q), line_dir);
        }
    }
    t.coords_known = false;
    return t;
}

void require_link_II_model(const FactorizationState& s) {
    if (s.model.is_plane()) throw InvalidArgument("elementary transformations need a Hirzebruch model");
}

}  // namespace

FactorizationState elementary_transform_update(const FactorizationState& s, int center, SarkisovLink* link) {
    require_link_II_model(s);
    const EnginePoint P = s.point(center);
    if (!P.proper()) throw ConsistencyError("link II center must be a proper point");
    if (P.mult <= 0) throw InvalidArgument("link II center must have positive multiplicity");
    const int n = s.model.n;
    const long a = s.system[0], b = s.system[1];
    const long alpha = s.cubic.cls[0], beta = s.cubic.cls[1];
    const long m = P.mult, mc = P.cubic_mult;
    const bool on_section = n == 0 || P.on_negative_section;

    FactorizationState t = s;
    if (on_section) {
        t.model = SurfaceModel::hirzebruch(n + 1);
        t.system = {a + b - m, b};
        t.cubic.cls = {alpha + beta - mc, beta};
    } else {
        t.model = SurfaceModel::hirzebruch(n - 1);
        t.system = {a - m, b};
        t.cubic.cls = {alpha - mc, beta};
    }
    const long q_mult = b - m;
    const long q_cubic = beta - mc;
    if (q_mult < 0) throw ConsistencyError("multiplicity " + std::to_string(m) + " exceeds the fibre degree " + std::to_string(b) + "\n" + s.dump());
    if (q_cubic < 0) throw ConsistencyError("cubic multiplicity exceeds its fibre degree\n" + s.dump());

    SarkisovLink l;
    l.kind = LinkKind::II;
    l.center = center;
    l.from = s.model;
    l.to = t.model;
    l.system = t.system;
    long up = 0;
    const bool up_vp = blowup_half(static_cast<int>(mc), up, t.cubic);
    l.blowup_discrepancy = up;
    l.blowdown_discrepancy = blowdown_discrepancy(q_cubic);
    l.vp = up_vp && blowdown_vp(q_cubic);
    const bool tangent = mc > 0 && P.fiber_tangent;
    l.case_tag = mc == 0 ? 0 : (on_section ? (tangent ? 2 : 1) : (tangent ? 4 : 3));

    const int new_fibre = t.next_fibre++;
    const int q_id = t.next_id;
    std::vector<EnginePoint> out;
    std::vector<EnginePoint> into_q;
    for (const auto& p : s.points) {
        if (p.id == P.id) continue;
        EnginePoint x = p;
        if (n == 0 && on_section) x.on_negative_section = false;
        if (p.proper() && p.fibre >= 0 && p.fibre == P.fibre) {
            x.parent = q_id;
            x.satellite = false;
            x.along_fibre = false;
            into_q.push_back(x);
            continue;
        }
        if (!p.proper() && *p.parent == P.id) {
            if (p.along_fibre) {
                x.parent = q_id;
                x.satellite = false;
                x.along_fibre = true;
                into_q.push_back(x);
                continue;
            }
            x.parent.reset();
            x.fibre = new_fibre;
            x.fiber_tangent = false;
            x.on_negative_section = n > 0 && P.on_negative_section && P.section_is_exceptional && p.satellite;
            x.section_is_exceptional = false;
        }
        out.push_back(x);
    }
    // Grandchildren through the new proper points: the new fibre is the
    // exceptional curve of P.
    for (auto& x : out) {
        if (x.proper()) continue;
        const auto par = std::find_if(out.begin(), out.end(), [&](const EnginePoint& y) { return y.id == *x.parent; });
        if (par != out.end() && par->proper() && par->fibre == new_fibre) x.along_fibre = x.satellite;
    }

    bool positive_inside = false;
    for (const auto& x : into_q) positive_inside = positive_inside || x.mult > 0;
    if (q_mult > 0) {
        EnginePoint Q;
        Q.id = q_id;
        Q.mult = static_cast<int>(q_mult);
        Q.cubic_mult = static_cast<int>(q_cubic);
        Q.on_negative_section = !on_section;
        Q.fibre = new_fibre;
        Q.fiber_tangent = Q.cubic_mult > 0 && tangent;
        t.next_id++;
        out.push_back(Q);
        for (auto& x : into_q) out.push_back(x);
    } else if (positive_inside) {
        throw ConsistencyError("points are contracted into a point of multiplicity 0\n" + s.dump());
    }
    t.points = std::move(out);
    refresh_tracker(t);
    ++t.step;
    if (link) *link = l;
    return t;
}

FactorizationState link_III_update(const FactorizationState& s, SarkisovLink* link) {
    if (s.model.is_plane() || s.model.n != 1) throw InvalidArgument("link III needs the model F1");
    const long a = s.system[0], b = s.system[1];
    const long alpha = s.cubic.cls[0], beta = s.cubic.cls[1];
    const long q_mult = a - b;
    const long c_dot_e = alpha - beta;
    if (q_mult < 0) throw ConsistencyError("system meets the negative section negatively\n" + s.dump());
    if (c_dot_e < 0) throw ConsistencyError("the negative section is a boundary component\n" + s.dump());

    FactorizationState t = s;
    t.model = SurfaceModel::plane();
    t.system = {a};
    t.cubic.cls = {alpha};

    SarkisovLink l;
    l.kind = LinkKind::III;
    l.from = s.model;
    l.to = t.model;
    l.system = t.system;
    l.blowdown_discrepancy = blowdown_discrepancy(c_dot_e);
    l.vp = blowdown_vp(c_dot_e);

    const int q_id = t.next_id;
    std::vector<EnginePoint> out;
    bool positive_on_e = false;
    for (const auto& p : s.points) {
        EnginePoint x = p;
        x.fiber_tangent = false;
        x.fibre = -1;
        x.along_fibre = false;
        if (p.proper() && p.on_negative_section) {
            x.parent = q_id;
            x.satellite = false;
            positive_on_e = positive_on_e || p.mult > 0;
        }
        x.on_negative_section = false;
        x.section_is_exceptional = false;
        out.push_back(x);
    }
    if (q_mult > 0) {
        EnginePoint Q;
        Q.id = q_id;
        Q.mult = static_cast<int>(q_mult);
        Q.cubic_mult = static_cast<int>(c_dot_e);
        t.next_id++;
        out.insert(out.begin(), Q);
    } else if (positive_on_e) {
        throw ConsistencyError("base points on a negative section of multiplicity 0\n" + s.dump());
    }
    t.points = std::move(out);
    t.coords_known = false;
    refresh_tracker(t);
    ++t.step;
    if (link) *link = l;
    return t;
}

namespace {

FactorizationState link_IV_update(const FactorizationState& s, SarkisovLink& l) {
    FactorizationState t = s;
    t.model.swapped = !s.model.swapped;
    t.system = {s.system[1], s.system[0]};
    t.cubic.cls = {s.cubic.cls[1], s.cubic.cls[0]};
    for (auto& p : t.points) {
        p.fibre = p.proper() ? t.next_fibre++ : -1;
        p.fiber_tangent = false;
        p.along_fibre = false;
        p.on_negative_section = false;
        p.section_is_exceptional = false;
    }
    l.kind = LinkKind::IV;
    l.from = s.model;
    l.to = t.model;
    l.system = t.system;
    l.vp = true;
    ++t.step;
    return t;
}

std::optional<int> max_point(const FactorizationState& s, const Rational& above) {
    std::optional<int> best;
    int best_mult = 0;
    for (const auto& p : s.points) {
        if (!p.proper() || Rational(p.mult) <= above) continue;
        if (!best || p.mult > best_mult || (p.mult == best_mult && p.id < *best)) {
            best = p.id;
            best_mult = p.mult;
        }
    }
    return best;
}

}  // namespace

FactorizationState initial_state(const CremonaMap& f, const BubbleForest& forest, const HomPoly& cubic) {
    FactorizationState s;
    s.model = SurfaceModel::plane();
    s.system = {f.degree()};
    s.cubic.cls = {3};
    s.cubic.nonsingular = is_nonsingular_cubic(cubic);
    s.cubic_equation = cubic;
    s.coords_known = true;
    for (const auto& n : forest.nodes) {
        EnginePoint p;
        p.id = n.id;
        p.mult = n.mult;
        p.cubic_mult = n.cubic_mult;
        p.parent = n.parent;
        p.chart = n.chart;
        p.point = n.point;
        p.slope = n.slope;
        if (n.parent) p.satellite = satellite_of(forest.node(*n.parent).chart, n.chart, n.slope);
        s.points.push_back(p);
    }
    s.next_id = static_cast<int>(forest.nodes.size());
    refresh_tracker(s);
    return s;
}

std::pair<SarkisovLink, FactorizationState> next_link(const FactorizationState& s) {
    if (s.terminal()) throw InvalidArgument("state is already terminal");
    SarkisovLink l;
    if (s.model.is_plane()) {
        const long d = s.system[0];
        const auto c = d > 1 ? max_point(s, Rational(d, 3)) : std::nullopt;
        if (!c) throw ConsistencyError("stuck: no point above the Sarkisov degree on the plane\n" + s.dump());
        l.kind = LinkKind::I;
        l.center = c;
        l.from = s.model;
        FactorizationState t = link_I_update(s, *c, l);
        l.to = t.model;
        l.system = t.system;
        t.step = s.step + 1;
        refresh_tracker(t);
        return {l, t};
    }
    const long a = s.system[0], b = s.system[1];
    if (auto c = max_point(s, Rational(b, 2))) {
        auto t = elementary_transform_update(s, *c, &l);
        return {l, t};
    }
    if (s.model.n == 1) {
        auto t = link_III_update(s, &l);
        return {l, t};
    }
    if (s.model.n == 0) {
        if (a < b) {
            auto t = link_IV_update(s, l);
            return {l, t};
        }
        if (auto c = max_point(s, Rational(0))) {
            auto t = elementary_transform_update(s, *c, &l);
            return {l, t};
        }
    }
    throw ConsistencyError("stuck: no link applies\n" + s.dump());
}

SarkisovTrace factorize(const FactorizationState& start, const FactorizeOptions& opts) {
    if (opts.step_cap < 1) throw InvalidArgument("step cap must be at least 1");
    SarkisovTrace trace;
    trace.states.push_back(start);
    FactorizationState s = start;
    auto check_dec_state = [&](const FactorizationState& st) {
        if (!opts.assert_dec) return;
        if (!is_mf_cy_admissible(st.model)) throw ConsistencyError("model " + to_string(st.model) + " is not admissible\n" + st.dump());
        if (!st.cubic.is_calabi_yau(st.model)) throw ConsistencyError("cubic class is not -K\n" + st.dump());
    };
    check_dec_state(s);
    while (!s.terminal()) {
        if (static_cast<int>(trace.links.size()) >= opts.step_cap)
            throw ConsistencyError("step cap " + std::to_string(opts.step_cap) + " exceeded\n" + s.dump());
        auto [link, next] = next_link(s);
        // Second route: every blown up or contracted divisor has discrepancy 0.
        bool crepant = true;
        if (link.blowup_discrepancy) crepant = crepant && *link.blowup_discrepancy == 0;
        if (link.blowdown_discrepancy) crepant = crepant && *link.blowdown_discrepancy == 0;
        if (crepant != link.vp) throw ConsistencyError("incidence and discrepancy disagree on link " + std::to_string(trace.links.size()));
        if (opts.assert_dec && !link.vp) throw ConsistencyError("link " + std::to_string(trace.links.size()) + " is not volume preserving\n" + s.dump());
        if (link.kind == LinkKind::III && !trace.links.empty() && trace.links.back().kind == LinkKind::I)
            trace.warnings.push_back("link " + std::to_string(trace.links.size()) + ": type III directly after type I");
        check_dec_state(next);
        trace.all_vp = trace.all_vp && link.vp;
        trace.links.push_back(link);
        trace.states.push_back(next);
        s = std::move(next);
    }
    if (!s.points.empty()) throw ConsistencyError("terminal state keeps base points\n" + s.dump());
    return trace;
}

SarkisovTrace factorize(const CremonaMap& f, const HomPoly& cubic, const FactorizeOptions& opts) {
    ForestOptions fo;
    fo.cubic = cubic;
    const auto forest = base_forest(f, fo);
    return factorize(initial_state(f, forest, cubic), opts);
}

JonquieresReport jonquieres_centers(const SarkisovTrace& t) {
    JonquieresReport r;
    auto flag = [&](std::size_t i) {
        const int c = *t.links[i].center;
        return JonquieresCenter{c, t.states[i].point(c).on_cubic()};
    };
    std::vector<JonquieresCenter> grouped;
    std::size_t i = 0;
    bool ok = true;
    while (i < t.links.size()) {
        if (t.links[i].kind != LinkKind::I) {
            ok = false;
            break;
        }
        grouped.push_back(flag(i));
        std::size_t j = i + 1;
        if (j < t.links.size() && t.links[j].kind == LinkKind::II) grouped.push_back(flag(j));
        while (j < t.links.size() && t.links[j].kind == LinkKind::II) ++j;
        if (j >= t.links.size() || t.links[j].kind != LinkKind::III) {
            ok = false;
            break;
        }
        i = j + 1;
    }
    if (ok) {
        r.grouped = true;
        r.centers = std::move(grouped);
        r.note = "convention: centers of the I link and first II link of each I.II*.III block";
        return r;
    }
    for (std::size_t k = 0; k < t.links.size(); ++k)
        if (t.links[k].center) r.centers.push_back(flag(k));
    r.note = "trace is not block-decomposable; all centers listed without grouping";
    return r;
}

}  // namespace vpcremona
