#include "vpcremona/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "vpcremona/error.hpp"
#include "vpcremona/json_io.hpp"

namespace vpcremona::cli {

namespace {

struct Verification : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Context {
    Config cfg;
    Json input;
    std::ostream& out;
    std::optional<std::string> trace_file;
};

using Command = std::function<int(Context&)>;

bool has(const Json& j, const char* k) { return j.is_object() && j.contains(k); }

const Json& need(const Json& j, const char* k) {
    if (!has(j, k)) throw InvalidArgument(std::string("input needs \"") + k + "\"");
    return j.at(k);
}

CurvePoint point_on(const WeierstrassCurve& c, const Json& j) {
    auto p = curve_point_from_json(j);
    if (!c.contains(p)) throw InvalidArgument("point " + to_string(p) + " is not on the curve");
    return p;
}

// A map from "map", or the translation map of ("curve", "P").
CremonaMap input_map(const Json& in) {
    if (has(in, "map")) return map_from_json(in.at("map"));
    if (has(in, "curve") && has(in, "P")) {
        const auto c = curve_from_json(in.at("curve"));
        return translation_map(c, point_on(c, in.at("P")));
    }
    throw InvalidArgument("input needs \"map\" or \"curve\" and \"P\"");
}

std::optional<HomPoly> input_cubic(const Json& in) {
    if (has(in, "cubic")) {
        auto c = hompoly_from_json(in.at("cubic"), 3);
        if (c.degree() != 3) throw InvalidArgument("cubic must have degree 3");
        return c;
    }
    if (has(in, "curve")) return curve_from_json(in.at("curve")).equation();
    return std::nullopt;
}

HomPoly require_cubic(const Json& in) {
    auto c = input_cubic(in);
    if (!c) throw InvalidArgument("input needs \"cubic\" or \"curve\"");
    return *c;
}

struct Search {
    std::optional<CurvePoint> generator;
    std::vector<CurvePoint> points;  // affine points with small integral x
};

// Small search on an integral model for a point of infinite order.
Search search_points(const WeierstrassCurve& c) {
    Search r;
    if (c == sampling_curve()) r.generator = sampling_generator();
    if (c.p().get_den() != 1 || c.q().get_den() != 1) return r;
    for (long x = -200; x <= 200; ++x) {
        const Rational X(x);
        const Rational rhs = X * X * X + c.p() * X + c.q();
        if (rhs < 0) continue;
        const Integer n = rhs.get_num();
        const Integer root = sqrt(n);
        if (root * root != n) continue;
        for (int sgn : {1, -1}) {
            const auto P = CurvePoint::affine(X, Rational(sgn * root));
            if (std::find(r.points.begin(), r.points.end(), P) == r.points.end()) r.points.push_back(P);
            if (r.generator) continue;
            bool torsion = false;
            for (long k = 1; k <= 12 && !torsion; ++k) torsion = multiply(c, P, k).infinity;
            if (!torsion) r.generator = P;
        }
    }
    return r;
}

std::vector<ProjPoint> dec_samples(const Context& ctx, const HomPoly& cubic) {
    const auto& in = ctx.input;
    std::vector<ProjPoint> out;
    if (has(in, "samples")) {
        for (const auto& s : in.at("samples")) out.push_back(projpoint_from_json(s));
        return out;
    }
    auto curve = has(in, "curve") ? std::optional(curve_from_json(in.at("curve"))) : weierstrass_form(cubic);
    if (!curve) throw InvalidArgument("cannot sample this cubic; pass \"samples\"");
    std::optional<CurvePoint> g;
    const auto found = search_points(*curve);
    if (has(in, "generator")) g = point_on(*curve, in.at("generator"));
    else g = found.generator;
    if (g) {
        for (const auto& p : sample_points(*curve, *g, ctx.cfg.sample_count, ctx.cfg.seed)) out.push_back(p.projective());
    } else {
        // Finite Mordell-Weil group: the points found are all there is to test.
        for (const auto& p : found.points) out.push_back(p.projective());
        if (out.empty()) throw InvalidArgument("no rational points found; pass \"generator\" or \"samples\"");
    }
    return out;
}

void emit(Context& ctx, const Json& j) { ctx.out << j.dump() << '\n'; }

SarkisovTrace run_factorize(const Context& ctx, const CremonaMap& f, const HomPoly& cubic, bool assert_dec) {
    ForestOptions fo;
    fo.cubic = cubic;
    fo.seed = ctx.cfg.seed;
    const auto forest = base_forest(f, fo);
    return factorize(initial_state(f, forest, cubic), {ctx.cfg.step_cap, assert_dec});
}

void write_trace_file(const Context& ctx, const SarkisovTrace& t) {
    if (!ctx.trace_file) return;
    std::ofstream f(*ctx.trace_file);
    if (!f) throw InvalidArgument("cannot write " + *ctx.trace_file);
    f << Json{{"state", t.states.front().dump()}}.dump() << '\n';
    for (std::size_t i = 0; i < t.links.size(); ++i) {
        f << Json{{"link", link_to_json(t.links[i])}, {"state", t.states[i + 1].dump()}}.dump() << '\n';
    }
    for (const auto& w : t.warnings) f << Json{{"warning", w}}.dump() << '\n';
}

int cmd_curve_add(Context& ctx) {
    const auto c = curve_from_json(need(ctx.input, "curve"));
    const auto P = point_on(c, need(ctx.input, "P"));
    const auto Q = point_on(c, need(ctx.input, "Q"));
    emit(ctx, {{"sum", curve_point_to_json(add(c, P, Q))}});
    return Ok;
}

int cmd_translate(Context& ctx) {
    const auto c = curve_from_json(need(ctx.input, "curve"));
    const auto f = translation_map(c, point_on(c, need(ctx.input, "P")));
    emit(ctx, {{"map", map_to_json(f)}, {"degree", f.degree()}, {"homaloidal_type", type_to_json(homaloidal_type(f))}});
    return Ok;
}

int cmd_compose(Context& ctx) {
    const auto& in = ctx.input;
    if (has(in, "f") && has(in, "g")) {
        const auto h = compose(map_from_json(in.at("f")), map_from_json(in.at("g")));
        emit(ctx, {{"map", map_to_json(h)}, {"degree", h.degree()}});
        return Ok;
    }
    const auto c = curve_from_json(need(in, "curve"));
    const auto P = point_on(c, need(in, "P"));
    const auto Q = point_on(c, need(in, "Q"));
    const auto fp = translation_map(c, P);
    const auto fq = translation_map(c, Q);
    const auto h = compose(fq, fp);
    ForestOptions fo;
    fo.cubic = c.equation();
    fo.seed = ctx.cfg.seed;
    const auto forest_p = base_forest(fp, fo);
    const auto forest_q = base_forest(fq, fo);
    // Shared points of phi_P^-1 = phi_{-P} and phi_Q.
    const auto forest_inv = base_forest(translation_map(c, neg(c, P)), fo);
    const auto pairs = shared_base_points(forest_inv, forest_q);
    const int formula = composition_degree(homaloidal_type(fp, forest_p), homaloidal_type(fq, forest_q), pairs);
    const auto sum = add(c, P, Q);
    const int sum_degree = translation_map(c, sum).degree();
    const bool agree = formula == h.degree();
    emit(ctx, {{"degree", h.degree()},
               {"formula_degree", formula},
               {"shared", pairs.size()},
               {"agree", agree},
               {"sum", curve_point_to_json(sum)},
               {"sum_degree", sum_degree},
               {"splits", sum_degree == h.degree()},
               {"map", map_to_json(h)}});
    return agree ? Ok : VerificationFailed;
}

int cmd_dec_check(Context& ctx) {
    const auto f = input_map(ctx.input);
    const auto cubic = require_cubic(ctx.input);
    const auto samples = dec_samples(ctx, cubic);
    const bool in_dec = is_in_dec(f, cubic, samples);
    emit(ctx, {{"in_dec", in_dec}, {"samples", samples.size()}});
    if (has(ctx.input, "expect") && ctx.input.at("expect").get<bool>() != in_dec) return VerificationFailed;
    return Ok;
}

int cmd_base_forest(Context& ctx) {
    const auto f = input_map(ctx.input);
    ForestOptions fo;
    fo.cubic = input_cubic(ctx.input);
    fo.seed = ctx.cfg.seed;
    if (has(ctx.input, "hints"))
        for (const auto& h : ctx.input.at("hints")) fo.hints.push_back(projpoint_from_json(h));
    const auto forest = base_forest(f, fo);
    emit(ctx, {{"forest", forest_to_json(forest)}, {"homaloidal_type", type_to_json(homaloidal_type(f, forest))}});
    return Ok;
}

int cmd_noether(Context& ctx) {
    const auto t = type_from_json(has(ctx.input, "type") ? ctx.input.at("type") : ctx.input);
    const bool ok = noether_check(t);
    emit(ctx, {{"type", type_to_json(t)}, {"noether", ok}, {"de_jonquieres", ok && is_de_jonquieres(t)}});
    return Ok;
}

int cmd_factorize(Context& ctx) {
    const auto f = input_map(ctx.input);
    const auto cubic = require_cubic(ctx.input);
    const auto trace = run_factorize(ctx, f, cubic, ctx.input.value("assert_dec", false));
    write_trace_file(ctx, trace);
    for (const auto& l : trace.links) emit(ctx, link_to_json(l));
    return Ok;
}

int cmd_vp_verify(Context& ctx) {
    const auto f = input_map(ctx.input);
    const auto cubic = require_cubic(ctx.input);
    const auto samples = dec_samples(ctx, cubic);
    const bool in_dec = is_in_dec(f, cubic, samples);
    const auto trace = run_factorize(ctx, f, cubic, false);
    write_trace_file(ctx, trace);
    bool cy = true, admissible = true;
    for (const auto& s : trace.states) {
        cy = cy && s.cubic.is_calabi_yau(s.model);
        admissible = admissible && is_mf_cy_admissible(s.model);
    }
    emit(ctx, {{"in_dec", in_dec},
               {"all_vp", trace.all_vp},
               {"links", trace.links.size()},
               {"cy_every_step", cy},
               {"admissible_every_step", admissible}});
    const bool asserted = ctx.input.value("assert_dec", false);
    if (asserted && !in_dec) return VerificationFailed;
    if (in_dec && !(trace.all_vp && cy && admissible)) return VerificationFailed;
    return Ok;
}

int cmd_jonquieres(Context& ctx) {
    const auto f = input_map(ctx.input);
    const auto trace = run_factorize(ctx, f, require_cubic(ctx.input), false);
    const auto r = jonquieres_centers(trace);
    Json centers = Json::array();
    for (const auto& c : r.centers) centers.push_back({{"center", c.center}, {"on_cubic", c.on_cubic}});
    emit(ctx, {{"grouped", r.grouped}, {"centers", centers}, {"note", r.note}});
    return Ok;
}

QuarticData input_quartic(const Json& in) {
    if (has(in, "instance")) {
        const auto name = in.at("instance").get<std::string>();
        if (name == "desk") return desk_instance();
        if (name == "tangent") return tangent_instance();
        if (name == "rigged") return rigged_instance();
        throw InvalidArgument("unknown instance " + name);
    }
    return quartic_from_json(in);
}

int cmd_threefold_check(Context& ctx) {
    const auto q = input_quartic(ctx.input);
    const auto phi = build_involution(q);
    const bool involution = is_involution(phi);
    const auto pres = preserves_quartic(phi, q);
    Json report{{"involution", involution},
                {"preserves_quartic", pres.preserved},
                {"quotient_degree", pres.quotient ? Json(pres.quotient->degree()) : Json(nullptr)},
                {"ordinary_double_point", ordinary_double_point(q)},
                {"irreducible", irreducibility_certificate(q)}};
    bool lines_ok = false, not_in = false;
    try {
        const auto lines = base_lines(q);
        Json dirs = Json::array();
        for (const auto& l : lines) dirs.push_back(point_to_json(l.direction));
        report["base_lines"] = lines.size();
        report["line_directions"] = dirs;
        lines_ok = lines.size() == 6;
        not_in = bs_not_in_quartic(lines, q);
    } catch (const InvalidArgument& e) {
        report["base_lines"] = nullptr;
        report["base_lines_error"] = e.what();
    }
    report["bs_not_in_quartic"] = not_in;
    const bool ok = involution && pres.preserved && lines_ok && not_in && report["ordinary_double_point"].get<bool>();
    report["ok"] = ok;
    emit(ctx, report);
    return ok ? Ok : VerificationFailed;
}

const std::map<std::string, Command>& commands() {
    static const std::map<std::string, Command> table{
        {"curve-add", cmd_curve_add}, {"translate", cmd_translate},   {"compose", cmd_compose},
        {"dec-check", cmd_dec_check}, {"base-forest", cmd_base_forest}, {"noether", cmd_noether},
        {"factorize", cmd_factorize}, {"vp-verify", cmd_vp_verify},   {"jonquieres", cmd_jonquieres},
        {"threefold-check", cmd_threefold_check},
    };
    return table;
}

Config load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw InvalidArgument("cannot read config " + path);
    const auto j = Json::parse(f);
    if (!j.is_object()) throw InvalidArgument("config must be a JSON object");
    Config c;
    for (const auto& [k, v] : j.items()) {
        if (k == "step_cap") c.step_cap = v.get<int>();
        else if (k == "sample_count") c.sample_count = v.get<int>();
        else if (k == "seed") c.seed = v.get<std::uint64_t>();
        else throw InvalidArgument("unknown config key " + k);
    }
    return c;
}

}  // namespace

std::string usage() {
    std::ostringstream s;
    s << "usage: vpcremona <command> [--in FILE] [--config FILE] [--seed N] [--json] [--trace-file FILE]\n"
      << "commands:";
    for (const auto& [name, cmd] : commands()) s << ' ' << name;
    s << "\ninput is one JSON object on stdin (or --in)\n";
    return s.str();
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact plane Cremona maps preserving a cubic", "vpcremona"};
    std::string command, config_path, in_path, trace_path;
    std::optional<std::uint64_t> seed;
    bool json = true;
    app.add_option("command", command);
    app.add_option("--config", config_path);
    app.add_option("--seed", seed);
    app.add_flag("--json", json);
    app.add_option("--trace-file", trace_path);
    app.add_option("--in", in_path);
    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << usage();
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << usage();
        return Malformed;
    }
    const auto it = commands().find(command);
    if (it == commands().end()) {
        if (!command.empty()) err << "unknown command: " << command << '\n';
        err << usage();
        return Usage;
    }
    try {
        Config cfg = config_path.empty() ? Config{} : load_config(config_path);
        if (seed) cfg.seed = *seed;
        if (cfg.step_cap < 1) throw InvalidArgument("step_cap must be at least 1");
        if (cfg.sample_count < 3) throw InvalidArgument("sample_count must be at least 3");
        Json input;
        if (in_path.empty()) {
            input = Json::parse(in);
        } else {
            std::ifstream f(in_path);
            if (!f) throw InvalidArgument("cannot read " + in_path);
            input = Json::parse(f);
        }
        if (!input.is_object()) throw InvalidArgument("input must be a JSON object");
        Context ctx{cfg, std::move(input), out, trace_path.empty() ? std::nullopt : std::optional(trace_path)};
        return it->second(ctx);
    } catch (const IrrationalBasePoint& e) {
        err << "error: " << e.what() << '\n';
        return VerificationFailed;
    } catch (const ConsistencyError& e) {
        err << "verification failed: " << e.what() << '\n';
        return VerificationFailed;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return Malformed;
    } catch (const Json::exception& e) {
        err << "error: " << e.what() << '\n';
        return Malformed;
    }
}

}  // namespace vpcremona::cli
