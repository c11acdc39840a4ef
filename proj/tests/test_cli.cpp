#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "vpcremona/cli.hpp"
#include "vpcremona/json_io.hpp"

using namespace vpcremona;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result call(std::vector<std::string> args, const std::string& input) {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::vector<Json> lines(const std::string& s) {
    std::vector<Json> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) out.push_back(Json::parse(l));
    return out;
}

const std::string kPhiP = R"({"curve":{"p":"0","q":"1"},"P":{"x":"2","y":"3"}})";
const std::string kPQ = R"({"curve":{"p":"0","q":"1"},"P":{"x":"2","y":"3"},"Q":{"x":"0","y":"1"}})";

std::filesystem::path temp_file(const std::string& name) { return std::filesystem::temp_directory_path() / ("vpcremona_" + name); }

}  // namespace

TEST_CASE("translate gives a degree 4 map of type (4;3,1^6)") {
    const auto r = call({"translate"}, kPhiP);
    REQUIRE(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j.at("degree") == 4);
    CHECK(j.at("map").at("deg") == 4);
    CHECK(type_from_json(j.at("homaloidal_type")) == HomaloidalType{4, {3, 1, 1, 1, 1, 1, 1}});
    CHECK(map_from_json(j.at("map")) == translation_map(WeierstrassCurve(0, 1), CurvePoint::affine(2, 3)));
}

TEST_CASE("compose reports degree 10 against 4") {
    const auto r = call({"compose"}, kPQ);
    REQUIRE(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j.at("degree") == 10);
    CHECK(j.at("formula_degree") == 10);
    CHECK(j.at("shared") == 6);
    CHECK(j.at("agree") == true);
    CHECK(j.at("sum_degree") == 4);
    CHECK(j.at("splits") == false);
    const auto m = call({"compose"}, R"({"f":["y*z","x*z","x*y"],"g":["y*z","x*z","x*y"]})");
    REQUIRE(m.code == 0);
    CHECK(Json::parse(m.out).at("degree") == 1);
}

TEST_CASE("curve-add") {
    const auto r = call({"curve-add"}, kPQ);
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.out).at("sum") == Json{{"x", "-1/1"}, {"y", "0/1"}});
    const auto o = call({"curve-add"}, R"({"curve":{"p":"0","q":"1"},"P":{"x":"2","y":"3"},"Q":{"x":"2","y":"-3"}})");
    CHECK(Json::parse(o.out).at("sum") == "O");
}

TEST_CASE("factorize of the identity is an empty trace") {
    const auto r = call({"factorize"}, R"({"map":["x","y","z"],"curve":{"p":"0","q":"1"}})");
    CHECK(r.code == 0);
    CHECK(r.out.empty());
}

TEST_CASE("factorize emits one JSON line per link") {
    const auto r = call({"factorize"}, kPhiP);
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 8);
    CHECK(ls.front().at("kind") == "I");
    CHECK(ls.back().at("kind") == "III");
    for (const auto& l : ls) {
        CHECK(l.at("vp") == true);
        CHECK(l.contains("center"));
        CHECK(l.contains("case"));
        CHECK(l.contains("system"));
        link_from_json(l);
    }
    CHECK(ls[1].at("case") == 3);
    CHECK(ls[2].at("case") == 1);
}

TEST_CASE("trace file and --in") {
    const auto in = temp_file("phi.json");
    const auto trace = temp_file("trace.jsonl");
    std::ofstream(in) << kPhiP;
    const auto r = call({"factorize", "--in", in.string(), "--trace-file", trace.string()}, "");
    REQUIRE(r.code == 0);
    std::ifstream t(trace);
    std::stringstream ss;
    ss << t.rdbuf();
    const auto ls = lines(ss.str());
    REQUIRE(ls.size() == 9);
    CHECK(ls[0].contains("state"));
    CHECK(ls[1].at("link") == lines(r.out)[0]);
    std::filesystem::remove(in);
    std::filesystem::remove(trace);
}

TEST_CASE("dec-check and vp-verify") {
    const auto d = call({"dec-check"}, kPhiP);
    REQUIRE(d.code == 0);
    CHECK(Json::parse(d.out).at("in_dec") == true);
    const auto big = call({"dec-check"}, R"({"curve":{"p":"0","q":"-2"},"P":{"x":"3","y":"5"}})");
    REQUIRE(big.code == 0);
    CHECK(Json::parse(big.out) == Json{{"in_dec", true}, {"samples", 10}});

    const std::string sq = R"({"map":["y*z","x*z","x*y"],"curve":{"p":"0","q":"-2"}})";
    const auto not_dec = call({"dec-check"}, sq);
    CHECK(not_dec.code == 0);
    CHECK(Json::parse(not_dec.out).at("in_dec") == false);
    CHECK(call({"dec-check"}, R"({"map":["y*z","x*z","x*y"],"curve":{"p":"0","q":"-2"},"expect":true})").code == 2);

    const auto v = call({"vp-verify"}, kPhiP);
    REQUIRE(v.code == 0);
    const auto vj = Json::parse(v.out);
    CHECK(vj.at("all_vp") == true);
    CHECK(vj.at("cy_every_step") == true);
    CHECK(vj.at("links") == 8);
    // Not in Dec: a non-vp flag is a result, unless membership was asserted.
    CHECK(call({"vp-verify"}, sq).code == 0);
    CHECK(call({"vp-verify"}, R"({"map":["y*z","x*z","x*y"],"curve":{"p":"0","q":"-2"},"assert_dec":true})").code == 2);
    CHECK(call({"factorize"}, R"({"map":["y*z","x*z","x*y"],"curve":{"p":"0","q":"-2"},"assert_dec":true})").code == 2);
}

TEST_CASE("noether, base-forest, jonquieres") {
    auto r = call({"noether"}, R"({"degree":4,"mults":[2,2,2,1,1,1]})");
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.out).at("noether") == true);
    CHECK(Json::parse(r.out).at("de_jonquieres") == false);
    r = call({"noether"}, R"({"type":{"degree":4,"mults":[3,3]}})");
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.out).at("noether") == false);

    r = call({"base-forest"}, kPhiP);
    REQUIRE(r.code == 0);
    const auto forest = forest_from_json(Json::parse(r.out).at("forest"));
    CHECK(forest.nodes.size() == 7);
    for (const auto& n : forest.nodes) CHECK(n.on_cubic);

    r = call({"jonquieres"}, kPhiP);
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.out).at("grouped") == true);
}

TEST_CASE("threefold-check") {
    auto r = call({"threefold-check"}, R"({"instance":"desk"})");
    REQUIRE(r.code == 0);
    auto j = Json::parse(r.out);
    CHECK(j.at("base_lines") == 6);
    CHECK(j.at("quotient_degree") == 8);
    CHECK(j.at("ok") == true);
    const auto q = quartic_to_json(desk_instance());
    r = call({"threefold-check"}, q.dump());
    CHECK(r.code == 0);
    r = call({"threefold-check"}, R"({"instance":"rigged"})");
    CHECK(r.code == 2);
    CHECK(Json::parse(r.out).at("bs_not_in_quartic") == false);
    r = call({"threefold-check"}, R"({"instance":"tangent"})");
    CHECK(r.code == 2);
    CHECK(Json::parse(r.out).contains("base_lines_error"));
}

TEST_CASE("exit codes") {
    auto r = call({"frobnicate"}, "{}");
    CHECK(r.code == 64);
    CHECK(r.err.find("usage") != std::string::npos);
    CHECK(call({}, "{}").code == 64);
    CHECK(call({"noether"}, "{").code == 1);
    CHECK(call({"noether"}, "[1,2]").code == 1);
    CHECK(call({"noether"}, R"({"degree":4})").code == 1);
    CHECK(call({"translate"}, R"({"curve":{"p":"0","q":"1"},"P":{"x":"1","y":"1"}})").code == 1);
    CHECK(call({"translate"}, R"({"curve":{"p":"0","q":"0"},"P":{"x":"1","y":"1"}})").code == 1);
    CHECK(call({"noether", "--bogus"}, "{}").code == 1);
    CHECK(call({"noether", "--in", "/nonexistent/x.json"}, "").code == 1);
    CHECK(call({"factorize"}, R"({"map":["x^2","y^2","z^2"],"curve":{"p":"0","q":"1"}})").code != 0);
}

TEST_CASE("config file and seed") {
    const auto cfg = temp_file("cfg.json");
    std::ofstream(cfg) << R"({"step_cap": 3, "sample_count": 12, "seed": 9})";
    CHECK(call({"factorize", "--config", cfg.string()}, kPhiP).code == 2);
    const std::string big = R"({"curve":{"p":"0","q":"-2"},"P":{"x":"3","y":"5"}})";
    auto r = call({"dec-check", "--config", cfg.string()}, big);
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.out).at("samples") == 12);
    std::ofstream(cfg) << R"({"sample_count": 2})";
    CHECK(call({"dec-check", "--config", cfg.string()}, big).code == 1);
    std::ofstream(cfg) << R"({"step_cap": 0})";
    CHECK(call({"factorize", "--config", cfg.string()}, kPhiP).code == 1);
    std::ofstream(cfg) << R"({"colour": 1})";
    CHECK(call({"factorize", "--config", cfg.string()}, kPhiP).code == 1);
    std::filesystem::remove(cfg);
}

TEST_CASE("output is byte-identical for a fixed seed") {
    const std::string big = R"({"curve":{"p":"0","q":"-2"},"P":{"x":"3","y":"-5"}})";
    for (const auto* cmd : {"dec-check", "factorize", "vp-verify", "base-forest", "compose"}) {
        const std::string input = std::string(cmd) == "compose" ? kPQ : big;
        const auto a = call({cmd, "--seed", "17"}, input);
        const auto b = call({cmd, "--seed", "17", "--json"}, input);
        CHECK(a.code == 0);
        CHECK(b.code == 0);
        CHECK_FALSE(a.out.empty());
        CHECK(a.out == b.out);
    }
}
