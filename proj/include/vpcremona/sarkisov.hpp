#pragma once

#include "vpcremona/cremona.hpp"
#include "vpcremona/surfaces.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vpcremona {

// A base point of the current linear system. Points with a parent are
// infinitely near to it and become proper once the parent is blown up.
struct EnginePoint {
    int id = 0;
    int mult = 0;
    int cubic_mult = 0;
    std::optional<int> parent;
    bool on_negative_section = false;
    bool fiber_tangent = false;
    int fibre = -1;
    // Direction along the exceptional curve of the parent.
    bool satellite = false;
    // Direction along the fibre through the (proper) parent.
    bool along_fibre = false;
    // The negative section through this point is the exceptional curve it
    // came from, so satellite children lie on the section.
    bool section_is_exceptional = false;

    // Plane data, valid while the state still knows coordinates.
    Chart chart = Chart::Proper;
    ProjPoint point;
    Rational slope;

    bool proper() const { return !parent.has_value(); }
    bool on_cubic() const { return cubic_mult > 0; }
};

struct FactorizationState {
    SurfaceModel model;
    DivisorClass system;
    std::vector<EnginePoint> points;
    CubicTracker cubic;
    int step = 0;
    // Plane coordinates of proper points and chart data are meaningful.
    bool coords_known = false;
    std::optional<HomPoly> cubic_equation;
    int next_id = 0;
    int next_fibre = 0;

    bool terminal() const { return model.is_plane() && system == DivisorClass{1}; }
    const EnginePoint& point(int id) const;
    std::string dump() const;
};

enum class LinkKind { I, II, III, IV };
std::string to_string(LinkKind k);

struct SarkisovLink {
    LinkKind kind = LinkKind::I;
    std::optional<int> center;
    SurfaceModel from, to;
    bool vp = false;
    // Type II only: 1..4, or 0 when the center is off the cubic.
    int case_tag = 0;
    DivisorClass system;  // class after the link
    // Discrepancies of the blown up and contracted divisors, when present.
    std::optional<long> blowup_discrepancy;
    std::optional<long> blowdown_discrepancy;
};

std::string case_label(const SarkisovLink& l);

struct SarkisovTrace {
    std::vector<SarkisovLink> links;
    // states[0] is the input, states[i + 1] the state after links[i].
    std::vector<FactorizationState> states;
    bool all_vp = true;
    std::vector<std::string> warnings;
};

struct FactorizeOptions {
    int step_cap = 64;
    // Assert the Dec(C) invariants: every link vp, admissible models, and
    // cubic class = -K at every step.
    bool assert_dec = false;
};

// Initial plane state from a map's base forest (built with the cubic tracked).
FactorizationState initial_state(const CremonaMap& f, const BubbleForest& forest, const HomPoly& cubic);

std::pair<SarkisovLink, FactorizationState> next_link(const FactorizationState& s);
FactorizationState elementary_transform_update(const FactorizationState& s, int center, SarkisovLink* link = nullptr);
FactorizationState link_III_update(const FactorizationState& s, SarkisovLink* link = nullptr);

SarkisovTrace factorize(const FactorizationState& start, const FactorizeOptions& opts = {});
SarkisovTrace factorize(const CremonaMap& f, const HomPoly& cubic, const FactorizeOptions& opts = {});

struct JonquieresCenter {
    int center;
    bool on_cubic;
};

struct JonquieresReport {
    bool grouped = false;
    std::vector<JonquieresCenter> centers;
    std::string note;
};

// Centers of the type I link and the first type II link of every maximal
// I.II*.III block. The grouping is a convention, reported in `note`.
JonquieresReport jonquieres_centers(const SarkisovTrace& t);

}  // namespace vpcremona
