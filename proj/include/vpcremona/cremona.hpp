#pragma once

#include "vpcremona/cremona_map.hpp"
#include "vpcremona/elliptic.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace vpcremona {

struct HomaloidalType {
    int degree = 1;
    std::vector<int> mults;  // non-increasing

    friend bool operator==(const HomaloidalType&, const HomaloidalType&) = default;
};

std::string to_string(const HomaloidalType& t);

// Sum m = 3d - 3 and sum m^2 = d^2 - 1.
bool noether_check(const HomaloidalType& t);
// (d; d-1, 1^(2d-2)) or d = 1.
bool is_de_jonquieres(const HomaloidalType& t);
// d e - sum m_i l_i; throws ConsistencyError when negative.
int composition_degree(const HomaloidalType& f, const HomaloidalType& g, std::span<const std::pair<int, int>> shared);

// How a node was reached from its parent. A proper point is a root. Below
// a point with local coordinates (u, v), the slope chart (u, u t) holds the
// directions (1 : t) and the vertical chart (s v, v) the direction (0 : 1).
enum class Chart { Proper, Slope, Vertical };

struct ForestNode {
    int id = 0;
    std::optional<int> parent;
    int level = 0;
    int mult = 0;
    bool on_cubic = false;
    // Multiplicity of the tracked cubic's strict transform here.
    int cubic_mult = 0;
    Chart chart = Chart::Proper;
    ProjPoint point;   // Proper only
    Rational slope;    // Slope only
};

struct BubbleForest {
    std::vector<ForestNode> nodes;

    std::vector<int> children(int id) const;
    std::vector<int> roots() const;
    const ForestNode& node(int id) const { return nodes.at(static_cast<std::size_t>(id)); }
    bool empty() const { return nodes.empty(); }
};

struct ForestOptions {
    std::optional<HomPoly> cubic;
    // Proper base points to use instead of solving for them.
    std::vector<ProjPoint> hints;
    std::uint64_t seed = 0;
    int depth_cap = 64;
};

// Proper and infinitely near base points with multiplicities. Throws
// IrrationalBasePoint when part of the base locus is not rational.
BubbleForest base_forest(const CremonaMap& f, const ForestOptions& opts = {});

HomaloidalType homaloidal_type(const CremonaMap& f, const BubbleForest& forest);
HomaloidalType homaloidal_type(const CremonaMap& f);

// (m, l) pairs for the nodes of two forests that are the same point: equal
// proper root and equal chart path.
std::vector<std::pair<int, int>> shared_base_points(const BubbleForest& a, const BubbleForest& b);

// Throws InvalidArgument when the cubic is singular. Sample points must lie
// on the cubic; the restriction is required to be injective and non-constant
// on those that are not base points.
bool is_in_dec(const CremonaMap& f, const HomPoly& cubic, std::span<const ProjPoint> samples);
bool is_nonsingular_cubic(const HomPoly& cubic);

// phi_{P+Q} o phi_R with R = -(P+Q).
CremonaMap inertia_witness(const WeierstrassCurve& c, const CurvePoint& P, const CurvePoint& Q);

}  // namespace vpcremona
