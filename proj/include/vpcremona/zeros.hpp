#pragma once

#include "vpcremona/poly.hpp"

#include <span>
#include <vector>

namespace vpcremona {

struct PlaneZeros {
    // Rational common zeros, normalized (last nonzero coordinate 1), sorted.
    std::vector<ProjPoint> points;
    // Common curve components (the gcd of the input), empty when the input
    // polynomials are coprime. Points lying only on a component are not listed.
    std::vector<HomPoly> components;
};

// Rational common zeros of >= 2 ternary forms. Completeness holds over Q
// only: zeros with irrational coordinates are not reported.
PlaneZeros common_zeros_plane(std::span<const HomPoly> polys);

// Rational zeros of binary forms in (s:t); same conventions.
std::vector<ProjPoint> common_zeros_line(std::span<const Poly> binary_forms);

}  // namespace vpcremona
