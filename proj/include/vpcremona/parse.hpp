#pragma once

#include "vpcremona/poly.hpp"

#include <string_view>

namespace vpcremona {

// Reads expressions such as "z*(y - 3*z)^2 - x^3/2". Variable names follow
// the printer: t (1 var), u v (2), x y z (3), x0..x3 (4).
Poly parse_poly(std::string_view text, int nvars);
HomPoly parse_hom(std::string_view text, int nvars);

}  // namespace vpcremona
