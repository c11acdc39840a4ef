#pragma once

#include "vpcremona/rational.hpp"

#include <optional>
#include <vector>

namespace vpcremona {

using Matrix = std::vector<std::vector<Rational>>;

Rational determinant(Matrix m);
int rank(Matrix m);
// Some solution of m x = rhs, if one exists.
std::optional<std::vector<Rational>> solve(Matrix m, std::vector<Rational> rhs);

}  // namespace vpcremona
