#pragma once

#include "vpcremona/poly.hpp"

#include <array>
#include <optional>
#include <string>

namespace vpcremona {

// Birational self-map of P^2 given by three ternary forms of one degree,
// stored content-normalized.
class CremonaMap {
public:
    // Throws InvalidArgument on mismatched degrees or wrong arity and
    // ConsistencyError when the components do not define a dominant map.
    explicit CremonaMap(std::span<const HomPoly> components);
    CremonaMap(const HomPoly& f1, const HomPoly& f2, const HomPoly& f3);

    static CremonaMap identity();
    // sigma(x:y:z) = (yz:xz:xy)
    static CremonaMap standard_quadratic();
    // x -> m x for an invertible 3x3 rational matrix.
    static CremonaMap linear(const std::array<std::array<Rational, 3>, 3>& m);

    // sigma o L where L sends a, b, c to the coordinate points; a quadratic
    // map with proper base points exactly a, b, c (not collinear).
    static CremonaMap quadratic_through(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);

    int degree() const { return comps_[0].degree(); }
    const std::array<HomPoly, 3>& components() const { return comps_; }
    bool is_identity() const;

    // Image of pt, or nullopt when pt is a base point.
    std::optional<ProjPoint> apply(const ProjPoint& pt) const;

    friend bool operator==(const CremonaMap& a, const CremonaMap& b) { return a.comps_ == b.comps_; }

private:
    std::array<HomPoly, 3> comps_;
};

// f o g
CremonaMap compose(const CremonaMap& f, const CremonaMap& g);

std::string to_string(const CremonaMap& f);

}  // namespace vpcremona
