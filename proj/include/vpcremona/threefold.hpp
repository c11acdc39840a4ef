#pragma once

#include "vpcremona/poly.hpp"

#include <array>
#include <optional>
#include <vector>

namespace vpcremona {

// D = x0^2 A + x0 B + C with A, B, C forms in (x1, x2, x3) of degrees 2, 3, 4.
// A, B, C are stored as ternary forms; D lives in 4 variables.
class QuarticData {
public:
    // Throws InvalidArgument on wrong degrees/arity or when A does not have rank 3.
    QuarticData(HomPoly A, HomPoly B, HomPoly C);

    const HomPoly& A() const { return a_; }
    const HomPoly& B() const { return b_; }
    const HomPoly& C() const { return c_; }
    const HomPoly& D() const { return d_; }
    // The same forms in x0..x3.
    HomPoly lift(const HomPoly& ternary) const;

private:
    HomPoly a_, b_, c_, d_;
};

// Rank of a quadratic form via its symmetric matrix.
int quadric_rank(const HomPoly& q);

// Certificate that D is irreducible over Q: A does not divide both B and C,
// and B^2 - 4AC is not a square at some integer point.
bool irreducibility_certificate(const QuarticData& q);

class SpaceMap {
public:
    explicit SpaceMap(std::span<const HomPoly> components);
    static SpaceMap identity();

    int degree() const { return comps_[0].degree(); }
    const std::array<HomPoly, 4>& components() const { return comps_; }
    bool is_identity() const;
    std::optional<ProjPoint> apply(const ProjPoint& pt) const;

    friend bool operator==(const SpaceMap& a, const SpaceMap& b) { return a.comps_ == b.comps_; }

private:
    std::array<HomPoly, 4> comps_;
};

SpaceMap compose(const SpaceMap& f, const SpaceMap& g);

// (-A x0 - B : A x1 : A x2 : A x3)
SpaceMap build_involution(const QuarticData& q);
bool is_involution(const SpaceMap& f);

struct QuarticPreservation {
    bool preserved = false;
    std::optional<HomPoly> quotient;  // D o f / D
};

QuarticPreservation preserves_quartic(const SpaceMap& f, const QuarticData& q);

// The line joining P = (1:0:0:0) to (0 : p1 : p2 : p3).
struct SpaceLine {
    ProjPoint direction;  // (p1 : p2 : p3)

    ProjPoint point_at(const Rational& s, const Rational& t) const;
};

// The six lines V(A, B) through P; also checks that every component of the
// involution vanishes on each. Throws InvalidArgument when V(A, B) has fewer
// than 6 distinct rational points.
std::vector<SpaceLine> base_lines(const QuarticData& q);

// D restricted to the line, as a binary form in (s, t) of degree 4.
Poly restrict_to_line(const HomPoly& d, const SpaceLine& line);

// True iff some line is not contained in D.
bool bs_not_in_quartic(std::span<const SpaceLine> lines, const QuarticData& q);

// D has multiplicity 2 at P and its tangent cone A has rank 3.
bool ordinary_double_point(const QuarticData& q);

// Desk instances: A = x1 x2 - x3^2, B chosen so that V(A, B) is the points
// (1 : r^2 : r) for the given r.
QuarticData desk_instance(std::span<const Rational> roots);
QuarticData desk_instance();
// A degenerate instance where B is tangent to the conic at one point.
QuarticData tangent_instance();
// C = B * x1, so D contains every line of V(A, B).
QuarticData rigged_instance();

}  // namespace vpcremona
