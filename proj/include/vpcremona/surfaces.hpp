#pragma once

#include "vpcremona/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace vpcremona {

// P^2 with basis [H], or the Hirzebruch surface F_n with basis [F, E]
// (fibre, negative section). On F_0 `swapped` records which ruling is
// currently the fibration.
struct SurfaceModel {
    enum class Kind { Plane, Hirzebruch };
    Kind kind = Kind::Plane;
    int n = 0;
    bool swapped = false;

    static SurfaceModel plane() { return {}; }
    static SurfaceModel hirzebruch(int n);

    bool is_plane() const { return kind == Kind::Plane; }
    int rank() const { return is_plane() ? 1 : 2; }

    friend bool operator==(const SurfaceModel& a, const SurfaceModel& b) {
        return a.kind == b.kind && (a.is_plane() || a.n == b.n);
    }
};

std::string to_string(const SurfaceModel& m);

using DivisorClass = std::vector<long>;

long intersect(const SurfaceModel& m, const DivisorClass& a, const DivisorClass& b);
DivisorClass canonical_class(const SurfaceModel& m);
DivisorClass anticanonical_class(const SurfaceModel& m);
bool is_mf_cy_admissible(const SurfaceModel& m);

struct BlowupVp {
    bool vp;
    int discrepancy;
};

// Blowing up a point of multiplicity m in {0, 1} on a nonsingular boundary.
BlowupVp blowup_vp(int m);
// Contracting a (-1)-curve E meeting the boundary in C.E points.
bool blowdown_vp(long c_dot_e);
// Discrepancy of the contracted curve: 1 - C.E.
long blowdown_discrepancy(long c_dot_e);

Rational sarkisov_degree(const SurfaceModel& m, const DivisorClass& g);

// The class of the boundary plus its multiplicities at tracked points.
struct CubicTracker {
    DivisorClass cls;
    std::map<int, int> point_mults;
    bool nonsingular = true;

    bool is_calabi_yau(const SurfaceModel& m) const { return cls == anticanonical_class(m); }
};

}  // namespace vpcremona
