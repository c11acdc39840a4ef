#include "vpcremona/surfaces.hpp"

#include "vpcremona/error.hpp"

namespace vpcremona {

SurfaceModel SurfaceModel::hirzebruch(int n) {
    if (n < 0) throw InvalidArgument("Hirzebruch index must be non-negative");
    SurfaceModel m;
    m.kind = Kind::Hirzebruch;
    m.n = n;
    return m;
}

std::string to_string(const SurfaceModel& m) { return m.is_plane() ? "P2" : "F" + std::to_string(m.n); }

namespace {

void check_class(const SurfaceModel& m, const DivisorClass& d) {
    if (static_cast<int>(d.size()) != m.rank())
        throw DimensionMismatch("class of length " + std::to_string(d.size()) + " on " + to_string(m));
}

}  // namespace

long intersect(const SurfaceModel& m, const DivisorClass& a, const DivisorClass& b) {
    check_class(m, a);
    check_class(m, b);
    if (m.is_plane()) return a[0] * b[0];
    // F^2 = 0, F.E = 1, E^2 = -n
    return a[0] * b[1] + a[1] * b[0] - m.n * a[1] * b[1];
}

DivisorClass canonical_class(const SurfaceModel& m) {
    if (m.is_plane()) return {-3};
    return {-(m.n + 2), -2};
}

DivisorClass anticanonical_class(const SurfaceModel& m) {
    DivisorClass k = canonical_class(m);
    for (auto& v : k) v = -v;
    return k;
}

bool is_mf_cy_admissible(const SurfaceModel& m) { return m.is_plane() || m.n <= 2; }

BlowupVp blowup_vp(int m) {
    if (m < 0) throw InvalidArgument("negative multiplicity");
    if (m > 1) throw InvalidArgument("boundary multiplicity above 1 contradicts a nonsingular boundary");
    return {m == 1, 1 - m};
}

bool blowdown_vp(long c_dot_e) {
    if (c_dot_e < 0) throw InvalidArgument("negative intersection with the contracted curve");
    return c_dot_e == 1;
}

long blowdown_discrepancy(long c_dot_e) {
    if (c_dot_e < 0) throw InvalidArgument("negative intersection with the contracted curve");
    return 1 - c_dot_e;
}

Rational sarkisov_degree(const SurfaceModel& m, const DivisorClass& g) {
    check_class(m, g);
    Rational r = m.is_plane() ? Rational(g[0], 3) : Rational(g[1], 2);
    r.canonicalize();
    return r;
}

}  // namespace vpcremona
