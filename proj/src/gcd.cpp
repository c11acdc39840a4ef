// Multivariate gcd over Q by recursive primitive pseudo-remainder sequences.

#include "vpcremona/error.hpp"
#include "vpcremona/poly.hpp"

#include <algorithm>
#include <climits>

namespace vpcremona {

namespace {

Poly one(int nvars) { return Poly::constant(nvars, 1); }

Poly content_in(const Poly& a, int var) {
    const int d = a.degree_in(var);
    Poly g(a.nvars());
    for (int k = d; k >= 0; --k) {
        Poly c = a.coefficient_in(var, k);
        if (c.is_zero()) continue;
        g = g.is_zero() ? c.monic() : gcd(g, c);
        if (g.is_constant()) return one(a.nvars());
    }
    return g;
}

Poly primitive_part(const Poly& a, int var) {
    Poly c = content_in(a, var);
    if (c.is_constant()) return a.monic();
    auto q = divide_exact(a, c);
    if (!q) throw ConsistencyError("content does not divide its polynomial");
    return q->monic();
}

Poly var_power(int nvars, int var, int k) {
    Exponent e{};
    e[var] = static_cast<std::uint16_t>(k);
    return Poly::monomial(nvars, e, 1);
}

// Pseudo-remainder of a by b with respect to var.
Poly prem(Poly a, const Poly& b, int var) {
    const int db = b.degree_in(var);
    const Poly lb = b.coefficient_in(var, db);
    int da = a.degree_in(var);
    while (!a.is_zero() && da >= db) {
        const Poly la = a.coefficient_in(var, da);
        a = lb * a - la * var_power(a.nvars(), var, da - db) * b;
        da = a.degree_in(var);
    }
    return a;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
    if (a.nvars() != b.nvars()) throw DimensionMismatch("polynomials have different variable counts");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    const int n = a.nvars();
    if (a.is_constant() || b.is_constant()) return one(n);

    int shared = -1;
    int best = INT_MAX;
    int only_a = -1;
    int only_b = -1;
    for (int v = 0; v < n; ++v) {
        const int da = a.degree_in(v);
        const int db = b.degree_in(v);
        if (da > 0 && db > 0) {
            if (std::max(da, db) < best) {
                best = std::max(da, db);
                shared = v;
            }
        } else if (da > 0) {
            only_a = v;
        } else if (db > 0) {
            only_b = v;
        }
    }
    // A variable missing from one side cannot occur in the gcd.
    if (only_a >= 0) return gcd(content_in(a, only_a), b);
    if (only_b >= 0) return gcd(a, content_in(b, only_b));
    if (shared < 0) return one(n);

    const int v = shared;
    const Poly ca = content_in(a, v);
    const Poly cb = content_in(b, v);
    Poly pa = ca.is_constant() ? a.monic() : divide_exact(a, ca).value().monic();
    Poly pb = cb.is_constant() ? b.monic() : divide_exact(b, cb).value().monic();
    const Poly c = gcd(ca, cb);

    if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
    while (true) {
        Poly r = prem(pa, pb, v);
        if (r.is_zero()) break;
        if (r.degree_in(v) == 0) {
            pb = one(n);
            break;
        }
        pa = std::move(pb);
        pb = primitive_part(r, v);
    }
    return (c * pb).monic();
}

}  // namespace vpcremona
