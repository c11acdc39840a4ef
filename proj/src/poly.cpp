#include "vpcremona/poly.hpp"

#include "vpcremona/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace vpcremona {

namespace {

void check_nvars(int n) {
    if (n < 1 || n > kMaxVars) throw DimensionMismatch("variable count must be in 1..4");
}

int exponent_sum(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

Exponent add_exponents(const Exponent& a, const Exponent& b) {
    Exponent r{};
    for (int i = 0; i < kMaxVars; ++i) r[i] = static_cast<std::uint16_t>(a[i] + b[i]);
    return r;
}

bool divides(const Exponent& a, const Exponent& b) {
    for (int i = 0; i < kMaxVars; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponent sub_exponents(const Exponent& a, const Exponent& b) {
    Exponent r{};
    for (int i = 0; i < kMaxVars; ++i) r[i] = static_cast<std::uint16_t>(a[i] - b[i]);
    return r;
}

}  // namespace

Poly::Poly(int nvars) : nvars_(nvars) { check_nvars(nvars); }

Poly Poly::constant(int nvars, const Rational& c) {
    Poly p(nvars);
    p.add_term(Exponent{}, c);
    return p;
}

Poly Poly::variable(int nvars, int index) {
    Poly p(nvars);
    if (index < 0 || index >= nvars) throw DimensionMismatch("variable index out of range");
    Exponent e{};
    e[index] = 1;
    p.add_term(e, 1);
    return p;
}

Poly Poly::monomial(int nvars, const Exponent& e, const Rational& c) {
    Poly p(nvars);
    p.add_term(e, c);
    return p;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && exponent_sum(terms_.begin()->first) == 0); }

void Poly::add_term(const Exponent& e, const Rational& c) {
    if (c == 0) return;
    for (int i = nvars_; i < kMaxVars; ++i)
        if (e[i] != 0) throw DimensionMismatch("exponent uses a variable beyond nvars");
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational Poly::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, exponent_sum(e));
    return d;
}

int Poly::lowest_degree() const {
    if (terms_.empty()) return -1;
    int d = exponent_sum(terms_.begin()->first);
    for (const auto& [e, c] : terms_) d = std::min(d, exponent_sum(e));
    return d;
}

int Poly::degree_in(int var) const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
    return d;
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = exponent_sum(terms_.begin()->first);
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return exponent_sum(t.first) == d; });
}

Poly Poly::homogeneous_part(int degree) const {
    Poly r(nvars_);
    for (const auto& [e, c] : terms_)
        if (exponent_sum(e) == degree) r.terms_.emplace_hint(r.terms_.end(), e, c);
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    Poly r = *this;
    r *= 1 / leading_coefficient();
    return r;
}

Rational Poly::eval(std::span<const Rational> point) const {
    if (static_cast<int>(point.size()) != nvars_) throw DimensionMismatch("evaluation point has the wrong arity");
    // Power tables keep this linear in the number of terms.
    std::vector<std::vector<Rational>> powers(static_cast<std::size_t>(nvars_));
    for (int v = 0; v < nvars_; ++v) {
        const int d = degree_in(v);
        auto& pv = powers[static_cast<std::size_t>(v)];
        pv.assign(static_cast<std::size_t>(std::max(d, 0) + 1), Rational(1));
        for (int k = 1; k <= d; ++k) pv[static_cast<std::size_t>(k)] = pv[static_cast<std::size_t>(k - 1)] * point[static_cast<std::size_t>(v)];
    }
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (int v = 0; v < nvars_; ++v)
            if (e[v]) t *= powers[static_cast<std::size_t>(v)][e[v]];
        acc += t;
    }
    return acc;
}

Poly Poly::substitute(std::span<const Poly> subs) const {
    if (static_cast<int>(subs.size()) != nvars_) throw DimensionMismatch("substitution needs one polynomial per variable");
    const int target = subs.empty() ? nvars_ : subs.front().nvars();
    for (const auto& s : subs)
        if (s.nvars() != target) throw DimensionMismatch("substituted polynomials disagree on variable count");

    std::vector<std::vector<Poly>> powers(static_cast<std::size_t>(nvars_));
    for (int v = 0; v < nvars_; ++v) {
        const int d = degree_in(v);
        auto& pv = powers[static_cast<std::size_t>(v)];
        pv.push_back(Poly::constant(target, 1));
        for (int k = 1; k <= d; ++k) pv.push_back(pv.back() * subs[static_cast<std::size_t>(v)]);
    }
    Poly acc(target);
    for (const auto& [e, c] : terms_) {
        Poly t = Poly::constant(target, c);
        for (int v = 0; v < nvars_; ++v)
            if (e[v]) t = t * powers[static_cast<std::size_t>(v)][e[v]];
        acc += t;
    }
    return acc;
}

Poly Poly::derivative(int var) const {
    Poly r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponent f = e;
        --f[var];
        r.add_term(f, c * e[var]);
    }
    return r;
}

Poly Poly::coefficient_in(int var, int power) const {
    Poly r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] != power) continue;
        Exponent f = e;
        f[var] = 0;
        r.terms_.emplace(f, c);
    }
    return r;
}

Poly Poly::relabel(int nvars, std::span<const int> mapping) const {
    if (static_cast<int>(mapping.size()) != nvars_) throw DimensionMismatch("relabel mapping has the wrong length");
    Poly r(nvars);
    for (const auto& [e, c] : terms_) {
        Exponent f{};
        for (int v = 0; v < nvars_; ++v) {
            if (!e[v]) continue;
            const int to = mapping[static_cast<std::size_t>(v)];
            if (to < 0 || to >= nvars) throw DimensionMismatch("relabel target out of range");
            f[to] = static_cast<std::uint16_t>(f[to] + e[v]);
        }
        r.add_term(f, c);
    }
    return r;
}

Poly Poly::pow(unsigned k) const {
    Poly result = Poly::constant(nvars_, 1);
    Poly base = *this;
    while (k) {
        if (k & 1u) result = result * base;
        k >>= 1u;
        if (k) base = base * base;
    }
    return result;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

void Poly::check_same_arity(const Poly& o) const {
    if (nvars_ != o.nvars_) throw DimensionMismatch("polynomials have different variable counts");
}

Poly& Poly::operator+=(const Poly& o) {
    check_same_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_same_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.check_same_arity(b);
    Poly r(a.nvars_);
    Rational t;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            t = ca * cb;
            r.add_term(add_exponents(ea, eb), t);
        }
    return r;
}

bool operator==(const Poly& a, const Poly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw InvalidArgument("division by the zero polynomial");
    if (a.nvars() != b.nvars()) throw DimensionMismatch("polynomials have different variable counts");
    Poly q(a.nvars());
    Poly r = a;
    const Exponent& lb = b.leading_exponent();
    const Rational lc_inv = 1 / b.leading_coefficient();
    while (!r.is_zero()) {
        const Exponent& lr = r.leading_exponent();
        if (!divides(lb, lr)) return std::nullopt;
        Poly t = Poly::monomial(a.nvars(), sub_exponents(lr, lb), r.leading_coefficient() * lc_inv);
        q += t;
        r -= t * b;
    }
    return q;
}

namespace {

std::string var_name(int nvars, int i) {
    static const char* three[] = {"x", "y", "z"};
    static const char* two[] = {"u", "v"};
    if (nvars == 3) return three[i];
    if (nvars == 2) return two[i];
    if (nvars == 1) return "t";
    return "x" + std::to_string(i);
}

}  // namespace

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        const bool unit_monomial = exponent_sum(e) == 0;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool need_star = false;
        if (mag != 1 || unit_monomial) {
            os << mag.get_str();
            need_star = true;
        }
        for (int v = 0; v < p.nvars(); ++v) {
            if (!e[v]) continue;
            if (need_star) os << "*";
            os << var_name(p.nvars(), v);
            if (e[v] > 1) os << "^" << e[v];
            need_star = true;
        }
    }
    return os.str();
}

HomPoly::HomPoly(Poly p, int degree) : poly_(std::move(p)), degree_(degree) {
    if (degree < 0) throw InvalidArgument("negative degree");
    if (!poly_.is_zero() && (!poly_.is_homogeneous() || poly_.total_degree() != degree))
        throw InvalidArgument("polynomial is not homogeneous of the stated degree");
}

HomPoly::HomPoly(Poly p) : poly_(std::move(p)) {
    if (poly_.is_zero()) throw InvalidArgument("cannot infer the degree of the zero polynomial");
    if (!poly_.is_homogeneous()) throw InvalidArgument("polynomial is not homogeneous");
    degree_ = poly_.total_degree();
}

HomPoly HomPoly::zero(int nvars, int degree) { return HomPoly(Poly(nvars), degree); }
HomPoly HomPoly::variable(int nvars, int index) { return HomPoly(Poly::variable(nvars, index), 1); }
HomPoly HomPoly::constant(int nvars, const Rational& c) { return HomPoly(Poly::constant(nvars, c), 0); }

HomPoly HomPoly::pow(unsigned k) const { return HomPoly(poly_.pow(k), degree_ * static_cast<int>(k)); }

HomPoly HomPoly::derivative(int var) const { return HomPoly(poly_.derivative(var), std::max(degree_ - 1, 0)); }

namespace {

int sum_degree(const HomPoly& a, const HomPoly& b) {
    if (a.is_zero()) return b.degree();
    if (b.is_zero()) return a.degree();
    if (a.degree() != b.degree()) throw InvalidArgument("adding homogeneous polynomials of different degrees");
    return a.degree();
}

}  // namespace

HomPoly operator+(const HomPoly& a, const HomPoly& b) {
    const int d = sum_degree(a, b);
    return HomPoly(a.poly_ + b.poly_, d);
}

HomPoly operator-(const HomPoly& a, const HomPoly& b) {
    const int d = sum_degree(a, b);
    return HomPoly(a.poly_ - b.poly_, d);
}

HomPoly operator*(const HomPoly& a, const HomPoly& b) { return HomPoly(a.poly_ * b.poly_, a.degree_ + b.degree_); }

bool operator==(const HomPoly& a, const HomPoly& b) {
    if (a.is_zero() && b.is_zero()) return a.nvars() == b.nvars();
    return a.degree_ == b.degree_ && a.poly_ == b.poly_;
}

std::string to_string(const HomPoly& p) { return to_string(p.poly()); }

ProjPoint::ProjPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw DimensionMismatch("projective point needs coordinates");
    if (std::all_of(coords_.begin(), coords_.end(), [](const Rational& r) { return r == 0; }))
        throw InvalidArgument("projective point with all coordinates zero");
}

int ProjPoint::pivot() const {
    for (int i = dim() - 1; i >= 0; --i)
        if (coords_[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

ProjPoint ProjPoint::normalized() const {
    const Rational s = 1 / coords_[static_cast<std::size_t>(pivot())];
    std::vector<Rational> c = coords_;
    for (auto& v : c) v *= s;
    return ProjPoint(std::move(c));
}

bool operator==(const ProjPoint& a, const ProjPoint& b) {
    if (a.dim() != b.dim()) return false;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = i + 1; j < a.dim(); ++j)
            if (a[i] * b[j] != a[j] * b[i]) return false;
    return true;
}

std::string to_string(const ProjPoint& p) {
    std::string s = "(";
    for (int i = 0; i < p.dim(); ++i) {
        if (i) s += ":";
        s += p[i].get_str();
    }
    return s + ")";
}

Rational eval(const HomPoly& p, const ProjPoint& pt) {
    if (pt.dim() != p.nvars()) throw DimensionMismatch("point and polynomial live in different spaces");
    return p.poly().eval(pt.coords());
}

Poly local_equation(const HomPoly& p, const ProjPoint& at) {
    if (at.dim() != p.nvars()) throw DimensionMismatch("point and polynomial live in different spaces");
    const int n = p.nvars();
    const ProjPoint a = at.normalized();
    const int piv = a.pivot();
    const int local_n = n - 1;
    std::vector<Poly> subs;
    subs.reserve(static_cast<std::size_t>(n));
    int next = 0;
    for (int i = 0; i < n; ++i) {
        if (i == piv) {
            subs.push_back(Poly::constant(local_n, 1));
        } else {
            subs.push_back(Poly::variable(local_n, next++) + Poly::constant(local_n, a[i]));
        }
    }
    return p.poly().substitute(subs);
}

int mult_at(const HomPoly& p, const ProjPoint& pt) {
    if (p.is_zero()) throw InvalidArgument("multiplicity of the zero polynomial is undefined");
    if (pt.dim() != p.nvars()) throw DimensionMismatch("point and polynomial live in different spaces");
    return local_equation(p, pt).lowest_degree();
}

HomPoly substitute(const HomPoly& p, std::span<const HomPoly> maps) {
    if (static_cast<int>(maps.size()) != p.nvars()) throw DimensionMismatch("substitution needs one polynomial per variable");
    const int e = maps.front().degree();
    for (const auto& m : maps)
        if (m.degree() != e) throw InvalidArgument("substituted polynomials have different degrees");
    std::vector<Poly> polys;
    polys.reserve(maps.size());
    for (const auto& m : maps) polys.push_back(m.poly());
    return HomPoly(p.poly().substitute(polys), p.degree() * e);
}

HomPoly gcd(const HomPoly& a, const HomPoly& b) {
    Poly g = gcd(a.poly(), b.poly());
    if (g.is_zero()) return HomPoly::zero(a.nvars(), 0);
    return HomPoly(std::move(g));
}

std::optional<HomPoly> divide_exact(const HomPoly& a, const HomPoly& b) {
    auto q = divide_exact(a.poly(), b.poly());
    if (!q) return std::nullopt;
    return HomPoly(std::move(*q), a.degree() - b.degree());
}

std::vector<HomPoly> content_normalize(std::span<const HomPoly> maps) {
    if (maps.empty()) throw InvalidArgument("content_normalize needs at least one component");
    const bool all_zero = std::all_of(maps.begin(), maps.end(), [](const HomPoly& h) { return h.is_zero(); });
    if (all_zero) throw InvalidArgument("all components are zero");

    // Cheapest components first keeps the running gcd small.
    std::vector<const HomPoly*> order;
    for (const auto& m : maps)
        if (!m.is_zero()) order.push_back(&m);
    std::sort(order.begin(), order.end(), [](const HomPoly* x, const HomPoly* y) { return x->poly().size() < y->poly().size(); });

    Poly g = order.front()->poly();
    for (std::size_t i = 1; i < order.size() && g.total_degree() > 0; ++i) g = gcd(g, order[i]->poly());
    g = g.monic();

    std::vector<HomPoly> out;
    out.reserve(maps.size());
    const int gd = g.total_degree();
    for (const auto& m : maps) {
        if (m.is_zero()) {
            out.push_back(HomPoly::zero(m.nvars(), m.degree() - gd));
            continue;
        }
        auto q = divide_exact(m.poly(), g);
        if (!q) throw ConsistencyError("gcd does not divide a component");
        out.emplace_back(std::move(*q), m.degree() - gd);
    }
    Rational lead;
    for (const auto& h : out)
        if (!h.is_zero()) {
            lead = h.poly().leading_coefficient();
            break;
        }
    const Rational s = 1 / lead;
    for (auto& h : out) h = h * s;
    return out;
}

}  // namespace vpcremona
