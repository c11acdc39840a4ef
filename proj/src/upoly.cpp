#include "vpcremona/upoly.hpp"

#include "vpcremona/error.hpp"
#include "vpcremona/linalg.hpp"

#include <algorithm>
#include <cstdint>

namespace vpcremona {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UPoly::eval(const Rational& t) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

UPoly UPoly::derivative() const {
    std::vector<Rational> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * static_cast<long>(k));
    return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    std::vector<Rational> c = c_;
    const Rational inv = 1 / c.back();
    for (auto& v : c) v *= inv;
    return UPoly(std::move(c));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return UPoly(std::move(c));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(c));
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw InvalidArgument("division by the zero polynomial");
    std::vector<Rational> r = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {UPoly(), a};
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
    const Rational inv = 1 / b.leading();
    for (int k = a.degree(); k >= db; --k) {
        const Rational f = r[static_cast<std::size_t>(k)] * inv;
        q[static_cast<std::size_t>(k - db)] = f;
        if (f == 0) continue;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= f * b.coeff(j);
    }
    return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a;
    UPoly y = b;
    while (!y.is_zero()) {
        UPoly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

UPoly squarefree_part(const UPoly& a) {
    if (a.degree() <= 0) return a.monic();
    const UPoly g = gcd(a, a.derivative());
    return divmod(a, g).first.monic();
}

namespace {

using IntPoly = std::vector<Integer>;

// Scales to an integer polynomial with content 1.
IntPoly primitive_integer(const UPoly& p) {
    Integer l = 1;
    for (const auto& c : p.coeffs()) l = lcm(l, Integer(c.get_den()));
    IntPoly out;
    Integer g = 0;
    for (const auto& c : p.coeffs()) {
        Rational s = c * l;
        out.push_back(s.get_num());
        g = gcd(g, s.get_num());
    }
    for (auto& v : out) v /= g;
    if (out.back() < 0)
        for (auto& v : out) v = -v;
    return out;
}

Integer eval_mod(const IntPoly& p, const Integer& t, const Integer& m) {
    Integer acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        acc = acc * t + *it;
        acc %= m;
    }
    if (acc < 0) acc += m;
    return acc;
}

IntPoly derivative(const IntPoly& p) {
    IntPoly d;
    for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<unsigned long>(k));
    return d;
}

using ModPoly = std::vector<std::int64_t>;

ModPoly reduce(const IntPoly& p, std::int64_t mod) {
    ModPoly r;
    for (const auto& c : p) {
        Integer v = c % mod;
        if (v < 0) v += mod;
        r.push_back(v.get_si());
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t m) {
    std::int64_t t = 0, nt = 1, r = m, nr = a % m;
    while (nr) {
        const std::int64_t q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    return t < 0 ? t + m : t;
}

int mod_gcd_degree(ModPoly a, ModPoly b, std::int64_t m) {
    while (!b.empty()) {
        const std::int64_t inv = inv_mod(b.back(), m);
        while (a.size() >= b.size()) {
            const std::int64_t f = a.back() * inv % m;
            const std::size_t shift = a.size() - b.size();
            for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = ((a[shift + j] - f * b[j]) % m + m) % m;
            while (!a.empty() && a.back() == 0) a.pop_back();
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return static_cast<int>(a.size()) - 1;
}

// Finds the a/b with |a| <= bound_num, 0 < b <= bound_den and a = b r mod m.
std::optional<Rational> reconstruct(const Integer& r, const Integer& m, const Integer& bound_num, const Integer& bound_den) {
    Integer r0 = m, r1 = r, t0 = 0, t1 = 1;
    while (r1 > bound_num) {
        const Integer q = r0 / r1;
        Integer tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    if (t1 == 0 || abs(t1) > bound_den) return std::nullopt;
    Rational out(t1 < 0 ? Integer(-r1) : r1, abs(t1));
    out.canonicalize();
    return out;
}

// Rational roots of a squarefree integer polynomial of degree >= 2 with a
// nonzero constant term: roots mod p, Hensel lifting, rational reconstruction.
std::vector<Rational> padic_roots(const IntPoly& f) {
    const Integer bound_num = abs(f.front());
    const Integer bound_den = abs(f.back());
    const Integer target = 2 * bound_num * bound_den + 1;
    const IntPoly df = derivative(f);

    Integer p = 97;
    while (true) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        const std::int64_t pl = p.get_si();
        if (f.back() % p == 0) continue;
        const ModPoly fm = reduce(f, pl);
        const ModPoly dm = reduce(df, pl);
        if (dm.empty() || mod_gcd_degree(fm, dm, pl) != 0) continue;

        std::vector<Rational> roots;
        for (std::int64_t r = 0; r < pl; ++r) {
            if (eval_mod(f, r, p) != 0) continue;
            Integer root = r;
            Integer mod = p;
            while (mod < target) {
                const Integer next = mod * mod;
                const Integer fv = eval_mod(f, root, next);
                Integer dv = eval_mod(df, root, next);
                Integer inv;
                mpz_invert(inv.get_mpz_t(), dv.get_mpz_t(), next.get_mpz_t());
                root = (root - fv * inv) % next;
                if (root < 0) root += next;
                mod = next;
            }
            auto cand = reconstruct(root, mod, bound_num, bound_den);
            if (!cand) continue;
            Rational acc = 0;
            for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * *cand + Rational(*it);
            if (acc == 0) roots.push_back(*cand);
        }
        return roots;
    }
}

}  // namespace

std::vector<Rational> rational_roots(const UPoly& p) {
    if (p.is_zero()) throw InvalidArgument("roots of the zero polynomial");
    std::vector<Rational> roots;
    std::vector<Rational> c = p.coeffs();
    if (c.front() == 0) {
        roots.emplace_back(0);
        while (c.front() == 0) c.erase(c.begin());
    }
    const UPoly f = squarefree_part(UPoly(std::move(c)));
    if (f.degree() == 1) {
        roots.push_back(-f.coeff(0) / f.coeff(1));
    } else if (f.degree() >= 2) {
        auto more = padic_roots(primitive_integer(f));
        roots.insert(roots.end(), more.begin(), more.end());
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

UPoly to_upoly(const Poly& p, int var) {
    std::vector<Rational> c(static_cast<std::size_t>(std::max(p.degree_in(var), 0) + 1), Rational(0));
    for (const auto& [e, v] : p.terms()) {
        for (int i = 0; i < p.nvars(); ++i)
            if (i != var && e[i] != 0) throw InvalidArgument("polynomial involves more than one variable");
        c[e[var]] = v;
    }
    return UPoly(std::move(c));
}

namespace {

std::vector<Rational> coefficients_at(const Poly& f, int var, int other, const Rational& at, int formal_degree) {
    std::vector<Rational> c(static_cast<std::size_t>(formal_degree + 1), Rational(0));
    for (const auto& [e, v] : f.terms()) {
        Rational t = v;
        for (int k = 0; k < e[other]; ++k) t *= at;
        c[e[var]] += t;
    }
    return c;
}

}  // namespace

UPoly resultant(const Poly& f, const Poly& g, int var) {
    if (f.nvars() != 2 || g.nvars() != 2) throw DimensionMismatch("resultant expects bivariate polynomials");
    if (f.is_zero() || g.is_zero()) return UPoly();
    const int other = 1 - var;
    const int m = f.degree_in(var);
    const int n = g.degree_in(var);
    const int bound = n * std::max(f.degree_in(other), 0) + m * std::max(g.degree_in(other), 0);
    const std::size_t size = static_cast<std::size_t>(m + n);

    std::vector<Rational> xs;
    std::vector<Rational> ys;
    for (int i = 0; i <= bound; ++i) {
        const Rational at = i;
        const auto fc = coefficients_at(f, var, other, at, m);
        const auto gc = coefficients_at(g, var, other, at, n);
        Matrix syl(size, std::vector<Rational>(size, Rational(0)));
        for (int r = 0; r < n; ++r)
            for (int k = 0; k <= m; ++k) syl[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = fc[static_cast<std::size_t>(m - k)];
        for (int r = 0; r < m; ++r)
            for (int k = 0; k <= n; ++k)
                syl[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + k)] = gc[static_cast<std::size_t>(n - k)];
        xs.push_back(at);
        ys.push_back(size == 0 ? Rational(1) : determinant(std::move(syl)));
    }

    // Newton divided differences, then expansion to the monomial basis.
    std::vector<Rational> dd = ys;
    for (std::size_t level = 1; level < xs.size(); ++level)
        for (std::size_t i = xs.size() - 1; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    UPoly result = UPoly::constant(dd.back());
    for (std::size_t i = xs.size() - 1; i-- > 0;) result = result * UPoly({-xs[i], Rational(1)}) + UPoly::constant(dd[i]);
    return result;
}

}  // namespace vpcremona
