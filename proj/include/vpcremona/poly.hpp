#pragma once

#include "vpcremona/rational.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace vpcremona {

inline constexpr int kMaxVars = 4;

// Exponent vector; entries past nvars are always zero.
using Exponent = std::array<std::uint16_t, kMaxVars>;

// Sparse multivariate polynomial over Q in 1..4 variables. Terms are kept in
// lexicographically descending exponent order and never store a zero
// coefficient.
class Poly {
public:
    using TermMap = std::map<Exponent, Rational, std::greater<Exponent>>;

    Poly() = default;
    explicit Poly(int nvars);

    static Poly constant(int nvars, const Rational& c);
    static Poly variable(int nvars, int index);
    static Poly monomial(int nvars, const Exponent& e, const Rational& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Exponent& e, const Rational& c);
    Rational coefficient(const Exponent& e) const;

    // -1 for the zero polynomial.
    int total_degree() const;
    // Lowest total degree of a term (order of vanishing at the origin); -1 for zero.
    int lowest_degree() const;
    int degree_in(int var) const;
    bool is_homogeneous() const;
    Poly homogeneous_part(int degree) const;

    // Lex-leading term; undefined on zero.
    const Exponent& leading_exponent() const { return terms_.begin()->first; }
    const Rational& leading_coefficient() const { return terms_.begin()->second; }
    Poly monic() const;

    Rational eval(std::span<const Rational> point) const;
    // Replaces variable i by subs[i]; the result lives in subs' variable count.
    Poly substitute(std::span<const Poly> subs) const;
    Poly derivative(int var) const;
    // Coefficient of var^power, as a polynomial in the same variables (var absent).
    Poly coefficient_in(int var, int power) const;
    // Re-embeds into `nvars` variables; mapping[i] is the new index of variable i.
    Poly relabel(int nvars, std::span<const int> mapping) const;

    Poly pow(unsigned k) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend bool operator==(const Poly& a, const Poly& b);

private:
    void check_same_arity(const Poly& o) const;

    int nvars_ = 0;
    TermMap terms_;
};

// Quotient when b divides a exactly, nullopt otherwise. b must be nonzero.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

// Greatest common divisor over Q, normalized monic in lex order; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

std::string to_string(const Poly& p);

// Homogeneous polynomial with a recorded degree. The zero polynomial keeps a
// nominal degree so it can take part in degree-checked sums.
class HomPoly {
public:
    HomPoly() = default;
    // Throws InvalidArgument if p is nonzero and not homogeneous of `degree`.
    HomPoly(Poly p, int degree);
    // p must be nonzero and homogeneous.
    explicit HomPoly(Poly p);

    static HomPoly zero(int nvars, int degree);
    static HomPoly variable(int nvars, int index);
    static HomPoly constant(int nvars, const Rational& c);

    int nvars() const { return poly_.nvars(); }
    int degree() const { return degree_; }
    bool is_zero() const { return poly_.is_zero(); }
    const Poly& poly() const { return poly_; }

    HomPoly pow(unsigned k) const;
    HomPoly derivative(int var) const;

    HomPoly operator-() const { return HomPoly(-poly_, degree_); }
    friend HomPoly operator+(const HomPoly& a, const HomPoly& b);
    friend HomPoly operator-(const HomPoly& a, const HomPoly& b);
    friend HomPoly operator*(const HomPoly& a, const HomPoly& b);
    friend HomPoly operator*(const HomPoly& a, const Rational& c) { return HomPoly(a.poly_ * c, a.degree_); }
    friend HomPoly operator*(const Rational& c, const HomPoly& a) { return a * c; }
    // The zero polynomial compares equal regardless of nominal degree.
    friend bool operator==(const HomPoly& a, const HomPoly& b);

private:
    Poly poly_{3};
    int degree_ = 0;
};

std::string to_string(const HomPoly& p);

// Projective point with rational coordinates, not all zero.
class ProjPoint {
public:
    ProjPoint() = default;
    explicit ProjPoint(std::vector<Rational> coords);
    ProjPoint(std::initializer_list<Rational> coords) : ProjPoint(std::vector<Rational>(coords)) {}

    int dim() const { return static_cast<int>(coords_.size()); }
    const std::vector<Rational>& coords() const { return coords_; }
    const Rational& operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }

    // Scaled so that the last nonzero coordinate is 1.
    ProjPoint normalized() const;
    // Index of the last nonzero coordinate.
    int pivot() const;

    // Projective equality.
    friend bool operator==(const ProjPoint& a, const ProjPoint& b);

private:
    std::vector<Rational> coords_;
};

std::string to_string(const ProjPoint& p);

// Value at the given representative (no rescaling).
Rational eval(const HomPoly& p, const ProjPoint& pt);

// Order of vanishing of p at pt.
int mult_at(const HomPoly& p, const ProjPoint& pt);

// p(maps[0], ..., maps[n-1]); all maps share one degree.
HomPoly substitute(const HomPoly& p, std::span<const HomPoly> maps);

// Divides out the gcd of all components and scales so the lex-leading
// coefficient of the first nonzero component is 1.
std::vector<HomPoly> content_normalize(std::span<const HomPoly> maps);

HomPoly gcd(const HomPoly& a, const HomPoly& b);
std::optional<HomPoly> divide_exact(const HomPoly& a, const HomPoly& b);

// Dehomogenizes at the coordinate `pivot` of `at` and translates `at` to the
// origin; the other coordinates become the local variables in increasing order.
Poly local_equation(const HomPoly& p, const ProjPoint& at);

}  // namespace vpcremona
