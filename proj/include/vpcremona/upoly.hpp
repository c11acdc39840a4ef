#pragma once

#include "vpcremona/poly.hpp"
#include "vpcremona/rational.hpp"

#include <utility>
#include <vector>

namespace vpcremona {

// Dense univariate polynomial over Q, coefficients in ascending order, no
// trailing zeros.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs);

    static UPoly constant(const Rational& c) { return UPoly({c}); }
    static UPoly x() { return UPoly({Rational(0), Rational(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(k)] : Rational(0); }
    const Rational& leading() const { return c_.back(); }

    Rational eval(const Rational& t) const;
    UPoly derivative() const;
    UPoly monic() const;

    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

private:
    void trim();
    std::vector<Rational> c_;
};

// (quotient, remainder); b nonzero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);
UPoly squarefree_part(const UPoly& a);

// Distinct rational roots in increasing order. p must be nonzero.
std::vector<Rational> rational_roots(const UPoly& p);

// Converts a polynomial that only involves `var` into a UPoly in that variable.
UPoly to_upoly(const Poly& p, int var);

// Resultant of two bivariate polynomials eliminating `var` (0 or 1); the
// result is a polynomial in the other variable. Uses the formal degrees of f
// and g in `var`.
UPoly resultant(const Poly& f, const Poly& g, int var);

}  // namespace vpcremona
