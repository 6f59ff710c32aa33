#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "algebra/multipoly.hpp"
#include "algebra/upoly.hpp"

namespace folres {

/// q with a = b*q; throws NotDivisible when b does not divide a.
MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b);

/// Homogeneous part of degree k of p(x + base).
MultiPoly jet(const MultiPoly& p, const std::vector<Scalar>& base, unsigned k);
MultiPoly jet(const MultiPoly& p, unsigned k);

/// Scales p so that its graded-lex leading coefficient is 1.
MultiPoly normalize_leading(const MultiPoly& p);

/// Polynomial gcd, normalized by leading coefficient; gcd(0, 0) = 0.
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

struct ContentSplit {
    MultiPoly content;
    std::vector<MultiPoly> primitive;
};

/// Common factor of all inputs and the quotients; throws AllZero.
ContentSplit content_and_primitive(const std::vector<MultiPoly>& coeffs);

/// Coefficients of p as a polynomial in variable `var`, lowest power first.
std::vector<MultiPoly> coefficients_in(const MultiPoly& p, std::size_t var);

/// Coefficient of x^{-1} in the Laurent expansion of num/den at 0.
Scalar residue_at_zero(const UPoly& num, const UPoly& den);
/// One-variable polynomials (only variable 0 may occur).
Scalar residue_at_zero(const MultiPoly& num, const MultiPoly& den);

/// The non-negative rational square root, if one exists.
std::optional<Rational> is_rational_square(const Rational& s);

/// Restricts a polynomial in which only variable `var` occurs to a dense
/// univariate polynomial.
UPoly to_univariate(const MultiPoly& p, std::size_t var);
MultiPoly from_univariate(const UPoly& p, std::size_t nvars, std::size_t var);

}  // namespace folres
