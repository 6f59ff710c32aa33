#pragma once

#include <utility>
#include <vector>

#include "algebra/scalar.hpp"

namespace folres {

/// Dense univariate polynomial over a number field, low degree first.
using UPoly = std::vector<Scalar>;

namespace upoly {

void trim(UPoly& p);
int degree(const UPoly& p);
UPoly add(const UPoly& a, const UPoly& b);
UPoly sub(const UPoly& a, const UPoly& b);
UPoly mul(const UPoly& a, const UPoly& b);
UPoly scale(const UPoly& a, const Scalar& c);
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly monic(const UPoly& a);
UPoly gcd(const UPoly& a, const UPoly& b);
UPoly derivative(const UPoly& a);
Scalar eval(const UPoly& a, const Scalar& x);
/// p(x + c)
UPoly shift(const UPoly& p, const Scalar& c);
/// Truncated product mod x^order.
UPoly mul_trunc(const UPoly& a, const UPoly& b, int order);
FieldPtr field_of(const UPoly& p);
UPoly from_rational(const QPoly& p);

}  // namespace upoly
}  // namespace folres
