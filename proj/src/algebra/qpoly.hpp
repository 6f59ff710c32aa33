#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace folres {

using Rational = mpq_class;
using Integer = mpz_class;

/// Dense univariate polynomial over Q, coefficients stored low degree first.
/// The zero polynomial is the empty vector.
using QPoly = std::vector<Rational>;

namespace qpoly {

void trim(QPoly& p);
int degree(const QPoly& p);  // -1 for zero
const Rational& lead(const QPoly& p);

QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly scale(const QPoly& a, const Rational& c);
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly rem(const QPoly& a, const QPoly& b);
QPoly monic(const QPoly& a);
QPoly gcd(const QPoly& a, const QPoly& b);
/// Returns (g, s, t) with s*a + t*b = g monic.
struct ExtGcd {
    QPoly g, s, t;
};
ExtGcd ext_gcd(const QPoly& a, const QPoly& b);
QPoly derivative(const QPoly& a);
Rational eval(const QPoly& a, const Rational& x);
Rational resultant(QPoly a, QPoly b);

std::string to_string(const QPoly& p, const std::string& var = "t");

}  // namespace qpoly
}  // namespace folres
