#pragma once

#include <vector>

#include "algebra/upoly.hpp"

namespace folres {

using ZPoly = std::vector<Integer>;

struct QFactor {
    ZPoly poly;        // primitive, positive leading coefficient, irreducible over Q
    int multiplicity;  // exponent in the input
};

/// Complete factorization over Q of a nonzero univariate polynomial (constant
/// factors dropped).  Square-free decomposition followed by modular factoring
/// with Hensel lifting and factor recombination.
std::vector<QFactor> factor_over_rationals(const QPoly& f);

/// Square-free decomposition (Yun) over a number field: returns monic parts
/// with their multiplicities.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& f);

/// A Galois orbit of roots of a polynomial over a base field.
struct RootCluster {
    Scalar root;              // one representative, an element of `field`
    FieldPtr field;           // the base field itself when relative_degree == 1
    int relative_degree = 1;  // number of conjugate roots over the base field
    int multiplicity = 1;     // root multiplicity
    QPoly label;              // minimal polynomial of the orbit over Q (ordering key)
    bool exceeds_cap = false; // extension would exceed the degree cap; root unset
};

/// All roots of g over `base` grouped into conjugate clusters, adjoining one
/// root per irreducible factor.  Deterministic order: base-field roots first
/// (canonical order), then extension clusters by minimal polynomial.
std::vector<RootCluster> roots_over(const UPoly& g, const FieldPtr& base, int degree_cap);

/// Minimal polynomial over Q of an element of a number field.
QPoly minimal_polynomial(const Scalar& value);

}  // namespace folres
