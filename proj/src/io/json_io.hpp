#pragma once

#include <string>
#include <vector>

#include "algebra/multipoly.hpp"
#include "forms/forms.hpp"
#include "json.hpp"

namespace folres {

using Json = nlohmann::json;

/// Rationals become "a/b" strings; extension elements become
/// {"coeffs": [...], "minpoly": [...]} with coefficients low degree first.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

Json qpoly_to_json(const QPoly& p);
QPoly qpoly_from_json(const Json& j);

/// Rational polynomials are printed as expressions; otherwise the sparse
/// terms are listed with exact coefficients.
Json poly_to_json(const MultiPoly& p, const std::vector<std::string>& names);
Json upoly_to_json(const std::vector<Scalar>& p);

Json point_to_json(const Point& p);
Point point_from_json(const Json& j, std::size_t dim);

/// {"degree": k, "terms": [{"index": [1-based], "coeff": expr}]}
Json form_to_json(const DiffForm& f, const std::vector<std::string>& names);
DiffForm form_from_json(const Json& j, const std::vector<std::string>& names);

}  // namespace folres
