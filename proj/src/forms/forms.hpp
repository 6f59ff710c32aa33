#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "algebra/multipoly.hpp"

namespace folres {

using Point = std::vector<Scalar>;

struct VectorField {
    std::vector<MultiPoly> components;

    VectorField() = default;
    explicit VectorField(std::vector<MultiPoly> comps);

    std::size_t nvars() const { return components.size(); }
    const MultiPoly& operator[](std::size_t i) const { return components[i]; }

    /// X(f) = sum X_i df/dx_i
    MultiPoly apply(const MultiPoly& f) const;

    static VectorField radial(std::size_t n);
};

/// Exterior k-form with polynomial coefficients, keyed by strictly increasing
/// index tuples.  Sign normalization happens on insertion.
class DiffForm {
public:
    using Index = std::vector<std::size_t>;
    using Terms = std::map<Index, MultiPoly>;

    DiffForm() = default;
    DiffForm(std::size_t nvars, std::size_t degree) : nvars_(nvars), degree_(degree) {}

    static DiffForm function(const MultiPoly& f);
    static DiffForm dx(std::size_t nvars, std::size_t i);
    /// sum coeffs[i] dx_i
    static DiffForm one_form(const std::vector<MultiPoly>& coeffs);

    std::size_t nvars() const { return nvars_; }
    std::size_t degree() const { return degree_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Adds c dx_{idx[0]} ^ ... in any index order.
    void add(Index idx, const MultiPoly& c);
    MultiPoly coeff(const Index& idx) const;
    /// Coefficient of a 0-form.
    MultiPoly scalar_part() const { return coeff({}); }

    DiffForm& operator+=(const DiffForm& o);
    DiffForm& operator-=(const DiffForm& o);
    DiffForm operator-() const;
    friend DiffForm operator+(DiffForm a, const DiffForm& b) { return a += b; }
    friend DiffForm operator-(DiffForm a, const DiffForm& b) { return a -= b; }
    friend DiffForm operator*(const MultiPoly& f, const DiffForm& a);
    friend DiffForm operator*(const Scalar& c, const DiffForm& a);
    friend bool operator==(const DiffForm& a, const DiffForm& b);
    friend bool operator!=(const DiffForm& a, const DiffForm& b) { return !(a == b); }

    /// Coefficients evaluated at a point.
    std::map<Index, Scalar> evaluate(const Point& p) const;

    std::string to_string(const std::vector<std::string>& names) const;
    std::string to_string() const;

private:
    void check_same(const DiffForm& o) const;
    std::size_t nvars_ = 0;
    std::size_t degree_ = 0;
    Terms terms_;
};

DiffForm wedge(const DiffForm& a, const DiffForm& b);
DiffForm exterior_derivative(const DiffForm& a);
DiffForm interior_product(const VectorField& v, const DiffForm& a);
/// L_v = i_v d + d i_v
DiffForm lie_derivative(const VectorField& v, const DiffForm& a);
/// Pullback along x_i = images[i](s); result lives in the images' ring.
DiffForm pullback(const DiffForm& a, const std::vector<MultiPoly>& images);
/// Pullback under (s, t) -> base + s u + t v.
DiffForm restrict_to_plane(const DiffForm& a, const Point& base, const Point& u, const Point& v);
/// Common homogeneous degree of the coefficients, if any; throws ZeroForm.
std::optional<int> homogeneity_degree(const DiffForm& a);

}  // namespace folres
