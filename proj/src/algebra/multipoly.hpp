#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "algebra/scalar.hpp"

namespace folres {

using Exponent = std::vector<std::uint32_t>;

unsigned total_degree(const Exponent& e);

/// Graded-lex order, greater first, so that the map's first entry is the
/// leading term.
struct GrlexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse polynomial in a fixed number of variables with exact coefficients.
/// No zero coefficient is ever stored.
class MultiPoly {
public:
    using Terms = std::map<Exponent, Scalar, GrlexGreater>;

    MultiPoly() = default;
    explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

    static MultiPoly constant(std::size_t nvars, const Scalar& c);
    static MultiPoly variable(std::size_t nvars, std::size_t index);
    static MultiPoly monomial(std::size_t nvars, const Exponent& e, const Scalar& c);

    std::size_t nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Scalar constant_term() const;
    Scalar coeff(const Exponent& e) const;
    std::size_t size() const { return terms_.size(); }

    /// Adds c * x^e in place.
    void add_term(const Exponent& e, const Scalar& c);

    int degree() const;      // total degree, -1 for zero
    int order() const;       // lowest total degree present, -1 for zero
    int degree_in(std::size_t var) const;
    bool is_homogeneous() const;

    MultiPoly homogeneous_part(unsigned k) const;
    MultiPoly truncate(unsigned max_degree) const;
    MultiPoly derivative(std::size_t var) const;
    Scalar evaluate(const std::vector<Scalar>& point) const;
    /// Simultaneous substitution x_i -> images[i]; result lives in images' ring.
    MultiPoly substitute(const std::vector<MultiPoly>& images) const;
    /// p(x + base)
    MultiPoly translate(const std::vector<Scalar>& base) const;
    /// Reinterprets the variables: result has `nvars` variables and old
    /// variable i becomes new variable map[i].
    MultiPoly rename(std::size_t nvars, const std::vector<std::size_t>& map) const;

    FieldPtr field() const;
    MultiPoly embed(const FieldPtr& target) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly& operator*=(const Scalar& c);
    MultiPoly pow(unsigned e) const;

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Scalar& c) { return a *= c; }
    friend MultiPoly operator*(const Scalar& c, MultiPoly a) { return a *= c; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    std::string to_string(const std::vector<std::string>& names) const;
    /// Default names x1..xn (or x, y for two variables).
    std::string to_string() const;

private:
    void check_same(const MultiPoly& o) const;

    std::size_t nvars_ = 0;
    Terms terms_;
};

std::vector<std::string> default_variable_names(std::size_t nvars);

}  // namespace folres
