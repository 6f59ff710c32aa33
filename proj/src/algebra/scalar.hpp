#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "algebra/qpoly.hpp"

namespace folres {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/// A simple algebraic extension K = Q[t]/(m(t)) of the rationals, m monic and
/// irreducible.  A field may record how it was built from a smaller field: the
/// image of the parent's generator, written in this field's power basis.
class NumberField {
public:
    static FieldPtr make(QPoly minpoly, FieldPtr parent = nullptr, QPoly parent_generator = {});

    int degree() const { return qpoly::degree(minpoly_); }
    const QPoly& minpoly() const { return minpoly_; }
    const FieldPtr& parent() const { return parent_; }
    const QPoly& parent_generator_image() const { return parent_generator_; }

    QPoly reduce(const QPoly& p) const { return qpoly::rem(p, minpoly_); }
    QPoly multiply(const QPoly& a, const QPoly& b) const;
    QPoly inverse(const QPoly& a) const;

    /// Structural identity: same minimal polynomial.
    bool same_as(const NumberField& other) const { return minpoly_ == other.minpoly_; }

private:
    NumberField() = default;
    QPoly minpoly_;
    FieldPtr parent_;
    QPoly parent_generator_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b);

/// Exact element of Q or of a simple extension Q(t).  A value that happens to
/// be rational is always stored without a field, so equality is structural.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : coeffs_{Rational(v)} { normalize(); }
    Scalar(const Rational& v) : coeffs_{v} { normalize(); }
    Scalar(FieldPtr field, QPoly coeffs);

    static Scalar generator(const FieldPtr& field);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return is_rational() && coeffs_.size() == 1 && coeffs_[0] == 1; }
    bool is_rational() const { return field_ == nullptr; }
    Rational to_rational() const;  // throws unless rational
    const FieldPtr& field() const { return field_; }
    const QPoly& coeffs() const { return coeffs_; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    Scalar inverse() const;
    Scalar pow(unsigned e) const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Total order used only for deterministic sorting.
    friend bool canonical_less(const Scalar& a, const Scalar& b);

    /// Absolute trace Tr_{K/Q}.
    Rational trace() const;

    std::string to_string() const;

private:
    void normalize();
    static FieldPtr common(const Scalar& a, const Scalar& b);

    FieldPtr field_;
    QPoly coeffs_;
};

/// Maps `value` into `target` through the chain of recorded parent fields.
Scalar embed(const Scalar& value, const FieldPtr& target);

/// The larger of two fields on one extension chain.
FieldPtr join_fields(const FieldPtr& a, const FieldPtr& b);

}  // namespace folres
