#include "algebra/scalar.hpp"

#include <sstream>

#include "algebra/error.hpp"

namespace folres {

FieldPtr NumberField::make(QPoly minpoly, FieldPtr parent, QPoly parent_generator) {
    qpoly::trim(minpoly);
    if (qpoly::degree(minpoly) < 2)
        throw Error(ErrorCode::InvalidInput, "number field needs a minimal polynomial of degree >= 2");
    auto f = std::shared_ptr<NumberField>(new NumberField());
    f->minpoly_ = qpoly::monic(minpoly);
    f->parent_ = std::move(parent);
    f->parent_generator_ = std::move(parent_generator);
    return f;
}

QPoly NumberField::multiply(const QPoly& a, const QPoly& b) const {
    return reduce(qpoly::mul(a, b));
}

QPoly NumberField::inverse(const QPoly& a) const {
    auto eg = qpoly::ext_gcd(a, minpoly_);
    if (qpoly::degree(eg.g) != 0)
        throw Error(ErrorCode::InternalInvariant, "element not invertible: minimal polynomial is reducible");
    return reduce(eg.s);
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->same_as(*b);
}

Scalar::Scalar(FieldPtr field, QPoly coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (field_) coeffs_ = field_->reduce(coeffs_);
    qpoly::trim(coeffs_);
    normalize();
}

Scalar Scalar::generator(const FieldPtr& field) { return Scalar(field, QPoly{0, 1}); }

void Scalar::normalize() {
    for (auto& c : coeffs_) c.canonicalize();
    qpoly::trim(coeffs_);
    if (coeffs_.size() <= 1) field_.reset();
}

Rational Scalar::to_rational() const {
    if (!is_rational()) throw Error(ErrorCode::FieldMismatch, "scalar is not rational: " + to_string());
    return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

FieldPtr Scalar::common(const Scalar& a, const Scalar& b) {
    if (!a.field_) return b.field_;
    if (!b.field_) return a.field_;
    if (same_field(a.field_, b.field_)) return a.field_;
    throw Error(ErrorCode::FieldMismatch, "arithmetic between elements of different number fields");
}

Scalar Scalar::operator-() const {
    Scalar r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    FieldPtr f = common(*this, o);
    coeffs_ = qpoly::add(coeffs_, o.coeffs_);
    field_ = f;
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    FieldPtr f = common(*this, o);
    coeffs_ = qpoly::sub(coeffs_, o.coeffs_);
    field_ = f;
    normalize();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    FieldPtr f = common(*this, o);
    if (f && !is_rational() && !o.is_rational()) {
        coeffs_ = f->multiply(coeffs_, o.coeffs_);
    } else {
        coeffs_ = qpoly::mul(coeffs_, o.coeffs_);
    }
    field_ = f;
    normalize();
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("Scalar: division by zero");
    if (is_rational()) return Scalar(Rational(1) / coeffs_[0]);
    return Scalar(field_, field_->inverse(coeffs_));
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::pow(unsigned e) const {
    Scalar result(1), base(*this);
    while (e) {
        if (e & 1u) result *= base;
        base *= base;
        e >>= 1u;
    }
    return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.coeffs_ != b.coeffs_) return false;
    return same_field(a.field_, b.field_);
}

bool canonical_less(const Scalar& a, const Scalar& b) {
    const int da = a.field_ ? a.field_->degree() : 1;
    const int db = b.field_ ? b.field_->degree() : 1;
    if (da != db) return da < db;
    if (a.field_ && b.field_ && !same_field(a.field_, b.field_)) {
        const auto& ma = a.field_->minpoly();
        const auto& mb = b.field_->minpoly();
        return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
    }
    if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size();
    for (std::size_t i = a.coeffs_.size(); i-- > 0;) {
        if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i];
    }
    return false;
}

Rational Scalar::trace() const {
    if (is_rational()) return to_rational();
    const int n = field_->degree();
    Rational tr = 0;
    QPoly basis{1};
    for (int i = 0; i < n; ++i) {
        QPoly prod = field_->multiply(coeffs_, basis);
        if (static_cast<int>(prod.size()) > i) tr += prod[i];
        basis = field_->multiply(basis, QPoly{0, 1});
    }
    return tr;
}

std::string Scalar::to_string() const {
    if (is_rational()) return to_rational().get_str();
    return "(" + qpoly::to_string(coeffs_, "t") + ")";
}

Scalar embed(const Scalar& value, const FieldPtr& target) {
    if (value.is_rational()) return value;
    if (same_field(value.field(), target)) return Scalar(target, value.coeffs());
    if (!target || !target->parent())
        throw Error(ErrorCode::FieldMismatch, "cannot embed: target field does not extend the source field");
    Scalar in_parent = embed(value, target->parent());
    if (in_parent.is_rational()) return in_parent;
    const Scalar gen(target, target->parent_generator_image());
    Scalar acc(0);
    const auto& c = in_parent.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * gen + Scalar(c[i]);
    return acc;
}

FieldPtr join_fields(const FieldPtr& a, const FieldPtr& b) {
    if (!a) return b;
    if (!b) return a;
    for (FieldPtr f = b; f; f = f->parent())
        if (same_field(f, a)) return b;
    for (FieldPtr f = a; f; f = f->parent())
        if (same_field(f, b)) return a;
    throw Error(ErrorCode::FieldMismatch, "number fields are not on one extension chain");
}

}  // namespace folres
