#include "algebra/upoly.hpp"

#include <stdexcept>

namespace folres::upoly {

void trim(UPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int degree(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly add(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

UPoly sub(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

UPoly mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

UPoly mul_trunc(const UPoly& a, const UPoly& b, int order) {
    UPoly r(static_cast<std::size_t>(std::max(order, 0)));
    for (std::size_t i = 0; i < a.size() && static_cast<int>(i) < order; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size() && static_cast<int>(i + j) < order; ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

UPoly scale(const UPoly& a, const Scalar& c) {
    if (c.is_zero()) return {};
    UPoly r(a);
    for (auto& x : r) x *= c;
    return r;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.empty()) throw std::domain_error("upoly::divmod: division by zero polynomial");
    UPoly r(a);
    trim(r);
    if (degree(r) < degree(b)) return {UPoly{}, r};
    UPoly q(r.size() - b.size() + 1);
    const Scalar inv = b.back().inverse();
    for (int k = degree(r) - degree(b); k >= 0; --k) {
        const Scalar c = r[k + b.size() - 1] * inv;
        q[k] = c;
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[k + j] -= c * b[j];
    }
    r.resize(b.size() - 1);
    trim(r);
    trim(q);
    return {q, r};
}

UPoly monic(const UPoly& a) {
    if (a.empty()) return a;
    return scale(a, a.back().inverse());
}

UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly x(a), y(b);
    trim(x);
    trim(y);
    while (!y.empty()) {
        UPoly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return monic(x);
}

UPoly derivative(const UPoly& a) {
    if (a.size() <= 1) return {};
    UPoly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * Scalar(static_cast<long>(i));
    trim(r);
    return r;
}

Scalar eval(const UPoly& a, const Scalar& x) {
    Scalar acc(0);
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UPoly shift(const UPoly& p, const Scalar& c) {
    // Horner in the ring of polynomials: ((a_n)(x+c) + a_{n-1})(x+c) + ...
    UPoly acc;
    const UPoly lin{c, Scalar(1)};
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = add(mul(acc, lin), UPoly{*it});
    trim(acc);
    return acc;
}

FieldPtr field_of(const UPoly& p) {
    FieldPtr f;
    for (const auto& c : p) f = join_fields(f, c.field());
    return f;
}

UPoly from_rational(const QPoly& p) {
    UPoly r;
    r.reserve(p.size());
    for (const auto& c : p) r.emplace_back(c);
    trim(r);
    return r;
}

}  // namespace folres::upoly
