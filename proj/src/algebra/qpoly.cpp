#include "algebra/qpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace folres::qpoly {

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

const Rational& lead(const QPoly& p) { return p.back(); }

QPoly add(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

QPoly sub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

QPoly scale(const QPoly& a, const Rational& c) {
    if (c == 0) return {};
    QPoly r(a);
    for (auto& x : r) x *= c;
    return r;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
    if (b.empty()) throw std::domain_error("qpoly::divmod: division by zero polynomial");
    QPoly r(a);
    trim(r);
    if (degree(r) < degree(b)) return {QPoly{}, r};
    QPoly q(r.size() - b.size() + 1);
    const Rational inv = 1 / lead(b);
    for (int k = degree(r) - degree(b); k >= 0; --k) {
        const Rational c = r[k + b.size() - 1] * inv;
        q[k] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[k + j] -= c * b[j];
    }
    r.resize(b.size() - 1);
    trim(r);
    trim(q);
    return {q, r};
}

QPoly rem(const QPoly& a, const QPoly& b) { return divmod(a, b).second; }

QPoly monic(const QPoly& a) {
    if (a.empty()) return a;
    return scale(a, 1 / lead(a));
}

QPoly gcd(const QPoly& a, const QPoly& b) {
    QPoly x(a), y(b);
    trim(x);
    trim(y);
    while (!y.empty()) {
        QPoly r = rem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return monic(x);
}

ExtGcd ext_gcd(const QPoly& a, const QPoly& b) {
    QPoly r0(a), r1(b), s0{1}, s1{}, t0{}, t1{1};
    trim(r0);
    trim(r1);
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1);
        QPoly s2 = sub(s0, mul(q, s1));
        QPoly t2 = sub(t0, mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.empty()) return {{}, {}, {}};
    const Rational inv = 1 / lead(r0);
    return {scale(r0, inv), scale(s0, inv), scale(t0, inv)};
}

QPoly derivative(const QPoly& a) {
    if (a.size() <= 1) return {};
    QPoly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<long>(i);
    trim(r);
    return r;
}

Rational eval(const QPoly& a, const Rational& x) {
    Rational acc = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// Euclidean resultant: res(a,b) = (-1)^{da*db} lc(b)^{da-dr} res(b, a mod b).
Rational resultant(QPoly a, QPoly b) {
    trim(a);
    trim(b);
    if (a.empty() || b.empty()) return 0;
    Rational acc = 1;
    while (true) {
        const int da = degree(a), db = degree(b);
        if (db == 0) {
            Rational p = 1;
            for (int i = 0; i < da; ++i) p *= b[0];
            return acc * p;
        }
        if (da == 0) {
            Rational p = 1;
            for (int i = 0; i < db; ++i) p *= a[0];
            return acc * p;
        }
        QPoly r = rem(a, b);
        if (r.empty()) return 0;
        const int dr = degree(r);
        if ((da * db) % 2 == 1) acc = -acc;
        for (int i = 0; i < da - dr; ++i) acc *= lead(b);
        a = std::move(b);
        b = std::move(r);
    }
}

std::string to_string(const QPoly& p, const std::string& var) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(p); i >= 0; --i) {
        const Rational& c = p[i];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace folres::qpoly
