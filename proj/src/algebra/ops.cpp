#include "algebra/ops.hpp"

#include "algebra/error.hpp"

namespace folres {

MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) throw Error(ErrorCode::NotDivisible, "division by the zero polynomial");
    if (a.nvars() != b.nvars() && !a.is_zero())
        throw Error(ErrorCode::VariableCountMismatch, "exact_divide: variable count mismatch");
    const std::size_t n = b.nvars();
    const auto& [lb_exp, lb_coeff] = *b.terms().begin();
    const Scalar lb_inv = lb_coeff.inverse();
    MultiPoly r(a), q(n);
    Exponent e(n);
    while (!r.is_zero()) {
        const auto& [lr_exp, lr_coeff] = *r.terms().begin();
        for (std::size_t i = 0; i < n; ++i) {
            if (lr_exp[i] < lb_exp[i])
                throw Error(ErrorCode::NotDivisible, "polynomial " + b.to_string() + " does not divide " + a.to_string());
            e[i] = lr_exp[i] - lb_exp[i];
        }
        MultiPoly t = MultiPoly::monomial(n, e, lr_coeff * lb_inv);
        q += t;
        r -= t * b;
    }
    return q;
}

MultiPoly jet(const MultiPoly& p, const std::vector<Scalar>& base, unsigned k) {
    return p.translate(base).homogeneous_part(k);
}

MultiPoly jet(const MultiPoly& p, unsigned k) { return p.homogeneous_part(k); }

MultiPoly normalize_leading(const MultiPoly& p) {
    if (p.is_zero()) return p;
    return p * p.terms().begin()->second.inverse();
}

std::vector<MultiPoly> coefficients_in(const MultiPoly& p, std::size_t var) {
    std::vector<MultiPoly> out;
    for (const auto& [e, c] : p.terms()) {
        if (out.size() <= e[var]) out.resize(e[var] + 1, MultiPoly(p.nvars()));
        Exponent f(e);
        f[var] = 0;
        out[e[var]].add_term(f, c);
    }
    return out;
}

namespace {

int main_variable(const MultiPoly& a, const MultiPoly& b) {
    int v = -1;
    for (const auto* p : {&a, &b})
        for (const auto& [e, c] : p->terms())
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] && static_cast<int>(i) > v) v = static_cast<int>(i);
    return v;
}

MultiPoly content_in(const MultiPoly& p, std::size_t var) {
    MultiPoly g(p.nvars());
    for (const auto& c : coefficients_in(p, var)) {
        if (c.is_zero()) continue;
        g = gcd(g, c);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g;
}

MultiPoly var_power(std::size_t n, std::size_t var, unsigned k) {
    Exponent e(n, 0);
    e[var] = k;
    return MultiPoly::monomial(n, e, Scalar(1));
}

MultiPoly pseudo_remainder(MultiPoly a, const MultiPoly& b, std::size_t var) {
    const int db = b.degree_in(var);
    const MultiPoly lb = coefficients_in(b, var).back();
    while (!a.is_zero() && a.degree_in(var) >= db) {
        const int da = a.degree_in(var);
        const MultiPoly la = coefficients_in(a, var).back();
        a = lb * a - la * var_power(a.nvars(), var, static_cast<unsigned>(da - db)) * b;
    }
    return a;
}

MultiPoly primitive_in(const MultiPoly& p, std::size_t var) {
    if (p.is_zero()) return p;
    return exact_divide(p, content_in(p, var));
}

}  // namespace

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero()) return normalize_leading(b);
    if (b.is_zero()) return normalize_leading(a);
    const std::size_t n = a.nvars();
    if (a.is_constant() || b.is_constant()) return MultiPoly::constant(n, Scalar(1));
    const int v = main_variable(a, b);
    const auto var = static_cast<std::size_t>(v);
    if (a.degree_in(var) == 0) return gcd(a, content_in(b, var));
    if (b.degree_in(var) == 0) return gcd(content_in(a, var), b);

    const MultiPoly ca = content_in(a, var), cb = content_in(b, var);
    const MultiPoly gc = gcd(ca, cb);
    MultiPoly pa = exact_divide(a, ca), pb = exact_divide(b, cb);
    if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
    while (!pb.is_zero()) {
        MultiPoly r = pseudo_remainder(pa, pb, var);
        pa = std::move(pb);
        pb = primitive_in(r, var);
    }
    if (pa.degree_in(var) == 0) return normalize_leading(gc);
    return normalize_leading(gc * primitive_in(pa, var));
}

ContentSplit content_and_primitive(const std::vector<MultiPoly>& coeffs) {
    MultiPoly g;
    bool any = false;
    for (const auto& c : coeffs) {
        if (c.is_zero()) continue;
        g = any ? gcd(g, c) : normalize_leading(c);
        any = true;
    }
    if (!any) throw Error(ErrorCode::AllZero, "content of an all-zero list");
    ContentSplit out{g, {}};
    for (const auto& c : coeffs) out.primitive.push_back(c.is_zero() ? MultiPoly(g.nvars()) : exact_divide(c, g));
    return out;
}

Scalar residue_at_zero(const UPoly& num_in, const UPoly& den_in) {
    UPoly num(num_in), den(den_in);
    upoly::trim(num);
    upoly::trim(den);
    if (den.empty()) throw Error(ErrorCode::InvalidInput, "residue: zero denominator");
    std::size_t k = 0;
    while (den[k].is_zero()) ++k;
    if (k == 0) return Scalar(0);
    // num/den = x^{-k} * num/dt, dt(0) != 0; need coefficient of x^{k-1} in num/dt
    UPoly dt(den.begin() + static_cast<long>(k), den.end());
    const Scalar inv0 = dt[0].inverse();
    UPoly series(k);
    for (std::size_t i = 0; i < k; ++i) {
        Scalar acc = i < num.size() ? num[i] : Scalar(0);
        for (std::size_t j = 1; j <= i && j < dt.size(); ++j) acc -= dt[j] * series[i - j];
        series[i] = acc * inv0;
    }
    return series[k - 1];
}

UPoly to_univariate(const MultiPoly& p, std::size_t var) {
    UPoly out;
    for (const auto& [e, c] : p.terms()) {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (i != var && e[i])
                throw Error(ErrorCode::InvalidInput, "polynomial is not univariate in the requested variable");
        if (out.size() <= e[var]) out.resize(e[var] + 1);
        out[e[var]] += c;
    }
    upoly::trim(out);
    return out;
}

MultiPoly from_univariate(const UPoly& p, std::size_t nvars, std::size_t var) {
    MultiPoly r(nvars);
    for (std::size_t k = 0; k < p.size(); ++k) {
        Exponent e(nvars, 0);
        e[var] = static_cast<std::uint32_t>(k);
        r.add_term(e, p[k]);
    }
    return r;
}

Scalar residue_at_zero(const MultiPoly& num, const MultiPoly& den) {
    return residue_at_zero(to_univariate(num, 0), to_univariate(den, 0));
}

std::optional<Rational> is_rational_square(const Rational& s) {
    if (s < 0) return std::nullopt;
    if (s == 0) return Rational(0);
    if (!mpz_perfect_square_p(s.get_num_mpz_t()) || !mpz_perfect_square_p(s.get_den_mpz_t())) return std::nullopt;
    Integer n, d;
    mpz_sqrt(n.get_mpz_t(), s.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), s.get_den_mpz_t());
    Rational r(n, d);
    r.canonicalize();
    return r;
}

}  // namespace folres
