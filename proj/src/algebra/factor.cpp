#include "algebra/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

#include "algebra/error.hpp"

namespace folres {
namespace {

// ---------------------------------------------------------------------------
// Integer polynomials

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int zdeg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

Integer zcontent(const ZPoly& p) {
    Integer g = 0;
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

ZPoly primitive_part(ZPoly p) {
    ztrim(p);
    if (p.empty()) return p;
    Integer g = zcontent(p);
    if (p.back() < 0) g = -g;
    for (auto& c : p) c /= g;
    return p;
}

ZPoly to_primitive_integer(const QPoly& q) {
    Integer den = 1;
    for (const auto& c : q) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    ZPoly z;
    z.reserve(q.size());
    for (const auto& c : q) {
        Rational s = c * den;
        z.push_back(s.get_num());
    }
    return primitive_part(z);
}

QPoly to_rational(const ZPoly& z) {
    QPoly q;
    q.reserve(z.size());
    for (const auto& c : z) q.emplace_back(c);
    qpoly::trim(q);
    return q;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    ztrim(r);
    return r;
}

// Exact division over Z; false when g does not divide f.
bool zdivide(const ZPoly& f, const ZPoly& g, ZPoly& quotient) {
    ZPoly r(f);
    ztrim(r);
    if (zdeg(r) < zdeg(g)) return r.empty() ? (quotient.clear(), true) : false;
    ZPoly q(r.size() - g.size() + 1);
    for (int k = zdeg(r) - zdeg(g); k >= 0; --k) {
        const Integer& top = r[k + g.size() - 1];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), g.back().get_mpz_t())) return false;
        Integer c = top / g.back();
        q[k] = c;
        for (std::size_t j = 0; j < g.size(); ++j) r[k + j] -= c * g[j];
    }
    ztrim(r);
    if (!r.empty()) return false;
    ztrim(q);
    quotient = std::move(q);
    return true;
}

// ---------------------------------------------------------------------------
// Polynomials over F_p (p < 2^31)

using FpPoly = std::vector<std::int64_t>;

struct Fp {
    std::int64_t p;

    std::int64_t norm(std::int64_t a) const {
        a %= p;
        return a < 0 ? a + p : a;
    }
    std::int64_t mul(std::int64_t a, std::int64_t b) const { return norm(a * b); }
    std::int64_t inv(std::int64_t a) const {
        std::int64_t t = 0, nt = 1, r = p, nr = norm(a);
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::tie(t, nt) = std::make_pair(nt, t - q * nt);
            std::tie(r, nr) = std::make_pair(nr, r - q * nr);
        }
        return norm(t);
    }

    void trim(FpPoly& a) const {
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    FpPoly reduce(const ZPoly& z) const {
        FpPoly r(z.size());
        for (std::size_t i = 0; i < z.size(); ++i) r[i] = mpz_fdiv_ui(z[i].get_mpz_t(), static_cast<unsigned long>(p));
        trim(r);
        return r;
    }
    FpPoly sub(const FpPoly& a, const FpPoly& b) const {
        FpPoly r(std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
        for (std::size_t i = 0; i < b.size(); ++i) r[i] = norm(r[i] - b[i]);
        trim(r);
        return r;
    }
    FpPoly add(const FpPoly& a, const FpPoly& b) const {
        FpPoly r(std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
        for (std::size_t i = 0; i < b.size(); ++i) r[i] = norm(r[i] + b[i]);
        trim(r);
        return r;
    }
    FpPoly mul(const FpPoly& a, const FpPoly& b) const {
        if (a.empty() || b.empty()) return {};
        FpPoly r(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = norm(r[i + j] + a[i] * b[j]);
        }
        trim(r);
        return r;
    }
    std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) const {
        FpPoly r(a);
        trim(r);
        if (r.size() < b.size()) return {FpPoly{}, r};
        FpPoly q(r.size() - b.size() + 1, 0);
        const std::int64_t inv_lead = inv(b.back());
        for (int k = static_cast<int>(r.size() - b.size()); k >= 0; --k) {
            const std::int64_t c = mul(r[k + b.size() - 1], inv_lead);
            q[k] = c;
            if (c == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j) r[k + j] = norm(r[k + j] - c * b[j]);
        }
        r.resize(b.size() - 1);
        trim(r);
        trim(q);
        return {q, r};
    }
    FpPoly monic(const FpPoly& a) const {
        if (a.empty()) return a;
        const std::int64_t s = inv(a.back());
        FpPoly r(a);
        for (auto& c : r) c = mul(c, s);
        return r;
    }
    FpPoly gcd(FpPoly a, FpPoly b) const {
        trim(a);
        trim(b);
        while (!b.empty()) {
            FpPoly r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return monic(a);
    }
    // s*a + t*b = 1 assuming gcd(a, b) = 1
    void ext_gcd(const FpPoly& a, const FpPoly& b, FpPoly& s, FpPoly& t) const {
        FpPoly r0(a), r1(b), s0{1}, s1{}, t0{}, t1{1};
        while (!r1.empty()) {
            auto [q, r] = divmod(r0, r1);
            FpPoly s2 = sub(s0, mul(q, s1));
            FpPoly t2 = sub(t0, mul(q, t1));
            r0 = std::move(r1);
            r1 = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s2);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        const std::int64_t c = inv(r0.back());
        s = s0;
        t = t0;
        for (auto& x : s) x = mul(x, c);
        for (auto& x : t) x = mul(x, c);
    }
    FpPoly derivative(const FpPoly& a) const {
        if (a.size() <= 1) return {};
        FpPoly r(a.size() - 1);
        for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mul(a[i], static_cast<std::int64_t>(i) % p);
        trim(r);
        return r;
    }
    FpPoly powmod(FpPoly base, const Integer& e, const FpPoly& mod) const {
        FpPoly result{1};
        base = divmod(base, mod).second;
        const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
        for (std::size_t i = bits; i-- > 0;) {
            result = divmod(mul(result, result), mod).second;
            if (mpz_tstbit(e.get_mpz_t(), i)) result = divmod(mul(result, base), mod).second;
        }
        return result;
    }
};

// Equal-degree splitting (Cantor-Zassenhaus), p odd, f monic squarefree with
// all irreducible factors of degree d.
void equal_degree_split(const Fp& F, const FpPoly& f, int d, std::mt19937_64& rng, std::vector<FpPoly>& out) {
    const int n = static_cast<int>(f.size()) - 1;
    if (n == d) {
        out.push_back(f);
        return;
    }
    Integer e;
    mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(F.p), static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    std::uniform_int_distribution<std::int64_t> dist(0, F.p - 1);
    while (true) {
        FpPoly a(n);
        for (auto& c : a) c = dist(rng);
        F.trim(a);
        if (a.size() < 2) continue;
        FpPoly b = F.sub(F.powmod(a, e, f), FpPoly{1});
        FpPoly g = F.gcd(b, f);
        const int dg = static_cast<int>(g.size()) - 1;
        if (dg > 0 && dg < n) {
            equal_degree_split(F, g, d, rng, out);
            equal_degree_split(F, F.monic(F.divmod(f, g).first), d, rng, out);
            return;
        }
    }
}

std::vector<FpPoly> factor_mod_p(const Fp& F, FpPoly f) {
    f = F.monic(f);
    std::vector<FpPoly> factors;
    std::mt19937_64 rng(0x5eed);
    FpPoly h{0, 1};
    const FpPoly x{0, 1};
    Integer p = F.p;
    for (int d = 1; 2 * d <= static_cast<int>(f.size()) - 1; ++d) {
        h = F.powmod(h, p, f);
        FpPoly g = F.gcd(F.sub(h, x), f);
        if (g.size() > 1) {
            equal_degree_split(F, g, d, rng, factors);
            f = F.divmod(f, g).first;
            h = F.divmod(h, f).second;
        }
    }
    if (f.size() > 1) factors.push_back(F.monic(f));
    return factors;
}

// ---------------------------------------------------------------------------
// Hensel lifting

ZPoly zmod(const ZPoly& a, const Integer& m) {
    ZPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) mpz_fdiv_r(r[i].get_mpz_t(), a[i].get_mpz_t(), m.get_mpz_t());
    ztrim(r);
    return r;
}

ZPoly from_fp(const FpPoly& a) {
    ZPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<long>(a[i]);
    return r;
}

// Lift f = a*b (mod p), a monic, to f = A*B (mod p^k).
void hensel_pair(const Fp& F, const ZPoly& f, const FpPoly& a0, const FpPoly& b0, int k, ZPoly& A, ZPoly& B) {
    FpPoly s, t;
    F.ext_gcd(a0, b0, s, t);
    A = from_fp(a0);
    B = from_fp(b0);
    Integer pj = F.p;
    for (int j = 1; j < k; ++j) {
        Integer next = pj * F.p;
        ZPoly diff = f;
        ZPoly ab = zmul(A, B);
        diff.resize(std::max(diff.size(), ab.size()));
        for (std::size_t i = 0; i < ab.size(); ++i) diff[i] -= ab[i];
        diff = zmod(diff, next);
        ZPoly e_int(diff.size());
        for (std::size_t i = 0; i < diff.size(); ++i) e_int[i] = diff[i] / pj;
        FpPoly e = F.reduce(e_int);
        FpPoly da = F.divmod(F.mul(e, t), a0).second;
        FpPoly db = F.divmod(F.sub(e, F.mul(b0, da)), a0).first;
        ZPoly dA = from_fp(da), dB = from_fp(db);
        A.resize(std::max(A.size(), dA.size()));
        B.resize(std::max(B.size(), dB.size()));
        for (std::size_t i = 0; i < dA.size(); ++i) A[i] += pj * dA[i];
        for (std::size_t i = 0; i < dB.size(); ++i) B[i] += pj * dB[i];
        A = zmod(A, next);
        B = zmod(B, next);
        pj = next;
    }
}

// Multifactor lift of f (mod p^k) whose reduction is lc * prod(factors).
void hensel_multi(const Fp& F, const ZPoly& f, const std::vector<FpPoly>& factors, int k, const Integer& pk,
                  std::vector<ZPoly>& lifted) {
    if (factors.size() == 1) {
        // monic representative: f * lc^{-1} mod p^k
        Integer lc_inv;
        mpz_invert(lc_inv.get_mpz_t(), f.back().get_mpz_t(), pk.get_mpz_t());
        ZPoly m(f);
        for (auto& c : m) c *= lc_inv;
        lifted.push_back(zmod(m, pk));
        return;
    }
    const std::size_t half = factors.size() / 2;
    std::vector<FpPoly> left(factors.begin(), factors.begin() + half);
    std::vector<FpPoly> right(factors.begin() + half, factors.end());
    FpPoly a0{1}, b0{1};
    for (const auto& g : left) a0 = F.mul(a0, g);
    for (const auto& g : right) b0 = F.mul(b0, g);
    FpPoly fp = F.reduce(f);
    b0 = F.mul(b0, FpPoly{fp.back()});
    ZPoly A, B;
    hensel_pair(F, f, a0, b0, k, A, B);
    hensel_multi(F, A, left, k, pk, lifted);
    hensel_multi(F, B, right, k, pk, lifted);
}

ZPoly symmetric(const ZPoly& a, const Integer& m) {
    ZPoly r(a.size());
    const Integer half = m / 2;
    for (std::size_t i = 0; i < a.size(); ++i) {
        mpz_fdiv_r(r[i].get_mpz_t(), a[i].get_mpz_t(), m.get_mpz_t());
        if (r[i] > half) r[i] -= m;
    }
    ztrim(r);
    return r;
}

bool next_subset(std::vector<int>& idx, int n) {
    const int k = static_cast<int>(idx.size());
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    return true;
}

// f: primitive, squarefree, positive leading coefficient, degree >= 1
std::vector<ZPoly> factor_squarefree(ZPoly f) {
    const int n = zdeg(f);
    if (n <= 1) return {f};

    static const int primes[] = {3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,  43,  47,
                                 53,  59,  61,  67,  71,  73,  79,  83,  89,  97,  101, 103, 107, 109,
                                 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191,
                                 193, 197, 199, 211, 223, 227, 229, 233, 239, 241, 251, 257, 263, 269};
    Fp F{0};
    bool found = false;
    for (int p : primes) {
        if (mpz_divisible_ui_p(f.back().get_mpz_t(), static_cast<unsigned long>(p))) continue;
        Fp cand{p};
        FpPoly fp = cand.reduce(f);
        FpPoly g = cand.gcd(fp, cand.derivative(fp));
        if (g.size() == 1) {
            F = cand;
            found = true;
            break;
        }
    }
    if (!found) throw Error(ErrorCode::InternalInvariant, "no suitable prime for modular factorization");

    std::vector<FpPoly> modular = factor_mod_p(F, F.reduce(f));
    if (modular.size() == 1) return {f};

    // Landau-Mignotte style bound on coefficients of lc * (any factor).
    Integer norm2 = 0;
    for (const auto& c : f) norm2 += c * c;
    Integer norm;
    mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
    norm += 1;
    Integer bound = norm * abs(f.back());
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(n));
    bound *= 2;
    int k = 1;
    Integer pk = F.p;
    while (pk <= bound) {
        pk *= F.p;
        ++k;
    }

    std::vector<ZPoly> lifted;
    hensel_multi(F, f, modular, k, pk, lifted);

    std::vector<ZPoly> result;
    int s = 1;
    while (2 * s <= static_cast<int>(lifted.size())) {
        bool restart = false;
        std::vector<int> idx(s);
        for (int i = 0; i < s; ++i) idx[i] = i;
        do {
            ZPoly prod{f.back()};
            for (int i : idx) prod = zmod(zmul(prod, lifted[i]), pk);
            ZPoly cand = primitive_part(symmetric(prod, pk));
            ZPoly quotient;
            if (zdeg(cand) >= 1 && zdivide(f, cand, quotient)) {
                result.push_back(cand);
                f = primitive_part(quotient);
                std::vector<ZPoly> rest;
                for (int i = 0; i < static_cast<int>(lifted.size()); ++i)
                    if (std::find(idx.begin(), idx.end(), i) == idx.end()) rest.push_back(lifted[i]);
                lifted = std::move(rest);
                restart = true;
                break;
            }
        } while (next_subset(idx, static_cast<int>(lifted.size())));
        if (!restart) ++s;
    }
    if (zdeg(f) >= 1) result.push_back(f);
    return result;
}

// Yun's algorithm over Q, on a monic polynomial.
std::vector<std::pair<QPoly, int>> squarefree_rational(const QPoly& f) {
    std::vector<std::pair<QPoly, int>> out;
    QPoly a0 = qpoly::gcd(f, qpoly::derivative(f));
    QPoly b = qpoly::divmod(f, a0).first;
    QPoly c = qpoly::divmod(qpoly::derivative(f), a0).first;
    QPoly d = qpoly::sub(c, qpoly::derivative(b));
    int i = 1;
    while (qpoly::degree(b) > 0) {
        QPoly a = qpoly::gcd(b, d);
        if (qpoly::degree(a) > 0) out.emplace_back(a, i);
        b = qpoly::divmod(b, a).first;
        c = qpoly::divmod(d, a).first;
        d = qpoly::sub(c, qpoly::derivative(b));
        ++i;
    }
    return out;
}

// Newton interpolation through (i, values[i]), i = 0..n.
QPoly interpolate(const std::vector<Rational>& values) {
    const int n = static_cast<int>(values.size());
    std::vector<Rational> coef(values);
    for (int j = 1; j < n; ++j)
        for (int i = n - 1; i >= j; --i) coef[i] = (coef[i] - coef[i - 1]) / (i - (i - j));
    QPoly result;
    for (int i = n - 1; i >= 0; --i) {
        // result = result * (x - i) + coef[i]
        QPoly shifted = qpoly::mul(result, QPoly{Rational(-i), 1});
        result = qpoly::add(shifted, QPoly{coef[i]});
    }
    qpoly::trim(result);
    return result;
}

// Coefficients of field elements as polynomials in the generator t.
QPoly lift_coeff(const Scalar& s) { return s.coeffs(); }

// Res_t(m(t), sum_j h_j(t) (v - c t)^j) as a polynomial in v.
QPoly norm_of_shift(const UPoly& h, const QPoly& m, long c) {
    const int k = qpoly::degree(m);
    const int D = k * upoly::degree(h);
    std::vector<Rational> values;
    for (int i = 0; i <= D; ++i) {
        QPoly acc;
        const QPoly lin{Rational(i), Rational(-c)};
        for (std::size_t j = h.size(); j-- > 0;) acc = qpoly::add(qpoly::mul(acc, lin), lift_coeff(h[j]));
        values.push_back(qpoly::resultant(m, acc));
    }
    return interpolate(values);
}

bool is_squarefree(const QPoly& p) { return qpoly::degree(qpoly::gcd(p, qpoly::derivative(p))) == 0; }

bool lex_less(const QPoly& a, const QPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

}  // namespace

std::vector<QFactor> factor_over_rationals(const QPoly& f_in) {
    QPoly f(f_in);
    qpoly::trim(f);
    if (f.empty()) throw Error(ErrorCode::InvalidInput, "cannot factor the zero polynomial");
    std::vector<QFactor> out;
    if (qpoly::degree(f) == 0) return out;
    for (auto& [part, mult] : squarefree_rational(qpoly::monic(f))) {
        for (auto& z : factor_squarefree(to_primitive_integer(part))) out.push_back({z, mult});
    }
    std::sort(out.begin(), out.end(), [](const QFactor& a, const QFactor& b) {
        if (a.poly.size() != b.poly.size()) return a.poly.size() < b.poly.size();
        return lex_less(to_rational(a.poly), to_rational(b.poly));
    });
    return out;
}

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& f_in) {
    UPoly f = upoly::monic(f_in);
    std::vector<std::pair<UPoly, int>> out;
    if (upoly::degree(f) <= 0) return out;
    UPoly a0 = upoly::gcd(f, upoly::derivative(f));
    UPoly b = upoly::divmod(f, a0).first;
    UPoly c = upoly::divmod(upoly::derivative(f), a0).first;
    UPoly d = upoly::sub(c, upoly::derivative(b));
    int i = 1;
    while (upoly::degree(b) > 0) {
        UPoly a = upoly::gcd(b, d);
        if (upoly::degree(a) > 0) out.emplace_back(a, i);
        b = upoly::divmod(b, a).first;
        c = upoly::divmod(d, a).first;
        d = upoly::sub(c, upoly::derivative(b));
        ++i;
    }
    return out;
}

QPoly minimal_polynomial(const Scalar& value) {
    if (value.is_rational()) return QPoly{-value.to_rational(), 1};
    // characteristic polynomial Res_t(m(t), v - s(t)) is a power of the minimal polynomial
    const QPoly& m = value.field()->minpoly();
    const int k = qpoly::degree(m);
    std::vector<Rational> values;
    for (int i = 0; i <= k; ++i) {
        QPoly g = qpoly::sub(QPoly{Rational(i)}, value.coeffs());
        values.push_back(qpoly::resultant(m, g));
    }
    QPoly charpoly = interpolate(values);
    QPoly g = qpoly::gcd(charpoly, qpoly::derivative(charpoly));
    return qpoly::monic(qpoly::divmod(charpoly, g).first);
}

std::vector<RootCluster> roots_over(const UPoly& g, const FieldPtr& base, int degree_cap) {
    UPoly gt(g);
    upoly::trim(gt);
    if (gt.empty()) throw Error(ErrorCode::InvalidInput, "roots of the zero polynomial requested");
    std::vector<RootCluster> in_base, extended;
    const int k = base ? base->degree() : 1;

    for (auto& [h, mult] : squarefree_decomposition(gt)) {
        if (upoly::degree(h) == 1) {
            RootCluster rc;
            rc.root = -h[0] / h[1];
            rc.field = base;
            rc.multiplicity = mult;
            in_base.push_back(rc);
            continue;
        }
        if (!base) {
            QPoly hq;
            for (const auto& c : h) hq.push_back(c.to_rational());
            for (auto& fac : factor_over_rationals(hq)) {
                QPoly mp = qpoly::monic(to_rational(fac.poly));
                RootCluster rc;
                rc.multiplicity = mult;
                rc.relative_degree = qpoly::degree(mp);
                rc.label = mp;
                if (rc.relative_degree == 1) {
                    rc.root = Scalar(-mp[0]);
                    rc.field = nullptr;
                    in_base.push_back(rc);
                } else if (rc.relative_degree > degree_cap) {
                    rc.exceeds_cap = true;
                    extended.push_back(rc);
                } else {
                    rc.field = NumberField::make(mp);
                    rc.root = Scalar::generator(rc.field);
                    extended.push_back(rc);
                }
            }
            continue;
        }
        // Trager: find a shift making the norm squarefree.
        const QPoly& m = base->minpoly();
        long shift = 0;
        QPoly N;
        for (int attempt = 0;; ++attempt) {
            shift = (attempt % 2 == 1) ? (attempt + 1) / 2 : -(attempt / 2);
            N = norm_of_shift(h, m, shift);
            if (is_squarefree(N)) break;
            if (attempt > 200) throw Error(ErrorCode::InternalInvariant, "no squarefree norm found");
        }
        const Scalar alpha = Scalar::generator(base);
        // h~(v) = h(v - shift*alpha)
        const UPoly h_shift = upoly::shift(h, -Scalar(shift) * alpha);
        for (auto& fac : factor_over_rationals(N)) {
            QPoly mp = qpoly::monic(to_rational(fac.poly));
            const int e = qpoly::degree(mp) / k;
            RootCluster rc;
            rc.multiplicity = mult;
            rc.relative_degree = e;
            rc.label = mp;
            if (e == 1) {
                // linear factor over the base field: gcd(h~, mp(v)) shifted back
                UPoly factor = upoly::gcd(h_shift, upoly::from_rational(mp));
                if (upoly::degree(factor) != 1)
                    throw Error(ErrorCode::InternalInvariant, "Trager factor of unexpected degree");
                rc.root = -factor[0] / factor[1] - Scalar(shift) * alpha;
                rc.field = base;
                rc.label = minimal_polynomial(rc.root);
                in_base.push_back(rc);
                continue;
            }
            if (qpoly::degree(mp) > degree_cap) {
                rc.exceeds_cap = true;
                extended.push_back(rc);
                continue;
            }
            FieldPtr L = NumberField::make(mp);
            const Scalar gamma = Scalar::generator(L);
            // alpha in L: the common root of m(t) and h(gamma - shift*t, t)
            UPoly mt = upoly::from_rational(m);
            UPoly ht;
            const UPoly lin{gamma, Scalar(-shift)};
            for (std::size_t j = h.size(); j-- > 0;) {
                UPoly coeff;
                for (const auto& q : h[j].coeffs()) coeff.emplace_back(q);
                if (h[j].is_rational() && !h[j].is_zero()) coeff = UPoly{h[j]};
                upoly::trim(coeff);
                ht = upoly::add(upoly::mul(ht, lin), coeff);
            }
            UPoly lin_alpha = upoly::gcd(mt, ht);
            if (upoly::degree(lin_alpha) != 1)
                throw Error(ErrorCode::InternalInvariant, "primitive element recovery failed");
            const Scalar alpha_in_L = -lin_alpha[0];
            FieldPtr L2 = NumberField::make(mp, base, alpha_in_L.is_rational() ? QPoly{alpha_in_L.to_rational()}
                                                                               : alpha_in_L.coeffs());
            rc.field = L2;
            const Scalar gamma2 = Scalar::generator(L2);
            const Scalar alpha2(L2, alpha_in_L.coeffs());
            rc.root = gamma2 - Scalar(shift) * alpha2;
            extended.push_back(rc);
        }
    }
    std::stable_sort(in_base.begin(), in_base.end(),
                     [](const RootCluster& a, const RootCluster& b) { return canonical_less(a.root, b.root); });
    std::stable_sort(extended.begin(), extended.end(),
                     [](const RootCluster& a, const RootCluster& b) { return lex_less(a.label, b.label); });
    in_base.insert(in_base.end(), extended.begin(), extended.end());
    return in_base;
}

}  // namespace folres
