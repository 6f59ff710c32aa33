#include "projective/projective.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "algebra/error.hpp"

namespace folres {

namespace {

void require_homogeneous(const MultiPoly& P, int degree, const char* what) {
    if (P.is_zero() || !P.is_homogeneous() || P.degree() != degree)
        throw Error(ErrorCode::NotHomogeneous, std::string(what) + " is not homogeneous of degree " + std::to_string(degree));
}

DiffForm d_of(const MultiPoly& f) { return exterior_derivative(DiffForm::function(f)); }

// determinant by elimination; entries from any field
Scalar det(std::vector<std::vector<Scalar>> m) {
    const std::size_t n = m.size();
    Scalar d(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k].is_zero()) ++piv;
        if (piv == n) return Scalar(0);
        if (piv != k) {
            std::swap(m[piv], m[k]);
            d = -d;
        }
        d *= m[k][k];
        const Scalar inv = m[k][k].inverse();
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k].is_zero()) continue;
            const Scalar f = m[i][k] * inv;
            for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return d;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    std::int64_t r = 1, e = p - 2;
    a %= p;
    if (a < 0) a += p;
    while (e) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

std::int64_t det_mod(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
    const std::size_t n = m.size();
    std::int64_t d = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(m[piv], m[k]);
            d = (p - d) % p;
        }
        d = d * m[k][k] % p;
        const std::int64_t inv = mod_inverse(m[k][k], p);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (!m[i][k]) continue;
            const std::int64_t f = m[i][k] * inv % p;
            for (std::size_t j = k; j < n; ++j) m[i][j] = ((m[i][j] - f * m[k][j]) % p + p) % p;
        }
    }
    return d;
}

struct ModPoly {
    std::vector<std::pair<Exponent, std::int64_t>> terms;
};

std::optional<ModPoly> reduce_mod(const MultiPoly& f, std::int64_t p) {
    ModPoly r;
    const Integer P(static_cast<long>(p));
    for (const auto& [e, c] : f.terms()) {
        if (!c.is_rational()) return std::nullopt;
        const Rational q = c.to_rational();
        Integer den = q.get_den();
        if (den % P == 0) return std::nullopt;
        Integer num = q.get_num() % P;
        Integer dm = den % P;
        std::int64_t v = num.get_si() * mod_inverse(dm.get_si(), p) % p;
        if (v < 0) v += p;
        if (v) r.terms.push_back({e, v});
    }
    return r;
}

std::int64_t eval_mod(const ModPoly& f, const std::vector<std::int64_t>& z, std::int64_t p) {
    std::int64_t s = 0;
    for (const auto& [e, c] : f.terms) {
        std::int64_t t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::uint32_t k = 0; k < e[i]; ++k) t = t * z[i] % p;
        s = (s + t) % p;
    }
    return s;
}

// all k-subsets of {0..n-1} in lex order
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur(k);
    std::iota(cur.begin(), cur.end(), 0);
    if (k > n) return out;
    for (;;) {
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

}  // namespace

FoliationForm build_fpq_form(const MultiPoly& P, const MultiPoly& Q, int p, int q) {
    if (p <= 0 || q <= 0) throw Error(ErrorCode::InvalidInput, "pencil degrees must be positive");
    if (P.nvars() != Q.nvars()) throw Error(ErrorCode::VariableCountMismatch, "P and Q use different variable counts");
    require_homogeneous(P, p, "P");
    require_homogeneous(Q, q, "Q");
    FoliationForm F;
    F.omega = Scalar(q) * (Q * d_of(P)) - Scalar(p) * (P * d_of(Q));
    F.degree = p + q - 2;
    F.pencil = {P, Q};
    F.weights = {p, q};
    const auto R = VectorField::radial(P.nvars());
    if (!interior_product(R, F.omega).is_zero())
        throw Error(ErrorCode::IntegrabilityFailure, "i_R Omega does not vanish");
    if (!wedge(F.omega, exterior_derivative(F.omega)).is_zero())
        throw Error(ErrorCode::IntegrabilityFailure, "Omega ^ dOmega does not vanish");
    return F;
}

FoliationForm foliation_from_form(const DiffForm& omega) {
    if (omega.degree() != 1) throw Error(ErrorCode::InvalidInput, "a foliation form has degree 1");
    auto h = homogeneity_degree(omega);
    if (!h) throw Error(ErrorCode::NotHomogeneous, "coefficients are not homogeneous of one degree");
    FoliationForm F;
    F.omega = omega;
    F.degree = *h - 1;
    return F;
}

EulerReport euler_identity_check(const FoliationForm& F) {
    const auto R = VectorField::radial(F.omega.nvars());
    if (!interior_product(R, F.omega).is_zero())
        throw Error(ErrorCode::PreconditionViolated, "i_R Omega is not zero");
    auto h = homogeneity_degree(F.omega);
    if (!h) throw Error(ErrorCode::NotHomogeneous, "coefficients are not homogeneous of one degree");
    EulerReport rep;
    rep.degree = *h - 1;
    const DiffForm lhs = interior_product(R, exterior_derivative(F.omega));
    const DiffForm rhs = Scalar(rep.degree + 2) * F.omega;
    const DiffForm diff = lhs - rhs;
    if (!diff.is_zero()) {
        const auto& [idx, c] = *diff.terms().begin();
        throw Error(ErrorCode::IdentityViolated,
                    "i_R dOmega != (d+2) Omega at dx" + std::to_string(idx[0] + 1) + ": difference " + c.to_string());
    }
    rep.holds = true;
    return rep;
}

void validate_pencil(PencilSpec& spec, bool require_homogeneous) {
    const std::size_t m = spec.polys.size();
    if (m < 2) throw Error(ErrorCode::InvalidInput, "a pencil needs at least two polynomials");
    if (spec.weights.empty()) spec.weights.assign(m, 0);
    if (spec.weights.size() != m) throw Error(ErrorCode::InvalidInput, "one weight per polynomial");
    spec.degrees.clear();
    for (const auto& P : spec.polys) {
        if (P.nvars() != spec.polys[0].nvars())
            throw Error(ErrorCode::VariableCountMismatch, "pencil polynomials use different variable counts");
        if (P.is_zero()) throw Error(ErrorCode::InvalidInput, "pencil polynomial is zero");
        if (require_homogeneous && !P.is_homogeneous())
            throw Error(ErrorCode::NotHomogeneous, "pencil polynomial is not homogeneous");
        spec.degrees.push_back(P.degree());
    }
    // default weights: k_j = L / d_j, reduced
    if (std::all_of(spec.weights.begin(), spec.weights.end(), [](int k) { return k == 0; })) {
        long L = 1;
        for (int d : spec.degrees) L = std::lcm(L, static_cast<long>(d));
        for (std::size_t j = 0; j < m; ++j) spec.weights[j] = static_cast<int>(L / spec.degrees[j]);
    }
    int g = 0;
    for (int k : spec.weights) {
        if (k <= 0) throw Error(ErrorCode::InvalidInput, "weights must be positive");
        g = std::gcd(g, k);
    }
    if (g != 1) throw Error(ErrorCode::InvalidInput, "weights must have gcd 1");
    for (std::size_t j = 1; j < m; ++j)
        if (spec.weights[j] * spec.degrees[j] != spec.weights[0] * spec.degrees[0])
            throw Error(ErrorCode::InvalidInput, "k_j d_j must agree across the pencil");
}

bool is_degenerate_point(const PencilSpec& spec, const Point& z) {
    bool nonzero = false;
    for (const auto& s : z) nonzero = nonzero || !s.is_zero();
    if (!nonzero) return false;
    for (const auto& P : spec.polys)
        if (!P.evaluate(z).is_zero()) return false;
    const std::size_t m = spec.polys.size(), n = z.size();
    std::vector<std::vector<Scalar>> J(m, std::vector<Scalar>(n));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) J[i][j] = spec.polys[i].derivative(j).evaluate(z);
    for (const auto& cols : subsets(n, m)) {
        std::vector<std::vector<Scalar>> M(m, std::vector<Scalar>(m));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t k = 0; k < m; ++k) M[i][k] = J[i][cols[k]];
        if (!det(M).is_zero()) return false;
    }
    return true;
}

TransversalityResult transversality_witness_search(PencilSpec spec, const TransversalityOptions& opts) {
    validate_pencil(spec, false);
    const std::size_t n = spec.polys[0].nvars(), m = spec.polys.size();
    // non-homogeneous input: zero sets are not cones, so every multiple is tried
    bool homogeneous = true;
    for (const auto& P : spec.polys) homogeneous = homogeneous && P.is_homogeneous();
    TransversalityResult res;
    if (opts.strategy == SearchStrategy::Sampling) {
        if (opts.families.empty()) throw Error(ErrorCode::InvalidInput, "sampling needs at least one parameterized family");
        std::mt19937_64 rng(opts.seed);
        std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
        for (std::size_t f = 0; f < opts.families.size(); ++f) {
            const auto& fam = opts.families[f];
            if (fam.size() != n) throw Error(ErrorCode::VariableCountMismatch, "family must give every coordinate");
            const std::size_t k = fam[0].nvars();
            for (int s = 0; s < opts.samples; ++s) {
                if (res.points_examined >= opts.budget)
                    throw Error(ErrorCode::SearchBudgetExceeded, "sampling budget exhausted");
                Point params;
                for (std::size_t i = 0; i < k; ++i) {
                    const int a = num(rng), b = den(rng);
                    params.emplace_back(Rational(a, b));
                }
                Point z;
                for (const auto& c : fam) z.push_back(c.evaluate(params));
                ++res.points_examined;
                if (is_degenerate_point(spec, z)) {
                    res.transverse = false;
                    res.witness = z;
                    res.certificate = "exact witness from family " + std::to_string(f);
                    return res;
                }
            }
        }
        res.certificate = "no witness among " + std::to_string(res.points_examined) +
                          " sampled points; evidence only, not a proof of transversality";
        return res;
    }

    if (n > 5) throw Error(ErrorCode::InvalidInput, "finite-field search supports at most 5 homogeneous coordinates");
    auto minors = subsets(n, m);
    for (int p : opts.primes) {
        if (p < 2 || p > 13) throw Error(ErrorCode::InvalidInput, "finite-field primes must lie in [2, 13]");
        std::vector<ModPoly> Pm;
        std::vector<std::vector<ModPoly>> Jm(m);
        bool ok = true;
        for (std::size_t i = 0; i < m && ok; ++i) {
            auto r = reduce_mod(spec.polys[i], p);
            if (!r) ok = false;
            else Pm.push_back(*r);
            for (std::size_t j = 0; j < n && ok; ++j) {
                auto d = reduce_mod(spec.polys[i].derivative(j), p);
                if (!d) ok = false;
                else Jm[i].push_back(*d);
            }
        }
        if (!ok) continue;  // bad reduction
        std::uint64_t count = 0;
        // projective points: first nonzero coordinate equal to 1
        for (std::size_t lead = 0; lead < n; ++lead) {
            const std::size_t free = n - lead - 1;
            std::uint64_t total = 1;
            for (std::size_t i = 0; i < free; ++i) total *= static_cast<std::uint64_t>(p);
            for (std::uint64_t code = 0; code < total; ++code) {
                std::vector<std::int64_t> base(n, 0);
                base[lead] = 1;
                std::uint64_t c = code;
                for (std::size_t i = lead + 1; i < n; ++i) {
                    base[i] = static_cast<std::int64_t>(c % static_cast<std::uint64_t>(p));
                    c /= static_cast<std::uint64_t>(p);
                }
                for (int scale = 1; scale < (homogeneous ? 2 : p); ++scale) {
                    if (res.points_examined >= opts.budget)
                        throw Error(ErrorCode::SearchBudgetExceeded, "finite-field search budget exhausted");
                    ++res.points_examined;
                    ++count;
                    std::vector<std::int64_t> z(n);
                    for (std::size_t i = 0; i < n; ++i) z[i] = base[i] * scale % p;
                    bool zero = true;
                    for (const auto& P : Pm)
                        if (eval_mod(P, z, p)) {
                            zero = false;
                            break;
                        }
                    if (!zero) continue;
                    std::vector<std::vector<std::int64_t>> J(m, std::vector<std::int64_t>(n));
                    for (std::size_t i = 0; i < m; ++i)
                        for (std::size_t j = 0; j < n; ++j) J[i][j] = eval_mod(Jm[i][j], z, p);
                    bool degenerate = true;
                    for (const auto& cols : minors) {
                        std::vector<std::vector<std::int64_t>> M(m, std::vector<std::int64_t>(m));
                        for (std::size_t i = 0; i < m; ++i)
                            for (std::size_t k = 0; k < m; ++k) M[i][k] = J[i][cols[k]];
                        if (det_mod(M, p)) {
                            degenerate = false;
                            break;
                        }
                    }
                    if (!degenerate) continue;
                    // symmetric lift, then exact verification over Q
                    Point lifted;
                    for (auto v : z) lifted.emplace_back(static_cast<long>(v > p / 2 ? v - p : v));
                    if (is_degenerate_point(spec, lifted)) {
                        res.transverse = false;
                        res.witness = lifted;
                        res.per_prime.push_back({p, count});
                        res.certificate = "exact witness lifted from F_" + std::to_string(p);
                        return res;
                    }
                }
            }
        }
        res.per_prime.push_back({p, count});
    }
    std::string primes;
    for (auto& [p, c] : res.per_prime) primes += (primes.empty() ? "" : ", ") + std::to_string(p);
    res.certificate = "no witness over the projective spaces of F_p for p in {" + primes + "} (" +
                      std::to_string(res.points_examined) + " points); evidence only, not a proof of transversality";
    return res;
}

NormalTypeReport normal_type_at(const FoliationForm& F, const Point& base, const Point& u, const Point& v) {
    if (F.pencil.size() != 2 || F.weights.size() != 2)
        throw Error(ErrorCode::PreconditionViolated, "normal type needs a form built from a pencil (P, Q)");
    const MultiPoly &P = F.pencil[0], &Q = F.pencil[1];
    const std::size_t n = P.nvars();
    if (base.size() != n || u.size() != n || v.size() != n)
        throw Error(ErrorCode::VariableCountMismatch, "point and frame must have one entry per variable");
    if (!P.evaluate(base).is_zero() || !Q.evaluate(base).is_zero())
        throw Error(ErrorCode::PointNotOnGamma, "P and Q do not both vanish at the base point");
    std::vector<Scalar> dP(n), dQ(n);
    for (std::size_t j = 0; j < n; ++j) {
        dP[j] = P.derivative(j).evaluate(base);
        dQ[j] = Q.derivative(j).evaluate(base);
    }
    bool smooth = false;
    for (std::size_t i = 0; i < n && !smooth; ++i)
        for (std::size_t j = i + 1; j < n && !smooth; ++j) smooth = !(dP[i] * dQ[j] - dP[j] * dQ[i]).is_zero();
    if (!smooth) throw Error(ErrorCode::PointNotOnGamma, "dP ^ dQ vanishes at the base point");
    auto pair = [&](const std::vector<Scalar>& g, const Point& w) {
        Scalar s;
        for (std::size_t j = 0; j < n; ++j) s += g[j] * w[j];
        return s;
    };
    if ((pair(dP, u) * pair(dQ, v) - pair(dP, v) * pair(dQ, u)).is_zero())
        throw Error(ErrorCode::FrameNotTransversal, "the frame is not transversal to Gamma at the base point");
    const DiffForm w = restrict_to_plane(F.omega, base, u, v);
    // w = A ds + B dt = X1 dt - X2 ds
    NormalTypeReport rep;
    rep.field = PlaneVectorField(w.coeff({1}), -w.coeff({0}));
    const LinearPart L = linear_part(rep.field);
    rep.trace = L.trace();
    rep.det = L.det();
    const int p = F.weights[0], q = F.weights[1];
    rep.expected = Rational((p + q) * (p + q), p * q);
    if (!rep.det.is_zero()) {
        rep.invariant = rep.trace * rep.trace / rep.det;
        rep.matches = *rep.invariant == Scalar(rep.expected);
    }
    rep.kupka = !rep.trace.is_zero();
    return rep;
}

std::vector<Claim31Entry> claim31_check(const FoliationForm& F, const std::vector<Point>& points) {
    const DiffForm dO = exterior_derivative(F.omega);
    std::vector<Claim31Entry> out;
    for (const auto& z : points) {
        if (z.size() != F.omega.nvars()) throw Error(ErrorCode::VariableCountMismatch, "point has the wrong dimension");
        bool nonzero = false;
        for (const auto& s : z) nonzero = nonzero || !s.is_zero();
        if (!nonzero) throw Error(ErrorCode::PointNotSingular, "the origin is not a point of projective space");
        if (!F.omega.evaluate(z).empty()) throw Error(ErrorCode::PointNotSingular, "Omega does not vanish at the point");
        Claim31Entry e;
        e.point = z;
        e.d_omega = dO.evaluate(z);
        e.d_omega_nonzero = !e.d_omega.empty();
        out.push_back(e);
    }
    return out;
}

}  // namespace folres
