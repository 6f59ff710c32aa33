#include "eta/eta.hpp"

#include <algorithm>
#include <random>

#include "algebra/error.hpp"
#include "algebra/ops.hpp"

namespace folres {

namespace {

DiffForm d(const DiffForm& a) { return exterior_derivative(a); }

// 3-form evaluated on three vectors
Scalar eval3(const std::map<DiffForm::Index, Scalar>& form, const Point& a, const Point& b, const Point& c) {
    Scalar s;
    for (const auto& [idx, coef] : form) {
        const auto i = idx[0], j = idx[1], k = idx[2];
        const Scalar det = a[i] * (b[j] * c[k] - b[k] * c[j]) - a[j] * (b[i] * c[k] - b[k] * c[i]) +
                           a[k] * (b[i] * c[j] - b[j] * c[i]);
        s += coef * det;
    }
    return s;
}

std::vector<std::vector<Scalar>> matrix_at(const DiffForm& eta, const Point& p) {
    const std::size_t n = eta.nvars();
    std::vector<std::vector<Scalar>> M(n, std::vector<Scalar>(n));
    for (const auto& [idx, c] : eta.evaluate(p)) {
        M[idx[0]][idx[1]] = c;
        M[idx[1]][idx[0]] = -c;
    }
    return M;
}

// reduced row echelon form in place; returns pivot columns
std::vector<std::size_t> rref(std::vector<std::vector<Scalar>>& M) {
    std::vector<std::size_t> pivots;
    const std::size_t rows = M.size(), cols = rows ? M[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && M[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(M[piv], M[r]);
        const Scalar inv = M[r][c].inverse();
        for (auto& x : M[r]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || M[i][c].is_zero()) continue;
            const Scalar f = M[i][c];
            for (std::size_t j = c; j < cols; ++j) M[i][j] -= f * M[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

EtaAnalysis analyze_eta(const DiffForm& eta) {
    if (eta.degree() != 2) throw Error(ErrorCode::InvalidInput, "eta must be a 2-form");
    if (eta.nvars() < 4) throw Error(ErrorCode::DimensionTooSmall, "eta analysis needs at least 4 variables");
    if (eta.is_zero()) throw Error(ErrorCode::ZeroForm, "eta is zero");
    auto h = homogeneity_degree(eta);
    if (!h) throw Error(ErrorCode::NotHomogeneous, "eta's coefficients are not homogeneous of one degree");
    EtaAnalysis a;
    a.eta = eta;
    a.degree = *h;
    const auto R = VectorField::radial(eta.nvars());
    a.decomposable = wedge(eta, eta).is_zero();
    a.omega = interior_product(R, eta);
    a.lie_identity = lie_derivative(R, eta) == Scalar(a.degree + 2) * eta;
    const DiffForm wdw = wedge(a.omega, d(a.omega));
    a.omega_integrable = wdw.is_zero();
    a.contraction_identity = wdw == -wedge(a.omega, interior_product(R, d(eta)));
    a.omega_wedge_eta_zero = wedge(a.omega, eta).is_zero();
    if (!a.omega.is_zero()) {
        std::vector<MultiPoly> coeffs;
        for (std::size_t i = 0; i < eta.nvars(); ++i) coeffs.push_back(a.omega.coeff({i}));
        auto split = content_and_primitive(coeffs);
        a.phi = split.content;
        a.omega1 = DiffForm::one_form(split.primitive);
    } else {
        a.phi = MultiPoly(eta.nvars());
        a.omega1 = DiffForm(eta.nvars(), 1);
    }
    return a;
}

std::vector<std::vector<Rational>> skew_matrix(const DiffForm& omega1) {
    if (omega1.degree() != 1) throw Error(ErrorCode::NormalFormFailure, "omega1 must be a 1-form");
    const std::size_t n = omega1.nvars();
    std::vector<std::vector<Rational>> A(n, std::vector<Rational>(n));
    for (const auto& [idx, c] : omega1.terms()) {
        for (const auto& [e, s] : c.terms()) {
            if (total_degree(e) != 1 || !s.is_rational())
                throw Error(ErrorCode::NormalFormFailure, "omega1 must have rational linear coefficients");
            std::size_t j = 0;
            while (!e[j]) ++j;
            A[idx[0]][j] = s.to_rational();
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (A[i][j] != -A[j][i]) throw Error(ErrorCode::NormalFormFailure, "i_R omega1 != 0: matrix is not skew");
    return A;
}

EtaDecomposition eta_decompose(const DiffForm& eta, const DiffForm& omega1) {
    if (eta.degree() != 2 || eta.nvars() != omega1.nvars())
        throw Error(ErrorCode::InvalidInput, "eta must be a 2-form in the variables of omega1");
    const std::size_t n = eta.nvars();
    auto A = skew_matrix(omega1);
    // rank 2 test: every 2x2 minor of A lies in the span of one pivot pair
    std::size_t pi = n, pj = n;
    for (std::size_t i = 0; i < n && pi == n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (A[i][j] != 0) {
                pi = i;
                pj = j;
                break;
            }
    if (pi == n) throw Error(ErrorCode::NormalFormFailure, "omega1 is zero");
    // y1 = (A e_j / A_ij) . x, y2 = (A e_i) . x
    std::vector<Rational> l1(n), l2(n);
    for (std::size_t k = 0; k < n; ++k) {
        l1[k] = A[k][pj] / A[pi][pj];
        l2[k] = A[k][pi];
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (A[i][j] != l1[j] * l2[i] - l2[j] * l1[i])
                throw Error(ErrorCode::NormalFormFailure, "the skew matrix of omega1 does not have rank 2");

    EtaDecomposition out;
    {
        std::vector<std::vector<Scalar>> rows{std::vector<Scalar>(l1.begin(), l1.end()),
                                              std::vector<Scalar>(l2.begin(), l2.end())};
        out.transform = {l1, l2};
        for (std::size_t k = 0; k < n && out.transform.size() < n; ++k) {
            auto trial = rows;
            std::vector<Scalar> ek(n);
            ek[k] = Scalar(1);
            trial.push_back(ek);
            auto copy = trial;
            if (rref(copy).size() == trial.size()) {
                rows = trial;
                std::vector<Rational> r(n);
                r[k] = 1;
                out.transform.push_back(r);
            }
        }
    }
    // x = T^{-1} y
    std::vector<std::vector<Scalar>> aug(n, std::vector<Scalar>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = Scalar(out.transform[i][j]);
        aug[i][n + i] = Scalar(1);
    }
    rref(aug);
    std::vector<MultiPoly> x_of_y(n, MultiPoly(n)), y_of_x(n, MultiPoly(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            x_of_y[i] += MultiPoly::variable(n, j) * aug[i][n + j];
            y_of_x[i] += MultiPoly::variable(n, j) * Scalar(out.transform[i][j]);
        }
    const DiffForm ey = pullback(eta, x_of_y);
    out.higher_block_zero = true;
    for (const auto& [idx, c] : ey.terms())
        if (idx[0] >= 2) out.higher_block_zero = false;
    if (!wedge(omega1, eta).is_zero())
        throw Error(ErrorCode::NotAnnihilated,
                    std::string("omega1 ^ eta != 0; in normal coordinates eta_ij ") +
                        (out.higher_block_zero ? "vanishes" : "does not vanish") + " for j > i >= 3");
    if (!out.higher_block_zero)
        throw Error(ErrorCode::InternalInvariant, "omega1 ^ eta = 0 but the higher block of eta is nonzero");
    const MultiPoly y1 = MultiPoly::variable(n, 0), y2 = MultiPoly::variable(n, 1);
    // omega1 = s (y1 dy2 - y2 dy1) in these coordinates, so d omega1 / 2 = s dy1 ^ dy2
    const MultiPoly w2 = pullback(omega1, x_of_y).coeff({1});
    const Scalar scale = exact_divide(w2, y1).constant_term();
    if (scale.is_zero()) throw Error(ErrorCode::InternalInvariant, "normal form of omega1 lost its scale");
    const Scalar inv = Scalar(1) / scale;
    DiffForm mu_y(n, 1);
    for (std::size_t k = 2; k < n; ++k) {
        const MultiPoly alpha = ey.coeff({0, k}), beta = ey.coeff({1, k});
        MultiPoly mk;
        try {
            mk = exact_divide(beta, y1) * inv;
            if (exact_divide(-alpha, y2) * inv != mk) throw Error(ErrorCode::DivisionObstruction, "");
        } catch (const Error&) {
            throw Error(ErrorCode::DivisionObstruction, "alpha = -y2 mu, beta = y1 mu has no solution");
        }
        mu_y.add({k}, mk);
    }
    // eta_12 = s gamma - s (y1 mu_1 + y2 mu_2); gamma is taken free of y1, y2
    const MultiPoly e12 = ey.coeff({0, 1});
    MultiPoly gamma_y(n), by_y1(n), by_y2(n);
    for (const auto& [e, c] : e12.terms()) {
        if (e[0] > 0) by_y1.add_term(e, c);
        else if (e[1] > 0) by_y2.add_term(e, c);
        else gamma_y.add_term(e, c * inv);
    }
    if (!by_y1.is_zero()) mu_y.add({0}, -(exact_divide(by_y1, y1) * inv));
    if (!by_y2.is_zero()) mu_y.add({1}, -(exact_divide(by_y2, y2) * inv));
    out.mu = pullback(mu_y, y_of_x);
    out.gamma = gamma_y.is_zero() ? MultiPoly(n) : gamma_y.substitute(y_of_x);
    out.gamma_constant = out.gamma.is_constant();
    if (!out.gamma_constant)
        out.note = "gamma has positive degree: Sing(eta) contains {y1 = y2 = gamma = 0}, of codimension at most 3";
    return out;
}

KernelResult kernel_at_point(const DiffForm& eta, const Point& p) {
    if (eta.degree() != 2) throw Error(ErrorCode::InvalidInput, "kernel needs a 2-form");
    if (p.size() != eta.nvars()) throw Error(ErrorCode::VariableCountMismatch, "point has the wrong dimension");
    auto M = matrix_at(eta, p);
    bool any = false;
    for (auto& row : M)
        for (auto& s : row) any = any || !s.is_zero();
    if (!any) throw Error(ErrorCode::ZeroAtPoint, "eta vanishes at the point");
    const auto pivots = rref(M);
    KernelResult k;
    k.rank = static_cast<int>(pivots.size());
    const std::size_t n = eta.nvars();
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Point v(n);
        v[f] = Scalar(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -M[r][f];
        k.basis.push_back(v);
    }
    return k;
}

FrobeniusResult frobenius_test_at_point(const DiffForm& eta, const Point& p) {
    const auto ker = kernel_at_point(eta, p);
    if (ker.rank != 2) throw Error(ErrorCode::RankNotTwo, "eta(p) has rank " + std::to_string(ker.rank));
    const auto deta = d(eta).evaluate(p);
    const std::size_t n = eta.nvars();
    FrobeniusResult r;
    for (std::size_t i = 0; i < ker.basis.size(); ++i)
        for (std::size_t j = i + 1; j < ker.basis.size(); ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Point e(n);
                e[k] = Scalar(1);
                const Scalar val = eval3(deta, ker.basis[i], ker.basis[j], e);
                if (!val.is_zero()) {
                    r.integrable = false;
                    r.v = ker.basis[i];
                    r.w = ker.basis[j];
                    r.u = e;
                    r.value = val;
                    return r;
                }
            }
    return r;
}

FrobeniusSampling frobenius_sample(const DiffForm& eta, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    FrobeniusSampling s;
    int attempts = 0;
    while (static_cast<int>(s.points.size()) < count && attempts < 50 * count) {
        ++attempts;
        Point p;
        for (std::size_t i = 0; i < eta.nvars(); ++i) {
            const int a = num(rng), b = den(rng);
            p.emplace_back(Rational(a, b));
        }
        FrobeniusResult r;
        try {
            r = frobenius_test_at_point(eta, p);
        } catch (const Error&) {
            ++s.rejected;
            continue;
        }
        s.points.push_back(p);
        if (!r.integrable && !s.witness) {
            s.witness = r;
            s.witness_point = p;
        }
    }
    return s;
}

DiffForm theta_example() {
    const std::size_t n = 4;
    auto x = [&](std::size_t i) { return MultiPoly::variable(n, i - 1); };
    DiffForm t(n, 2);
    t.add({0, 1}, x(1) * x(2) + x(3) * x(4));
    t.add({0, 2}, x(1) * x(1));
    t.add({0, 3}, x(4) * x(4));
    t.add({1, 2}, x(3) * x(3));
    t.add({1, 3}, x(2) * x(2));
    t.add({2, 3}, x(1) * x(2) - x(3) * x(4));
    return t;
}

ZeroLocusReport singular_coefficient_zero_locus(const DiffForm& eta) {
    ZeroLocusReport r;
    const std::size_t n = eta.nvars();
    std::vector<bool> forced(n, false);
    const auto names = default_variable_names(n);
    for (const auto& [idx, c] : eta.terms()) {
        if (c.size() != 1) continue;
        const auto& e = c.terms().begin()->first;
        std::size_t nz = 0, var = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (e[i]) {
                ++nz;
                var = i;
            }
        if (nz == 1 && !forced[var]) {
            forced[var] = true;
            r.forced.push_back(var);
            r.reasoning += (r.reasoning.empty() ? "" : ", ") + c.to_string(names) + " = 0 forces " + names[var] + " = 0";
        }
    }
    r.only_origin = std::all_of(forced.begin(), forced.end(), [](bool b) { return b; });
    if (!r.only_origin) r.reasoning += (r.reasoning.empty() ? "" : "; ") + std::string("not every variable is forced");
    return r;
}

}  // namespace folres
