#include "plane/plane.hpp"

#include "algebra/error.hpp"
#include "algebra/factor.hpp"
#include "algebra/ops.hpp"

namespace folres {

namespace {

MultiPoly xvar() { return MultiPoly::variable(2, 0); }
MultiPoly yvar() { return MultiPoly::variable(2, 1); }

Scalar coefficient(const MultiPoly& p, std::uint32_t i, std::uint32_t j) { return p.coeff({i, j}); }

void require_singular(const PlaneVectorField& X) {
    if (!X.singular_at_origin())
        throw Error(ErrorCode::NotSingularAtOrigin, "the field does not vanish at the origin");
}

// coefficients of p as a polynomial in y with coefficients in x
std::vector<UPoly> y_coefficients(const MultiPoly& p) {
    std::vector<UPoly> out;
    for (const auto& [e, c] : p.terms()) {
        if (out.size() <= e[1]) out.resize(e[1] + 1);
        UPoly& u = out[e[1]];
        if (u.size() <= e[0]) u.resize(e[0] + 1);
        u[e[0]] += c;
    }
    for (auto& u : out) upoly::trim(u);
    return out;
}

MultiPoly graph_function(const UPoly& phi) {
    // y - phi(x)
    return yvar() - from_univariate(phi, 2, 0);
}

int order_of(const UPoly& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (!p[i].is_zero()) return static_cast<int>(i);
    return -1;
}

SeparatrixBranch swap_branch(SeparatrixBranch b) {
    const std::vector<std::size_t> sw{1, 0};
    b.over_x = !b.over_x;
    b.f = b.f.rename(2, sw);
    b.cofactor = b.cofactor.rename(2, sw);
    return b;
}

}  // namespace

PlaneVectorField::PlaneVectorField(MultiPoly p, MultiPoly q) : P(std::move(p)), Q(std::move(q)) {
    if (P.nvars() == 0 && P.is_zero()) P = MultiPoly(2);
    if (Q.nvars() == 0 && Q.is_zero()) Q = MultiPoly(2);
    if (P.nvars() != 2 || Q.nvars() != 2)
        throw Error(ErrorCode::VariableCountMismatch, "plane fields use exactly two variables");
}

bool PlaneVectorField::singular_at_origin() const {
    return P.constant_term().is_zero() && Q.constant_term().is_zero();
}

FieldPtr PlaneVectorField::field() const { return join_fields(P.field(), Q.field()); }

PlaneVectorField PlaneVectorField::embed(const FieldPtr& k) const { return {P.embed(k), Q.embed(k)}; }

PlaneVectorField PlaneVectorField::swapped() const {
    const std::vector<std::size_t> sw{1, 0};
    return {Q.rename(2, sw), P.rename(2, sw)};
}

JetData first_nonzero_jet(const PlaneVectorField& X) {
    if (X.P.is_zero() && X.Q.is_zero()) throw Error(ErrorCode::InvalidInput, "the zero vector field has no jet");
    require_singular(X);
    JetData j;
    int op = X.P.order(), oq = X.Q.order();
    j.nu = op < 0 ? oq : (oq < 0 ? op : std::min(op, oq));
    j.P_nu = X.P.homogeneous_part(static_cast<unsigned>(j.nu));
    j.Q_nu = X.Q.homogeneous_part(static_cast<unsigned>(j.nu));
    MultiPoly F = xvar() * j.Q_nu - yvar() * j.P_nu;
    if (F.is_zero()) {
        j.dicritical = true;
        j.tangent_cone = exact_divide(j.P_nu, xvar());
        j.radial = j.nu == 1;
    } else {
        j.tangent_cone = F;
    }
    return j;
}

LinearPart linear_part(const PlaneVectorField& X) {
    return {coefficient(X.P, 1, 0), coefficient(X.P, 0, 1), coefficient(X.Q, 1, 0), coefficient(X.Q, 0, 1)};
}

const char* kind_name(SingularityKind k) {
    switch (k) {
        case SingularityKind::NonSingular: return "NonSingular";
        case SingularityKind::SimpleA: return "SimpleA";
        case SingularityKind::SimpleB: return "SimpleB";
        case SingularityKind::NonSimple: return "NonSimple";
    }
    return "?";
}

SingularityClass classify_origin(const PlaneVectorField& X) {
    require_singular(X);
    SingularityClass sc;
    const LinearPart L = linear_part(X);
    sc.trace = L.trace();
    sc.det = L.det();
    auto nonsimple = [&]() {
        sc.kind = SingularityKind::NonSimple;
        sc.jet = first_nonzero_jet(X);
        return sc;
    };
    if (sc.det.is_zero()) {
        if (sc.trace.is_zero()) return nonsimple();
        sc.kind = SingularityKind::SimpleB;
        return sc;
    }
    // r = l2/l1 satisfies r + 1/r + 2 = t^2/det
    const Scalar s = sc.trace * sc.trace / sc.det;
    if (!s.is_rational()) {
        sc.kind = SingularityKind::SimpleA;
        return sc;
    }
    const Rational sr = s.to_rational();
    auto root = is_rational_square(sr * (sr - 4));
    if (!root) {
        sc.kind = SingularityKind::SimpleA;
        return sc;
    }
    Rational r = (sr - 2 + *root) / 2;
    // both roots are reciprocal; report the one of absolute value >= 1
    if (abs(r) < 1) r = (sr - 2 - *root) / 2;
    sc.ratio = r;
    if (r > 0) return nonsimple();
    sc.kind = SingularityKind::SimpleA;
    return sc;
}

KupkaResult kupka_test(const PlaneVectorField& X) {
    require_singular(X);
    const Scalar t = linear_part(X).trace();
    return {t, !t.is_zero()};
}

Scalar baum_bott(const PlaneVectorField& X) {
    require_singular(X);
    const LinearPart L = linear_part(X);
    const Scalar det = L.det();
    if (det.is_zero()) throw Error(ErrorCode::DegenerateLinearPart, "Baum-Bott index needs det DX(0) != 0");
    return L.trace() * L.trace() / det;
}

std::vector<EigenDirection> eigen_directions(const PlaneVectorField& X, int extension_cap) {
    const LinearPart L = linear_part(X);
    const FieldPtr K = X.field();
    const int kdeg = K ? K->degree() : 1;
    UPoly charpoly{L.det(), -L.trace(), Scalar(1)};
    std::vector<EigenDirection> out;
    for (const auto& rc : roots_over(charpoly, K, std::max(kdeg, extension_cap))) {
        if (rc.exceeds_cap || rc.multiplicity > 1) continue;
        if (extension_cap == 0 && rc.relative_degree > 1) continue;
        const FieldPtr F = rc.field;
        const Scalar lam = rc.root;
        const Scalar a = embed(L.a, F), b = embed(L.b, F), c = embed(L.c, F), d = embed(L.d, F);
        EigenDirection ed;
        ed.eigenvalue = lam;
        ed.conjugates = rc.relative_degree;
        if (!b.is_zero()) ed.direction = {Scalar(1), (lam - a) / b};
        else if (lam == a && a != d) ed.direction = {Scalar(1), c / (a - d)};
        else ed.direction = {Scalar(0), Scalar(1)};
        out.push_back(ed);
    }
    return out;
}

UPoly substitute_graph(const MultiPoly& p, const UPoly& phi, int order) {
    auto cs = y_coefficients(p);
    UPoly r;
    for (std::size_t j = cs.size(); j-- > 0;) {
        r = order < 0 ? upoly::mul(r, phi) : upoly::mul_trunc(r, phi, order);
        r = upoly::add(r, cs[j]);
    }
    if (order >= 0 && static_cast<int>(r.size()) > order) r.resize(static_cast<std::size_t>(order));
    upoly::trim(r);
    return r;
}

SeparatrixBranch make_branch(const PlaneVectorField& X, bool over_x, const UPoly& phi_in, int N) {
    if (!over_x) return swap_branch(make_branch(X.swapped(), true, phi_in, N));
    UPoly phi(phi_in);
    upoly::trim(phi);
    if (!phi.empty() && !phi[0].is_zero()) throw Error(ErrorCode::InvalidInput, "branch must pass through the origin");
    const UPoly dphi = upoly::derivative(phi);
    const UPoly r = upoly::sub(substitute_graph(X.Q, phi), upoly::mul(dphi, substitute_graph(X.P, phi)));
    const int ord = order_of(r);
    if (ord >= 0 && ord <= N) throw Error(ErrorCode::BranchNotInvariant, "curve is not invariant up to the requested order");
    SeparatrixBranch b;
    b.over_x = true;
    b.series = phi;
    b.truncation = N;
    b.f = graph_function(phi);
    const MultiPoly Xf = X.Q - from_univariate(dphi, 2, 0) * X.P;
    b.cofactor = exact_divide(Xf - from_univariate(r, 2, 0), b.f);
    b.exact = r.empty();
    return b;
}

SeparatrixBranch separatrix_series(const PlaneVectorField& X, const Point& direction, int N) {
    require_singular(X);
    if (direction.size() != 2 || (direction[0].is_zero() && direction[1].is_zero()))
        throw Error(ErrorCode::InvalidInput, "direction must be a nonzero plane vector");
    if (direction[0].is_zero())
        return swap_branch(separatrix_series(X.swapped(), {direction[1], direction[0]}, N));
    const Scalar m = direction[1] / direction[0];
    const LinearPart L = linear_part(X);
    const Scalar l1 = L.a + L.b * m;
    if (L.c + L.d * m != l1 * m) throw Error(ErrorCode::PreconditionViolated, "direction is not an eigenvector of DX(0)");
    if (l1.is_zero()) throw Error(ErrorCode::ZeroEigenvalue, "eigenvalue along the chosen direction is zero");
    const Scalar l2 = L.d - L.b * m;
    UPoly phi{Scalar(0), m};
    for (int k = 2; k <= N; ++k) {
        const UPoly G = upoly::sub(substitute_graph(X.Q, phi, k + 1),
                                   upoly::mul_trunc(upoly::derivative(phi), substitute_graph(X.P, phi, k + 1), k + 1));
        for (int j = 0; j < k && j < static_cast<int>(G.size()); ++j)
            if (!G[static_cast<std::size_t>(j)].is_zero())
                throw Error(ErrorCode::InternalInvariant, "separatrix recurrence lost a lower order");
        const Scalar known = static_cast<int>(G.size()) > k ? G[static_cast<std::size_t>(k)] : Scalar(0);
        const Scalar lhs = l2 - Scalar(k) * l1;
        Scalar ak;
        if (lhs.is_zero()) {
            if (!known.is_zero()) throw ResonanceError(k);
        } else {
            ak = -known / lhs;
        }
        phi.resize(static_cast<std::size_t>(k + 1));
        phi[static_cast<std::size_t>(k)] = ak;
    }
    upoly::trim(phi);
    return make_branch(X, true, phi, N);
}

SeparatrixBranch leaf_series_regular(const PlaneVectorField& X, int N) {
    const Scalar p0 = X.P.constant_term(), q0 = X.Q.constant_term();
    if (p0.is_zero()) {
        if (q0.is_zero()) throw Error(ErrorCode::PreconditionViolated, "leaf series needs a regular point");
        return swap_branch(leaf_series_regular(X.swapped(), N));
    }
    UPoly phi;
    for (int k = 1; k <= N; ++k) {
        // coefficient of x^{k-1} in Q(x, phi) - phi' P(x, phi) is known - k a_k p0
        const UPoly G = upoly::sub(substitute_graph(X.Q, phi, k),
                                   upoly::mul_trunc(upoly::derivative(phi), substitute_graph(X.P, phi, k), k));
        const Scalar known = static_cast<int>(G.size()) >= k ? G[static_cast<std::size_t>(k - 1)] : Scalar(0);
        phi.resize(static_cast<std::size_t>(k + 1));
        phi[static_cast<std::size_t>(k)] = known / (Scalar(k) * p0);
    }
    upoly::trim(phi);
    return make_branch(X, true, phi, N);
}

namespace {

CofactorReport cofactor_report(const PlaneVectorField& X, const MultiPoly& f, const MultiPoly& h) {
    CofactorReport rep;
    rep.h0 = h.constant_term();
    rep.h0_nonzero = !rep.h0.is_zero();
    rep.order_of_f = f.order();
    const LinearPart L = linear_part(X);
    rep.linear_part_nilpotent = L.trace().is_zero() && L.det().is_zero();
    const MultiPoly fm = f.homogeneous_part(static_cast<unsigned>(std::max(rep.order_of_f, 0)));
    const VectorField X1({X.P.homogeneous_part(1), X.Q.homogeneous_part(1)});
    rep.first_jet_identity = X1.apply(fm) == fm * rep.h0;
    if (rep.h0_nonzero) {
        if (rep.order_of_f != 1) {
            rep.consistent = false;
            rep.violation = "h(0) != 0 but f has order " + std::to_string(rep.order_of_f);
        } else if (rep.linear_part_nilpotent) {
            rep.consistent = false;
            rep.violation = "h(0) != 0 but DX(0) is nilpotent";
        }
    }
    return rep;
}

}  // namespace

CofactorReport cofactor_origin_test(const PlaneVectorField& X, const SeparatrixBranch& branch) {
    return cofactor_report(X, branch.f, branch.cofactor);
}

CofactorReport cofactor_origin_test(const PlaneVectorField& X, const MultiPoly& f) {
    const VectorField V({X.P, X.Q});
    MultiPoly h;
    try {
        h = exact_divide(V.apply(f), f);
    } catch (const Error&) {
        throw Error(ErrorCode::BranchNotInvariant, "f does not divide X(f)");
    }
    if (h.is_zero()) h = MultiPoly(2);
    return cofactor_report(X, f, h);
}

Scalar cs_index(const PlaneVectorField& X, const SeparatrixBranch& branch) {
    if (!branch.over_x) {
        SeparatrixBranch b(branch);
        b.over_x = true;
        return cs_index(X.swapped(), b);
    }
    require_singular(X);
    const UPoly& phi = branch.series;
    const UPoly dphi = upoly::derivative(phi);
    const UPoly B0 = substitute_graph(X.P, phi);
    const UPoly r = upoly::sub(substitute_graph(X.Q, phi), upoly::mul(dphi, B0));
    const int rord = order_of(r);
    if (branch.exact ? !r.empty() : (rord >= 0 && rord <= branch.truncation))
        throw Error(ErrorCode::BranchNotInvariant, "branch is not invariant under the field");
    if (B0.empty()) throw Error(ErrorCode::NonSmoothBranch, "branch consists of singular points");
    const int m = order_of(B0);
    if (!branch.exact && branch.truncation < 2 * m)
        throw Error(ErrorCode::InsufficientTruncation, "series truncation too low for an exact residue");
    const UPoly A0 = upoly::sub(substitute_graph(X.Q.derivative(1), phi),
                                upoly::mul(dphi, substitute_graph(X.P.derivative(1), phi)));
    return residue_at_zero(A0, B0);
}

DiffForm dual_one_form(const PlaneVectorField& X) { return DiffForm::one_form({-X.Q, X.P}); }

}  // namespace folres
