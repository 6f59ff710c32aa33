#pragma once

#include <optional>
#include <string>
#include <vector>

#include "algebra/multipoly.hpp"
#include "algebra/upoly.hpp"
#include "forms/forms.hpp"

namespace folres {

/// X = P d/dx + Q d/dy, polynomials in (x, y).
struct PlaneVectorField {
    MultiPoly P, Q;

    PlaneVectorField() : P(2), Q(2) {}
    PlaneVectorField(MultiPoly p, MultiPoly q);

    bool singular_at_origin() const;
    FieldPtr field() const;
    PlaneVectorField embed(const FieldPtr& k) const;
    /// (x, y) -> (y, x)
    PlaneVectorField swapped() const;
    friend bool operator==(const PlaneVectorField& a, const PlaneVectorField& b) { return a.P == b.P && a.Q == b.Q; }
};

struct JetData {
    int nu = 0;
    MultiPoly P_nu, Q_nu;
    MultiPoly tangent_cone;  // F_{nu+1}, or F_{nu-1} when dicritical
    bool dicritical = false;
    bool radial = false;
};

JetData first_nonzero_jet(const PlaneVectorField& X);

struct LinearPart {
    Scalar a, b, c, d;  // [[P_x, P_y], [Q_x, Q_y]]
    Scalar trace() const { return a + d; }
    Scalar det() const { return a * d - b * c; }
};

LinearPart linear_part(const PlaneVectorField& X);

enum class SingularityKind { NonSingular, SimpleA, SimpleB, NonSimple };
const char* kind_name(SingularityKind k);

struct SingularityClass {
    SingularityKind kind = SingularityKind::NonSingular;
    Scalar trace, det;
    /// Eigenvalue ratio when it is rational (SimpleA with rational ratio, or
    /// NonSimple with a positive rational ratio).
    std::optional<Rational> ratio;
    JetData jet;  // filled for NonSimple

    bool simple() const { return kind == SingularityKind::SimpleA || kind == SingularityKind::SimpleB; }
};

SingularityClass classify_origin(const PlaneVectorField& X);

struct KupkaResult {
    Scalar trace;
    bool kupka;
};

KupkaResult kupka_test(const PlaneVectorField& X);
Scalar baum_bott(const PlaneVectorField& X);

/// An eigen-direction of DX(0), normalized to (1, m) or (0, 1).
struct EigenDirection {
    Scalar eigenvalue;
    Point direction;
    int conjugates = 1;  // size of the Galois orbit this direction represents
};

/// Eigen-directions of DX(0) for distinct eigenvalues.  With extension_cap 0
/// only eigenvalues in the coefficient field are returned; otherwise one
/// representative per conjugate orbit, adjoining roots up to the cap.
std::vector<EigenDirection> eigen_directions(const PlaneVectorField& X, int extension_cap = 0);

/// Invariant curve y = phi(x) (over_x) or x = phi(y), phi(0) = 0.
struct SeparatrixBranch {
    bool over_x = true;
    UPoly series;       // series[k] = a_k, series[0] = 0
    int truncation = 0; // N
    MultiPoly f;        // defining function
    MultiPoly cofactor; // X(f) = h f mod degree N+1
    bool exact = false;
};

constexpr int kDefaultTruncation = 32;

SeparatrixBranch separatrix_series(const PlaneVectorField& X, const Point& direction, int N = kDefaultTruncation);

/// Branch with a given polynomial graph; validates invariance up to order N
/// and computes the cofactor.
SeparatrixBranch make_branch(const PlaneVectorField& X, bool over_x, const UPoly& phi, int N = kDefaultTruncation);

/// Leaf through the origin of a field that is regular there, as a graph over x
/// when P(0) != 0, else over y.
SeparatrixBranch leaf_series_regular(const PlaneVectorField& X, int N = kDefaultTruncation);

struct CofactorReport {
    Scalar h0;
    bool h0_nonzero = false;
    int order_of_f = 0;
    bool linear_part_nilpotent = false;
    bool first_jet_identity = false;  // X_1(f_m) = h(0) f_m
    bool consistent = true;           // h(0) != 0 implies ord f = 1 and DX(0) not nilpotent
    std::string violation;
};

CofactorReport cofactor_origin_test(const PlaneVectorField& X, const SeparatrixBranch& branch);
/// For an arbitrary invariant f; throws BranchNotInvariant if f does not divide X(f).
CofactorReport cofactor_origin_test(const PlaneVectorField& X, const MultiPoly& f);

Scalar cs_index(const PlaneVectorField& X, const SeparatrixBranch& branch);

/// omega = P dy - Q dx
DiffForm dual_one_form(const PlaneVectorField& X);

/// p(x, phi(x)) as a univariate series, truncated mod x^order (order < 0: exact).
UPoly substitute_graph(const MultiPoly& p, const UPoly& phi, int order = -1);

}  // namespace folres
