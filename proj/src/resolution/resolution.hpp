#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "algebra/factor.hpp"
#include "plane/plane.hpp"

namespace folres {

/// A point on the exceptional divisor of one blow-up, in one of the two
/// standard charts: chart 1 is (x, y) = (u, u v), chart 2 is (x, y) = (u v, v).
/// Chart-2 points are always the chart origin (the direction x = 0).
struct DivisorPoint {
    int chart = 1;
    Scalar coordinate;          // v on {u = 0} for chart 1, 0 for chart 2
    FieldPtr field;             // field of the coordinate (and of `local`)
    int relative_degree = 1;    // conjugates over the center's field
    int multiplicity = 1;       // as a root of the tangent cone
    QPoly label;                // minimal polynomial of the coordinate over Q
    bool exceeds_cap = false;   // coordinate would need too large a field; `local` unset
    bool singular = false;
    bool tangency = false;      // tau point of a dicritical divisor
    PlaneVectorField local;     // strict transform centered at the point
};

struct BlowupResult {
    JetData jet;
    PlaneVectorField chart1, chart2;
    bool divisor_invariant = true;   // false iff dicritical
    int exceptional_power = 0;       // power of u (resp. v) divided out of u' (resp. v')
    std::vector<DivisorPoint> points;
};

/// Blows up the origin.  `base` is the coefficient field of X; roots of the
/// tangent cone are adjoined up to `extension_cap` (absolute degree).
BlowupResult blowup_at_origin(const PlaneVectorField& X, const FieldPtr& base = nullptr, int extension_cap = 8);

/// Strict transforms only, without locating points.
PlaneVectorField chart_transform(const PlaneVectorField& X, int chart, int nu, bool dicritical);

struct ResolutionOptions {
    int max_depth = 64;
    int extension_cap = 8;
    int truncation = kDefaultTruncation;
    /// Blow up the origin once even when it is already simple.
    bool blowup_root = false;
};

/// An infinitely near point.  Points created together from one root cluster
/// are stored once, with `conjugates` copies.
struct TreePoint {
    int id = 0;
    int parent = -1;   // point blown up to create this one
    int step = -1;     // blow-up step that created it
    int depth = 0;
    int chart = 0;     // 0 for the root
    Scalar coordinate;
    FieldPtr field;
    int conjugates = 1;  // [field : Q]
    int tangent_multiplicity = 1;
    QPoly label;
    PlaneVectorField local;
    /// Divisor on {first coordinate = 0} and on {second coordinate = 0}.
    std::array<int, 2> axis_divisor{-1, -1};
    bool singular = false;
    bool tangency = false;
    bool unresolved = false;  // extension cap or depth cap
    bool blown_up = false;
    std::optional<SingularityClass> cls;
};

struct DivisorNode {
    int id = 0;
    int step = 0;
    int center = 0;
    int self_intersection = -1;
    bool dicritical = false;
    int conjugates = 1;
    FieldPtr field;
};

struct BlowupStep {
    int id = 0;
    int center = 0;
    JetData jet;
    int divisor = 0;
    std::vector<int> new_points;
};

enum class ResolutionStatus { Resolved, DepthCapHit, UnresolvedCluster };
const char* status_name(ResolutionStatus s);

/// Node of the expanded divisor graph: (divisor id, conjugate copy).
using DivisorCopy = std::pair<int, int>;

struct ResolutionTree {
    ResolutionOptions options;
    std::vector<TreePoint> points;
    std::vector<DivisorNode> divisors;
    std::vector<BlowupStep> steps;
    ResolutionStatus status = ResolutionStatus::Resolved;
    /// Multigraph on divisor copies; key ordered (smaller first).
    std::map<std::pair<DivisorCopy, DivisorCopy>, int> edges;

    /// Points of the final configuration (never blown up).
    std::vector<int> final_points() const;
    std::vector<int> final_singular_points() const;
    /// Final points lying on divisor d.
    std::vector<int> points_on(int d) const;
    /// Axis index (0 or 1) of divisor d at point p, or -1.
    int axis_of(int p, int d) const;
};

ResolutionTree resolve(const PlaneVectorField& X, const ResolutionOptions& options = {});

struct GraphCheck {
    int nodes = 0;
    int edge_count = 0;
    bool connected = true;
    bool tree = true;
    bool negative_definite = true;
    std::vector<std::vector<long>> matrix;  // expanded intersection matrix
    std::vector<DivisorCopy> order;
};

GraphCheck check_divisor_graph(const ResolutionTree& tree);

struct CsTerm {
    int point = 0;
    Scalar index;       // in the point's field
    Rational trace;     // Tr over Q, summed over conjugate copies
};

struct CsSum {
    int divisor = 0;
    std::vector<CsTerm> terms;
    Rational sum;       // per divisor copy
    int expected = 0;   // self-intersection
    bool pass = false;
};

CsSum cs_sum_check(const ResolutionTree& tree, int divisor);

enum class CaseLabel { Case1, Case2_1, Case2_2_1, Case2_2_2 };
const char* case_name(CaseLabel c);

struct CaseWitness {
    int point = 0;
    EigenDirection direction;
};

struct CaseResult {
    CaseLabel label = CaseLabel::Case1;
    bool radial = false;
    std::vector<CaseWitness> witnesses;      // Case1
    std::vector<int> tangency_points;        // Case2.1
    std::vector<int> invariant_divisors;     // Case2.2.1
    std::vector<int> dicritical_corners;     // Case2.2.2
};

/// Off-divisor separatrix directions of a final simple point.
std::vector<EigenDirection> transverse_separatrix_directions(const ResolutionTree& tree, int point);

CaseResult classify_case(const ResolutionTree& tree);

struct Candidate {
    std::string kind;    // "separatrix", "tangency-leaf" or "corner-leaf"
    int point = 0;
    std::vector<std::pair<int, Scalar>> path;  // (chart, coordinate) from the root
    EigenDirection direction;                  // upstairs tangent
    bool series_available = false;
    SeparatrixBranch upstairs;
    UPoly down_x, down_y;                      // downstairs parametrization in t
    Point down_direction;
    std::string note;
};

std::vector<Candidate> distinguished_candidates(const ResolutionTree& tree);

/// Parametrized curve (a(t), b(t)) at point p mapped to the root coordinates.
std::pair<UPoly, UPoly> project_to_root(const ResolutionTree& tree, int p, UPoly a, UPoly b, int order);

}  // namespace folres
