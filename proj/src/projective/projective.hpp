#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "forms/forms.hpp"
#include "plane/plane.hpp"

namespace folres {

/// A codimension-one foliation form on projective space in homogeneous
/// coordinates, optionally remembering the pencil it came from.
struct FoliationForm {
    DiffForm omega;
    int degree = 0;                // d, coefficients have degree d + 1
    std::vector<MultiPoly> pencil; // (P, Q) when built by build_fpq_form
    std::vector<int> weights;      // (p, q)
};

/// Omega = q Q dP - p P dQ, checked for i_R Omega = 0 and Omega ^ dOmega = 0.
FoliationForm build_fpq_form(const MultiPoly& P, const MultiPoly& Q, int p, int q);

/// Wraps an arbitrary 1-form, inferring d from the coefficient degree.
FoliationForm foliation_from_form(const DiffForm& omega);

struct EulerReport {
    int degree = 0;
    bool holds = false;
};

/// i_R dOmega = (d + 2) Omega; throws PreconditionViolated when i_R Omega != 0
/// and IdentityViolated when the identity fails.
EulerReport euler_identity_check(const FoliationForm& F);

struct PencilSpec {
    std::vector<MultiPoly> polys;
    std::vector<int> degrees;
    std::vector<int> weights;
};

/// Fills degrees and checks homogeneity, gcd(k) = 1 and k_j d_j constant.
void validate_pencil(PencilSpec& spec, bool require_homogeneous = true);

enum class SearchStrategy { FiniteField, Sampling };

struct TransversalityOptions {
    SearchStrategy strategy = SearchStrategy::FiniteField;
    std::vector<int> primes{3, 5, 7, 11, 13};
    std::uint64_t budget = 2'000'000;  // points examined before giving up
    /// Sampling: each family maps k parameters to the n+1 coordinates.
    std::vector<std::vector<MultiPoly>> families;
    int samples = 200;
    std::uint64_t seed = 0;
};

struct TransversalityResult {
    bool transverse = true;
    Point witness;                 // exact, when not transverse
    std::string certificate;       // what was searched
    std::uint64_t points_examined = 0;
    std::vector<std::pair<int, std::uint64_t>> per_prime;
};

TransversalityResult transversality_witness_search(PencilSpec spec, const TransversalityOptions& opts = {});

/// True when all P_j and all maximal minors of the Jacobian vanish at z.
bool is_degenerate_point(const PencilSpec& spec, const Point& z);

struct NormalTypeReport {
    PlaneVectorField field;   // dual field of the restricted form
    Scalar trace, det;
    std::optional<Scalar> invariant;  // tr^2 / det
    Rational expected;                // (p+q)^2 / (pq)
    bool matches = false;
    bool kupka = false;
};

NormalTypeReport normal_type_at(const FoliationForm& F, const Point& base, const Point& u, const Point& v);

struct Claim31Entry {
    Point point;
    bool d_omega_nonzero = false;
    std::map<DiffForm::Index, Scalar> d_omega;
};

std::vector<Claim31Entry> claim31_check(const FoliationForm& F, const std::vector<Point>& points);

}  // namespace folres
