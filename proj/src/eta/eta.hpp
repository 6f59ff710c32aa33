#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "forms/forms.hpp"

namespace folres {

struct EtaAnalysis {
    DiffForm eta;
    int degree = 0;                 // homogeneous degree d of the coefficients
    bool decomposable = false;      // eta ^ eta = 0
    DiffForm omega;                 // i_R eta
    MultiPoly phi;                  // content of omega
    DiffForm omega1;                // omega / phi
    bool lie_identity = false;      // L_R eta = (d + 2) eta
    bool omega_integrable = false;  // omega ^ d omega = 0
    bool contraction_identity = false;  // omega ^ d omega = -i_R eta ^ i_R d eta
    bool omega_wedge_eta_zero = false;
};

/// Needs n >= 4 and homogeneous coefficients.
EtaAnalysis analyze_eta(const DiffForm& eta);

struct EtaDecomposition {
    DiffForm mu;        // original coordinates
    MultiPoly gamma;    // eta = omega1 ^ mu + gamma * (d omega1 / 2)
    std::vector<std::vector<Rational>> transform;  // y = T x, omega1 = y1 dy2 - y2 dy1
    bool higher_block_zero = false;  // eta_ij = 0 for j > i >= 3 in normal coordinates
    bool gamma_constant = false;
    std::string note;
};

EtaDecomposition eta_decompose(const DiffForm& eta, const DiffForm& omega1);

/// Constant skew matrix of a linear 1-form with i_R omega1 = 0; entry (i, j) is
/// the coefficient of x_j in the dx_i coefficient.
std::vector<std::vector<Rational>> skew_matrix(const DiffForm& omega1);

struct KernelResult {
    int rank = 0;
    std::vector<Point> basis;
};

KernelResult kernel_at_point(const DiffForm& eta, const Point& p);

struct FrobeniusResult {
    bool integrable = true;
    Point v, w, u;   // witness with d eta(p)(v, w, u) != 0
    Scalar value;
};

FrobeniusResult frobenius_test_at_point(const DiffForm& eta, const Point& p);

struct FrobeniusSampling {
    std::vector<Point> points;          // points where the rank was 2
    int rejected = 0;
    std::optional<FrobeniusResult> witness;
    Point witness_point;
};

/// Seeded random rational sample points; stops at the first witness.
FrobeniusSampling frobenius_sample(const DiffForm& eta, int count, std::uint64_t seed);

DiffForm theta_example();

struct ZeroLocusReport {
    bool only_origin = false;
    std::vector<std::size_t> forced;  // variables forced to vanish by a pure-power coefficient
    std::string reasoning;
};

/// Exact case analysis: a coefficient c x_i^k forces x_i = 0 on the common
/// zero locus; if every variable is forced, the locus is {0}.
ZeroLocusReport singular_coefficient_zero_locus(const DiffForm& eta);

}  // namespace folres
