#pragma once

#include <string>
#include <vector>

#include "adsig/design.hpp"
#include "adsig/linalg.hpp"

namespace adsig {

// Parameters of the structured matrix
//   alpha I_r x I_m + beta I_r x (J_m - I_m) + gamma (J_r - I_r) x J_m,
// an r x r grid of m x m blocks with constant diagonal blocks and constant
// all-gamma off-diagonal blocks.
struct StructuredParams {
    long r = 1;
    long m = 1;
    Rat alpha;
    Rat beta;
    Rat gamma;
};

RatMatrix structured_matrix(const StructuredParams& p);

// Closed-form determinant of structured_matrix(p):
//   (a + (m-1)b + m(r-1)g) * (a + (m-1)b - mg)^(r-1) * (a - b)^(r(m-1)).
Rat structured_det(const StructuredParams& p);

// Derives the full parameter system from the class size n and intersection
// number mu; throws DesignError(ParameterMismatch) when the divisibility
// conditions fail (no affine design exists for such a pair).
DesignParams params_from_order(long long n, long long mu);

// The three-factor closed form of the distance characteristic polynomial:
//   (x - linear_root)^linear_mult * quad_rep^quad_rep_mult * quad_tail
// with linear_root = 2n-4, multiplicity r-1; quad_rep = x^2+6x+(8-4n mu),
// multiplicity v-1; quad_tail = x^2 - e1 x - e0 monic with integer e1, e0.
struct CharPolyFactors {
    DesignParams params;
    long long linear_root = 0;
    long long linear_mult = 0;
    IntPoly quad_rep;
    long long quad_rep_mult = 0;
    IntPoly quad_tail;
    Int e1;
    Int e0;
};

// Computes the factor data; asserts that e1 and e0 are integral and that
// e0 > 0 (the tail factor then has one positive and one negative root).
CharPolyFactors factor_coefficients(long long n, long long mu);

// Expands the factors into the monic degree v+b polynomial predicted for
// the distance matrix of an AD(n, mu) incidence graph.
IntPoly predicted_charpoly(long long n, long long mu);

// The closed-form case analysis of the distance signature:
//   (1, 4, 5)                 if (n, mu) = (2, 1)
//   (4mu, 4mu-1, 4mu-2)       if n = 2, mu >= 2
//   (b, v, 0)                 otherwise.
// Reproduced verbatim; see signature_from_factors for the derived value.
Signature case_signature(long long n, long long mu);

// Signature derived from the factorization by exact root-sign analysis of
// each factor. Components always sum to v + b.
Signature signature_from_factors(long long n, long long mu);

// One verification check: named identity, pass flag, optional detail.
struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Everything verify_design establishes about one design. Mismatches are
// recorded, never thrown: the report is the product.
struct VerifyReport {
    DesignParams params;
    Signature signature_computed;
    Signature signature_from_factors;
    Signature signature_case_form;
    bool signature_matches_factors = false;
    bool signature_matches_case_form = false;
    IntPoly charpoly_computed;
    IntPoly charpoly_closed_form;
    bool charpoly_match = false;
    std::vector<Check> checks;

    bool all_pass() const;
};

// End-to-end verification of one affine design: incidence identities,
// distance stratification, both distance-matrix routes, characteristic
// polynomial against the closed form, exact inertia against both predicted
// signatures, and the block-determinant identities at spot points.
VerifyReport verify_design(const Design& d);

std::string report_to_json(const VerifyReport& report);

// Grid comparison of the two signature predictions. Cells whose parameters
// admit no affine design are marked inadmissible and carry no comparison.
struct SweepRow {
    long long n = 0;
    long long mu = 0;
    bool admissible = false;
    Signature from_factors;
    Signature case_form;
    bool match = false;
};

std::vector<SweepRow> sweep_signatures(long long n_max, long long mu_max);
std::string sweep_to_json(const std::vector<SweepRow>& rows, long long n_max, long long mu_max);

// Serialization helpers shared by the CLI and the report writer:
// polynomials as JSON arrays of decimal coefficient strings, ascending.
std::vector<std::string> poly_to_strings(const IntPoly& p);

}  // namespace adsig
