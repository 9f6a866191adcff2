#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "adsig/matrix.hpp"
#include "adsig/polynomial.hpp"

namespace adsig {

// Eigenvalue sign counts of a real symmetric matrix, with multiplicity.
struct Signature {
    long n_plus = 0;
    long n_minus = 0;
    long n_zero = 0;

    bool operator==(const Signature&) const = default;
};

// Open interval with optional endpoints; an absent endpoint means the
// interval is unbounded on that side.
struct Interval {
    std::optional<Rat> lo;
    std::optional<Rat> hi;

    static Interval all() { return {std::nullopt, std::nullopt}; }
    static Interval positive() { return {Rat(0), std::nullopt}; }
    static Interval negative() { return {std::nullopt, Rat(0)}; }
};

// Exact determinant by fraction-free (Bareiss) elimination.
Int det_exact(const IntMatrix& m);

// Exact determinant by rational Gaussian elimination.
Rat det_exact(const RatMatrix& m);

// Characteristic polynomial det(xI - m), monic with integer coefficients,
// computed by the Faddeev-LeVerrier recurrence (matrix products and exact
// trace divisions only; independent of det_exact).
IntPoly char_poly(const IntMatrix& m);

// Number of distinct real roots of p in the open interval, via a Sturm
// chain over the rationals. Errors on the zero polynomial.
long sturm_count(const IntPoly& p, const Interval& interval);

// Square-free decomposition p = prod f_i^i (Yun); returns the nonconstant
// f_i with their multiplicities, each as a primitive integer polynomial.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p);

// Exact inertia of a symmetric integer matrix: zero count from the trailing
// zero coefficients of the characteristic polynomial, positive/negative
// counts from Sturm root counts on the square-free strata.
Signature inertia(const IntMatrix& m);

// Solves a X = b exactly; throws if a is singular.
RatMatrix solve(const RatMatrix& a, const RatMatrix& b);

// C2 - C1^t C0^{-1} C1 for the block matrix [[C0, C1], [C1^t, C2]].
RatMatrix schur_complement(const RatMatrix& c0, const RatMatrix& c1, const RatMatrix& c2);

// det C0 * det(C2 - C1^t C0^{-1} C1), which equals the determinant of the
// assembled block matrix. Throws if c0 is singular.
Rat schur_complement_det(const RatMatrix& c0, const RatMatrix& c1, const RatMatrix& c2);

}  // namespace adsig
