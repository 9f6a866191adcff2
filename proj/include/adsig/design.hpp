#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "adsig/matrix.hpp"

namespace adsig {

// Resolvable design: v points, b equally sized blocks (each a strictly
// ascending list of point indices), and parallel classes partitioning the
// block index set such that each class partitions the points.
struct Design {
    int v = 0;
    std::vector<std::vector<int>> blocks;
    std::vector<std::vector<int>> parallel_classes;
};

// The parameter system of an affine resolvable design:
//   v = n^2 mu,  k = n mu,  lambda = (n mu - 1)/(n - 1),
//   r = (n^2 mu - 1)/(n - 1),  b = v + r - 1,  r(n - 1) = v - 1.
struct DesignParams {
    long long v = 0;
    long long b = 0;
    long long r = 0;
    long long k = 0;
    long long lambda = 0;
    long long n = 0;
    long long mu = 0;

    bool operator==(const DesignParams&) const = default;
};

// Which design axiom a validation failure violated.
enum class DesignDefect {
    NotTwoDesign,       // block sizes or pair coverage not constant
    NotResolvable,      // a parallel class fails to partition the points
    NotAffine,          // non-parallel block intersections not constant
    ParameterMismatch,  // derived parameters violate the affine identities
};

const char* defect_code(DesignDefect d);  // "not-2-design", "not-resolvable", ...

class DesignError : public std::runtime_error {
public:
    DesignError(DesignDefect defect, const std::string& detail)
        : std::runtime_error(std::string(defect_code(defect)) + ": " + detail),
          defect_(defect) {}

    DesignDefect defect() const { return defect_; }
    const char* code() const { return defect_code(defect_); }

private:
    DesignDefect defect_;
};

// Square +-1 matrix H with H H^t = order * I, normalized so that the first
// row and first column are all +1.
struct HadamardMatrix {
    int order = 0;
    Matrix<int> entries;
};

// Points and hyperplanes of the affine space of dimension m over GF(p^k).
// Points are the q^m coordinate vectors in enumeration order; each
// normalized nonzero functional contributes one parallel class of q
// hyperplane cosets. q^m must stay within desk scale (<= 4096).
Design build_affine_geometry(int m, unsigned p, unsigned k);

// Order-2^t matrix from the doubling construction [[H, H], [H, -H]].
HadamardMatrix build_hadamard_sylvester(int t);

// Order q+1 via the quadratic-residue construction; requires q prime with
// q = 3 (mod 4). Errors: "Paley-I inapplicable".
HadamardMatrix build_hadamard_paley(unsigned q);

// Rows become points; each column j >= 1 yields the parallel class
// { rows with +1 in column j } plus its complement.
Design hadamard_to_affine_design(const HadamardMatrix& h);

// Checks the affine design axioms from scratch (2-design, resolvable,
// constant non-parallel intersection, parameter identities) and returns the
// derived parameters. Throws DesignError naming the failed axiom.
DesignParams validate_affine(const Design& d);

// v x b incidence matrix with columns grouped class by class, so the block
// Gram identities hold literally in Kronecker form.
IntMatrix incidence_matrix(const Design& d);

// JSON form: {"v": int, "blocks": [[int,...],...], "parallel_classes":
// [[int,...],...]}. The loader enforces ascending point lists and the
// partition invariants; the writer emits the stored canonical ordering.
std::string design_to_json(const Design& d);
Design design_from_json(const std::string& text);

}  // namespace adsig
