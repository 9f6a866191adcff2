#include "adsig/linalg.hpp"

#include <stdexcept>

namespace adsig {

Int det_exact(const IntMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant requires square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Int(1);
    IntMatrix a = m;
    Int prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t pivot = k;
            while (pivot < n && a(pivot, k) == 0) ++pivot;
            if (pivot == n) return Int(0);
            a.swap_rows(k, pivot);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

Rat det_exact(const RatMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant requires square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Rat(1);
    RatMatrix a = m;
    Rat det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a(pivot, k) == 0) ++pivot;
        if (pivot == n) return Rat(0);
        if (pivot != k) {
            a.swap_rows(k, pivot);
            det = -det;
        }
        det *= a(k, k);
        Rat inv = Rat(1) / a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k) == 0) continue;
            Rat factor = a(i, k) * inv;
            for (std::size_t j = k; j < n; ++j) a(i, j) -= factor * a(k, j);
        }
    }
    return det;
}

IntPoly char_poly(const IntMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("char_poly requires square matrix");
    const std::size_t d = m.rows();
    std::vector<Int> c(d + 1, Int(0));
    c[d] = 1;
    if (d == 0) return IntPoly(std::move(c));
    // Faddeev-LeVerrier: M_1 = A, c_{d-k} = -tr(M_k)/k, M_{k+1} = A(M_k + c_{d-k} I).
    IntMatrix mk = m;
    for (std::size_t k = 1; k <= d; ++k) {
        Int t = mk.trace();
        Int ck;
        mpz_divexact_ui(ck.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(k));
        ck = -ck;
        c[d - k] = ck;
        if (k == d) break;
        for (std::size_t i = 0; i < d; ++i) mk(i, i) += ck;
        mk = m * mk;
    }
    return IntPoly(std::move(c));
}

namespace {

// Sturm chain of a square-free rational polynomial.
std::vector<RatPoly> sturm_chain(const RatPoly& p) {
    std::vector<RatPoly> chain;
    chain.push_back(p);
    RatPoly d = p.derivative();
    if (!d.is_zero()) chain.push_back(d);
    while (chain.size() >= 2 && chain.back().degree() > 0) {
        RatPoly rem = divmod(chain[chain.size() - 2], chain.back()).second;
        if (rem.is_zero()) break;
        chain.push_back(-rem);
    }
    return chain;
}

int sign_at(const RatPoly& p, const std::optional<Rat>& point, bool neg_infinity) {
    if (p.is_zero()) return 0;
    if (point) return sign_of(p.eval(*point));
    int lead = sign_of(p.leading());
    if (!neg_infinity) return lead;
    return p.degree() % 2 == 0 ? lead : -lead;
}

long sign_variations(const std::vector<RatPoly>& chain, const std::optional<Rat>& point,
                     bool neg_infinity) {
    long variations = 0;
    int last = 0;
    for (const auto& p : chain) {
        int s = sign_at(p, point, neg_infinity);
        if (s == 0) continue;
        if (last != 0 && s != last) ++variations;
        last = s;
    }
    return variations;
}

}  // namespace

long sturm_count(const IntPoly& p, const Interval& interval) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial");
    if (p.degree() == 0) return 0;

    RatPoly rp = to_rational(p);
    RatPoly sf = divmod(rp, gcd(rp, rp.derivative())).first;  // same roots, multiplicity 1

    // Deflate roots sitting exactly on a finite endpoint; the open interval
    // excludes them and Sturm's theorem needs nonvanishing endpoints.
    for (const auto& endpoint : {interval.lo, interval.hi}) {
        if (!endpoint) continue;
        if (sf.eval(*endpoint) == 0) sf = divmod(sf, RatPoly::linear_root(*endpoint)).first;
    }
    if (sf.degree() <= 0) return 0;

    auto chain = sturm_chain(sf);
    long at_lo = sign_variations(chain, interval.lo, /*neg_infinity=*/true);
    long at_hi = sign_variations(chain, interval.hi, /*neg_infinity=*/false);
    return at_lo - at_hi;
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial");
    std::vector<std::pair<IntPoly, int>> out;
    if (p.degree() == 0) return out;
    RatPoly b = monic(to_rational(p));
    RatPoly g = gcd(b, b.derivative());
    if (g.degree() == 0) {
        out.emplace_back(to_integer_primitive(b), 1);
        return out;
    }
    // Yun's algorithm.
    RatPoly bb = divmod(b, g).first;
    RatPoly cc = divmod(b.derivative(), g).first;
    RatPoly dd = cc - bb.derivative();
    for (int i = 1; bb.degree() > 0; ++i) {
        RatPoly f = gcd(bb, dd);
        if (f.degree() > 0) out.emplace_back(to_integer_primitive(f), i);
        bb = divmod(bb, f).first;
        cc = divmod(dd, f).first;
        dd = cc - bb.derivative();
    }
    return out;
}

Signature inertia(const IntMatrix& m) {
    if (!m.is_square() || !m.is_symmetric()) throw std::invalid_argument("non-symmetric");
    const long d = static_cast<long>(m.rows());
    Signature sig;
    if (d == 0) return sig;

    IntPoly cp = char_poly(m);
    long n_zero = 0;
    while (cp.coeff(static_cast<std::size_t>(n_zero)) == 0) ++n_zero;
    sig.n_zero = n_zero;

    std::vector<Int> reduced(cp.coeffs().begin() + n_zero, cp.coeffs().end());
    IntPoly nonzero_part = IntPoly(std::move(reduced));
    for (const auto& [factor, mult] : squarefree_decomposition(nonzero_part)) {
        sig.n_plus += mult * sturm_count(factor, Interval::positive());
        sig.n_minus += mult * sturm_count(factor, Interval::negative());
    }
    if (sig.n_plus + sig.n_minus + sig.n_zero != d)
        throw std::logic_error("inertia: eigenvalue counts do not sum to the dimension");
    return sig;
}

RatMatrix solve(const RatMatrix& a, const RatMatrix& b) {
    if (!a.is_square() || a.rows() != b.rows())
        throw std::invalid_argument("solve: dimension mismatch");
    const std::size_t n = a.rows(), w = b.cols();
    RatMatrix m(n, n + w);
    m.set_block(0, 0, a);
    m.set_block(0, n, b);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m(pivot, k) == 0) ++pivot;
        if (pivot == n) throw std::invalid_argument("solve: singular matrix");
        if (pivot != k) m.swap_rows(k, pivot);
        Rat inv = Rat(1) / m(k, k);
        for (std::size_t j = k; j < n + w; ++j) m(k, j) *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || m(i, k) == 0) continue;
            Rat factor = m(i, k);
            for (std::size_t j = k; j < n + w; ++j) m(i, j) -= factor * m(k, j);
        }
    }
    return m.block(0, n, n, w);
}

RatMatrix schur_complement(const RatMatrix& c0, const RatMatrix& c1, const RatMatrix& c2) {
    if (!c0.is_square() || !c2.is_square() || c1.rows() != c0.rows() || c1.cols() != c2.rows())
        throw std::invalid_argument("schur_complement: block dimensions not conformal");
    RatMatrix x = solve(c0, c1);  // throws on singular c0
    return c2 - c1.transpose() * x;
}

Rat schur_complement_det(const RatMatrix& c0, const RatMatrix& c1, const RatMatrix& c2) {
    Rat d0 = det_exact(c0);
    if (d0 == 0) throw std::invalid_argument("schur_complement_det: singular leading block");
    return d0 * det_exact(schur_complement(c0, c1, c2));
}

}  // namespace adsig
