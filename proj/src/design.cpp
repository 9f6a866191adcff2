#include "adsig/design.hpp"

#include <algorithm>
#include <cstdint>

#include "adsig/gf.hpp"

namespace adsig {

const char* defect_code(DesignDefect d) {
    switch (d) {
        case DesignDefect::NotTwoDesign: return "not-2-design";
        case DesignDefect::NotResolvable: return "not-resolvable";
        case DesignDefect::NotAffine: return "not-affine";
        case DesignDefect::ParameterMismatch: return "parameter-mismatch";
    }
    return "unknown";
}

Design build_affine_geometry(int m, unsigned p, unsigned k) {
    if (m < 2) throw std::invalid_argument("affine geometry needs dimension m >= 2");
    Field f = make_field(p, k);
    const std::uint64_t q = f.size();
    std::uint64_t v = 1;
    for (int i = 0; i < m; ++i) {
        v *= q;
        if (v > 4096) throw std::invalid_argument("q^m exceeds desk scale (4096 points)");
    }

    const auto elements = f.enumerate();
    const auto dims = static_cast<std::size_t>(m);

    // Point index -> coordinate vector, coordinate 0 least significant.
    auto point_coords = [&](std::uint64_t idx) {
        std::vector<FieldElement> x(dims);
        for (std::size_t i = 0; i < dims; ++i) {
            x[i] = elements[idx % q];
            idx /= q;
        }
        return x;
    };

    Design d;
    d.v = static_cast<int>(v);

    // Normalized functionals: nonzero vectors whose first nonzero coordinate
    // is 1, taken in enumeration order. Each gives one parallel class.
    for (std::uint64_t code = 1; code < v; ++code) {
        auto a = point_coords(code);
        std::size_t first = 0;
        while (f.is_zero(a[first])) ++first;
        if (a[first] != f.one()) continue;

        std::vector<std::vector<int>> cosets(q);
        for (std::uint64_t pt = 0; pt < v; ++pt) {
            auto x = point_coords(pt);
            FieldElement dot = f.zero();
            for (std::size_t i = 0; i < dims; ++i) dot = f.add(dot, f.mul(a[i], x[i]));
            cosets[f.index(dot)].push_back(static_cast<int>(pt));
        }

        std::vector<int> class_ids;
        for (auto& coset : cosets) {
            class_ids.push_back(static_cast<int>(d.blocks.size()));
            d.blocks.push_back(std::move(coset));  // ascending: points scanned in order
        }
        d.parallel_classes.push_back(std::move(class_ids));
    }
    return d;
}

namespace {

void check_hadamard(const HadamardMatrix& h) {
    const int n = h.order;
    const auto& e = h.entries;
    if (n < 1 || e.rows() != static_cast<std::size_t>(n) || !e.is_square())
        throw std::invalid_argument("bad Hadamard order");
    for (std::size_t i = 0; i < e.rows(); ++i)
        for (std::size_t j = 0; j < e.cols(); ++j)
            if (e(i, j) != 1 && e(i, j) != -1)
                throw std::invalid_argument("Hadamard entries must be +-1");
    for (std::size_t i = 0; i < e.rows(); ++i) {
        for (std::size_t j = i; j < e.rows(); ++j) {
            long dot = 0;
            for (std::size_t t = 0; t < e.cols(); ++t) dot += e(i, t) * e(j, t);
            long expect = i == j ? n : 0;
            if (dot != expect) throw std::invalid_argument("H H^t != order * I");
        }
    }
}

bool is_normalized(const HadamardMatrix& h) {
    for (int i = 0; i < h.order; ++i)
        if (h.entries(0, static_cast<std::size_t>(i)) != 1 ||
            h.entries(static_cast<std::size_t>(i), 0) != 1)
            return false;
    return true;
}

}  // namespace

HadamardMatrix build_hadamard_sylvester(int t) {
    if (t < 0 || t > 8) throw std::invalid_argument("Sylvester order 2^t limited to t in [0, 8]");
    Matrix<int> h{{1}};
    for (int step = 0; step < t; ++step) {
        const std::size_t n = h.rows();
        Matrix<int> next(2 * n, 2 * n);
        next.set_block(0, 0, h);
        next.set_block(0, n, h);
        next.set_block(n, 0, h);
        next.set_block(n, n, -h);
        h = std::move(next);
    }
    HadamardMatrix out{1 << t, std::move(h)};
    check_hadamard(out);
    return out;
}

HadamardMatrix build_hadamard_paley(unsigned q) {
    if (!is_prime(q) || q % 4 != 3) throw std::invalid_argument("Paley-I inapplicable");
    if (q + 1 > 256) throw std::invalid_argument("Paley order q+1 limited to 256");

    // Quadratic residue character on GF(q).
    std::vector<int> chi(q, -1);
    chi[0] = 0;
    for (std::uint64_t x = 1; x < q; ++x) chi[x * x % q] = 1;

    const std::size_t n = q + 1;
    Matrix<int> h(n, n);
    h(0, 0) = 1;
    for (std::size_t j = 1; j < n; ++j) {
        h(0, j) = 1;
        h(j, 0) = -1;
    }
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j) {
            if (i == j) {
                h(i, j) = 1;
                continue;
            }
            // Jacobsthal entry chi(row - col) over GF(q).
            h(i, j) = chi[((i - 1) + q - (j - 1)) % q];
        }
    // Negate the rows starting with -1 to reach normalized form.
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h(i, j) = -h(i, j);

    HadamardMatrix out{static_cast<int>(n), std::move(h)};
    check_hadamard(out);
    return out;
}

Design hadamard_to_affine_design(const HadamardMatrix& h) {
    check_hadamard(h);
    if (h.order < 4 || h.order % 4 != 0)
        throw std::invalid_argument("affine extension needs order 4*mu >= 4");
    if (!is_normalized(h)) throw std::invalid_argument("Hadamard matrix not normalized");

    Design d;
    d.v = h.order;
    for (int j = 1; j < h.order; ++j) {
        std::vector<int> plus, minus;
        for (int i = 0; i < h.order; ++i) {
            if (h.entries(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) == 1)
                plus.push_back(i);
            else
                minus.push_back(i);
        }
        int base = static_cast<int>(d.blocks.size());
        d.blocks.push_back(std::move(plus));
        d.blocks.push_back(std::move(minus));
        d.parallel_classes.push_back({base, base + 1});
    }
    return d;
}

namespace {

long long exact_div(long long num, long long den, const char* what) {
    if (den == 0 || num % den != 0)
        throw DesignError(DesignDefect::ParameterMismatch, std::string(what) + " not integral");
    return num / den;
}

void check_structure(const Design& d) {
    const int v = d.v;
    if (v < 2 || d.blocks.empty())
        throw DesignError(DesignDefect::NotTwoDesign, "need at least 2 points and 1 block");
    for (const auto& block : d.blocks) {
        if (block.empty())
            throw DesignError(DesignDefect::NotTwoDesign, "empty block");
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (block[i] < 0 || block[i] >= v)
                throw DesignError(DesignDefect::NotTwoDesign, "point index out of range");
            if (i > 0 && block[i] <= block[i - 1])
                throw DesignError(DesignDefect::NotTwoDesign, "block not strictly ascending");
        }
    }
    std::vector<int> seen(d.blocks.size(), 0);
    for (const auto& cls : d.parallel_classes)
        for (int idx : cls) {
            if (idx < 0 || idx >= static_cast<int>(d.blocks.size()))
                throw DesignError(DesignDefect::NotResolvable, "block index out of range");
            seen[static_cast<std::size_t>(idx)] += 1;
        }
    for (int count : seen)
        if (count != 1)
            throw DesignError(DesignDefect::NotResolvable,
                              "classes do not partition the block set");
}

}  // namespace

DesignParams validate_affine(const Design& d) {
    check_structure(d);
    const long long v = d.v;
    const long long b = static_cast<long long>(d.blocks.size());
    const long long r = static_cast<long long>(d.parallel_classes.size());

    // (a) constant block size.
    const long long k = static_cast<long long>(d.blocks[0].size());
    for (const auto& block : d.blocks)
        if (static_cast<long long>(block.size()) != k)
            throw DesignError(DesignDefect::NotTwoDesign, "block sizes differ");

    // (b) each parallel class partitions the point set. Checked before pair
    // coverage so a broken class reads as a resolvability defect.
    for (const auto& cls : d.parallel_classes) {
        std::vector<int> hits(static_cast<std::size_t>(v), 0);
        for (int idx : cls)
            for (int pt : d.blocks[static_cast<std::size_t>(idx)])
                hits[static_cast<std::size_t>(pt)] += 1;
        for (int h : hits)
            if (h != 1)
                throw DesignError(DesignDefect::NotResolvable,
                                  "class does not partition the points");
    }

    // (c) every point pair covered by the same number of blocks.
    std::vector<long long> pair_count(static_cast<std::size_t>(v * v), 0);
    for (const auto& block : d.blocks)
        for (std::size_t s = 0; s < block.size(); ++s)
            for (std::size_t t = s + 1; t < block.size(); ++t)
                pair_count[static_cast<std::size_t>(block[s]) * v + block[t]] += 1;
    const long long lambda = v >= 2 ? pair_count[1] : 0;
    for (long long x = 0; x < v; ++x)
        for (long long y = x + 1; y < v; ++y)
            if (pair_count[static_cast<std::size_t>(x * v + y)] != lambda)
                throw DesignError(DesignDefect::NotTwoDesign, "pair coverage not constant");

    // (d) non-parallel blocks meet in a constant number of points.
    std::vector<int> class_of(static_cast<std::size_t>(b), -1);
    for (std::size_t c = 0; c < d.parallel_classes.size(); ++c)
        for (int idx : d.parallel_classes[c]) class_of[static_cast<std::size_t>(idx)] = static_cast<int>(c);
    long long mu = -1;
    for (long long x = 0; x < b; ++x)
        for (long long y = x + 1; y < b; ++y) {
            if (class_of[static_cast<std::size_t>(x)] == class_of[static_cast<std::size_t>(y)])
                continue;
            const auto& bx = d.blocks[static_cast<std::size_t>(x)];
            const auto& by = d.blocks[static_cast<std::size_t>(y)];
            std::vector<int> common;
            std::set_intersection(bx.begin(), bx.end(), by.begin(), by.end(),
                                  std::back_inserter(common));
            long long size = static_cast<long long>(common.size());
            if (mu < 0) mu = size;
            if (size != mu)
                throw DesignError(DesignDefect::NotAffine,
                                  "non-parallel intersections not constant");
        }
    if (mu <= 0)
        throw DesignError(DesignDefect::NotAffine, "no non-parallel block pairs or empty meets");

    // (e) derived parameters must satisfy every affine identity.
    const long long n = exact_div(v, k, "n = v/k");
    const long long mu_derived = exact_div(k, n, "mu = k/n");
    DesignParams params{v, b, r, k, lambda, n, mu_derived};
    auto expect = [](bool ok, const char* what) {
        if (!ok) throw DesignError(DesignDefect::ParameterMismatch, what);
    };
    expect(mu_derived == mu, "mu != k/n");
    expect(v == n * n * mu, "v != n^2 mu");
    expect(k == n * mu, "k != n mu");
    expect(n >= 2, "n < 2");
    expect((n * mu - 1) % (n - 1) == 0 && lambda == (n * mu - 1) / (n - 1),
           "lambda != (n mu - 1)/(n - 1)");
    expect((n * n * mu - 1) % (n - 1) == 0 && r == (n * n * mu - 1) / (n - 1),
           "r != (n^2 mu - 1)/(n - 1)");
    expect(b == v + r - 1, "b != v + r - 1");
    expect(r * (n - 1) == v - 1, "r(n-1) != v - 1");
    return params;
}

IntMatrix incidence_matrix(const Design& d) {
    const auto v = static_cast<std::size_t>(d.v);
    const std::size_t b = d.blocks.size();
    IntMatrix n(v, b);
    std::size_t col = 0;
    for (const auto& cls : d.parallel_classes)
        for (int idx : cls) {
            for (int pt : d.blocks[static_cast<std::size_t>(idx)])
                n(static_cast<std::size_t>(pt), col) = 1;
            ++col;
        }
    if (col != b) throw std::invalid_argument("classes do not cover all blocks");
    return n;
}

}  // namespace adsig
