#include "adsig/distance.hpp"

#include <queue>
#include <stdexcept>

namespace adsig {

IntMatrix bfs_distances(const IntMatrix& incidence) {
    const std::size_t v = incidence.rows();
    const std::size_t b = incidence.cols();
    const std::size_t total = v + b;

    std::vector<std::vector<int>> adjacency(total);
    for (std::size_t p = 0; p < v; ++p)
        for (std::size_t j = 0; j < b; ++j)
            if (incidence(p, j) != 0) {
                adjacency[p].push_back(static_cast<int>(v + j));
                adjacency[v + j].push_back(static_cast<int>(p));
            }

    IntMatrix dist(total, total);
    std::vector<int> level(total);
    for (std::size_t start = 0; start < total; ++start) {
        std::fill(level.begin(), level.end(), -1);
        level[start] = 0;
        std::queue<int> queue;
        queue.push(static_cast<int>(start));
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop();
            for (int y : adjacency[static_cast<std::size_t>(x)])
                if (level[static_cast<std::size_t>(y)] < 0) {
                    level[static_cast<std::size_t>(y)] = level[static_cast<std::size_t>(x)] + 1;
                    queue.push(y);
                }
        }
        for (std::size_t y = 0; y < total; ++y) {
            if (level[y] < 0) throw std::runtime_error("infinite distance");
            dist(start, y) = level[y];
        }
    }
    return dist;
}

long long diameter(const IntMatrix& dist) {
    Int max(0);
    for (std::size_t i = 0; i < dist.rows(); ++i)
        for (std::size_t j = 0; j < dist.cols(); ++j)
            if (dist(i, j) > max) max = dist(i, j);
    return max.get_si();
}

IntMatrix closed_form_distance_matrix(const DesignParams& params, const IntMatrix& incidence) {
    const auto v = static_cast<std::size_t>(params.v);
    const auto b = static_cast<std::size_t>(params.b);
    const auto r = static_cast<std::size_t>(params.r);
    const auto n = static_cast<std::size_t>(params.n);
    if (incidence.rows() != v || incidence.cols() != b)
        throw std::invalid_argument("incidence shape does not match parameters");

    IntMatrix d(v + b, v + b);
    d.set_block(0, 0, (IntMatrix::ones(v, v) - IntMatrix::identity(v)) * Int(2));
    IntMatrix cross = IntMatrix::ones(v, b) * Int(3) - incidence * Int(2);
    d.set_block(0, v, cross);
    d.set_block(v, 0, cross.transpose());
    IntMatrix lower =
        kron(IntMatrix::ones(r, r) - IntMatrix::identity(r), IntMatrix::ones(n, n)) * Int(2) +
        kron(IntMatrix::identity(r), IntMatrix::ones(n, n) - IntMatrix::identity(n)) * Int(4);
    d.set_block(v, v, lower);
    return d;
}

namespace {

struct DerivedCounts {
    std::size_t v, b, r, n;
    Int k, lambda, mu;
};

[[noreturn]] void fail(const std::string& which) {
    throw std::runtime_error("incidence identity violated: " + which);
}

DerivedCounts derive_counts(const IntMatrix& incidence) {
    const std::size_t v = incidence.rows();
    const std::size_t b = incidence.cols();
    if (v == 0 || b == 0) fail("empty incidence matrix");

    Int k(0), r(0);
    for (std::size_t p = 0; p < v; ++p) {
        Int row(0);
        for (std::size_t j = 0; j < b; ++j) row += incidence(p, j);
        if (p == 0)
            r = row;
        else if (row != r)
            fail("row sums constant (r)");
    }
    for (std::size_t j = 0; j < b; ++j) {
        Int col(0);
        for (std::size_t p = 0; p < v; ++p) col += incidence(p, j);
        if (j == 0)
            k = col;
        else if (col != k)
            fail("column sums constant (k)");
    }
    if (k == 0 || Int(v) % k != 0) fail("n = v/k integral");
    Int n = Int(v) / k;
    if (n < 2) fail("n >= 2");
    if (Int(b) % n != 0) fail("r = b/n integral");
    if (Int(b) / n != r) fail("class count equals replication (b = r n)");
    if (k % n != 0) fail("mu = k/n integral");
    Int mu = k / n;
    Int pairs = r * (k - 1);
    if (v < 2 || pairs % Int(static_cast<long>(v - 1)) != 0) fail("lambda = r(k-1)/(v-1) integral");
    Int lambda = pairs / Int(static_cast<long>(v - 1));

    DerivedCounts out;
    out.v = v;
    out.b = b;
    out.r = static_cast<std::size_t>(r.get_ui());
    out.n = static_cast<std::size_t>(n.get_ui());
    out.k = k;
    out.lambda = lambda;
    out.mu = mu;
    return out;
}

}  // namespace

DistanceStratification stratify(const IntMatrix& incidence) {
    const IntMatrix dist = bfs_distances(incidence);
    const std::size_t total = dist.rows();

    DistanceStratification s;
    for (auto& m : s.a) m = IntMatrix(total, total);
    for (std::size_t i = 0; i < total; ++i)
        for (std::size_t j = 0; j < total; ++j) {
            const Int& d = dist(i, j);
            if (d > 4) fail("diameter at most 4");
            s.a[d.get_ui()](i, j) = 1;
        }

    const DerivedCounts c = derive_counts(incidence);
    const std::size_t v = c.v, b = c.b, r = c.r, n = c.n;

    const IntMatrix jv = IntMatrix::ones(v, v), iv = IntMatrix::identity(v);
    const IntMatrix jr = IntMatrix::ones(r, r), ir = IntMatrix::identity(r);
    const IntMatrix jn = IntMatrix::ones(n, n), in = IntMatrix::identity(n);

    if (s.a[0] != IntMatrix::identity(total)) fail("A0 = I");

    IntMatrix a2 = IntMatrix(total, total);
    a2.set_block(0, 0, jv - iv);
    a2.set_block(v, v, kron(jr - ir, jn));
    if (s.a[2] != a2) fail("A2 closed form");

    IntMatrix a3 = IntMatrix(total, total);
    IntMatrix cross = IntMatrix::ones(v, b) - incidence;
    a3.set_block(0, v, cross);
    a3.set_block(v, 0, cross.transpose());
    if (s.a[3] != a3) fail("A3 closed form");

    IntMatrix a4 = IntMatrix(total, total);
    a4.set_block(v, v, kron(ir, jn - in));
    if (s.a[4] != a4) fail("A4 closed form");

    // Adjacency products: A A_2 and A A_3 must reduce to the stated
    // incidence-level forms.
    const IntMatrix& a1 = s.a[1];
    IntMatrix aa2_expected(total, total);
    aa2_expected.set_block(0, v, IntMatrix::ones(v, b) * Int(static_cast<long>(r - 1)));
    aa2_expected.set_block(v, 0, IntMatrix::ones(b, v) * c.k - incidence.transpose());
    if (a1 * s.a[2] != aa2_expected) fail("A A2 product identity");

    IntMatrix aa3_expected(total, total);
    aa3_expected.set_block(0, 0, (jv - iv) * (Int(static_cast<long>(r)) - c.lambda));
    aa3_expected.set_block(
        v, v, kron(ir, jn - in) * c.k + kron(jr - ir, jn) * (c.k - c.mu));
    if (a1 * s.a[3] != aa3_expected) fail("A A3 product identity");

    return s;
}

}  // namespace adsig
