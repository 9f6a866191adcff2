#include <doctest.h>

#include <algorithm>
#include <random>

#include "adsig/linalg.hpp"

using namespace adsig;

namespace {

IntMatrix random_symmetric(std::mt19937& rng, std::size_t dim, int lo, int hi) {
    std::uniform_int_distribution<int> entry(lo, hi);
    IntMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i; j < dim; ++j) {
            m(i, j) = entry(rng);
            m(j, i) = m(i, j);
        }
    return m;
}

}  // namespace

TEST_CASE("kron and the matrix builders") {
    IntMatrix i2 = IntMatrix::identity(2);
    IntMatrix j2 = IntMatrix::ones(2, 2);

    IntMatrix k = kron(i2, j2);
    long ones = 0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (k(i, j) == 1) ++ones;
    CHECK(ones == 8);

    // (J2 - I2) x J2 puts the J2 blocks on the antidiagonal.
    IntMatrix anti = kron(j2 - i2, j2);
    CHECK(anti.block(0, 2, 2, 2) == j2);
    CHECK(anti.block(2, 0, 2, 2) == j2);
    CHECK(anti.block(0, 0, 2, 2) == IntMatrix(2, 2));

    CHECK(IntMatrix::ones(2, 3) * IntMatrix::ones(3, 2) == j2 * Int(3));
}

TEST_CASE("exact determinants") {
    CHECK(det_exact(IntMatrix::identity(5)) == 1);
    CHECK(det_exact(to_rational(IntMatrix::identity(5))) == 1);

    // (x+2)I - 2J at x = 0 and v = 4: closed form (x-2v+2)(x+2)^(v-1) = -48.
    IntMatrix c0 = IntMatrix::identity(4) * Int(2) - IntMatrix::ones(4, 4) * Int(2);
    CHECK(det_exact(c0) == -48);

    // Repeated row.
    IntMatrix rep{{Int(1), Int(2)}, {Int(1), Int(2)}};
    CHECK(det_exact(rep) == 0);

    // Bareiss and rational elimination agree on random integer matrices,
    // including sparse ones that force pivot swaps.
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(-5, 5);
    std::uniform_int_distribution<int> coin(0, 2);
    for (int trial = 0; trial < 60; ++trial) {
        IntMatrix m(6, 6);
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j < 6; ++j)
                m(i, j) = (trial % 2 == 1 && coin(rng) != 0) ? 0 : entry(rng);
        CHECK(Rat(det_exact(m)) == det_exact(to_rational(m)));
    }

    // Antidiagonal identity: determinant (-1)^(n(n-1)/2) via swaps alone.
    IntMatrix anti(4, 4);
    for (std::size_t i = 0; i < 4; ++i) anti(i, 3 - i) = 1;
    CHECK(det_exact(anti) == 1);
    IntMatrix anti5(5, 5);
    for (std::size_t i = 0; i < 5; ++i) anti5(i, 4 - i) = 1;
    CHECK(det_exact(anti5) == 1);
}

TEST_CASE("characteristic polynomials") {
    CHECK(char_poly(IntMatrix(2, 2)) == IntPoly({Int(0), Int(0), Int(1)}));

    // J3: x^3 - 3x^2.
    CHECK(char_poly(IntMatrix::ones(3, 3)) == IntPoly({Int(0), Int(0), Int(-3), Int(1)}));

    // char_poly(m)(t) = det(tI - m) at integer points, for random matrices.
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> entry(-4, 4);
    for (int trial = 0; trial < 10; ++trial) {
        IntMatrix m(5, 5);
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j) m(i, j) = entry(rng);
        IntPoly p = char_poly(m);
        CHECK(p.degree() == 5);
        CHECK(p.coeff(4) == -m.trace());
        for (long t : {-3L, -1L, 0L, 2L, 5L}) {
            IntMatrix shifted = IntMatrix::identity(5) * Int(t) - m;
            CHECK(p.eval(Int(t)) == det_exact(shifted));
        }
    }
}

TEST_CASE("sturm root counting") {
    IntPoly x2_minus_2({Int(-2), Int(0), Int(1)});
    CHECK(sturm_count(x2_minus_2, Interval::positive()) == 1);
    CHECK(sturm_count(x2_minus_2, Interval::all()) == 2);

    IntPoly x2_plus_1({Int(1), Int(0), Int(1)});
    CHECK(sturm_count(x2_plus_1, Interval::all()) == 0);

    IntPoly tail({Int(-24), Int(-18), Int(1)});  // x^2 - 18x - 24
    CHECK(sturm_count(tail, Interval::negative()) == 1);
    CHECK(sturm_count(tail, Interval::positive()) == 1);

    // Repeated roots count once; roots on an endpoint are excluded.
    IntPoly square = IntPoly::linear_root(Int(2)).pow(2);
    CHECK(sturm_count(square, Interval::positive()) == 1);
    CHECK(sturm_count(square, Interval{Rat(2), std::nullopt}) == 0);
    CHECK(sturm_count(square, Interval{Rat(0), Rat(3)}) == 1);

    CHECK_THROWS(sturm_count(IntPoly(), Interval::all()));
}

TEST_CASE("squarefree decomposition") {
    // (x-1)^2 (x+3) -> strata {x+3: 1, x-1: 2}
    IntPoly p = IntPoly::linear_root(Int(1)).pow(2) * IntPoly({Int(3), Int(1)});
    auto strata = squarefree_decomposition(p);
    REQUIRE(strata.size() == 2);
    CHECK(strata[0].first == IntPoly({Int(3), Int(1)}));
    CHECK(strata[0].second == 1);
    CHECK(strata[1].first == IntPoly({Int(-1), Int(1)}));
    CHECK(strata[1].second == 2);
}

TEST_CASE("inertia on fixed matrices") {
    CHECK(inertia(IntMatrix::identity(3)) == Signature{3, 0, 0});

    IntMatrix diag(4, 4);
    diag(0, 0) = 5;
    diag(1, 1) = 0;
    diag(2, 2) = -2;
    diag(3, 3) = -2;
    CHECK(inertia(diag) == Signature{1, 2, 1});

    IntMatrix swap{{Int(0), Int(1)}, {Int(1), Int(0)}};
    CHECK(inertia(swap) == Signature{1, 1, 0});

    IntMatrix nonsym{{Int(0), Int(1)}, {Int(2), Int(0)}};
    CHECK_THROWS_WITH_AS(inertia(nonsym), "non-symmetric", std::invalid_argument);
}

TEST_CASE("inertia properties on random symmetric matrices") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<std::size_t> dim_dist(1, 8);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t dim = dim_dist(rng);
        IntMatrix m = random_symmetric(rng, dim, -9, 9);
        Signature s = inertia(m);
        CHECK(s.n_plus + s.n_minus + s.n_zero == static_cast<long>(dim));

        Signature neg = inertia(-m);
        CHECK(neg.n_plus == s.n_minus);
        CHECK(neg.n_minus == s.n_plus);
        CHECK(neg.n_zero == s.n_zero);

        // Congruence by a permutation leaves the inertia unchanged.
        std::vector<std::size_t> perm(dim);
        for (std::size_t i = 0; i < dim; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        IntMatrix pm(dim, dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) pm(i, j) = m(perm[i], perm[j]);
        CHECK(inertia(pm) == s);
    }
}

TEST_CASE("schur complement determinants") {
    CHECK(schur_complement_det(to_rational(IntMatrix::identity(2)), RatMatrix(2, 3),
                               to_rational(IntMatrix::identity(3))) == 1);

    // Equals the determinant of the assembled block matrix, random blocks.
    std::mt19937 rng(37);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    for (int trial = 0; trial < 20; ++trial) {
        RatMatrix c0(3, 3), c1(3, 2), c2(2, 2);
        auto fill = [&](RatMatrix& m, bool symmetric) {
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = symmetric ? i : 0; j < m.cols(); ++j) {
                    m(i, j) = make_rat(num(rng), den(rng));
                    if (symmetric) m(j, i) = m(i, j);
                }
        };
        fill(c0, true);
        fill(c1, false);
        fill(c2, true);
        if (det_exact(c0) == 0) continue;

        RatMatrix assembled(5, 5);
        assembled.set_block(0, 0, c0);
        assembled.set_block(0, 3, c1);
        assembled.set_block(3, 0, c1.transpose());
        assembled.set_block(3, 3, c2);
        CHECK(schur_complement_det(c0, c1, c2) == det_exact(assembled));
    }

    // 4I - 2J on 4 points: det = (2-8+2)(2+2)^3 = -256.
    RatMatrix c0 = to_rational(IntMatrix::identity(4) * Int(4) - IntMatrix::ones(4, 4) * Int(2));
    CHECK(det_exact(c0) == -256);
    CHECK_THROWS(schur_complement_det(RatMatrix(2, 2), RatMatrix(2, 2),
                                      to_rational(IntMatrix::identity(2))));
}
