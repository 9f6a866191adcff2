#include <doctest.h>

#include "adsig/distance.hpp"

using namespace adsig;

TEST_CASE("AG(2,2) distances") {
    Design d = build_affine_geometry(2, 2, 1);
    DesignParams p = validate_affine(d);
    IntMatrix n = incidence_matrix(d);
    IntMatrix dist = bfs_distances(n);

    // Point to an incident block: distance 1.
    for (std::size_t pt = 0; pt < 4; ++pt)
        for (std::size_t j = 0; j < 6; ++j)
            if (n(pt, j) == 1) CHECK(dist(pt, 4 + j) == 1);

    // Distinct points: distance 2.
    for (std::size_t x = 0; x < 4; ++x)
        for (std::size_t y = x + 1; y < 4; ++y) CHECK(dist(x, y) == 2);

    // Parallel blocks: distance 4 (columns 2c and 2c+1 share a class).
    for (std::size_t c = 0; c < 3; ++c) CHECK(dist(4 + 2 * c, 4 + 2 * c + 1) == 4);

    CHECK(dist == closed_form_distance_matrix(p, n));
    CHECK(diameter(dist) == 4);
    CHECK(dist.trace() == 0);

    // Row sum at a point vertex: 2(v-1) + r + 3(b-r) = 18.
    Int row(0);
    for (std::size_t j = 0; j < 10; ++j) row += dist(0, j);
    CHECK(row == 18);

    // Entrywise square sum.
    Int square_sum(0);
    for (std::size_t i = 0; i < 10; ++i)
        for (std::size_t j = 0; j < 10; ++j) square_sum += dist(i, j) * dist(i, j);
    CHECK(square_sum == 480);
    CHECK((dist * dist).trace() == 480);
}

TEST_CASE("AG(2,3) point distances are 2") {
    Design d = build_affine_geometry(2, 3, 1);
    IntMatrix dist = bfs_distances(incidence_matrix(d));
    for (std::size_t x = 0; x < 9; ++x)
        for (std::size_t y = x + 1; y < 9; ++y) CHECK(dist(x, y) == 2);
}

TEST_CASE("closed form equals BFS for assorted designs") {
    std::vector<Design> designs;
    designs.push_back(build_affine_geometry(2, 2, 1));
    designs.push_back(build_affine_geometry(3, 2, 1));
    designs.push_back(build_affine_geometry(2, 3, 1));
    designs.push_back(hadamard_to_affine_design(build_hadamard_paley(11)));
    for (const auto& d : designs) {
        DesignParams p = validate_affine(d);
        IntMatrix n = incidence_matrix(d);
        CHECK(bfs_distances(n) == closed_form_distance_matrix(p, n));
    }
}

TEST_CASE("stratification of AG(2,2)") {
    Design d = build_affine_geometry(2, 2, 1);
    IntMatrix n = incidence_matrix(d);
    DistanceStratification s = stratify(n);

    // A4 lower-right is I_3 x (J_2 - I_2): exactly 6 ones, all between blocks.
    Int a4_ones(0);
    for (std::size_t i = 0; i < 10; ++i)
        for (std::size_t j = 0; j < 10; ++j) a4_ones += s.a[4](i, j);
    CHECK(a4_ones == 6);
    CHECK(s.a[4].block(4, 4, 6, 6) ==
          kron(IntMatrix::identity(3), IntMatrix::ones(2, 2) - IntMatrix::identity(2)));

    // The strata partition all vertex pairs.
    IntMatrix sum(10, 10);
    for (const auto& a : s.a) sum = sum + a;
    CHECK(sum == IntMatrix::ones(10, 10));

    // A^2 upper-left block is N N^t.
    IntMatrix a2 = s.a[1] * s.a[1];
    CHECK(a2.block(0, 0, 4, 4) == n * n.transpose());
}

TEST_CASE("stratification of AG(2,3): A^2 upper-left is 4I + (J - I)") {
    Design d = build_affine_geometry(2, 3, 1);
    DistanceStratification s = stratify(incidence_matrix(d));
    IntMatrix a2 = s.a[1] * s.a[1];
    CHECK(a2.block(0, 0, 9, 9) ==
          IntMatrix::identity(9) * Int(4) + (IntMatrix::ones(9, 9) - IntMatrix::identity(9)));
}

TEST_CASE("stratify rejects a non-affine incidence matrix") {
    // The 4-cycle: a valid bipartite graph but not an affine design.
    IntMatrix n{{Int(1), Int(1)}, {Int(1), Int(1)}};
    CHECK_THROWS(stratify(n));
}

TEST_CASE("disconnected graphs have no distance matrix") {
    IntMatrix n(2, 2);
    n(0, 0) = 1;
    n(1, 1) = 1;
    CHECK_THROWS_WITH(bfs_distances(n), "infinite distance");
}
