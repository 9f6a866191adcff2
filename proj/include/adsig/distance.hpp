#pragma once

#include <array>

#include "adsig/design.hpp"
#include "adsig/matrix.hpp"

namespace adsig {

// Distance-i indicator matrices A_0..A_4 of the incidence graph, vertices
// ordered points first (0..v-1) then blocks (v..v+b-1) in incidence-column
// order. A_0 = I and the A_i sum to the all-ones matrix.
struct DistanceStratification {
    std::array<IntMatrix, 5> a;
};

// All-pairs shortest-path matrix of the bipartite incidence graph of N,
// by BFS from every vertex. Throws "infinite distance" when disconnected.
IntMatrix bfs_distances(const IntMatrix& incidence);

// Largest entry of a distance matrix.
long long diameter(const IntMatrix& dist);

// Distance matrix assembled from the block closed form
//   [ 2(J-I)        3J - 2N                          ]
//   [ 3J - 2N^t     2(J_r - I_r)xJ_n + 4 I_rx(J_n-I_n) ]
// for an incidence matrix in canonical class order.
IntMatrix closed_form_distance_matrix(const DesignParams& params, const IntMatrix& incidence);

// Splits the BFS distances into A_0..A_4 and checks the closed forms of the
// strata and the adjacency product identities that characterize affine
// incidence graphs. Throws naming the first violated identity.
DistanceStratification stratify(const IntMatrix& incidence);

}  // namespace adsig
