#pragma once

#include <vector>

#include "gabp/sparse_matrix.hpp"

namespace gabp {

/// Undirected graph induced by the nonzero off-diagonal entries of A.
struct GraphTopology {
    std::vector<std::vector<int>> neighbors;  // N(i), ascending, i excluded

    int node_count() const { return static_cast<int>(neighbors.size()); }
};

GraphTopology build_graph(const SymmetricSparseMatrix& A);

/// True iff the undirected graph is acyclic (a forest counts).
bool is_tree(const GraphTopology& g);

}  // namespace gabp
