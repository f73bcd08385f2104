#include "gabp/graph.hpp"

#include <numeric>

namespace gabp {

GraphTopology build_graph(const SymmetricSparseMatrix& A) {
    GraphTopology g;
    g.neighbors.resize(static_cast<std::size_t>(A.dim()));
    for (int i = 0; i < A.dim(); ++i) {
        auto& nbrs = g.neighbors[static_cast<std::size_t>(i)];
        nbrs.reserve(A.off_diagonal_row(i).size());
        for (const auto& [j, v] : A.off_diagonal_row(i)) {
            (void)v;  // stored entries are nonzero by construction
            nbrs.push_back(j);
        }
    }
    return g;
}

namespace {

// union-find with path halving
int find_root(std::vector<int>& parent, int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] =
            parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
    }
    return x;
}

}  // namespace

bool is_tree(const GraphTopology& g) {
    const int n = g.node_count();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    for (int i = 0; i < n; ++i) {
        for (int j : g.neighbors[static_cast<std::size_t>(i)]) {
            if (j <= i) continue;  // each undirected edge once
            const int ri = find_root(parent, i);
            const int rj = find_root(parent, j);
            if (ri == rj) return false;  // edge closes a cycle
            parent[static_cast<std::size_t>(ri)] = rj;
        }
    }
    return true;
}

}  // namespace gabp
