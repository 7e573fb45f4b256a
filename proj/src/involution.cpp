#include "treelab/involution.hpp"

#include <algorithm>

#include "treelab/treemap.hpp"

namespace treelab {

namespace {

// Vertices reachable from `start` without passing through `blocked`.
std::vector<int> component_from(const std::vector<std::vector<int>>& adj, int start,
                                int blocked) {
    std::vector<int> comp;
    std::vector<bool> seen(adj.size(), false);
    seen[blocked] = true;
    seen[start] = true;
    std::vector<int> stack{start};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        comp.push_back(v);
        for (int u : adj[v])
            if (!seen[u]) {
                seen[u] = true;
                stack.push_back(u);
            }
    }
    std::sort(comp.begin(), comp.end());
    return comp;
}

bool contains(const std::vector<int>& sorted, int x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
}

void append_sorted(std::vector<int>& dst, const std::vector<int>& src) {
    dst.insert(dst.end(), src.begin(), src.end());
    std::sort(dst.begin(), dst.end());
}

}  // namespace

NeighborSplit split_adjacent(const LabelledTree& tree, int i) {
    if (!tree.adjacent(i, i + 1))
        throw PreconditionError("vertices " + std::to_string(i) + " and " +
                                std::to_string(i + 1) + " are not adjacent");
    auto adj = tree.adjacency();
    NeighborSplit split;
    split.low = i;
    split.low_side = component_from(adj, i, i + 1);
    split.high_side = component_from(adj, i + 1, i);

    for (int u : adj[i]) {
        if (u == i + 1) continue;
        auto comp = component_from(adj, u, i);
        append_sorted(u > i ? split.low_out : split.low_in, comp);
        if (u < i && contains(comp, 1)) split.low_in_root_comp = comp;
    }
    for (int u : adj[i + 1]) {
        if (u == i) continue;
        auto comp = component_from(adj, u, i + 1);
        append_sorted(u > i + 1 ? split.high_out : split.high_in, comp);
    }

    if (contains(split.low_out, 1))
        split.root_in = NeighborSplit::RootIn::LowOut;
    else if (contains(split.low_in, 1))
        split.root_in = NeighborSplit::RootIn::LowIn;
    else if (contains(split.high_out, 1))
        split.root_in = NeighborSplit::RootIn::HighOut;
    else
        split.root_in = NeighborSplit::RootIn::HighIn;

    if (split.root_in == NeighborSplit::RootIn::LowIn) {
        for (int v : split.low_in)
            if (!contains(split.low_in_root_comp, v)) split.low_in_rest.push_back(v);
    } else {
        split.low_in_root_comp.clear();
    }
    return split;
}

LabelledTree swap_adjacent_labels(const LabelledTree& tree, int i) {
    const int n = tree.vertex_count();
    if (i < 2 || i + 1 > n)
        throw PreconditionError("pivot must satisfy 2 <= i <= n-1");
    SetPartition pi = tree_partition(tree);
    if (pi.block_index(i) == pi.block_index(i + 1))
        throw SameBlockError(std::to_string(i) + " and " + std::to_string(i + 1) +
                             " share a block of the tree's partition");

    if (!tree.adjacent(i, i + 1)) {
        auto relabel = [&](int v) { return v == i ? i + 1 : (v == i + 1 ? i : v); };
        std::vector<Edge> edges;
        edges.reserve(tree.edges().size());
        for (const auto& [u, v] : tree.edges()) edges.push_back({relabel(u), relabel(v)});
        return LabelledTree(n, std::move(edges));
    }

    NeighborSplit split = split_adjacent(tree, i);
    if (split.root_in == NeighborSplit::RootIn::HighIn)
        throw StructureError("root below i+1 contradicts the distinct-block precondition");

    auto adj = tree.adjacency();
    std::vector<Edge> edges;
    edges.reserve(tree.edges().size());
    for (const auto& [u, v] : tree.edges())
        if (u != i && u != i + 1 && v != i && v != i + 1) edges.push_back({u, v});
    edges.push_back({i, i + 1});
    auto attach = [&edges](int a, int b) {
        edges.push_back({std::min(a, b), std::max(a, b)});
    };

    if (split.root_in == NeighborSplit::RootIn::LowIn) {
        // The in-component holding the root keeps the label i; the rest of
        // the in-forest of i, like its out-forest, moves across the pivot.
        int root_comp_anchor = 0;
        for (int u : adj[i]) {
            if (u == i + 1) continue;
            if (u < i && contains(split.low_in_root_comp, u)) root_comp_anchor = u;
        }
        for (int u : adj[i]) {
            if (u == i + 1) continue;
            if (u == root_comp_anchor)
                attach(u, i);
            else
                attach(u, i + 1);
        }
        // Everything hanging off the old i+1 follows that vertex's new
        // label i, in- and out-forests alike.
        for (int u : adj[i + 1]) {
            if (u == i) continue;
            attach(u, i);
        }
    } else {
        // Root above the pair: the out-forests swap pivots, the in-forests
        // stay put.
        for (int u : adj[i]) {
            if (u == i + 1) continue;
            attach(u, u > i ? i + 1 : i);
        }
        for (int u : adj[i + 1]) {
            if (u == i) continue;
            attach(u, u > i + 1 ? i : i + 1);
        }
    }
    return LabelledTree(n, std::move(edges));
}

}  // namespace treelab
