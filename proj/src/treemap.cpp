#include "treelab/treemap.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "treelab/lattice.hpp"

namespace treelab {

std::vector<DirectedEdge> oriented_edges(const LabelledTree& tree) {
    std::vector<DirectedEdge> out;
    out.reserve(tree.edges().size());
    for (const auto& [u, v] : tree.edges()) out.push_back({u, v});
    return out;
}

IntegerPartition indegree_partition(const LabelledTree& tree) {
    std::vector<int> indeg(tree.vertex_count() + 1, 0);
    for (const auto& [u, v] : tree.edges()) ++indeg[v];
    std::vector<int> parts;
    for (int v = 1; v <= tree.vertex_count(); ++v)
        if (indeg[v] > 0) parts.push_back(indeg[v]);
    return IntegerPartition(std::move(parts));
}

SetPartition tree_partition(const LabelledTree& tree) {
    const int n = tree.vertex_count();
    auto parent = tree.parents();
    // The edge labelled b is {b, parent(b)}; its head is the larger endpoint.
    std::map<int, std::vector<int>> by_head;
    for (int b = 2; b <= n; ++b) by_head[std::max(b, parent[b])].push_back(b);
    std::vector<std::vector<int>> blocks;
    blocks.reserve(by_head.size());
    for (auto& [head, labels] : by_head) blocks.push_back(std::move(labels));
    return SetPartition(n, std::move(blocks));
}

StarDecomposition decompose(const LabelledTree& tree, const SetPartition& sigma) {
    if (sigma.ground_n() != tree.vertex_count())
        throw GroundSetMismatch("partition ground set does not match the tree");
    if (!refines(sigma, tree_partition(tree)))
        throw RefinementError("sigma does not refine the tree's partition");

    auto parent = tree.parents();
    StarDecomposition decomp{sigma, {}};
    decomp.stars.reserve(sigma.block_count());
    std::set<int> cut_points;
    for (const auto& block : sigma.blocks()) {
        Star star;
        star.members = block;
        std::set<int> outside;
        for (int b : block) {
            int p = parent[b];
            star.edges.push_back({std::min(b, p), std::max(b, p)});
            for (int end : {b, p})
                if (!std::binary_search(block.begin(), block.end(), end)) outside.insert(end);
        }
        if (outside.size() != 1)
            throw StructureError("star of a block must have exactly one cut point");
        star.cut_point = *outside.begin();
        cut_points.insert(star.cut_point);
        decomp.stars.push_back(std::move(star));
    }
    bool any_leaf = false;
    for (auto& star : decomp.stars) {
        star.leaf = std::none_of(star.members.begin(), star.members.end(),
                                 [&](int m) { return cut_points.count(m) > 0; });
        any_leaf |= star.leaf;
    }
    if (!decomp.stars.empty() && !any_leaf)
        throw StructureError("decomposition has no leaf-star");
    return decomp;
}

Contraction contract_top(const LabelledTree& tree) {
    const int n = tree.vertex_count();
    if (n < 3) throw PreconditionError("contraction needs at least 3 vertices");
    SetPartition pi = tree_partition(tree);
    if (pi.block_index(n) != pi.block_index(n - 1))
        throw PreconditionError("vertices n and n-1 are not in the same block");
    if (!tree.adjacent(n - 1, n))
        throw StructureError("co-blocked n and n-1 must be adjacent");

    std::vector<Edge> edges;
    for (auto [u, v] : tree.edges()) {
        if (v == n) {  // v is the larger endpoint
            if (u == n - 1) continue;  // the contracted edge
            v = n - 1;
            if (u > v) std::swap(u, v);
        }
        edges.push_back({u, v});
    }
    LabelledTree contracted(n - 1, std::move(edges));

    // Indegree of n-1 decides which block absorbs B_1 \ {n}.
    int indeg = 0;
    for (const auto& [u, v] : tree.edges())
        if (v == n - 1) ++indeg;
    int j = 1;
    if (indeg > 0) {
        // The absorbed block is the one whose labels point into n-1, i.e.
        // the block containing any child of n-1.
        auto parent = tree.parents();
        int child = 0;
        for (int b = 2; b <= n; ++b)
            if (parent[b] == n - 1 && b < n - 1) {
                child = b;
                break;
            }
        if (child == 0) throw StructureError("positive indegree without a child below n-1");
        int absorbed = pi.block_index(child);
        int top = pi.block_index(n);
        // Blocks are numbered with the block of n first, the rest in
        // canonical order.
        j = 2;
        for (int idx = 0; idx < pi.block_count(); ++idx) {
            if (idx == top) continue;
            if (idx == absorbed) break;
            ++j;
        }
    }
    return Contraction{std::move(contracted), j};
}

}  // namespace treelab
