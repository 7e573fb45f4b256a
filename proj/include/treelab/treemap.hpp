#pragma once

#include <vector>

#include "treelab/model.hpp"

namespace treelab {

struct DirectedEdge {
    int tail = 0;
    int head = 0;
    auto operator<=>(const DirectedEdge&) const = default;
};

// Each undirected edge {u,v} with u < v oriented as u -> v.
std::vector<DirectedEdge> oriented_edges(const LabelledTree& tree);

// Multiset of nonzero indegrees under the orientation above, weakly
// decreasing; always sums to n-1.
IntegerPartition indegree_partition(const LabelledTree& tree);

// Root the tree at vertex 1, give the edge below each vertex b the label b,
// and group the labels of edges sharing an oriented head into one block.
// The result partitions {2, ..., n} and has type indegree_partition(tree).
SetPartition tree_partition(const LabelledTree& tree);

// The star of a block B: the edges labelled by B's members together with B
// itself. Exactly one endpoint of those edges lies outside B (the cut
// point). A star is a leaf-star when B contains no cut point of any block.
struct Star {
    std::vector<int> members;  // the block, ascending
    std::vector<Edge> edges;   // one edge per member
    int cut_point = 0;
    bool leaf = false;
};

struct StarDecomposition {
    SetPartition sigma;
    std::vector<Star> stars;  // aligned with sigma.blocks()
};

// Decomposition of the tree with respect to sigma. Requires sigma to refine
// tree_partition(tree); throws RefinementError otherwise. The stars' edge
// sets partition the tree's edges and at least one star is a leaf-star
// whenever sigma is nonempty.
StarDecomposition decompose(const LabelledTree& tree, const SetPartition& sigma);

struct Contraction {
    LabelledTree tree;           // on [n-1]
    int merged_block_index = 0;  // 1-based j, see below
};

// Contract the edge between vertices n and n-1 and drop the label n.
// Requires n >= 3 and that n, n-1 share a block of tree_partition(tree)
// (which forces them adjacent); throws PreconditionError otherwise.
//
// Writing pi = tree_partition(tree) with B_1 the block containing n and
// B_2, ..., B_k the remaining blocks in canonical order, the partition of
// the contracted tree is:
//   j = 1:  {B_1 \ {n}, B_2, ..., B_k}          (indegree of n-1 was 0)
//   j >= 2: B_1 \ {n} merged into B_j           (indegree of n-1 was > 0)
// The returned merged_block_index is this j.
Contraction contract_top(const LabelledTree& tree);

}  // namespace treelab
