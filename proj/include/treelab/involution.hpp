#pragma once

#include <vector>

#include "treelab/model.hpp"

namespace treelab {

// The split of a tree around an adjacent pair (i, i+1). "low" refers to
// vertex i, "high" to i+1. The out-forest of a vertex hangs by edges
// directed away from it (roots above it), the in-forest by edges directed
// into it (roots below it). When the root lies in the in-forest of i, that
// forest splits into the component containing vertex 1 and the rest.
struct NeighborSplit {
    int low = 0;  // i

    std::vector<int> low_side, high_side;  // vertex sets, pivot included

    std::vector<int> low_out, low_in;    // forests hanging off i
    std::vector<int> high_out, high_in;  // forests hanging off i+1

    enum class RootIn { LowOut, LowIn, HighOut, HighIn };
    RootIn root_in = RootIn::LowOut;

    // Filled only when root_in == RootIn::LowIn.
    std::vector<int> low_in_root_comp, low_in_rest;
};

// Requires i and i+1 adjacent in the tree.
NeighborSplit split_adjacent(const LabelledTree& tree, int i);

// The label-swap involution: returns a tree whose partition is
// tree_partition(tree) with i and i+1 exchanged. Applying it twice gives the
// original tree back. Requires 2 <= i <= n-1 and that i, i+1 lie in
// different blocks of tree_partition(tree); throws SameBlockError otherwise.
//
// When i and i+1 are not adjacent this is a plain relabelling. When they
// are adjacent, the forests hanging off the pair are rewired so that only
// the labels of the partition move. The result differs from the input
// whenever exchanging i and i+1 changes the partition; when {i} and {i+1}
// are both singleton blocks the map can fix a tree.
LabelledTree swap_adjacent_labels(const LabelledTree& tree, int i);

}  // namespace treelab
