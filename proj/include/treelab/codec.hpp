#pragma once

#include <span>
#include <utility>

#include "treelab/model.hpp"

namespace treelab {

// Generalized Pruefer encoding of `tree` with respect to sigma: repeatedly
// remove the leaf-star whose block minimum is largest, recording its cut
// point; the final record is always vertex 1 and is dropped. The result has
// |sigma| - 1 symbols. Requires sigma to refine tree_partition(tree);
// throws RefinementError otherwise.
CodeWord encode(const SetPartition& sigma, const LabelledTree& tree);

// Inverse of encode: with an implicit trailing 1 appended to omega, step i
// picks the unused block with the largest minimum containing none of the
// symbols still to be consumed, and attaches it to the current symbol w:
// all members below the block maximum t (together with w, when w < t) gain
// edges into t, or every member gains an edge into w when w > t. Requires
// |omega| = |sigma| - 1.
LabelledTree decode(const SetPartition& sigma, const CodeWord& omega);

struct PartitionCode {
    SetPartition partition;
    CodeWord code;
};

// (tree_partition(tree), encode with that partition); injective over all
// trees on [n].
PartitionCode canonical_code(const LabelledTree& tree);

// Standard Pruefer correspondence: the tree on [n] whose Pruefer sequence is
// `seq` (length n-2, entries in [1, n]). Bijective from sequences to trees.
LabelledTree prufer_decode(int n, std::span<const int> seq);

// True iff `shorter` embeds in `longer` order-preservingly.
bool is_subsequence(std::span<const int> shorter, std::span<const int> longer);
bool is_subsequence(const CodeWord& shorter, const CodeWord& longer);

}  // namespace treelab
