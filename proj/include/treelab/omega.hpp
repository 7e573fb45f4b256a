#pragma once

#include <string>
#include <vector>

#include "treelab/census.hpp"
#include "treelab/exact.hpp"
#include "treelab/model.hpp"

namespace treelab {

// The code words produced by the trees whose partition is exactly pi,
// sorted lexicographically; count_trees_with_partition(pi) of them.
std::vector<CodeWord> fiber_code_set(const SetPartition& pi,
                                     int bound = kDefaultEnumerationBound);

struct FiberImage {
    SetPartition partition;
    std::vector<CodeWord> words;  // sorted
};

struct CubeReport {
    bool pass = false;
    int n = 0;
    int word_length = 0;
    std::vector<FiberImage> fibers;  // one per partition coarsening sigma
    std::string failure;             // witness when !pass
};

// Encode every tree whose partition coarsens sigma with sigma itself and
// check that the per-fiber images are pairwise disjoint and together cover
// [n]^(|sigma|-1) exactly.
CubeReport check_cube_partition(const SetPartition& sigma,
                                int bound = kDefaultEnumerationBound);

struct SubsequenceReport {
    bool pass = false;
    long long trees_checked = 0;
    std::string failure;
};

// For every tree whose partition coarsens `coarser`, the code with respect
// to `coarser` must embed in the code with respect to `finer`. Requires
// finer strictly below coarser; throws OrderError otherwise.
SubsequenceReport check_subsequence_property(const SetPartition& finer,
                                             const SetPartition& coarser,
                                             int bound = kDefaultEnumerationBound);

// Grid rendering of a two-symbol code set (|pi| = 3): an n x n matrix with
// rows indexed by the first symbol and columns by the second. Cells absent
// from `present` are struck as \XY/. Cells are space-padded to equal width.
std::string render_code_grid(const SetPartition& pi, const std::vector<CodeWord>& present);

}  // namespace treelab
