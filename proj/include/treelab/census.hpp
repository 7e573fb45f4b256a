#pragma once

#include <map>
#include <vector>

#include "treelab/codec.hpp"
#include "treelab/exact.hpp"
#include "treelab/model.hpp"

namespace treelab {

// Exhaustive enumeration is refused above this bound unless the caller
// raises it explicitly (n = 9 walks 4,782,969 trees).
inline constexpr int kDefaultEnumerationBound = 8;

// Number of set partitions of an (n-1)-set whose block sizes are lambda,
// with n - 1 = sum(lambda): (n-1)! / prod_i (i!^m_i m_i!).
BigInt set_partition_count_of_type(const IntegerPartition& lambda);

// Number of labelled trees on [n], n = sum(lambda) + 1, whose indegree
// partition is lambda: (n-1)!^2 / ((n-k)! prod_i i!^m_i prod_i m_i!).
// Built from integral factors; every division is checked exact.
BigInt count_trees_of_type(const IntegerPartition& lambda);

// Number of trees whose partition is exactly pi: (n-1)!/(n-|pi|)!.
BigInt count_trees_with_partition(const SetPartition& pi);

// Number of trees whose partition coarsens (or equals) sigma: n^(|sigma|-1).
BigInt count_trees_coarser_than(const SetPartition& sigma);

// Visit every labelled tree on [n] exactly once, in lexicographic order of
// Pruefer sequences (n^(n-2) trees; a single call for n = 1, 2).
template <typename Visit>
void for_each_tree(int n, Visit&& visit) {
    if (n < 1) throw PreconditionError("vertex count must be at least 1");
    if (n == 1) {
        visit(LabelledTree::single_vertex());
        return;
    }
    std::vector<int> seq(n - 2, 1);
    while (true) {
        visit(prufer_decode(n, seq));
        int i = n - 3;
        while (i >= 0 && seq[i] == n) seq[i--] = 1;
        if (i < 0) break;
        ++seq[i];
    }
}

struct Census {
    std::map<IntegerPartition, BigInt> by_type;
    std::map<SetPartition, BigInt> by_partition;
};

// Tally indegree type and partition over all n^(n-2) trees.
// Throws BoundError when n exceeds the bound.
Census brute_force_census(int n, int bound = kDefaultEnumerationBound);

// The trees with partition exactly pi, in Pruefer-lexicographic order;
// count_trees_with_partition(pi) of them.
std::vector<LabelledTree> trees_with_partition(const SetPartition& pi,
                                               int bound = kDefaultEnumerationBound);

// Solve for every fiber count at once by Mobius inversion over the lattice:
// f(pi) = sum_{sigma >= pi} mu(pi, sigma) n^(|sigma|-1).
std::map<SetPartition, BigInt> fiber_counts_by_mobius(int n);

// Verify by enumeration that the fiber of pi splits along the contraction
// of the top vertex pair: |fiber(pi)| equals the sum of the fibers of the
// contracted partitions (drop n from its block, or merge the remainder into
// each other block in turn). Requires n and n-1 co-blocked in pi.
bool check_contraction_recursion(const SetPartition& pi,
                                 int bound = kDefaultEnumerationBound);

// The contracted family itself, index j = 1..k as in contract_top.
std::vector<SetPartition> contracted_family(const SetPartition& pi);

// All integer partitions of m, in decreasing lexicographic order.
std::vector<IntegerPartition> integer_partitions_of(int m);

}  // namespace treelab
