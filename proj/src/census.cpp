#include "treelab/census.hpp"

#include <algorithm>

#include "treelab/lattice.hpp"
#include "treelab/treemap.hpp"

namespace treelab {

namespace {

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) r = exact_div(r * (n - k + i), i);
    return r;
}

void check_bound(int n, int bound) {
    if (n < 1) throw PreconditionError("vertex count must be at least 1");
    if (n > bound)
        throw BoundError("enumeration over n = " + std::to_string(n) +
                         " exceeds the bound " + std::to_string(bound));
}

}  // namespace

BigInt set_partition_count_of_type(const IntegerPartition& lambda) {
    // Choose the blocks size class by size class; after the blocks of one
    // size are all chosen, dividing by m_i! is exact (the family of disjoint
    // same-size blocks is unordered).
    int remaining = lambda.sum();
    BigInt count = 1;
    int i = 0;
    const auto& parts = lambda.parts();
    while (i < lambda.part_count()) {
        const int size = parts[i];
        int mult = 0;
        while (i < lambda.part_count() && parts[i] == size) {
            count *= binomial(remaining, size);
            remaining -= size;
            ++mult;
            ++i;
        }
        count = exact_div(count, factorial(mult));
    }
    return count;
}

BigInt count_trees_of_type(const IntegerPartition& lambda) {
    const int n = lambda.sum() + 1;
    const int k = lambda.part_count();
    return falling_factorial(n - 1, k - 1) * set_partition_count_of_type(lambda);
}

BigInt count_trees_with_partition(const SetPartition& pi) {
    // (n-1)!/(n-k)! as a plain product of k-1 factors.
    return falling_factorial(pi.ground_n() - 1, pi.block_count() - 1);
}

BigInt count_trees_coarser_than(const SetPartition& sigma) {
    if (sigma.block_count() == 0) return 1;  // n = 1, the single-vertex tree
    return ipow(sigma.ground_n(), sigma.block_count() - 1);
}

Census brute_force_census(int n, int bound) {
    check_bound(n, bound);
    Census census;
    for_each_tree(n, [&](const LabelledTree& tree) {
        census.by_type[indegree_partition(tree)] += 1;
        census.by_partition[tree_partition(tree)] += 1;
    });
    return census;
}

std::vector<LabelledTree> trees_with_partition(const SetPartition& pi, int bound) {
    check_bound(pi.ground_n(), bound);
    std::vector<LabelledTree> out;
    for_each_tree(pi.ground_n(), [&](const LabelledTree& tree) {
        if (tree_partition(tree) == pi) out.push_back(tree);
    });
    return out;
}

std::map<SetPartition, BigInt> fiber_counts_by_mobius(int n) {
    std::map<SetPartition, BigInt> out;
    for (const SetPartition& pi : all_partitions(n)) {
        BigInt f = 0;
        for (const SetPartition& sigma : coarsenings(pi))
            f += mobius(pi, sigma) * count_trees_coarser_than(sigma);
        out.emplace(pi, f);
    }
    return out;
}

std::vector<SetPartition> contracted_family(const SetPartition& pi) {
    const int n = pi.ground_n();
    if (n < 3) throw PreconditionError("contraction needs at least 3 vertices");
    const int top = pi.block_index(n);
    if (top != pi.block_index(n - 1))
        throw PreconditionError("vertices n and n-1 are not in the same block");

    std::vector<int> stem = pi.blocks()[top];  // B_1 \ {n}
    stem.erase(std::find(stem.begin(), stem.end(), n));

    std::vector<std::vector<int>> rest;
    for (int idx = 0; idx < pi.block_count(); ++idx)
        if (idx != top) rest.push_back(pi.blocks()[idx]);

    std::vector<SetPartition> family;
    {
        std::vector<std::vector<int>> blocks = rest;
        blocks.push_back(stem);
        family.push_back(SetPartition(n - 1, std::move(blocks)));
    }
    for (std::size_t j = 0; j < rest.size(); ++j) {
        std::vector<std::vector<int>> blocks;
        for (std::size_t t = 0; t < rest.size(); ++t) {
            blocks.push_back(rest[t]);
            if (t == j)
                blocks.back().insert(blocks.back().end(), stem.begin(), stem.end());
        }
        family.push_back(SetPartition(n - 1, std::move(blocks)));
    }
    return family;
}

bool check_contraction_recursion(const SetPartition& pi, int bound) {
    check_bound(pi.ground_n(), bound);
    BigInt lhs = static_cast<int>(trees_with_partition(pi, bound).size());
    BigInt rhs = 0;
    for (const SetPartition& contracted : contracted_family(pi))
        rhs += static_cast<int>(trees_with_partition(contracted, bound).size());
    return lhs == rhs;
}

std::vector<IntegerPartition> integer_partitions_of(int m) {
    if (m < 0) throw PreconditionError("cannot partition a negative integer");
    std::vector<IntegerPartition> out;
    std::vector<int> current;
    auto recurse = [&](auto&& self, int left, int max_part) -> void {
        if (left == 0) {
            out.push_back(IntegerPartition(current));
            return;
        }
        for (int p = std::min(left, max_part); p >= 1; --p) {
            current.push_back(p);
            self(self, left - p, p);
            current.pop_back();
        }
    };
    recurse(recurse, m, m);
    return out;
}

}  // namespace treelab
