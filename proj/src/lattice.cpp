#include "treelab/lattice.hpp"

#include <algorithm>
#include <map>

namespace treelab {

bool refines(const SetPartition& sigma, const SetPartition& pi) {
    if (sigma.ground_n() != pi.ground_n())
        throw GroundSetMismatch("partitions are on different ground sets");
    for (const auto& block : sigma.blocks()) {
        const auto& host = pi.blocks()[pi.block_index(block.front())];
        if (!std::includes(host.begin(), host.end(), block.begin(), block.end()))
            return false;
    }
    return true;
}

GroupedPartitionRange all_partitions(int n) {
    std::vector<std::vector<int>> items;
    for (int e = 2; e <= n; ++e) items.push_back({e});
    return GroupedPartitionRange(n, std::move(items));
}

GroupedPartitionRange coarsenings(const SetPartition& sigma) {
    return GroupedPartitionRange(sigma.ground_n(), sigma.blocks());
}

std::vector<SetPartition> covers(const SetPartition& sigma) {
    const int k = sigma.block_count();
    std::vector<SetPartition> out;
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            std::vector<std::vector<int>> blocks;
            std::vector<int> merged = sigma.blocks()[i];
            merged.insert(merged.end(), sigma.blocks()[j].begin(), sigma.blocks()[j].end());
            blocks.push_back(std::move(merged));
            for (int t = 0; t < k; ++t)
                if (t != i && t != j) blocks.push_back(sigma.blocks()[t]);
            out.push_back(SetPartition(sigma.ground_n(), std::move(blocks)));
        }
    }
    return out;
}

namespace {

// Product over the blocks of sigma of (-1)^(b-1) (b-1)!, where b is the
// number of pi-blocks inside the block. The known closed form, used only to
// cross-check the recursive value.
BigInt mobius_product_form(const SetPartition& pi, const SetPartition& sigma) {
    BigInt result = 1;
    for (const auto& block : sigma.blocks()) {
        std::vector<bool> used(pi.block_count(), false);
        int b = 0;
        for (int e : block) {
            int idx = pi.block_index(e);
            if (!used[idx]) {
                used[idx] = true;
                ++b;
            }
        }
        BigInt fac = factorial(b - 1);
        result *= (b % 2 == 1) ? fac : -fac;
    }
    return result;
}

}  // namespace

BigInt mobius(const SetPartition& pi, const SetPartition& sigma) {
    if (!refines(pi, sigma)) throw OrderError("pi does not refine sigma");

    // The interval [pi, sigma], finest first: rho comes before tau whenever
    // rho has more blocks.
    std::vector<SetPartition> interval;
    for (const SetPartition& tau : coarsenings(pi))
        if (refines(tau, sigma)) interval.push_back(tau);
    std::stable_sort(interval.begin(), interval.end(),
                     [](const SetPartition& a, const SetPartition& b) {
                         return a.block_count() > b.block_count();
                     });

    std::map<SetPartition, BigInt> memo;
    for (const SetPartition& tau : interval) {
        if (tau == pi) {
            memo.emplace(tau, 1);
            continue;
        }
        BigInt below = 0;
        for (const auto& [rho, value] : memo)
            if (rho != tau && refines(rho, tau)) below += value;
        memo.emplace(tau, -below);
    }

    const BigInt value = memo.at(sigma);
    if (value != mobius_product_form(pi, sigma))
        throw StructureError("mobius recursion disagrees with the product form");
    return value;
}

BigInt stirling2(int k, int j) {
    if (k < 0 || j < 0) throw PreconditionError("stirling2 needs nonnegative arguments");
    if (j > k) return 0;
    if (k == 0) return 1;  // j == 0 here
    if (j == 0) return 0;
    std::vector<BigInt> row(j + 1, 0);
    row[0] = 1;  // S(0,0)
    for (int kk = 1; kk <= k; ++kk) {
        for (int jj = std::min(kk, j); jj >= 1; --jj)
            row[jj] = row[jj - 1] + BigInt(jj) * row[jj];
        row[0] = 0;
    }
    return row[j];
}

std::pair<BigInt, BigInt> stirling_identity_check(int k, int n) {
    if (k < 1 || n < 1) throw PreconditionError("stirling_identity_check needs k, n >= 1");
    BigInt lhs = 0;
    for (int j = 1; j <= k; ++j) lhs += stirling2(k, j) * falling_factorial(n, j);
    return {lhs, ipow(n, k)};
}

}  // namespace treelab
