#include "treelab/codec.hpp"

#include <algorithm>
#include <set>

#include "treelab/lattice.hpp"
#include "treelab/treemap.hpp"

namespace treelab {

CodeWord encode(const SetPartition& sigma, const LabelledTree& tree) {
    // decompose() checks sigma <= tree_partition(tree). Removing a leaf-star
    // never touches another star's edges, so cut points are computed once;
    // only the leaf flags evolve as blocks disappear.
    StarDecomposition decomp = decompose(tree, sigma);
    const int k = sigma.block_count();

    std::vector<bool> removed(k, false);
    std::vector<int> records;
    records.reserve(k);
    for (int step = 0; step < k; ++step) {
        std::set<int> cuts;
        for (int b = 0; b < k; ++b)
            if (!removed[b]) cuts.insert(decomp.stars[b].cut_point);
        // Blocks are stored by descending minimum, so the first remaining
        // leaf-star is the largest one.
        int pick = -1;
        for (int b = 0; b < k && pick < 0; ++b) {
            if (removed[b]) continue;
            const auto& members = decomp.stars[b].members;
            if (std::none_of(members.begin(), members.end(),
                             [&](int m) { return cuts.count(m) > 0; }))
                pick = b;
        }
        if (pick < 0) throw StructureError("no leaf-star available during encoding");
        records.push_back(decomp.stars[pick].cut_point);
        removed[pick] = true;
    }
    if (k > 0) {
        if (records.back() != 1)
            throw StructureError("final removal record must be vertex 1");
        records.pop_back();
    }
    return CodeWord(tree.vertex_count(), std::move(records));
}

LabelledTree decode(const SetPartition& sigma, const CodeWord& omega) {
    const int n = sigma.ground_n();
    const int k = sigma.block_count();
    if (omega.alphabet_n() != n)
        throw GroundSetMismatch("code word alphabet does not match the ground set");
    if (omega.length() != std::max(k - 1, 0))
        throw PreconditionError("code word must have one symbol less than sigma has blocks");

    const auto& syms = omega.symbols();
    std::vector<bool> used(k, false);
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (int step = 0; step < k; ++step) {
        const int w = step < k - 1 ? syms[step] : 1;
        // Forbidden: the symbols not yet consumed, current one included.
        auto forbidden = std::span<const int>(syms).subspan(step);
        int pick = -1;
        for (int b = 0; b < k && pick < 0; ++b) {
            if (used[b]) continue;
            const auto& members = sigma.blocks()[b];
            if (std::none_of(members.begin(), members.end(), [&](int m) {
                    return std::find(forbidden.begin(), forbidden.end(), m) != forbidden.end();
                }))
                pick = b;
        }
        // k - step blocks remain and at most k - 1 - step symbols are
        // forbidden, each hitting at most one block.
        if (pick < 0) throw StructureError("no admissible block during decoding");
        used[pick] = true;

        const auto& members = sigma.blocks()[pick];
        const int t = members.back();
        if (w == t) throw StructureError("attachment vertex inside its own block");
        if (w < t) {
            for (std::size_t i = 0; i + 1 < members.size(); ++i)
                edges.push_back({members[i], t});
            edges.push_back({w, t});
        } else {
            for (int m : members) edges.push_back({m, w});
        }
    }
    try {
        return LabelledTree(n, std::move(edges));
    } catch (const StructureError& e) {
        throw StructureError(std::string("decoded edge set is not a tree: ") + e.what());
    }
}

PartitionCode canonical_code(const LabelledTree& tree) {
    SetPartition pi = tree_partition(tree);
    CodeWord code = encode(pi, tree);
    return {std::move(pi), std::move(code)};
}

LabelledTree prufer_decode(int n, std::span<const int> seq) {
    if (n < 2) throw PreconditionError("Pruefer decoding needs n >= 2");
    if (static_cast<int>(seq.size()) != n - 2)
        throw PreconditionError("Pruefer sequence must have n-2 entries");
    for (int a : seq)
        if (a < 1 || a > n)
            throw PreconditionError("Pruefer symbol " + std::to_string(a) + " outside [1," +
                                    std::to_string(n) + "]");

    std::vector<int> degree(n + 1, 1);
    for (int a : seq) ++degree[a];

    std::vector<Edge> edges;
    edges.reserve(n - 1);
    int ptr = 1;
    while (degree[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int a : seq) {
        edges.push_back({std::min(leaf, a), std::max(leaf, a)});
        if (--degree[a] == 1 && a < ptr) {
            leaf = a;
        } else {
            ++ptr;
            while (degree[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.push_back({leaf, n});  // leaf never reaches n
    return LabelledTree(n, std::move(edges));
}

bool is_subsequence(std::span<const int> shorter, std::span<const int> longer) {
    std::size_t i = 0;
    for (int x : longer) {
        if (i < shorter.size() && shorter[i] == x) ++i;
    }
    return i == shorter.size();
}

bool is_subsequence(const CodeWord& shorter, const CodeWord& longer) {
    return is_subsequence(std::span<const int>(shorter.symbols()),
                          std::span<const int>(longer.symbols()));
}

}  // namespace treelab
