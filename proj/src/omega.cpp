#include "treelab/omega.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "treelab/codec.hpp"
#include "treelab/lattice.hpp"
#include "treelab/treemap.hpp"

namespace treelab {

std::vector<CodeWord> fiber_code_set(const SetPartition& pi, int bound) {
    std::vector<CodeWord> words;
    for (const LabelledTree& tree : trees_with_partition(pi, bound))
        words.push_back(encode(pi, tree));
    std::sort(words.begin(), words.end());
    return words;
}

CubeReport check_cube_partition(const SetPartition& sigma, int bound) {
    const int n = sigma.ground_n();
    if (n > bound)
        throw BoundError("enumeration over n = " + std::to_string(n) +
                         " exceeds the bound " + std::to_string(bound));
    const int k = sigma.block_count();

    CubeReport report;
    report.n = n;
    report.word_length = std::max(k - 1, 0);

    std::map<SetPartition, std::vector<CodeWord>> images;
    std::map<CodeWord, SetPartition> owner;
    for_each_tree(n, [&](const LabelledTree& tree) {
        SetPartition pi = tree_partition(tree);
        if (!refines(sigma, pi)) return;
        CodeWord word = encode(sigma, tree);
        auto [it, fresh] = owner.emplace(word, pi);
        if (!fresh && report.failure.empty()) {
            report.failure = "word " + format_code(word) + " produced by fibers " +
                             format_partition(it->second) + " and " + format_partition(pi);
        }
        images[std::move(pi)].push_back(std::move(word));
    });

    BigInt total = 0;
    for (auto& [pi, words] : images) {
        std::sort(words.begin(), words.end());
        total += static_cast<int>(words.size());
        report.fibers.push_back({pi, words});
    }
    if (report.failure.empty() && total != count_trees_coarser_than(sigma))
        report.failure = "image sizes sum to " + total.str() + ", expected " +
                         count_trees_coarser_than(sigma).str();
    // With no duplicates and the full count, the images tile the cube.
    report.pass = report.failure.empty();
    return report;
}

SubsequenceReport check_subsequence_property(const SetPartition& finer,
                                             const SetPartition& coarser, int bound) {
    if (finer == coarser || !refines(finer, coarser))
        throw OrderError("first partition must lie strictly below the second");
    const int n = finer.ground_n();
    if (n > bound)
        throw BoundError("enumeration over n = " + std::to_string(n) +
                         " exceeds the bound " + std::to_string(bound));

    SubsequenceReport report;
    for_each_tree(n, [&](const LabelledTree& tree) {
        if (!refines(coarser, tree_partition(tree))) return;
        ++report.trees_checked;
        CodeWord longer = encode(finer, tree);
        CodeWord shorter = encode(coarser, tree);
        if (!is_subsequence(shorter, longer) && report.failure.empty()) {
            report.failure = "tree with partition " + format_partition(tree_partition(tree)) +
                             ": code " + format_code(shorter) + " does not embed in " +
                             format_code(longer);
        }
    });
    report.pass = report.failure.empty();
    return report;
}

std::string render_code_grid(const SetPartition& pi, const std::vector<CodeWord>& present) {
    if (pi.block_count() != 3)
        throw PreconditionError("grid rendering needs a partition with exactly 3 blocks");
    const int n = pi.ground_n();

    std::set<std::pair<int, int>> kept;
    for (const CodeWord& word : present) {
        if (word.length() != 2)
            throw PreconditionError("grid rendering needs two-symbol words");
        kept.insert({word.symbols()[0], word.symbols()[1]});
    }

    auto cell = [&](int r, int c) {
        std::string body = std::to_string(r) + (n <= 9 ? "" : ",") + std::to_string(c);
        if (kept.count({r, c})) return body;
        return "\\" + body + "/";
    };
    std::size_t width = 0;
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c) width = std::max(width, cell(r, c).size());

    std::string out;
    for (int r = 1; r <= n; ++r) {
        std::string line;
        for (int c = 1; c <= n; ++c) {
            std::string body = cell(r, c);
            if (c > 1) line.push_back(' ');
            line += body;
            if (c < n) line.append(width - body.size(), ' ');
        }
        out += line;
        out.push_back('\n');
    }
    return out;
}

}  // namespace treelab
