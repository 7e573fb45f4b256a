#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "oracles.hpp"
#include "treelab/census.hpp"
#include "treelab/codec.hpp"
#include "treelab/lattice.hpp"
#include "treelab/treemap.hpp"

using namespace treelab;

namespace {

const char* kSampleTree9 = "9\n1 7\n3 7\n1 9\n6 9\n5 9\n2 5\n4 5\n5 8\n";

}  // namespace

TEST_CASE("encode reproduces the worked examples") {
    LabelledTree sample = parse_tree(kSampleTree9);
    CHECK(encode(parse_partition("8/7/6/5,9/3/2,4", 9), sample) ==
          parse_code("5,9,7,1,5", 9));
    CHECK(encode(parse_partition("8/5,6,9/3,7/2,4", 9), sample) == parse_code("5,1,5", 9));
    // One block: the only admissible tree is the star at n, coded empty.
    for (int n = 2; n <= 6; ++n) {
        std::vector<Edge> star_edges;
        for (int v = 1; v < n; ++v) star_edges.push_back({v, n});
        CHECK(encode(SetPartition::coarsest(n), LabelledTree(n, star_edges)).length() == 0);
    }
    CHECK(encode(SetPartition(1, {}), LabelledTree::single_vertex()).length() == 0);
}

TEST_CASE("encode requires sigma to refine the tree's partition") {
    LabelledTree sample = parse_tree(kSampleTree9);
    CHECK_THROWS_AS(encode(parse_partition("2,3/4/5/6/7/8/9", 9), sample), RefinementError);
}

TEST_CASE("decode reproduces the worked examples") {
    LabelledTree sample = parse_tree(kSampleTree9);
    CHECK(decode(parse_partition("8/7/6/5,9/3/2,4", 9), parse_code("5,9,7,1,5", 9)) ==
          sample);
    CHECK(decode(parse_partition("8/5,6,9/3,7/2,4", 9), parse_code("5,1,5", 9)) == sample);

    // One block, empty word: everything attaches below n via the implicit 1.
    for (int n = 2; n <= 7; ++n) {
        std::vector<Edge> star_edges;
        for (int v = 1; v < n; ++v) star_edges.push_back({v, n});
        CHECK(decode(SetPartition::coarsest(n), CodeWord(n, {})) ==
              LabelledTree(n, star_edges));
    }
    CHECK(decode(SetPartition(1, {}), CodeWord(1, {})) == LabelledTree::single_vertex());
}

TEST_CASE("decode over the full cube of singletons gives every labelled tree") {
    SetPartition finest = SetPartition::finest(4);
    std::set<LabelledTree> seen;
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            seen.insert(decode(finest, CodeWord(4, {a, b})));
    CHECK(seen.size() == 16);
    auto oracle = oracles::trees_by_edge_subsets(4);
    CHECK(seen == std::set<LabelledTree>(oracle.begin(), oracle.end()));
}

TEST_CASE("decode validates its input shape") {
    CHECK_THROWS_AS(decode(SetPartition::finest(4), CodeWord(4, {1})), PreconditionError);
    CHECK_THROWS_AS(decode(SetPartition::finest(4), CodeWord(5, {1, 2})),
                    GroundSetMismatch);
}

TEST_CASE("round-trip and bijection for every sigma up to n = 6") {
    for (int n = 1; n <= 6; ++n) {
        // Group the trees of T_{>= sigma} by sigma once.
        auto lattice = all_partitions(n).to_vector();
        std::map<SetPartition, std::vector<LabelledTree>> upsets;
        for_each_tree(n, [&](const LabelledTree& tree) {
            SetPartition pi = tree_partition(tree);
            for (const SetPartition& sigma : lattice)
                if (refines(sigma, pi)) upsets[sigma].push_back(tree);
        });
        for (const SetPartition& sigma : lattice) {
            const int k = sigma.block_count();
            long long cube = 1;
            for (int i = 0; i < k - 1; ++i) cube *= n;
            const auto& trees = upsets[sigma];
            CHECK(static_cast<long long>(trees.size()) == cube);
            std::set<CodeWord> words;
            for (const LabelledTree& tree : trees) {
                CodeWord word = encode(sigma, tree);
                CHECK(word.length() == std::max(k - 1, 0));
                CHECK(words.insert(word).second);  // injective
                CHECK(decode(sigma, word) == tree);
            }
            CHECK(static_cast<long long>(words.size()) == cube);  // onto the cube
        }
    }
}

TEST_CASE("encode(decode(word)) is the identity on the cube, n = 5") {
    for (const SetPartition& sigma : all_partitions(5)) {
        const int k = sigma.block_count();
        std::vector<int> symbols(std::max(k - 1, 0), 1);
        while (true) {
            CodeWord word(5, symbols);
            CHECK(encode(sigma, decode(sigma, word)) == word);
            int i = static_cast<int>(symbols.size()) - 1;
            while (i >= 0 && symbols[i] == 5) symbols[i--] = 1;
            if (i < 0) break;
            ++symbols[i];
        }
    }
}

TEST_CASE("canonical_code") {
    LabelledTree sample = parse_tree(kSampleTree9);
    auto [pi, code] = canonical_code(sample);
    CHECK(pi == parse_partition("8/5,6,9/3,7/2,4", 9));
    CHECK(code == parse_code("5,1,5", 9));

    // Injectivity over all trees on [n].
    for (int n = 1; n <= 6; ++n) {
        std::set<std::pair<SetPartition, CodeWord>> seen;
        long long total = 0;
        for_each_tree(n, [&](const LabelledTree& tree) {
            ++total;
            auto pc = canonical_code(tree);
            CHECK(seen.insert({pc.partition, pc.code}).second);
        });
        CHECK(static_cast<long long>(seen.size()) == total);
    }
}

TEST_CASE("canonical_code of a two-block partition is the larger cut point") {
    for (const SetPartition& pi : all_partitions(5)) {
        if (pi.block_count() != 2) continue;
        for (const LabelledTree& tree : trees_with_partition(pi)) {
            StarDecomposition d = decompose(tree, pi);
            int expected = std::max(d.stars[0].cut_point, d.stars[1].cut_point);
            auto pc = canonical_code(tree);
            REQUIRE(pc.code.length() == 1);
            CHECK(pc.code.symbols()[0] == expected);
        }
    }
}

namespace {

// Pruefer encoding in the convention the singleton-block code generalizes:
// repeatedly delete the LARGEST leaf and record its neighbour, until two
// vertices remain.
std::vector<int> largest_leaf_prufer(const LabelledTree& tree) {
    const int n = tree.vertex_count();
    auto adj = tree.adjacency();
    std::vector<std::set<int>> nbr(n + 1);
    for (int v = 1; v <= n; ++v) nbr[v] = std::set<int>(adj[v].begin(), adj[v].end());
    std::vector<int> code;
    std::set<int> alive;
    for (int v = 1; v <= n; ++v) alive.insert(v);
    while (static_cast<int>(alive.size()) > 2) {
        int leaf = 0;
        for (auto it = alive.rbegin(); it != alive.rend(); ++it)
            if (nbr[*it].size() == 1) {
                leaf = *it;
                break;
            }
        int neighbour = *nbr[leaf].begin();
        code.push_back(neighbour);
        nbr[neighbour].erase(leaf);
        nbr[leaf].clear();
        alive.erase(leaf);
    }
    return code;
}

}  // namespace

TEST_CASE("the singleton-block code is largest-leaf Pruefer deletion") {
    for (int n = 3; n <= 6; ++n) {
        SetPartition finest = SetPartition::finest(n);
        // 0-hat refines everything, so this covers every tree on [n].
        for_each_tree(n, [&](const LabelledTree& tree) {
            CHECK(encode(finest, tree).symbols() == largest_leaf_prufer(tree));
        });
    }
}

TEST_CASE("increasing trees fill the staircase code set") {
    for (int n = 2; n <= 6; ++n) {
        SetPartition finest = SetPartition::finest(n);
        auto fiber = trees_with_partition(finest);
        CHECK(fiber.size() ==
              static_cast<std::size_t>(factorial(n - 1).convert_to<long long>()));
        std::set<CodeWord> codes;
        for (const LabelledTree& tree : fiber) {
            CodeWord code = encode(finest, tree);
            // Symbol i of an increasing tree's code is at most n - 1 - i.
            for (int i = 0; i < code.length(); ++i) CHECK(code.symbols()[i] <= n - 1 - i);
            codes.insert(code);
        }
        CHECK(codes.size() == fiber.size());
    }
}

TEST_CASE("prufer_decode basics") {
    CHECK(prufer_decode(3, std::vector<int>{1}) == LabelledTree(3, {{1, 2}, {1, 3}}));
    CHECK(prufer_decode(2, std::vector<int>{}) == LabelledTree(2, {{1, 2}}));
    CHECK_THROWS_AS(prufer_decode(3, std::vector<int>{4}), PreconditionError);
    CHECK_THROWS_AS(prufer_decode(3, std::vector<int>{1, 2}), PreconditionError);
}

TEST_CASE("prufer_decode is a bijection onto the edge-subset oracle") {
    for (int n = 2; n <= 6; ++n) {
        std::set<LabelledTree> seen;
        for_each_tree(n, [&](const LabelledTree& tree) { seen.insert(tree); });
        auto oracle = oracles::trees_by_edge_subsets(n);
        CHECK(seen.size() == oracle.size());
        CHECK(seen == std::set<LabelledTree>(oracle.begin(), oracle.end()));
    }
}

TEST_CASE("is_subsequence") {
    CHECK(is_subsequence(parse_code("5,1,5", 9), parse_code("5,9,7,1,5", 9)));
    CHECK(is_subsequence(parse_code("", 9), parse_code("5,9", 9)));
    CHECK_FALSE(is_subsequence(parse_code("1,2", 2), parse_code("2,1", 2)));
    CHECK(is_subsequence(parse_code("2,1", 2), parse_code("2,1", 2)));
    CHECK_FALSE(is_subsequence(parse_code("1,1", 2), parse_code("1", 2)));
}

TEST_CASE("coarser codes are subsequences of finer ones, all pairs up to n = 6") {
    for (int n = 2; n <= 6; ++n) {
        auto lattice = all_partitions(n).to_vector();
        for_each_tree(n, [&](const LabelledTree& tree) {
            SetPartition top = tree_partition(tree);
            std::vector<std::pair<SetPartition, CodeWord>> codes;
            for (const SetPartition& sigma : lattice)
                if (refines(sigma, top)) codes.push_back({sigma, encode(sigma, tree)});
            for (std::size_t a = 0; a < codes.size(); ++a)
                for (std::size_t b = 0; b < codes.size(); ++b) {
                    if (a == b) continue;
                    if (!refines(codes[a].first, codes[b].first)) continue;
                    // codes[a].first strictly finer: its word is longer.
                    CHECK(is_subsequence(codes[b].second, codes[a].second));
                }
        });
    }
}
