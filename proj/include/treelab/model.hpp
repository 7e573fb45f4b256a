#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "treelab/errors.hpp"

namespace treelab {

// Undirected edge, stored with first < second.
using Edge = std::pair<int, int>;

// A labelled tree on the vertex set {1, ..., n}. The edge set is kept
// canonical (endpoints ordered, edges sorted), so defaulted comparison is
// structural equality. Orientation (low endpoint -> high endpoint) and the
// rooting at vertex 1 are always derived on demand, never stored.
class LabelledTree {
public:
    // Throws StructureError unless the edges form a tree on [n].
    LabelledTree(int n, std::vector<Edge> edges);

    static LabelledTree single_vertex() { return LabelledTree(1, {}); }

    int vertex_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool adjacent(int u, int v) const;

    // parent[v] under the rooting at vertex 1; parent[1] = 0, index 0 unused.
    std::vector<int> parents() const;

    // adjacency[v] lists neighbours in ascending order; index 0 unused.
    std::vector<std::vector<int>> adjacency() const;

    auto operator<=>(const LabelledTree&) const = default;

private:
    int n_;
    std::vector<Edge> edges_;
};

// A partition of the ground set {2, ..., n} into nonempty blocks.
// Canonical form: elements ascending within each block, blocks ordered by
// descending minimum. n = 1 gives the empty partition of the empty set.
class SetPartition {
public:
    // Throws StructureError unless the blocks are disjoint, nonempty, and
    // cover {2, ..., n} exactly.
    SetPartition(int n, std::vector<std::vector<int>> blocks);

    static SetPartition finest(int n);    // all singletons
    static SetPartition coarsest(int n);  // a single block (empty when n = 1)

    int ground_n() const { return n_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

    // 0-based index into blocks() of the block containing `element`.
    int block_index(int element) const;

    auto operator<=>(const SetPartition&) const = default;

private:
    int n_;
    std::vector<std::vector<int>> blocks_;
};

// A partition of an integer into weakly decreasing positive parts.
// The empty partition (of 0) is allowed.
class IntegerPartition {
public:
    IntegerPartition() = default;
    // Sorts the parts; throws StructureError on nonpositive parts.
    explicit IntegerPartition(std::vector<int> parts);

    int part_count() const { return static_cast<int>(parts_.size()); }
    int sum() const;
    const std::vector<int>& parts() const { return parts_; }

    // multiplicity(i) = number of parts equal to i.
    int multiplicity(int i) const;
    int max_part() const { return parts_.empty() ? 0 : parts_.front(); }

    auto operator<=>(const IntegerPartition&) const = default;

private:
    std::vector<int> parts_;
};

// A word over the alphabet {1, ..., n}. The empty word is allowed.
class CodeWord {
public:
    // Throws StructureError if a symbol is outside [1, n].
    CodeWord(int n, std::vector<int> symbols);

    int alphabet_n() const { return n_; }
    int length() const { return static_cast<int>(symbols_.size()); }
    const std::vector<int>& symbols() const { return symbols_; }

    auto operator<=>(const CodeWord&) const = default;

private:
    int n_;
    std::vector<int> symbols_;
};

// --- text formats ---------------------------------------------------------
//
// Tree file:        first nonblank line is n, then exactly n-1 lines "u v".
// Partition string: blocks separated by '/', elements by ','. The empty
//                   string denotes the empty partition (n = 1).
// Code word string: comma-separated integers; empty string = empty word.
// Type string:      comma-separated parts, e.g. "3,2,2,1".

LabelledTree parse_tree(std::string_view text);
std::string format_tree(const LabelledTree& tree);

SetPartition parse_partition(std::string_view text, int n);
std::string format_partition(const SetPartition& pi);

CodeWord parse_code(std::string_view text, int n);
std::string format_code(const CodeWord& word);

IntegerPartition parse_type(std::string_view text);
std::string format_type(const IntegerPartition& lambda);

// Block sizes of pi, weakly decreasing.
IntegerPartition partition_type(const SetPartition& pi);

// --- JSON mirrors ----------------------------------------------------------
//
// {"n":..., "edges":[[u,v],...]}, {"n":..., "blocks":[[...],...]},
// {"n":..., "symbols":[...]}.

nlohmann::json tree_to_json(const LabelledTree& tree);
LabelledTree tree_from_json(const nlohmann::json& j);

nlohmann::json partition_to_json(const SetPartition& pi);
SetPartition partition_from_json(const nlohmann::json& j);

nlohmann::json code_to_json(const CodeWord& word);
CodeWord code_from_json(const nlohmann::json& j);

}  // namespace treelab
