#include "treelab/model.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

namespace treelab {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

int parse_int(std::string_view token, const std::string& what, int line = 0) {
    token = trim(token);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError("expected an integer for " + what + ", got \"" +
                             std::string(token) + "\"",
                         line);
    return value;
}

// Union-find over [1, n] for incremental cycle detection while parsing trees.
struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(int n) : parent(n + 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

}  // namespace

LabelledTree::LabelledTree(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 1) throw StructureError("vertex count must be at least 1");
    for (auto& [u, v] : edges_) {
        if (u > v) std::swap(u, v);
        if (u == v) throw StructureError("self-loop at vertex " + std::to_string(u));
        if (u < 1 || v > n_)
            throw StructureError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                 "} outside [1," + std::to_string(n_) + "]");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw StructureError("duplicate edge");
    if (static_cast<int>(edges_.size()) != n_ - 1)
        throw StructureError("expected " + std::to_string(n_ - 1) + " edges, got " +
                             std::to_string(edges_.size()));
    DisjointSets ds(n_);
    for (const auto& [u, v] : edges_)
        if (!ds.unite(u, v)) throw StructureError("edge set contains a cycle");
    // n-1 acyclic edges on [n] are necessarily connected.
}

bool LabelledTree::adjacent(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

std::vector<std::vector<int>> LabelledTree::adjacency() const {
    std::vector<std::vector<int>> adj(n_ + 1);
    for (const auto& [u, v] : edges_) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

std::vector<int> LabelledTree::parents() const {
    auto adj = adjacency();
    std::vector<int> parent(n_ + 1, -1);
    parent[1] = 0;
    std::vector<int> stack{1};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : adj[v])
            if (parent[u] == -1) {
                parent[u] = v;
                stack.push_back(u);
            }
    }
    return parent;
}

SetPartition::SetPartition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
    if (n_ < 1) throw StructureError("ground set parameter must be at least 1");
    std::vector<bool> seen(n_ + 1, false);
    int covered = 0;
    for (auto& block : blocks_) {
        if (block.empty()) throw StructureError("empty block");
        std::sort(block.begin(), block.end());
        for (int e : block) {
            if (e < 2 || e > n_)
                throw StructureError("element " + std::to_string(e) + " outside [2," +
                                     std::to_string(n_) + "]");
            if (seen[e]) throw StructureError("duplicate element " + std::to_string(e));
            seen[e] = true;
            ++covered;
        }
    }
    if (covered != n_ - 1) {
        for (int e = 2; e <= n_; ++e)
            if (!seen[e]) throw StructureError("missing element " + std::to_string(e));
    }
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& a, const auto& b) { return a.front() > b.front(); });
}

SetPartition SetPartition::finest(int n) {
    std::vector<std::vector<int>> blocks;
    for (int e = n; e >= 2; --e) blocks.push_back({e});
    return SetPartition(n, std::move(blocks));
}

SetPartition SetPartition::coarsest(int n) {
    if (n == 1) return SetPartition(1, {});
    std::vector<int> all;
    for (int e = 2; e <= n; ++e) all.push_back(e);
    return SetPartition(n, {std::move(all)});
}

int SetPartition::block_index(int element) const {
    for (int i = 0; i < block_count(); ++i)
        if (std::binary_search(blocks_[i].begin(), blocks_[i].end(), element)) return i;
    throw StructureError("element " + std::to_string(element) + " not in ground set");
}

IntegerPartition::IntegerPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 1) throw StructureError("nonpositive part " + std::to_string(p));
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int IntegerPartition::sum() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int IntegerPartition::multiplicity(int i) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

CodeWord::CodeWord(int n, std::vector<int> symbols) : n_(n), symbols_(std::move(symbols)) {
    if (n_ < 1) throw StructureError("alphabet bound must be at least 1");
    for (int s : symbols_)
        if (s < 1 || s > n_)
            throw StructureError("symbol " + std::to_string(s) + " outside [1," +
                                 std::to_string(n_) + "]");
}

// --- text formats ----------------------------------------------------------

LabelledTree parse_tree(std::string_view text) {
    auto lines = split(text, '\n');
    std::size_t idx = 0;
    auto next_nonblank = [&](int& line_no) -> std::string_view {
        while (idx < lines.size()) {
            std::string_view line = trim(lines[idx]);
            ++idx;
            if (!line.empty()) {
                line_no = static_cast<int>(idx);
                return line;
            }
        }
        line_no = static_cast<int>(lines.size());
        return {};
    };

    int line_no = 0;
    std::string_view header = next_nonblank(line_no);
    if (header.empty()) throw ParseError("missing vertex-count line", 1);
    int n = parse_int(header, "vertex count", line_no);
    if (n < 1) throw ParseError("vertex count must be at least 1", line_no);

    std::vector<Edge> edges;
    std::set<Edge> seen;
    DisjointSets ds(n);
    for (int k = 0; k < n - 1; ++k) {
        std::string_view line = next_nonblank(line_no);
        if (line.empty())
            throw ParseError("expected " + std::to_string(n - 1) + " edge lines, found " +
                                 std::to_string(k),
                             line_no);
        std::size_t sep = line.find_first_of(" \t");
        if (sep == std::string_view::npos)
            throw ParseError("malformed edge line \"" + std::string(line) + "\"", line_no);
        int u = parse_int(line.substr(0, sep), "edge endpoint", line_no);
        int v = parse_int(line.substr(sep), "edge endpoint", line_no);
        if (u < 1 || u > n)
            throw ParseError("vertex " + std::to_string(u) + " out of range [1," +
                                 std::to_string(n) + "]",
                             line_no);
        if (v < 1 || v > n)
            throw ParseError("vertex " + std::to_string(v) + " out of range [1," +
                                 std::to_string(n) + "]",
                             line_no);
        if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), line_no);
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second)
            throw ParseError("duplicate edge " + std::to_string(u) + " " + std::to_string(v),
                             line_no);
        if (!ds.unite(u, v))
            throw ParseError("edge " + std::to_string(u) + " " + std::to_string(v) +
                                 " closes a cycle",
                             line_no);
        edges.push_back({u, v});
    }
    std::string_view extra = next_nonblank(line_no);
    if (!extra.empty())
        throw ParseError("unexpected extra line \"" + std::string(extra) + "\"", line_no);
    return LabelledTree(n, std::move(edges));
}

std::string format_tree(const LabelledTree& tree) {
    std::string out = std::to_string(tree.vertex_count());
    out.push_back('\n');
    for (const auto& [u, v] : tree.edges()) {
        out += std::to_string(u);
        out.push_back(' ');
        out += std::to_string(v);
        out.push_back('\n');
    }
    return out;
}

SetPartition parse_partition(std::string_view text, int n) {
    text = trim(text);
    if (text.empty()) {
        if (n == 1) return SetPartition(1, {});
        throw ParseError("empty partition string for n = " + std::to_string(n));
    }
    std::vector<std::vector<int>> blocks;
    for (std::string_view block_text : split(text, '/')) {
        block_text = trim(block_text);
        if (block_text.empty()) throw ParseError("empty block in \"" + std::string(text) + "\"");
        std::vector<int> block;
        for (std::string_view tok : split(block_text, ','))
            block.push_back(parse_int(tok, "partition element"));
        blocks.push_back(std::move(block));
    }
    try {
        return SetPartition(n, std::move(blocks));
    } catch (const StructureError& e) {
        throw ParseError(e.what());
    }
}

std::string format_partition(const SetPartition& pi) {
    std::string out;
    for (int i = 0; i < pi.block_count(); ++i) {
        if (i) out.push_back('/');
        const auto& block = pi.blocks()[i];
        for (std::size_t j = 0; j < block.size(); ++j) {
            if (j) out.push_back(',');
            out += std::to_string(block[j]);
        }
    }
    return out;
}

CodeWord parse_code(std::string_view text, int n) {
    text = trim(text);
    if (text.empty()) return CodeWord(n, {});
    std::vector<int> symbols;
    for (std::string_view tok : split(text, ','))
        symbols.push_back(parse_int(tok, "code symbol"));
    try {
        return CodeWord(n, std::move(symbols));
    } catch (const StructureError& e) {
        throw ParseError(e.what());
    }
}

std::string format_code(const CodeWord& word) {
    std::string out;
    for (int i = 0; i < word.length(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(word.symbols()[i]);
    }
    return out;
}

IntegerPartition parse_type(std::string_view text) {
    text = trim(text);
    if (text.empty()) return IntegerPartition{};
    std::vector<int> parts;
    for (std::string_view tok : split(text, ','))
        parts.push_back(parse_int(tok, "partition part"));
    try {
        return IntegerPartition(std::move(parts));
    } catch (const StructureError& e) {
        throw ParseError(e.what());
    }
}

std::string format_type(const IntegerPartition& lambda) {
    std::string out;
    for (int i = 0; i < lambda.part_count(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(lambda.parts()[i]);
    }
    return out;
}

IntegerPartition partition_type(const SetPartition& pi) {
    std::vector<int> sizes;
    sizes.reserve(pi.block_count());
    for (const auto& block : pi.blocks()) sizes.push_back(static_cast<int>(block.size()));
    return IntegerPartition(std::move(sizes));
}

// --- JSON mirrors ----------------------------------------------------------

nlohmann::json tree_to_json(const LabelledTree& tree) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [u, v] : tree.edges()) edges.push_back({u, v});
    return {{"n", tree.vertex_count()}, {"edges", std::move(edges)}};
}

LabelledTree tree_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw ParseError("tree JSON must have \"n\" and \"edges\"");
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw ParseError("edge must be a pair");
        edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    try {
        return LabelledTree(j.at("n").get<int>(), std::move(edges));
    } catch (const StructureError& e) {
        throw ParseError(e.what());
    }
}

nlohmann::json partition_to_json(const SetPartition& pi) {
    return {{"n", pi.ground_n()}, {"blocks", pi.blocks()}};
}

SetPartition partition_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("blocks"))
        throw ParseError("partition JSON must have \"n\" and \"blocks\"");
    try {
        return SetPartition(j.at("n").get<int>(),
                            j.at("blocks").get<std::vector<std::vector<int>>>());
    } catch (const StructureError& e) {
        throw ParseError(e.what());
    }
}

nlohmann::json code_to_json(const CodeWord& word) {
    return {{"n", word.alphabet_n()}, {"symbols", word.symbols()}};
}

CodeWord code_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("symbols"))
        throw ParseError("code JSON must have \"n\" and \"symbols\"");
    try {
        return CodeWord(j.at("n").get<int>(), j.at("symbols").get<std::vector<int>>());
    } catch (const StructureError& e) {
        throw ParseError(e.what());
    }
}

}  // namespace treelab
