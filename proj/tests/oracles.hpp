// Independent brute-force oracles used only by the tests. Everything here
// avoids the library's enumeration and counting paths on purpose: trees come
// from raw edge subsets, partitions from element-by-element placement, and
// counts from the Bell triangle.
#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "treelab/model.hpp"

namespace oracles {

inline std::vector<long long> bell_numbers(int count) {
    std::vector<long long> bell{1};  // B_0
    std::vector<long long> row{1};
    for (int i = 1; i < count; ++i) {
        std::vector<long long> next{row.back()};
        for (long long x : row) next.push_back(next.back() + x);
        bell.push_back(next.front());
        row = std::move(next);
    }
    return bell;
}

namespace detail {

inline void partitions_rec(const std::vector<int>& elements, std::size_t idx,
                           std::vector<std::vector<int>>& current,
                           std::vector<std::vector<std::vector<int>>>& out) {
    if (idx == elements.size()) {
        out.push_back(current);
        return;
    }
    const std::size_t blocks_here = current.size();
    for (std::size_t b = 0; b < blocks_here; ++b) {
        current[b].push_back(elements[idx]);
        partitions_rec(elements, idx + 1, current, out);
        current[b].pop_back();
    }
    current.push_back({elements[idx]});
    partitions_rec(elements, idx + 1, current, out);
    current.pop_back();
}

}  // namespace detail

// Every partition of `elements` into nonempty blocks, by recursive placement.
inline std::vector<std::vector<std::vector<int>>> partitions_of(
    const std::vector<int>& elements) {
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<std::vector<int>> current;
    detail::partitions_rec(elements, 0, current, out);
    return out;
}

// All labelled trees on [n], found by testing every (n-1)-subset of the
// complete graph's edges for acyclicity.
inline std::vector<treelab::LabelledTree> trees_by_edge_subsets(int n) {
    using treelab::Edge;
    if (n == 1) return {treelab::LabelledTree::single_vertex()};
    std::vector<Edge> complete;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) complete.push_back({u, v});

    std::vector<treelab::LabelledTree> out;
    std::vector<int> pick(n - 1);
    auto rec = [&](auto&& self, int from, int depth) -> void {
        if (depth == n - 1) {
            std::vector<int> parent(n + 1);
            for (int v = 1; v <= n; ++v) parent[v] = v;
            auto find = [&](int x) {
                while (parent[x] != x) x = parent[x] = parent[parent[x]];
                return x;
            };
            std::vector<Edge> edges;
            for (int idx : pick) edges.push_back(complete[idx]);
            for (const auto& [u, v] : edges) {
                int a = find(u), b = find(v);
                if (a == b) return;  // cycle
                parent[a] = b;
            }
            out.push_back(treelab::LabelledTree(n, edges));
            return;
        }
        for (int i = from; i < static_cast<int>(complete.size()); ++i) {
            pick[depth] = i;
            self(self, i + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

}  // namespace oracles
