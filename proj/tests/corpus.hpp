#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "polyfree/graph.hpp"

namespace testutil {

// Deterministic 50-graph corpus: every graph on at most 5 vertices up to
// isomorphism (18 with n <= 4, 34 with n = 5), minus the two densest
// 5-vertex graphs, whose word closures dominate the oracle budget.
inline std::vector<polyfree::Graph> small_corpus() {
    std::vector<polyfree::Graph> corpus;
    for (int n = 1; n <= 5; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
        int m = static_cast<int>(pairs.size());

        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<std::vector<int>> perms;
        do {
            perms.push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));

        auto pair_index = [&](int u, int v) {
            if (u > v) std::swap(u, v);
            for (int i = 0; i < m; ++i)
                if (pairs[i] == std::make_pair(u, v)) return i;
            return -1;
        };

        std::set<int> canonical;
        for (int mask = 0; mask < (1 << m); ++mask) {
            int best = mask;
            for (const auto& p : perms) {
                int image = 0;
                for (int i = 0; i < m; ++i)
                    if (mask & (1 << i))
                        image |= 1 << pair_index(p[pairs[i].first], p[pairs[i].second]);
                best = std::min(best, image);
            }
            canonical.insert(best);
        }

        std::vector<int> masks(canonical.begin(), canonical.end());
        std::sort(masks.begin(), masks.end(), [](int a, int b) {
            int ca = __builtin_popcount(a), cb = __builtin_popcount(b);
            if (ca != cb) return ca < cb;
            return a < b;
        });
        for (int mask : masks) {
            int edge_count = __builtin_popcount(mask);
            if (n == 5 && edge_count > 8) continue;
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i < m; ++i)
                if (mask & (1 << i)) edges.push_back(pairs[i]);
            corpus.push_back(polyfree::Graph::build_indexed(n, edges));
        }
    }
    return corpus;
}

// Complete bipartite K_{k,q} with parts a1..ak and b1..bq.
inline polyfree::Graph complete_bipartite(int k, int q) {
    std::vector<std::string> names;
    for (int i = 1; i <= k; ++i) names.push_back("a" + std::to_string(i));
    for (int j = 1; j <= q; ++j) names.push_back("b" + std::to_string(j));
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= q; ++j)
            edges.emplace_back("a" + std::to_string(i), "b" + std::to_string(j));
    return polyfree::Graph::build(names, edges);
}

// Labeled tree from a Pruefer sequence over 0..n-1 (n >= 2; empty sequence
// gives the single edge).
inline polyfree::Graph tree_from_pruefer(int n, const std::vector<int>& seq) {
    std::vector<int> degree(n, 1);
    for (int s : seq) ++degree[s];
    std::vector<std::pair<int, int>> edges;
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.insert(v);
    std::vector<int> rest = seq;
    for (int s : rest) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(std::min(leaf, s), std::max(leaf, s));
        if (--degree[s] == 1) leaves.insert(s);
    }
    int u = *leaves.begin();
    int v = *std::next(leaves.begin());
    edges.emplace_back(std::min(u, v), std::max(u, v));
    return polyfree::Graph::build_indexed(n, edges);
}

} // namespace testutil
