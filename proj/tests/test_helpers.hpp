#pragma once

#include <set>
#include <string>
#include <vector>

#include "polyfree/graph.hpp"
#include "polyfree/words.hpp"

namespace testutil {

inline polyfree::Graph load_fixture(const std::string& name) {
    return polyfree::parse_graph_file(std::string(POLYFREE_FIXTURE_DIR) + "/" + name);
}

inline polyfree::VertexSet by_names(const polyfree::Graph& g,
                                    const std::vector<std::string>& names) {
    polyfree::VertexSet out;
    for (const auto& n : names) {
        int v = g.index_of(n);
        REQUIRE(v >= 0);
        out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<polyfree::Letter> word(const polyfree::Graph& g, const std::string& text) {
    return polyfree::parse_word(g, text);
}

// All geodesic representatives of a normal form: closure under swaps of
// adjacent commuting letters (no cancellation applies to a geodesic).
inline std::set<std::vector<std::pair<int, int>>> all_geodesics(
    const polyfree::Graph& g, const polyfree::TraceWord& u) {
    using Raw = std::vector<std::pair<int, int>>;
    auto to_raw = [](const std::vector<polyfree::Letter>& ls) {
        Raw r;
        for (auto l : ls) r.emplace_back(l.vertex, l.sign);
        return r;
    };
    std::set<Raw> seen{to_raw(u.letters)};
    std::vector<Raw> frontier{to_raw(u.letters)};
    while (!frontier.empty()) {
        std::vector<Raw> next;
        for (const Raw& w : frontier) {
            for (std::size_t i = 0; i + 1 < w.size(); ++i) {
                if (w[i].first != w[i + 1].first && g.adjacent(w[i].first, w[i + 1].first)) {
                    Raw t = w;
                    std::swap(t[i], t[i + 1]);
                    if (seen.insert(t).second) next.push_back(t);
                }
            }
        }
        frontier = std::move(next);
    }
    return seen;
}

} // namespace testutil
