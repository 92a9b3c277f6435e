#include "polyfree/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <sstream>

namespace polyfree {

namespace {

bool valid_vertex_name(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c <= ' ' || static_cast<unsigned char>(c) > 126 || c == '^') return false;
    }
    return true;
}

} // namespace

Graph Graph::build(std::vector<std::string> names,
                   const std::vector<std::pair<std::string, std::string>>& edges) {
    Graph g;
    std::map<std::string, int> index;
    for (auto& n : names) {
        if (!valid_vertex_name(n)) throw input_error("invalid vertex name: '" + n + "'");
        if (index.count(n)) throw input_error("duplicate vertex: " + n);
        index[n] = static_cast<int>(g.names_.size());
        g.names_.push_back(n);
    }
    auto lookup = [&](const std::string& n) {
        if (!valid_vertex_name(n)) throw input_error("invalid vertex name: '" + n + "'");
        auto it = index.find(n);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(g.names_.size());
        index[n] = id;
        g.names_.push_back(n);
        return id;
    };
    g.adj_.resize(g.names_.size());
    for (const auto& [a, b] : edges) {
        int u = lookup(a);
        int v = lookup(b);
        if (u == v) throw input_error("loop edge at vertex " + a);
        g.adj_.resize(g.names_.size());
        auto e = std::minmax(u, v);
        std::pair<int, int> key{e.first, e.second};
        if (std::find(g.edges_.begin(), g.edges_.end(), key) != g.edges_.end())
            throw input_error("duplicate edge " + a + " " + b);
        g.edges_.push_back(key);
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    g.adj_.resize(g.names_.size());
    for (auto& lst : g.adj_) std::sort(lst.begin(), lst.end());
    std::sort(g.edges_.begin(), g.edges_.end());
    return g;
}

Graph Graph::build_indexed(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> named_edges;
    named_edges.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw input_error("edge endpoint out of range");
        named_edges.emplace_back(names[u], names[v]);
    }
    return build(std::move(names), named_edges);
}

int Graph::index_of(const std::string& name) const {
    for (int i = 0; i < vertex_count(); ++i)
        if (names_[i] == name) return i;
    return -1;
}

bool Graph::adjacent(int u, int v) const {
    const auto& lst = adj_.at(u);
    return std::binary_search(lst.begin(), lst.end(), v);
}

bool Graph::has_triangle() const {
    for (auto [u, v] : edges_) {
        const auto& a = adj_[u];
        const auto& b = adj_[v];
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] == b[j]) return true;
            if (a[i] < b[j]) ++i; else ++j;
        }
    }
    return false;
}

Graph parse_graph(std::istream& in) {
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> edges;
    std::map<std::string, bool> declared; // explicit `vertex` lines
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        auto fail = [&](const std::string& msg) {
            throw input_error("line " + std::to_string(lineno) + ": " + msg);
        };
        if (kw == "vertex") {
            std::string name, extra;
            if (!(ls >> name)) fail("expected vertex name");
            if (ls >> extra) fail("trailing tokens after vertex name");
            if (!valid_vertex_name(name)) fail("invalid vertex name: '" + name + "'");
            if (declared.count(name)) fail("duplicate vertex: " + name);
            for (const auto& e : edges)
                if (e.first == name || e.second == name)
                    fail("vertex " + name + " already introduced by an edge");
            declared[name] = true;
            names.push_back(name);
        } else if (kw == "edge") {
            std::string a, b, extra;
            if (!(ls >> a >> b)) fail("expected two vertex names");
            if (ls >> extra) fail("trailing tokens after edge");
            if (!valid_vertex_name(a)) fail("invalid vertex name: '" + a + "'");
            if (!valid_vertex_name(b)) fail("invalid vertex name: '" + b + "'");
            if (a == b) fail("loop edge at vertex " + a);
            for (const auto& e : edges)
                if ((e.first == a && e.second == b) || (e.first == b && e.second == a))
                    fail("duplicate edge " + a + " " + b);
            edges.emplace_back(a, b);
        } else {
            fail("unknown directive '" + kw + "'");
        }
    }
    Graph g = Graph::build(std::move(names), edges);
    if (g.vertex_count() == 0) throw input_error("empty graph");
    return g;
}

Graph parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

Graph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open graph file: " + path);
    return parse_graph(in);
}

bool is_proper(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.color.size()) != g.vertex_count()) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (c.color[v] < 0 || c.color[v] >= c.color_count) return false;
    for (auto [u, v] : g.edges())
        if (c.color[u] == c.color[v]) return false;
    return true;
}

VertexSet neighbors(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count()) throw input_error("unknown vertex index");
    return g.neighbors_of(v);
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    std::vector<std::string> names;
    for (int v : s) {
        if (v < 0 || v >= g.vertex_count()) throw input_error("vertex not in graph");
        names.push_back(g.name(v));
    }
    std::vector<std::pair<std::string, std::string>> edges;
    for (auto [u, v] : g.edges()) {
        bool in_u = std::binary_search(s.begin(), s.end(), u);
        bool in_v = std::binary_search(s.begin(), s.end(), v);
        if (in_u && in_v) edges.emplace_back(g.name(u), g.name(v));
    }
    return Graph::build(std::move(names), edges);
}

std::vector<VertexSet> connected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<bool> seen(n, false);
    std::vector<VertexSet> out;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        VertexSet comp;
        std::vector<int> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int w : g.neighbors_of(u))
                if (!seen[w]) { seen[w] = true; stack.push_back(w); }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

namespace {

// DFS back-edge detection, the second route for is_forest.
bool has_cycle_dfs(const Graph& g) {
    int n = g.vertex_count();
    std::vector<bool> seen(n, false);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        // (vertex, parent) stack
        std::vector<std::pair<int, int>> stack{{s, -1}};
        seen[s] = true;
        while (!stack.empty()) {
            auto [u, parent] = stack.back();
            stack.pop_back();
            bool skipped_parent = false;
            for (int w : g.neighbors_of(u)) {
                if (w == parent && !skipped_parent) { skipped_parent = true; continue; }
                if (seen[w]) return true;
                seen[w] = true;
                stack.emplace_back(w, u);
            }
        }
    }
    return false;
}

} // namespace

bool is_forest(const Graph& g) {
    int comps = static_cast<int>(connected_components(g).size());
    bool by_count = g.edge_count() == g.vertex_count() - comps;
    bool by_dfs = !has_cycle_dfs(g);
    if (by_count != by_dfs)
        throw std::logic_error("is_forest: edge-count and cycle-search routes disagree");
    return by_count;
}

std::vector<std::vector<int>> enumerate_simple_cycles(const Graph& g, int max_vertices) {
    if (g.vertex_count() > max_vertices)
        throw resource_error("cycle enumeration capped at " + std::to_string(max_vertices) +
                             " vertices (graph has " + std::to_string(g.vertex_count()) + ")");
    std::vector<std::vector<int>> cycles;
    int n = g.vertex_count();
    std::vector<bool> onpath(n, false);
    std::vector<int> path;
    // Canonical cycle: starts at its least vertex s, and path[1] < path.back()
    // kills the reflected duplicate.
    std::function<void(int, int)> dfs = [&](int s, int u) {
        for (int w : g.neighbors_of(u)) {
            if (w == s && path.size() >= 3) {
                if (path[1] < path.back()) cycles.push_back(path);
            } else if (w > s && !onpath[w]) {
                onpath[w] = true;
                path.push_back(w);
                dfs(s, w);
                path.pop_back();
                onpath[w] = false;
            }
        }
    };
    for (int s = 0; s < n; ++s) {
        path = {s};
        onpath[s] = true;
        dfs(s, s);
        onpath[s] = false;
    }
    std::sort(cycles.begin(), cycles.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return cycles;
}

namespace {

struct MaskGraph {
    int n;
    std::vector<std::uint64_t> adj;
    explicit MaskGraph(const Graph& g) : n(g.vertex_count()), adj(n, 0) {
        for (auto [u, v] : g.edges()) {
            adj[u] |= std::uint64_t(1) << v;
            adj[v] |= std::uint64_t(1) << u;
        }
    }
};

int popcount(std::uint64_t x) { return __builtin_popcountll(x); }

void bron_kerbosch(const MaskGraph& mg, int rsize, std::uint64_t p, std::uint64_t x, int& best) {
    if (p == 0 && x == 0) {
        best = std::max(best, rsize);
        return;
    }
    if (rsize + popcount(p) <= best) return;
    // pivot with most neighbors in P
    std::uint64_t px = p | x;
    int pivot = -1, pivot_deg = -1;
    for (std::uint64_t m = px; m;) {
        int v = __builtin_ctzll(m);
        m &= m - 1;
        int d = popcount(p & mg.adj[v]);
        if (d > pivot_deg) { pivot_deg = d; pivot = v; }
    }
    std::uint64_t candidates = p & ~mg.adj[pivot];
    for (std::uint64_t m = candidates; m;) {
        int v = __builtin_ctzll(m);
        m &= m - 1;
        std::uint64_t bit = std::uint64_t(1) << v;
        bron_kerbosch(mg, rsize + 1, p & mg.adj[v], x & mg.adj[v], best);
        p &= ~bit;
        x |= bit;
    }
}

} // namespace

int clique_number(const Graph& g, int max_vertices) {
    if (g.vertex_count() == 0) throw input_error("clique number of empty graph");
    if (g.vertex_count() > max_vertices)
        throw resource_error("exact clique search capped at " + std::to_string(max_vertices) +
                             " vertices (graph has " + std::to_string(g.vertex_count()) + ")");
    MaskGraph mg(g);
    std::uint64_t all = g.vertex_count() == 64 ? ~std::uint64_t(0)
                                               : (std::uint64_t(1) << g.vertex_count()) - 1;
    int best = 0;
    bron_kerbosch(mg, 0, all, 0, best);
    return best;
}

namespace {

// DSATUR vertex selection: max saturation, ties by index.
int pick_dsatur_vertex(const Graph& g, const std::vector<int>& color) {
    int n = g.vertex_count();
    int best = -1, best_sat = -1;
    for (int v = 0; v < n; ++v) {
        if (color[v] >= 0) continue;
        std::uint64_t mask = 0;
        for (int w : g.neighbors_of(v))
            if (color[w] >= 0) mask |= std::uint64_t(1) << color[w];
        int sat = popcount(mask);
        if (sat > best_sat) { best_sat = sat; best = v; }
    }
    return best;
}

bool color_with_k(const Graph& g, int k, std::vector<int>& color, int colored, int max_used) {
    if (colored == g.vertex_count()) return true;
    int v = pick_dsatur_vertex(g, color);
    std::uint64_t banned = 0;
    for (int w : g.neighbors_of(v))
        if (color[w] >= 0) banned |= std::uint64_t(1) << color[w];
    int limit = std::min(k, max_used + 2); // at most one fresh color
    for (int c = 0; c < limit; ++c) {
        if (banned & (std::uint64_t(1) << c)) continue;
        color[v] = c;
        if (color_with_k(g, k, color, colored + 1, std::max(max_used, c))) return true;
        color[v] = -1;
    }
    return false;
}

} // namespace

ChromaticResult chromatic_number(const Graph& g, int max_vertices) {
    if (g.vertex_count() == 0) throw input_error("chromatic number of empty graph");
    if (g.vertex_count() > max_vertices)
        throw resource_error("exact coloring capped at " + std::to_string(max_vertices) +
                             " vertices (graph has " + std::to_string(g.vertex_count()) + ")");
    int lower = clique_number(g, max_vertices);
    for (int k = lower; k <= g.vertex_count(); ++k) {
        std::vector<int> color(g.vertex_count(), -1);
        if (color_with_k(g, k, color, 0, -1)) {
            Coloring c;
            c.color = color;
            c.color_count = k;
            return {k, c};
        }
    }
    throw std::logic_error("chromatic search did not terminate"); // unreachable
}

std::optional<Coloring> proper_coloring(const Graph& g, int k, int max_vertices) {
    if (g.vertex_count() == 0) throw input_error("coloring of empty graph");
    if (k < 1 || k > g.vertex_count()) return std::nullopt;
    ChromaticResult chi = chromatic_number(g, max_vertices);
    if (k < chi.number) return std::nullopt;
    Coloring c = chi.witness;
    // Split classes until exactly k are used: repeatedly move the
    // highest-index vertex of the largest class (ties: lowest color)
    // to a fresh color.
    while (c.color_count < k) {
        std::vector<int> size(c.color_count, 0);
        for (int col : c.color) ++size[col];
        int cls = 0;
        for (int i = 1; i < c.color_count; ++i)
            if (size[i] > size[cls]) cls = i;
        int victim = -1;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (c.color[v] == cls) victim = v;
        c.color[victim] = c.color_count;
        ++c.color_count;
    }
    return c;
}

bool is_independent(const Graph& g, const VertexSet& s) {
    for (int v : s)
        if (v < 0 || v >= g.vertex_count()) throw input_error("vertex not in graph");
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j])) return false;
    return true;
}

ShapeResult classify_shape(const Graph& g) {
    if (g.vertex_count() == 0) throw input_error("classify_shape of empty graph");
    auto comps = connected_components(g);
    bool connected = comps.size() == 1;
    // Complete bipartite takes priority over tree when both hold (stars).
    if (connected && g.vertex_count() >= 2) {
        std::vector<int> side(g.vertex_count(), -1);
        side[0] = 0;
        std::vector<int> stack{0};
        bool bipartite = true;
        while (!stack.empty() && bipartite) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.neighbors_of(u)) {
                if (side[w] < 0) {
                    side[w] = 1 - side[u];
                    stack.push_back(w);
                } else if (side[w] == side[u]) {
                    bipartite = false;
                    break;
                }
            }
        }
        if (bipartite) {
            long k = std::count(side.begin(), side.end(), 0);
            long q = static_cast<long>(g.vertex_count()) - k;
            if (k >= 1 && q >= 1 && k * q == g.edge_count()) {
                ShapeResult r;
                r.kind = ShapeResult::Kind::complete_bipartite;
                r.k = static_cast<int>(k);
                r.q = static_cast<int>(q);
                return r;
            }
        }
    }
    if (connected && is_forest(g)) {
        ShapeResult r;
        r.kind = ShapeResult::Kind::tree;
        return r;
    }
    return ShapeResult{};
}

} // namespace polyfree
