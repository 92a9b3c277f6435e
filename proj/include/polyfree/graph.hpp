#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyfree/errors.hpp"

namespace polyfree {

// A sorted set of vertex indices.
using VertexSet = std::vector<int>;

// Finite simplicial graph. Vertices are indexed 0..n-1 in canonical order
// (the order of first appearance in the input); no loops, no multi-edges.
class Graph {
public:
    Graph() = default;

    // Builds from named vertices plus named edges; edge endpoints that are
    // not in `names` are appended in order of first appearance.
    static Graph build(std::vector<std::string> names,
                       const std::vector<std::pair<std::string, std::string>>& edges);

    // Builds over vertices 0..n-1 with default names v0..v{n-1}.
    static Graph build_indexed(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return static_cast<int>(names_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int v) const { return names_.at(v); }
    int index_of(const std::string& name) const; // -1 when absent
    bool adjacent(int u, int v) const;
    const std::vector<int>& neighbors_of(int v) const { return adj_.at(v); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    bool has_triangle() const;
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

private:
    std::vector<std::string> names_;
    std::vector<std::vector<int>> adj_;          // sorted neighbor lists
    std::vector<std::pair<int, int>> edges_;     // (u < v), sorted
};

// Line-oriented text format: `vertex NAME`, `edge NAME NAME`, `#` comments.
Graph parse_graph(std::istream& in);
Graph parse_graph_text(const std::string& text);
Graph parse_graph_file(const std::string& path);

struct Coloring {
    std::vector<int> color; // per vertex, 0-based
    int color_count = 0;
};

bool is_proper(const Graph& g, const Coloring& c);

VertexSet neighbors(const Graph& g, int v);
Graph induced_subgraph(const Graph& g, const VertexSet& s);

// Partition into maximal connected vertex sets, ordered by least vertex.
std::vector<VertexSet> connected_components(const Graph& g);

bool is_forest(const Graph& g);

inline constexpr int kCycleEnumCap = 20;
inline constexpr int kExactSolverCap = 25;
inline constexpr int kDbcpSearchCap = 20;

// All simple cycles up to rotation/reflection, as vertex sequences of
// length >= 3, sorted by (length, sequence).
std::vector<std::vector<int>> enumerate_simple_cycles(const Graph& g,
                                                      int max_vertices = kCycleEnumCap);

int clique_number(const Graph& g, int max_vertices = kExactSolverCap);

struct ChromaticResult {
    int number;
    Coloring witness;
};

ChromaticResult chromatic_number(const Graph& g, int max_vertices = kExactSolverCap);

// Proper coloring using exactly k color classes, when one exists.
std::optional<Coloring> proper_coloring(const Graph& g, int k,
                                        int max_vertices = kExactSolverCap);

bool is_independent(const Graph& g, const VertexSet& s);

struct ShapeResult {
    enum class Kind { tree, complete_bipartite, other };
    Kind kind = Kind::other;
    int k = 0, q = 0; // complete bipartite part sizes
};

ShapeResult classify_shape(const Graph& g);

} // namespace polyfree
