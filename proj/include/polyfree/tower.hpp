#pragma once

#include <map>
#include <string>
#include <vector>

#include "polyfree/freegrp.hpp"
#include "polyfree/graph.hpp"
#include "polyfree/words.hpp"

namespace polyfree {

// Free generator d_t of the kernel: base vertex d in the peeled class D,
// index t a normal form over the living vertices whose geodesic
// representatives never start with a neighbor of d.
struct KernelSymbol {
    int base = 0;
    TraceWord index;
};

// One split A = F x| A_L for a fixed independent class D. Kernel symbols
// are interned on demand; FreeWord letters refer to symbol ids.
class TowerContext {
public:
    TowerContext(const Graph& g, VertexSet dead);

    const Graph& graph() const { return *g_; }
    const VertexSet& dead() const { return dead_; }
    const VertexSet& living() const { return living_; }
    bool is_dead(int v) const;

    bool in_Td(int d, const TraceWord& t) const;

    int symbol_id(int d, const TraceWord& t);
    const KernelSymbol& symbol(int id) const { return symbols_.at(id); }
    std::string render_symbol(int id) const;
    std::string render_kernel_word(const FreeWord& w) const;

    // The action of one living letter on one symbol: d_t -> d_{ta} when the
    // shifted symbol stays in T_d, otherwise fixed.
    int alpha_symbol(Letter a, int id);
    FreeWord alpha(Letter a, const FreeWord& w);
    // Letters of u applied left to right (realizes conjugation by u).
    FreeWord alpha_word(const TraceWord& u, const FreeWord& w);

    // All normal forms over living letters with length <= depth, by
    // shortlex order.
    std::vector<TraceWord> enumerate_living_words(int depth) const;
    // Symbol ids d_t for |t| <= depth.
    std::vector<int> enumerate_symbols(int d, int depth);

private:
    const Graph* g_;
    VertexSet dead_;
    VertexSet living_;
    std::vector<bool> dead_mask_;
    std::vector<KernelSymbol> symbols_;
    std::map<std::pair<int, std::string>, int> symbol_ids_;
    mutable std::map<int, std::vector<TraceWord>> living_words_cache_;
};

// Element of F x| A_L as kernel * quotient, with
// (f1, t1)(f2, t2) = (f1 * alpha(t1^-1, f2), t1 t2).
struct SemidirectElement {
    FreeWord kernel;
    TraceWord quotient;
    friend bool operator==(const SemidirectElement&, const SemidirectElement&) = default;
};

SemidirectElement sd_identity(const TowerContext& ctx);
SemidirectElement sd_multiply(TowerContext& ctx, const SemidirectElement& x,
                              const SemidirectElement& y);
SemidirectElement sd_invert(TowerContext& ctx, const SemidirectElement& x);
bool sd_is_identity(const SemidirectElement& x);

// Image of a defining generator under the split: dead -> (d_1, 1),
// living -> (1, v).
SemidirectElement sd_generator(TowerContext& ctx, int v);

struct RelatorReport {
    struct Entry {
        std::pair<int, int> edge;
        bool trivial = false;
    };
    std::vector<Entry> entries;
    bool all_trivial = true;
};

// Evaluates every defining commutator of the ambient group in F x| A_L.
RelatorReport relator_check(TowerContext& ctx);

struct TowerLevel {
    VertexSet color_class;   // indices into the original graph
    Graph level_graph;       // graph this level splits
    Graph living_graph;      // remainder after peeling the class
    std::vector<std::string> schemas; // per class vertex, symbol-set description
    std::string action_rule;
};

struct TowerDescription {
    std::vector<TowerLevel> levels;
    int length = 0;
};

// Peels color classes in color order; one level per color.
TowerDescription build_tower(const Graph& g, const Coloring& coloring);

struct PflBounds {
    int lower = 1;
    int upper = 1;
    bool exact = false;
    std::string lower_reason;
    std::string upper_reason;
    bool dbcp_known = false; // search ran to completion
    bool dbcp_found = false;
};

PflBounds pfl_bounds(const Graph& g, int solver_cap = kExactSolverCap,
                     int dbcp_cap = kDbcpSearchCap);

struct CheckStats {
    long checked = 0;
    long failures = 0;
    std::string first_failure;
    bool ok() const { return failures == 0; }
};

// alpha_a then alpha_{a^-1} (both orders) fix every symbol.
CheckStats check_inverse_pairs(TowerContext& ctx, int depth);
// alpha_a alpha_b = alpha_b alpha_a for adjacent living pairs.
CheckStats check_commutation(TowerContext& ctx, int depth);
// Membership flips exactly when the letter is adjacent to the base and to
// every letter of the index (computed independently on both sides).
CheckStats check_condition_star(TowerContext& ctx, int depth);

} // namespace polyfree
