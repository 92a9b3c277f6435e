#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polyfree/freegrp.hpp"
#include "polyfree/graph.hpp"
#include "polyfree/words.hpp"

namespace polyfree {

// Witness that D breaks every cycle twice: D independent, the rest a
// forest, and no D-vertex with two neighbors in one tree.
struct DbcpCertificate {
    VertexSet D;
    std::vector<VertexSet> components;        // trees of the living forest
    std::vector<int> rep;                     // least vertex per component
    std::vector<std::vector<int>> path_to_rep; // per living vertex: [y, ..., rep]
};

struct VerifyDOutcome {
    std::optional<DbcpCertificate> certificate;
    std::string refusal;
};

VerifyDOutcome verify_D(const Graph& g, const VertexSet& D);

// Lexicographically least certificate under the vertex order, or nothing.
std::optional<DbcpCertificate> find_D(const Graph& g, int max_vertices = kDbcpSearchCap);

// Kernel generator for the length-2 split: base is a dead vertex or a
// non-representative living vertex; the index is a reduced word over the
// component representatives.
struct L2Symbol {
    int base = 0;
    FreeWord index; // letters are positions into reps()
};

class Length2Splitting {
public:
    Length2Splitting(const Graph& g, DbcpCertificate cert);

    const Graph& graph() const { return *g_; }
    const DbcpCertificate& certificate() const { return cert_; }
    const VertexSet& dead() const { return cert_.D; }
    const VertexSet& reps() const { return reps_; }     // C
    const VertexSet& extras() const { return extras_; } // X = L - C
    int rep_of(int v) const;                            // r_v for living v
    const VertexSet& RN(int d) const;
    std::optional<int> x_of(int d, int c) const; // neighbor of d in c's tree, when != c

    int c_pos(int vertex) const;
    int c_vertex(int pos) const { return reps_.at(pos); }

    bool in_T(int base, const FreeWord& t) const;
    int symbol_id(int base, const FreeWord& t);
    const L2Symbol& symbol(int id) const { return symbols_.at(id); }
    std::string render_symbol(int id) const;
    std::string render_kernel_word(const FreeWord& w) const;
    std::string render_index(const FreeWord& t) const;

    // Action of a representative letter on one symbol; output is a word
    // over symbols (a shifted symbol, a conjugate, or a telescoping product).
    FreeWord alpha_symbol(Letter c, int id);
    FreeWord alpha(Letter c, const FreeWord& w);
    FreeWord alpha_word(const FreeWord& u, const FreeWord& w); // u over reps

    // Reduced words over the representatives allowed as indices for base,
    // of length <= depth, ordered by (length, lex).
    std::vector<FreeWord> enumerate_indices(int base, int depth) const;
    std::vector<int> bases() const; // dead then extras

private:
    const Graph* g_;
    DbcpCertificate cert_;
    VertexSet reps_, extras_;
    std::vector<int> rep_of_;                 // per vertex, -1 for dead
    std::map<int, VertexSet> rn_;             // d -> representatives of N_d
    std::map<std::pair<int, int>, int> xdc_;  // (d, c) -> x(d, c)
    std::vector<L2Symbol> symbols_;
    std::map<std::pair<int, std::string>, int> symbol_ids_;
};

// Element of F x| F(C), same pairing convention as the tower split.
struct SdElement2 {
    FreeWord kernel;
    FreeWord quotient; // over rep positions
    friend bool operator==(const SdElement2&, const SdElement2&) = default;
};

SdElement2 sd2_multiply(Length2Splitting& split, const SdElement2& x, const SdElement2& y);
SdElement2 sd2_invert(Length2Splitting& split, const SdElement2& x);
bool sd2_is_identity(const SdElement2& x);
// Generator image: dead -> (d_1, 1); representative -> (1, c);
// other living x -> r_x * (x_1)^-1.
SdElement2 sd2_generator(Length2Splitting& split, int v);

struct ActionTable {
    struct Row {
        std::string label;
        int base = 0;
        bool generic = false;
        FreeWord index;
        std::vector<std::string> entries;
    };
    std::vector<std::string> columns;
    std::vector<Row> rows;
};

ActionTable action_table(Length2Splitting& split, int depth);
std::string render_action_table(const ActionTable& table);

struct CheckOutcome {
    long checked = 0;
    long failures = 0;
    std::string first_failure;
    bool ok() const { return failures == 0; }
};

struct Length2Report {
    CheckOutcome inverses;
    CheckOutcome abelianization;
    CheckOutcome relators;
    bool all_ok() const { return inverses.ok() && abelianization.ok() && relators.ok(); }
};

// Override point for mutation tests: replaces the symbol-level action.
using L2ActionFn = std::function<FreeWord(Letter, int)>;

Length2Report verify_length2(Length2Splitting& split, int depth,
                             const L2ActionFn* override_action = nullptr);

struct EulerReport {
    int v = 0, e = 0;
    std::optional<long> chi_ve;  // defined for triangle-free graphs
    std::string chi_ve_refusal;
    std::optional<long> chi_cd;  // defined when a certificate is supplied
    std::optional<long> chi_kq;  // defined when (k, q) is asserted
};

EulerReport euler(const Graph& g, const DbcpCertificate* cert = nullptr,
                  std::optional<std::pair<long, long>> kq = std::nullopt);

// Is the group a semidirect product of two finitely generated free groups?
struct FgLength2Verdict {
    enum class Kind { tree_by_cyclic, product_of_free, no };
    Kind kind = Kind::no;
    int n = 0;       // tree vertex count
    int k = 0, q = 0; // bipartite part sizes
    bool free_group = false;          // edgeless graph, length 1
    std::optional<bool> pfl2;         // for `no`: does a certificate still exist
    std::string text;
};

FgLength2Verdict classify_fg_length2(const Graph& g, int dbcp_cap = kDbcpSearchCap);

} // namespace polyfree
