#include "polyfree/tower.hpp"

#include <algorithm>
#include <set>

#include "polyfree/dbcp.hpp"

namespace polyfree {

namespace {

std::string encode_letters(const std::vector<Letter>& ls) {
    std::string s;
    s.reserve(ls.size());
    for (Letter l : ls) s.push_back(static_cast<char>(letter_rank(l) + 1));
    return s;
}

} // namespace

TowerContext::TowerContext(const Graph& g, VertexSet dead) : g_(&g), dead_(std::move(dead)) {
    std::sort(dead_.begin(), dead_.end());
    dead_.erase(std::unique(dead_.begin(), dead_.end()), dead_.end());
    dead_mask_.assign(g.vertex_count(), false);
    for (int d : dead_) {
        if (d < 0 || d >= g.vertex_count()) throw input_error("dead vertex not in graph");
        dead_mask_[d] = true;
    }
    if (!is_independent(g, dead_)) throw input_error("class is not independent");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!dead_mask_[v]) living_.push_back(v);
}

bool TowerContext::is_dead(int v) const {
    if (v < 0 || v >= g_->vertex_count()) throw input_error("vertex not in graph");
    return dead_mask_[v];
}

bool TowerContext::in_Td(int d, const TraceWord& t) const {
    if (!is_dead(d)) throw input_error("in_Td: base vertex is not in the peeled class");
    if (t.ambient != g_) throw input_error("in_Td: index over a different graph");
    for (const Letter& l : t.letters)
        if (dead_mask_[l.vertex]) throw input_error("in_Td: index uses a dead vertex");
    for (Letter l : initial_letters(t))
        if (g_->adjacent(l.vertex, d)) return false;
    return true;
}

int TowerContext::symbol_id(int d, const TraceWord& t) {
    if (!in_Td(d, t)) throw input_error("symbol index outside T_d");
    auto key = std::make_pair(d, encode_letters(t.letters));
    auto it = symbol_ids_.find(key);
    if (it != symbol_ids_.end()) return it->second;
    int id = static_cast<int>(symbols_.size());
    symbols_.push_back({d, t});
    symbol_ids_.emplace(std::move(key), id);
    return id;
}

std::string TowerContext::render_symbol(int id) const {
    const KernelSymbol& s = symbols_.at(id);
    std::string base = g_->name(s.base);
    if (s.index.empty()) return base + "_1";
    std::string idx;
    for (const Letter& l : s.index.letters) idx += render_letter(*g_, l);
    if (idx.size() == 1) return base + "_" + idx;
    return base + "_{" + idx + "}";
}

std::string TowerContext::render_kernel_word(const FreeWord& w) const {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (i) out += ' ';
        const FreeLetter& l = w.letters[i];
        out += l.sign > 0 ? render_symbol(l.sym) : "(" + render_symbol(l.sym) + ")^-1";
    }
    return out;
}

int TowerContext::alpha_symbol(Letter a, int id) {
    if (a.vertex < 0 || a.vertex >= g_->vertex_count() || dead_mask_[a.vertex])
        throw input_error("action letter must be a living vertex");
    const KernelSymbol s = symbols_.at(id);
    TraceWord shifted = multiply(s.index, a);
    if (in_Td(s.base, shifted)) return symbol_id(s.base, shifted);
    return id;
}

FreeWord TowerContext::alpha(Letter a, const FreeWord& w) {
    std::vector<FreeLetter> out;
    out.reserve(w.letters.size());
    for (const FreeLetter& l : w.letters) out.push_back({alpha_symbol(a, l.sym), l.sign});
    return free_reduce(out);
}

FreeWord TowerContext::alpha_word(const TraceWord& u, const FreeWord& w) {
    if (u.ambient != g_) throw input_error("action word over a different graph");
    FreeWord cur = w;
    for (const Letter& l : u.letters) cur = alpha(l, cur);
    return cur;
}

std::vector<TraceWord> TowerContext::enumerate_living_words(int depth) const {
    auto cached = living_words_cache_.find(depth);
    if (cached != living_words_cache_.end()) return cached->second;
    std::vector<TraceWord> all;
    std::vector<TraceWord> level{trace_identity(*g_)};
    all.push_back(level.front());
    for (int len = 1; len <= depth; ++len) {
        std::set<std::string> seen;
        std::vector<TraceWord> next;
        for (const TraceWord& w : level) {
            for (int v : living_) {
                for (int sign : {1, -1}) {
                    TraceWord ext = multiply(w, Letter{v, sign});
                    if (ext.length() != len) continue;
                    if (seen.insert(encode_letters(ext.letters)).second) next.push_back(ext);
                }
            }
        }
        std::sort(next.begin(), next.end(), [](const TraceWord& a, const TraceWord& b) {
            return encode_letters(a.letters) < encode_letters(b.letters);
        });
        all.insert(all.end(), next.begin(), next.end());
        level = std::move(next);
    }
    living_words_cache_[depth] = all;
    return all;
}

std::vector<int> TowerContext::enumerate_symbols(int d, int depth) {
    std::vector<int> out;
    for (const TraceWord& t : enumerate_living_words(depth))
        if (in_Td(d, t)) out.push_back(symbol_id(d, t));
    return out;
}

SemidirectElement sd_identity(const TowerContext& ctx) {
    return {FreeWord{}, trace_identity(ctx.graph())};
}

SemidirectElement sd_multiply(TowerContext& ctx, const SemidirectElement& x,
                              const SemidirectElement& y) {
    if (x.quotient.ambient != &ctx.graph() || y.quotient.ambient != &ctx.graph())
        throw input_error("semidirect elements over a different graph");
    SemidirectElement out;
    out.kernel = fw_multiply(x.kernel, ctx.alpha_word(invert(x.quotient), y.kernel));
    out.quotient = multiply(x.quotient, y.quotient);
    return out;
}

SemidirectElement sd_invert(TowerContext& ctx, const SemidirectElement& x) {
    SemidirectElement out;
    out.quotient = invert(x.quotient);
    out.kernel = ctx.alpha_word(x.quotient, fw_invert(x.kernel));
    return out;
}

bool sd_is_identity(const SemidirectElement& x) {
    return x.kernel.empty() && x.quotient.empty();
}

SemidirectElement sd_generator(TowerContext& ctx, int v) {
    SemidirectElement out = sd_identity(ctx);
    if (ctx.is_dead(v)) {
        int id = ctx.symbol_id(v, trace_identity(ctx.graph()));
        out.kernel.letters.push_back({id, 1});
    } else {
        out.quotient = normalize(ctx.graph(), {Letter{v, 1}});
    }
    return out;
}

RelatorReport relator_check(TowerContext& ctx) {
    RelatorReport report;
    for (auto edge : ctx.graph().edges()) {
        SemidirectElement u = sd_generator(ctx, edge.first);
        SemidirectElement v = sd_generator(ctx, edge.second);
        SemidirectElement comm = sd_multiply(
            ctx, sd_multiply(ctx, sd_multiply(ctx, u, v), sd_invert(ctx, u)), sd_invert(ctx, v));
        bool trivial = sd_is_identity(comm);
        report.entries.push_back({edge, trivial});
        report.all_trivial = report.all_trivial && trivial;
    }
    return report;
}

namespace {

std::string schema_description(const Graph& g, int d) {
    std::string nd;
    for (int w : g.neighbors_of(d)) {
        if (!nd.empty()) nd += ", ";
        nd += g.name(w);
    }
    std::string b = g.name(d);
    return "T_" + b + " = { " + b + "_t : t over the living vertices, no geodesic form of t "
           "starts with one of {" + nd + "}^{+-1} }";
}

} // namespace

TowerDescription build_tower(const Graph& g, const Coloring& coloring) {
    if (!is_proper(g, coloring)) throw input_error("coloring is not proper");
    std::vector<int> class_size(coloring.color_count, 0);
    for (int v = 0; v < g.vertex_count(); ++v) ++class_size[coloring.color[v]];
    for (int c = 0; c < coloring.color_count; ++c)
        if (class_size[c] == 0) throw input_error("coloring has an empty color class");

    TowerDescription tower;
    tower.length = coloring.color_count;
    Graph current = g;
    for (int c = 0; c < coloring.color_count; ++c) {
        TowerLevel level;
        level.level_graph = current;
        VertexSet remaining_local;
        for (int v = 0; v < current.vertex_count(); ++v) {
            int orig = g.index_of(current.name(v));
            if (coloring.color[orig] == c) {
                level.color_class.push_back(orig);
                level.schemas.push_back(schema_description(current, v));
            } else {
                remaining_local.push_back(v);
            }
        }
        level.living_graph = induced_subgraph(current, remaining_local);
        level.action_rule =
            "d_t ^ a = d_{ta} when the shifted index stays in T_d, else d_t (a a living letter)";
        Graph next = level.living_graph;
        tower.levels.push_back(std::move(level));
        current = std::move(next);
    }
    if (current.vertex_count() != 0)
        throw std::logic_error("tower did not exhaust the vertex set");
    if (tower.levels.back().level_graph.edge_count() != 0)
        throw std::logic_error("last tower level is not a free group");
    return tower;
}

PflBounds pfl_bounds(const Graph& g, int solver_cap, int dbcp_cap) {
    if (g.vertex_count() == 0) throw input_error("poly-free bounds of empty graph");
    PflBounds b;
    if (g.edge_count() == 0) {
        b.lower = b.upper = 1;
        b.exact = true;
        b.lower_reason = b.upper_reason = "edgeless graph defines a free group";
        b.dbcp_known = true;
        b.dbcp_found = false;
        return b;
    }
    int clq = clique_number(g, solver_cap);
    int chr = chromatic_number(g, solver_cap).number;
    b.lower = clq;
    b.upper = chr;
    b.lower_reason = "clique number";
    b.upper_reason = "chromatic number";
    try {
        auto cert = find_D(g, dbcp_cap);
        b.dbcp_known = true;
        b.dbcp_found = cert.has_value();
        if (cert) {
            b.lower = b.upper = 2;
            b.lower_reason = b.upper_reason = "doubly breakable cycle decomposition";
        } else if (b.lower < 3) {
            b.lower = 3;
            b.lower_reason = "edges but no doubly breakable cycle decomposition";
        }
    } catch (const resource_error&) {
        b.dbcp_known = false;
    }
    b.exact = b.lower == b.upper;
    return b;
}

CheckStats check_inverse_pairs(TowerContext& ctx, int depth) {
    CheckStats stats;
    for (int d : ctx.dead()) {
        for (int id : ctx.enumerate_symbols(d, depth)) {
            for (int v : ctx.living()) {
                for (int sign : {1, -1}) {
                    Letter a{v, sign};
                    ++stats.checked;
                    bool ok = ctx.alpha_symbol(letter_inverse(a), ctx.alpha_symbol(a, id)) == id &&
                              ctx.alpha_symbol(a, ctx.alpha_symbol(letter_inverse(a), id)) == id;
                    if (!ok) {
                        ++stats.failures;
                        if (stats.first_failure.empty())
                            stats.first_failure = "inverse pair failed at " + ctx.render_symbol(id) +
                                                  " with letter " + render_letter(ctx.graph(), a);
                    }
                }
            }
        }
    }
    return stats;
}

CheckStats check_commutation(TowerContext& ctx, int depth) {
    CheckStats stats;
    std::vector<std::pair<int, int>> living_edges;
    for (auto e : ctx.graph().edges())
        if (!ctx.is_dead(e.first) && !ctx.is_dead(e.second)) living_edges.push_back(e);
    for (int d : ctx.dead()) {
        for (int id : ctx.enumerate_symbols(d, depth)) {
            for (auto [u, v] : living_edges) {
                for (int su : {1, -1}) {
                    for (int sv : {1, -1}) {
                        Letter a{u, su}, b{v, sv};
                        ++stats.checked;
                        if (ctx.alpha_symbol(b, ctx.alpha_symbol(a, id)) !=
                            ctx.alpha_symbol(a, ctx.alpha_symbol(b, id))) {
                            ++stats.failures;
                            if (stats.first_failure.empty())
                                stats.first_failure = "commutation failed at " +
                                                      ctx.render_symbol(id) + " with letters " +
                                                      render_letter(ctx.graph(), a) + ", " +
                                                      render_letter(ctx.graph(), b);
                        }
                    }
                }
            }
        }
    }
    return stats;
}

CheckStats check_condition_star(TowerContext& ctx, int depth) {
    CheckStats stats;
    for (int d : ctx.dead()) {
        for (int id : ctx.enumerate_symbols(d, depth)) {
            const KernelSymbol& s = ctx.symbol(id);
            for (int v : ctx.living()) {
                for (int sign : {1, -1}) {
                    Letter a{v, sign};
                    ++stats.checked;
                    bool leaves = !ctx.in_Td(d, multiply(s.index, a));
                    bool star = ctx.graph().adjacent(v, d) &&
                                all_letters_adjacent_to(s.index, v);
                    if (leaves != star) {
                        ++stats.failures;
                        if (stats.first_failure.empty())
                            stats.first_failure = "membership flip mismatch at " +
                                                  ctx.render_symbol(id) + " with letter " +
                                                  render_letter(ctx.graph(), a);
                    }
                }
            }
        }
    }
    return stats;
}

} // namespace polyfree
