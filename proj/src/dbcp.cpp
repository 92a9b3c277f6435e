#include "polyfree/dbcp.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <sstream>

namespace polyfree {

namespace {

std::string encode_free(const FreeWord& w) {
    std::string s;
    s.reserve(w.letters.size());
    for (const FreeLetter& l : w.letters)
        s.push_back(static_cast<char>(l.sym * 2 + (l.sign < 0 ? 1 : 0) + 1));
    return s;
}

} // namespace

VerifyDOutcome verify_D(const Graph& g, const VertexSet& D_in) {
    VertexSet D = D_in;
    std::sort(D.begin(), D.end());
    D.erase(std::unique(D.begin(), D.end()), D.end());
    for (int v : D)
        if (v < 0 || v >= g.vertex_count()) throw input_error("vertex not in graph");

    if (g.edge_count() == 0) return {std::nullopt, "DBCP requires an edge"};

    for (std::size_t i = 0; i < D.size(); ++i)
        for (std::size_t j = i + 1; j < D.size(); ++j)
            if (g.adjacent(D[i], D[j]))
                return {std::nullopt, "not independent: edge {" + g.name(D[i]) + ", " +
                                          g.name(D[j]) + "} inside D"};

    int n = g.vertex_count();
    std::vector<bool> dead(n, false);
    for (int v : D) dead[v] = true;

    // Components of the living subgraph, ordered by least vertex.
    std::vector<int> comp_id(n, -1);
    std::vector<VertexSet> components;
    int living_edges = 0;
    for (auto [u, v] : g.edges())
        if (!dead[u] && !dead[v]) ++living_edges;
    int living_count = 0;
    for (int s = 0; s < n; ++s) {
        if (dead[s]) continue;
        ++living_count;
        if (comp_id[s] >= 0) continue;
        int id = static_cast<int>(components.size());
        VertexSet comp;
        std::vector<int> stack{s};
        comp_id[s] = id;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int w : g.neighbors_of(u))
                if (!dead[w] && comp_id[w] < 0) { comp_id[w] = id; stack.push_back(w); }
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    if (living_edges != living_count - static_cast<int>(components.size()))
        return {std::nullopt, "living subgraph is not a forest"};

    for (int d : D) {
        std::vector<int> seen_comp;
        for (int w : g.neighbors_of(d)) {
            int c = comp_id[w];
            if (std::find(seen_comp.begin(), seen_comp.end(), c) != seen_comp.end())
                return {std::nullopt, "vertex " + g.name(d) +
                                          " has two neighbors in one living tree"};
            seen_comp.push_back(c);
        }
    }

    DbcpCertificate cert;
    cert.D = D;
    cert.components = components;
    cert.rep.reserve(components.size());
    for (const auto& comp : components) cert.rep.push_back(comp.front());
    cert.path_to_rep.assign(n, {});
    for (std::size_t ci = 0; ci < components.size(); ++ci) {
        int root = cert.rep[ci];
        std::vector<int> parent(n, -1);
        std::queue<int> bfs;
        bfs.push(root);
        parent[root] = root;
        while (!bfs.empty()) {
            int u = bfs.front();
            bfs.pop();
            for (int w : g.neighbors_of(u))
                if (!dead[w] && comp_id[w] == static_cast<int>(ci) && parent[w] < 0) {
                    parent[w] = u;
                    bfs.push(w);
                }
        }
        for (int y : components[ci]) {
            std::vector<int> path{y};
            int cur = y;
            while (cur != root) {
                cur = parent[cur];
                path.push_back(cur);
            }
            cert.path_to_rep[y] = std::move(path);
        }
    }
    return {std::move(cert), ""};
}

std::optional<DbcpCertificate> find_D(const Graph& g, int max_vertices) {
    if (g.vertex_count() > max_vertices)
        throw resource_error("DBCP search capped at " + std::to_string(max_vertices) +
                             " vertices (graph has " + std::to_string(g.vertex_count()) + ")");
    if (g.edge_count() == 0) return std::nullopt;
    int n = g.vertex_count();
    VertexSet cur;
    std::optional<DbcpCertificate> found;
    // Subsets visited in lexicographic order of their sorted index
    // sequences; the first valid one is the lex-least certificate.
    std::function<bool(int)> rec = [&](int start) -> bool {
        auto outcome = verify_D(g, cur);
        if (outcome.certificate) {
            found = std::move(outcome.certificate);
            return true;
        }
        for (int v = start; v < n; ++v) {
            bool independent = true;
            for (int u : cur)
                if (g.adjacent(u, v)) { independent = false; break; }
            if (!independent) continue;
            cur.push_back(v);
            if (rec(v + 1)) return true;
            cur.pop_back();
        }
        return false;
    };
    rec(0);
    return found;
}

Length2Splitting::Length2Splitting(const Graph& g, DbcpCertificate cert_in) : g_(&g) {
    auto outcome = verify_D(g, cert_in.D);
    if (!outcome.certificate)
        throw input_error("invalid DBCP certificate: " + outcome.refusal);
    cert_ = std::move(*outcome.certificate);

    reps_ = cert_.rep; // components ordered by least vertex, so already sorted
    rep_of_.assign(g.vertex_count(), -1);
    for (std::size_t ci = 0; ci < cert_.components.size(); ++ci)
        for (int y : cert_.components[ci]) rep_of_[y] = cert_.rep[ci];
    for (int v = 0; v < g.vertex_count(); ++v)
        if (rep_of_[v] >= 0 && rep_of_[v] != v) extras_.push_back(v);

    for (int d : cert_.D) {
        VertexSet rn;
        for (int y : g.neighbors_of(d)) {
            int c = rep_of_[y];
            rn.push_back(c);
            if (y != c) xdc_[{d, c}] = y;
        }
        std::sort(rn.begin(), rn.end());
        rn.erase(std::unique(rn.begin(), rn.end()), rn.end());
        rn_[d] = std::move(rn);
    }
}

int Length2Splitting::rep_of(int v) const {
    if (v < 0 || v >= g_->vertex_count() || rep_of_[v] < 0)
        throw input_error("rep_of: not a living vertex");
    return rep_of_[v];
}

const VertexSet& Length2Splitting::RN(int d) const {
    auto it = rn_.find(d);
    if (it == rn_.end()) throw input_error("RN: vertex not in D");
    return it->second;
}

std::optional<int> Length2Splitting::x_of(int d, int c) const {
    auto it = xdc_.find({d, c});
    if (it == xdc_.end()) return std::nullopt;
    return it->second;
}

int Length2Splitting::c_pos(int vertex) const {
    auto it = std::lower_bound(reps_.begin(), reps_.end(), vertex);
    if (it == reps_.end() || *it != vertex)
        throw input_error("vertex is not a component representative");
    return static_cast<int>(it - reps_.begin());
}

bool Length2Splitting::in_T(int base, const FreeWord& t) const {
    bool base_dead = std::binary_search(cert_.D.begin(), cert_.D.end(), base);
    bool base_extra = std::binary_search(extras_.begin(), extras_.end(), base);
    if (!base_dead && !base_extra)
        throw input_error("symbol base must be dead or a non-representative living vertex");
    if (t.empty()) return true;
    int first = c_vertex(t.letters.front().sym);
    if (base_dead) {
        const VertexSet& rn = rn_.at(base);
        return !std::binary_search(rn.begin(), rn.end(), first);
    }
    return first != rep_of_[base];
}

int Length2Splitting::symbol_id(int base, const FreeWord& t) {
    if (!in_T(base, t)) throw input_error("symbol index outside its schema");
    auto key = std::make_pair(base, encode_free(t));
    auto it = symbol_ids_.find(key);
    if (it != symbol_ids_.end()) return it->second;
    int id = static_cast<int>(symbols_.size());
    symbols_.push_back({base, t});
    symbol_ids_.emplace(std::move(key), id);
    return id;
}

std::string Length2Splitting::render_index(const FreeWord& t) const {
    std::string idx;
    for (const FreeLetter& l : t.letters) {
        idx += g_->name(c_vertex(l.sym));
        if (l.sign < 0) idx += "^-1";
    }
    return idx;
}

std::string Length2Splitting::render_symbol(int id) const {
    const L2Symbol& s = symbols_.at(id);
    std::string base = g_->name(s.base);
    if (s.index.empty()) return base + "_1";
    std::string idx = render_index(s.index);
    if (idx.size() == 1) return base + "_" + idx;
    return base + "_{" + idx + "}";
}

std::string Length2Splitting::render_kernel_word(const FreeWord& w) const {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (i) out += ' ';
        const FreeLetter& l = w.letters[i];
        out += l.sign > 0 ? render_symbol(l.sym) : "(" + render_symbol(l.sym) + ")^-1";
    }
    return out;
}

FreeWord Length2Splitting::alpha_symbol(Letter c, int id) {
    if (c.sign != 1 && c.sign != -1) throw input_error("letter sign must be +1 or -1");
    int cpos = c_pos(c.vertex);
    const L2Symbol s = symbols_.at(id);
    bool base_dead = std::binary_search(cert_.D.begin(), cert_.D.end(), s.base);

    auto shifted_symbol = [&]() {
        FreeWord t = fw_multiply(s.index, FreeWord{{FreeLetter{cpos, c.sign}}});
        if (!in_T(s.base, t))
            throw std::logic_error("shifted index left the symbol schema");
        return FreeWord{{FreeLetter{symbol_id(s.base, t), 1}}};
    };

    if (base_dead) {
        const VertexSet& rn = rn_.at(s.base);
        bool special = s.index.empty() &&
                       std::binary_search(rn.begin(), rn.end(), c.vertex);
        if (!special) return shifted_symbol();
        if (g_->adjacent(s.base, c.vertex)) // c in RN_d intersect N_d
            return FreeWord{{FreeLetter{id, 1}}};
        int x = xdc_.at({s.base, c.vertex});
        int xsym = symbol_id(x, FreeWord{});
        if (c.sign > 0) {
            // conjugate d_1 ^ {x(d,c)_1}
            return FreeWord{{FreeLetter{xsym, -1}, FreeLetter{id, 1}, FreeLetter{xsym, 1}}};
        }
        // d_1 ^ {[alpha_{c^-1}(x(d,c)_1)]^-1} = w d_1 w^-1 for w = alpha_{c^-1}(x(d,c)_1)
        FreeWord w = alpha_symbol(Letter{c.vertex, -1}, xsym);
        return fw_multiply(fw_multiply(w, FreeWord{{FreeLetter{id, 1}}}), fw_invert(w));
    }

    bool special = s.index.empty() && c.vertex == rep_of_[s.base];
    if (!special) return shifted_symbol();

    // Telescoping along the path (x = x^(n), ..., x^(1), c).
    const std::vector<int>& p = cert_.path_to_rep[s.base];
    int n = static_cast<int>(p.size()) - 1;
    auto sym_at = [&](int i) { // symbol for x^(i), i in 1..n
        return symbol_id(p[n - i], FreeWord{});
    };
    FreeWord out;
    if (c.sign > 0) {
        for (int i = n - 1; i >= 1; --i) {
            out.letters.push_back({sym_at(i), -1});
            out.letters.push_back({sym_at(i + 1), 1});
        }
        out.letters.push_back({sym_at(1), 1});
    } else {
        out.letters.push_back({sym_at(1), 1});
        for (int i = 2; i <= n; ++i) {
            out.letters.push_back({sym_at(i), 1});
            out.letters.push_back({sym_at(i - 1), -1});
        }
    }
    return free_reduce(out.letters);
}

FreeWord Length2Splitting::alpha(Letter c, const FreeWord& w) {
    std::vector<FreeLetter> out;
    for (const FreeLetter& l : w.letters) {
        FreeWord img = alpha_symbol(c, l.sym);
        if (l.sign < 0) img = fw_invert(img);
        out.insert(out.end(), img.letters.begin(), img.letters.end());
    }
    return free_reduce(out);
}

FreeWord Length2Splitting::alpha_word(const FreeWord& u, const FreeWord& w) {
    FreeWord cur = w;
    for (const FreeLetter& l : u.letters)
        cur = alpha(Letter{c_vertex(l.sym), l.sign}, cur);
    return cur;
}

std::vector<FreeWord> Length2Splitting::enumerate_indices(int base, int depth) const {
    std::vector<FreeWord> all{FreeWord{}};
    std::vector<FreeWord> level{FreeWord{}};
    int letters = static_cast<int>(reps_.size()) * 2;
    for (int len = 1; len <= depth; ++len) {
        std::vector<FreeWord> next;
        for (const FreeWord& w : level) {
            for (int r = 0; r < letters; ++r) {
                FreeLetter l{r / 2, (r % 2) ? -1 : 1};
                if (!w.empty() && w.letters.back().sym == l.sym &&
                    w.letters.back().sign == -l.sign)
                    continue;
                FreeWord ext = w;
                ext.letters.push_back(l);
                if (!in_T(base, ext)) continue;
                next.push_back(std::move(ext));
            }
        }
        all.insert(all.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return all;
}

std::vector<int> Length2Splitting::bases() const {
    std::vector<int> out = cert_.D;
    out.insert(out.end(), extras_.begin(), extras_.end());
    return out;
}

namespace {

FreeWord apply_action(const L2ActionFn& fn, Letter c, const FreeWord& w) {
    std::vector<FreeLetter> out;
    for (const FreeLetter& l : w.letters) {
        FreeWord img = fn(c, l.sym);
        if (l.sign < 0) img = fw_invert(img);
        out.insert(out.end(), img.letters.begin(), img.letters.end());
    }
    return free_reduce(out);
}

FreeWord apply_action_word(const Length2Splitting& split, const L2ActionFn& fn,
                           const FreeWord& u, const FreeWord& w) {
    FreeWord cur = w;
    for (const FreeLetter& l : u.letters)
        cur = apply_action(fn, Letter{split.c_vertex(l.sym), l.sign}, cur);
    return cur;
}

SdElement2 sd2_mul_fn(const Length2Splitting& split, const L2ActionFn& fn,
                      const SdElement2& x, const SdElement2& y) {
    SdElement2 out;
    out.kernel = fw_multiply(x.kernel, apply_action_word(split, fn, fw_invert(x.quotient),
                                                         y.kernel));
    out.quotient = fw_multiply(x.quotient, y.quotient);
    return out;
}

SdElement2 sd2_inv_fn(const Length2Splitting& split, const L2ActionFn& fn,
                      const SdElement2& x) {
    SdElement2 out;
    out.quotient = fw_invert(x.quotient);
    out.kernel = apply_action_word(split, fn, x.quotient, fw_invert(x.kernel));
    return out;
}

SdElement2 sd2_generator_fn(Length2Splitting& split, const L2ActionFn& fn, int v) {
    SdElement2 out;
    const VertexSet& D = split.dead();
    if (std::binary_search(D.begin(), D.end(), v)) {
        out.kernel.letters.push_back({split.symbol_id(v, FreeWord{}), 1});
        return out;
    }
    int r = split.rep_of(v);
    if (r == v) {
        out.quotient.letters.push_back({split.c_pos(v), 1});
        return out;
    }
    // v = r_v * (v_1)^-1 in the split group.
    int vsym = split.symbol_id(v, FreeWord{});
    out.kernel = apply_action(fn, Letter{r, -1}, FreeWord{{FreeLetter{vsym, -1}}});
    out.quotient.letters.push_back({split.c_pos(r), 1});
    return out;
}

} // namespace

SdElement2 sd2_multiply(Length2Splitting& split, const SdElement2& x, const SdElement2& y) {
    L2ActionFn fn = [&split](Letter c, int id) { return split.alpha_symbol(c, id); };
    return sd2_mul_fn(split, fn, x, y);
}

SdElement2 sd2_invert(Length2Splitting& split, const SdElement2& x) {
    L2ActionFn fn = [&split](Letter c, int id) { return split.alpha_symbol(c, id); };
    return sd2_inv_fn(split, fn, x);
}

bool sd2_is_identity(const SdElement2& x) { return x.kernel.empty() && x.quotient.empty(); }

SdElement2 sd2_generator(Length2Splitting& split, int v) {
    L2ActionFn fn = [&split](Letter c, int id) { return split.alpha_symbol(c, id); };
    return sd2_generator_fn(split, fn, v);
}

ActionTable action_table(Length2Splitting& split, int depth) {
    if (depth < 1) throw input_error("table depth must be at least 1");
    const Graph& g = split.graph();
    ActionTable table;
    for (int c : split.reps()) table.columns.push_back(g.name(c));
    for (int base : split.bases()) {
        for (const FreeWord& t : split.enumerate_indices(base, depth - 1)) {
            int id = split.symbol_id(base, t);
            ActionTable::Row row;
            row.label = split.render_symbol(id);
            row.base = base;
            row.index = t;
            for (int c : split.reps()) {
                FreeWord w = split.alpha_symbol(Letter{c, 1}, id);
                std::string entry;
                bool dead = std::binary_search(split.dead().begin(), split.dead().end(), base);
                if (w.length() == 1 && w.letters[0].sign > 0) {
                    entry = split.render_symbol(w.letters[0].sym);
                } else if (dead && w.length() == 3 && w.letters[0].sign < 0 &&
                           w.letters[1].sign > 0 && w.letters[2].sign > 0 &&
                           w.letters[0].sym == w.letters[2].sym) {
                    entry = split.render_symbol(w.letters[1].sym) + "^{" +
                            split.render_symbol(w.letters[0].sym) + "}";
                } else {
                    entry = split.render_kernel_word(w);
                }
                row.entries.push_back(std::move(entry));
            }
            table.rows.push_back(std::move(row));
        }
        // Generic row covering the rest of the (infinite) symbol set.
        bool has_more;
        bool dead = std::binary_search(split.dead().begin(), split.dead().end(), base);
        if (dead)
            has_more = split.RN(base).size() < split.reps().size();
        else
            has_more = split.reps().size() >= 2;
        if (has_more) {
            ActionTable::Row row;
            row.label = g.name(base) + "_t";
            row.base = base;
            row.generic = true;
            for (int c : split.reps())
                row.entries.push_back(g.name(base) + "_{t" + g.name(c) + "}");
            table.rows.push_back(std::move(row));
        }
    }
    return table;
}

std::string render_action_table(const ActionTable& table) {
    std::size_t label_w = 0;
    for (const auto& row : table.rows) label_w = std::max(label_w, row.label.size());
    std::vector<std::size_t> col_w(table.columns.size());
    for (std::size_t j = 0; j < table.columns.size(); ++j) {
        col_w[j] = table.columns[j].size();
        for (const auto& row : table.rows) col_w[j] = std::max(col_w[j], row.entries[j].size());
    }
    std::ostringstream out;
    out << std::string(label_w, ' ') << " |";
    for (std::size_t j = 0; j < table.columns.size(); ++j) {
        out << ' ' << table.columns[j]
            << std::string(col_w[j] - table.columns[j].size(), ' ');
    }
    out << '\n';
    out << std::string(label_w, '-') << "-+";
    for (std::size_t j = 0; j < table.columns.size(); ++j)
        out << std::string(col_w[j] + 1, '-');
    out << '\n';
    for (const auto& row : table.rows) {
        out << row.label << std::string(label_w - row.label.size(), ' ') << " |";
        for (std::size_t j = 0; j < row.entries.size(); ++j)
            out << ' ' << row.entries[j] << std::string(col_w[j] - row.entries[j].size(), ' ');
        out << '\n';
    }
    return out.str();
}

Length2Report verify_length2(Length2Splitting& split, int depth,
                             const L2ActionFn* override_action) {
    L2ActionFn fn = override_action
                        ? *override_action
                        : L2ActionFn([&split](Letter c, int id) {
                              return split.alpha_symbol(c, id);
                          });
    Length2Report report;

    std::vector<int> ids;
    for (int base : split.bases())
        for (const FreeWord& t : split.enumerate_indices(base, depth))
            ids.push_back(split.symbol_id(base, t));

    for (int id : ids) {
        FreeWord sw{{FreeLetter{id, 1}}};
        for (int c : split.reps()) {
            Letter pos{c, 1}, neg{c, -1};
            report.inverses.checked += 2;
            if (apply_action(fn, neg, apply_action(fn, pos, sw)) != sw) {
                ++report.inverses.failures;
                if (report.inverses.first_failure.empty())
                    report.inverses.first_failure =
                        "alpha_{" + split.graph().name(c) + "^-1} alpha_{" +
                        split.graph().name(c) + "} moved " + split.render_symbol(id);
            }
            if (apply_action(fn, pos, apply_action(fn, neg, sw)) != sw) {
                ++report.inverses.failures;
                if (report.inverses.first_failure.empty())
                    report.inverses.first_failure =
                        "alpha_{" + split.graph().name(c) + "} alpha_{" +
                        split.graph().name(c) + "^-1} moved " + split.render_symbol(id);
            }
        }
    }

    // Induced map on the abelianization: each basis symbol goes to a single
    // basis symbol with coefficient +1, injectively.
    for (int c : split.reps()) {
        for (int sign : {1, -1}) {
            std::set<int> images;
            for (int id : ids) {
                ++report.abelianization.checked;
                FreeWord w = apply_action(fn, Letter{c, sign}, FreeWord{{FreeLetter{id, 1}}});
                std::map<int, int> net;
                for (const FreeLetter& l : w.letters) net[l.sym] += l.sign;
                int nonzero = 0, target = -1;
                bool plus_one = false;
                for (auto [sym, coef] : net) {
                    if (coef != 0) {
                        ++nonzero;
                        target = sym;
                        plus_one = coef == 1;
                    }
                }
                bool ok = nonzero == 1 && plus_one;
                if (ok && !images.insert(target).second) ok = false;
                if (!ok) {
                    ++report.abelianization.failures;
                    if (report.abelianization.first_failure.empty())
                        report.abelianization.first_failure =
                            "abelianized action at " + split.render_symbol(id) +
                            " under " + split.graph().name(c) +
                            (sign < 0 ? "^-1" : "") + " is not a fresh basis symbol";
                }
            }
        }
    }

    for (auto edge : split.graph().edges()) {
        SdElement2 u = sd2_generator_fn(split, fn, edge.first);
        SdElement2 v = sd2_generator_fn(split, fn, edge.second);
        SdElement2 comm = sd2_mul_fn(
            split, fn,
            sd2_mul_fn(split, fn, sd2_mul_fn(split, fn, u, v), sd2_inv_fn(split, fn, u)),
            sd2_inv_fn(split, fn, v));
        ++report.relators.checked;
        if (!sd2_is_identity(comm)) {
            ++report.relators.failures;
            if (report.relators.first_failure.empty())
                report.relators.first_failure =
                    "commutator [" + split.graph().name(edge.first) + ", " +
                    split.graph().name(edge.second) + "] is nontrivial";
        }
    }
    return report;
}

EulerReport euler(const Graph& g, const DbcpCertificate* cert,
                  std::optional<std::pair<long, long>> kq) {
    EulerReport r;
    r.v = g.vertex_count();
    r.e = g.edge_count();
    if (g.has_triangle())
        r.chi_ve_refusal = "graph contains a triangle";
    else
        r.chi_ve = 1L - r.v + r.e;
    if (cert) {
        long sum = 0;
        for (int d : cert->D) sum += g.degree(d) - 1;
        r.chi_cd = 1L - static_cast<long>(cert->components.size()) + sum;
    }
    if (kq) r.chi_kq = (kq->first - 1) * (kq->second - 1);
    return r;
}

FgLength2Verdict classify_fg_length2(const Graph& g, int dbcp_cap) {
    if (g.vertex_count() == 0) throw input_error("classification of empty graph");
    FgLength2Verdict out;
    ShapeResult shape = classify_shape(g);
    if (shape.kind == ShapeResult::Kind::complete_bipartite) {
        out.kind = FgLength2Verdict::Kind::product_of_free;
        out.k = shape.k;
        out.q = shape.q;
        out.text = "poly-fg-free of length 2: F_" + std::to_string(out.k) + " x F_" +
                   std::to_string(out.q);
        return out;
    }
    if (shape.kind == ShapeResult::Kind::tree) {
        out.kind = FgLength2Verdict::Kind::tree_by_cyclic;
        out.n = g.vertex_count();
        out.text = "poly-fg-free of length 2: F_" + std::to_string(out.n - 1) + " x| Z";
        return out;
    }
    out.kind = FgLength2Verdict::Kind::no;
    out.text = "not poly-fg-free of length 2";
    if (g.edge_count() == 0) {
        out.free_group = true;
        out.pfl2 = false;
        out.text += "; the group is free (length 1)";
        return out;
    }
    try {
        out.pfl2 = find_D(g, dbcp_cap).has_value();
        out.text += *out.pfl2 ? "; poly-free length 2 via a DBCP certificate"
                              : "; no DBCP certificate, poly-free length at least 3";
    } catch (const resource_error&) {
        out.pfl2 = std::nullopt;
        out.text += "; DBCP search skipped (size cap)";
    }
    return out;
}

} // namespace polyfree
