#include "polyfree/words.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_set>

namespace polyfree {

namespace {

void check_letters(const Graph& g, const std::vector<Letter>& raw) {
    for (const Letter& l : raw) {
        if (l.vertex < 0 || l.vertex >= g.vertex_count())
            throw input_error("letter over unknown vertex");
        if (l.sign != 1 && l.sign != -1) throw input_error("letter sign must be +1 or -1");
    }
}

// Occurrences i, j are dependent when they cannot be swapped past each
// other: same vertex, or vertices not adjacent in the graph.
bool dependent(const Graph& g, Letter a, Letter b) {
    return a.vertex == b.vertex || !g.adjacent(a.vertex, b.vertex);
}

// Geodesic reduction: append letters one at a time, cancelling against the
// most recent same-vertex occurrence when only commuting letters separate
// them (the stack insertion of the dependence model).
std::vector<Letter> reduce_geodesic(const Graph& g, const std::vector<Letter>& raw) {
    std::vector<Letter> out;
    for (const Letter& l : raw) {
        bool placed = false;
        for (int j = static_cast<int>(out.size()) - 1; j >= 0; --j) {
            if (out[j].vertex == l.vertex) {
                if (out[j].sign == -l.sign) {
                    out.erase(out.begin() + j);
                } else {
                    out.push_back(l);
                }
                placed = true;
                break;
            }
            if (!g.adjacent(out[j].vertex, l.vertex)) break;
        }
        if (!placed) out.push_back(l);
    }
    return out;
}

// Lex-least linearization of the dependence order: repeatedly emit the
// least available occurrence (one with no earlier unemitted dependent
// occurrence). Realizable by adjacent commuting swaps, so the result is
// the shortlex-least geodesic.
std::vector<Letter> shortlex_straighten(const Graph& g, std::vector<Letter> w) {
    std::vector<Letter> out;
    out.reserve(w.size());
    while (!w.empty()) {
        int best = -1;
        for (std::size_t i = 0; i < w.size(); ++i) {
            bool minimal = true;
            for (std::size_t j = 0; j < i; ++j) {
                if (dependent(g, w[j], w[i])) { minimal = false; break; }
            }
            if (minimal && (best < 0 || letter_rank(w[i]) < letter_rank(w[best])))
                best = static_cast<int>(i);
        }
        out.push_back(w[best]);
        w.erase(w.begin() + best);
    }
    return out;
}

} // namespace

TraceWord trace_identity(const Graph& g) { return TraceWord{&g, {}}; }

TraceWord normalize(const Graph& g, const std::vector<Letter>& raw) {
    check_letters(g, raw);
    TraceWord t;
    t.ambient = &g;
    t.letters = shortlex_straighten(g, reduce_geodesic(g, raw));
    return t;
}

TraceWord multiply(const TraceWord& u, const TraceWord& v) {
    if (u.ambient != v.ambient) throw input_error("trace words over different graphs");
    std::vector<Letter> cat = u.letters;
    cat.insert(cat.end(), v.letters.begin(), v.letters.end());
    return normalize(*u.ambient, cat);
}

TraceWord multiply(const TraceWord& u, Letter l) {
    std::vector<Letter> cat = u.letters;
    cat.push_back(l);
    return normalize(*u.ambient, cat);
}

TraceWord invert(const TraceWord& u) {
    std::vector<Letter> rev(u.letters.rbegin(), u.letters.rend());
    for (Letter& l : rev) l.sign = -l.sign;
    return normalize(*u.ambient, rev);
}

std::vector<Letter> initial_letters(const TraceWord& u) {
    const Graph& g = *u.ambient;
    std::vector<Letter> out;
    for (std::size_t i = 0; i < u.letters.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < i; ++j)
            if (dependent(g, u.letters[j], u.letters[i])) { minimal = false; break; }
        if (minimal) out.push_back(u.letters[i]);
    }
    std::sort(out.begin(), out.end(),
              [](Letter a, Letter b) { return letter_rank(a) < letter_rank(b); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool all_letters_adjacent_to(const TraceWord& u, int v) {
    const Graph& g = *u.ambient;
    if (v < 0 || v >= g.vertex_count()) throw input_error("unknown vertex index");
    for (const Letter& l : u.letters)
        if (!g.adjacent(l.vertex, v)) return false;
    return true;
}

bool brute_force_equal(const Graph& g, const std::vector<Letter>& w1,
                       const std::vector<Letter>& w2, int budget) {
    check_letters(g, w1);
    check_letters(g, w2);
    if (static_cast<int>(w1.size() + w2.size()) > budget)
        throw resource_error("brute-force word comparison budget of " +
                             std::to_string(budget) + " letters exceeded");
    std::vector<Letter> start = w1;
    for (auto it = w2.rbegin(); it != w2.rend(); ++it)
        start.push_back(letter_inverse(*it));

    auto encode = [](const std::vector<Letter>& w) {
        std::string s;
        s.reserve(w.size());
        for (Letter l : w) s.push_back(static_cast<char>(letter_rank(l) + 1));
        return s;
    };
    auto decode_at = [](const std::string& s, std::size_t i) {
        int r = s[i] - 1;
        return Letter{r / 2, (r % 2) ? -1 : 1};
    };

    std::unordered_set<std::string> seen;
    std::deque<std::string> queue;
    std::string s0 = encode(start);
    if (s0.empty()) return true;
    seen.insert(s0);
    queue.push_back(s0);
    while (!queue.empty()) {
        std::string s = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i + 1 < s.size(); ++i) {
            Letter a = decode_at(s, i), b = decode_at(s, i + 1);
            if (a.vertex == b.vertex && a.sign == -b.sign) {
                std::string t = s.substr(0, i) + s.substr(i + 2);
                if (t.empty()) return true;
                if (seen.insert(t).second) queue.push_back(t);
            }
            if (a.vertex != b.vertex && g.adjacent(a.vertex, b.vertex)) {
                std::string t = s;
                std::swap(t[i], t[i + 1]);
                if (seen.insert(t).second) queue.push_back(t);
            }
        }
    }
    return false;
}

std::vector<Letter> parse_word(const Graph& g, const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    std::vector<Letter> out;
    while (in >> tok) {
        int sign = 1;
        std::string name = tok;
        auto caret = tok.find('^');
        if (caret != std::string::npos) {
            if (tok.substr(caret) != "^-1")
                throw input_error("bad word token '" + tok + "' (expected NAME or NAME^-1)");
            name = tok.substr(0, caret);
            sign = -1;
        }
        int v = g.index_of(name);
        if (v < 0) throw input_error("unknown vertex in word: '" + name + "'");
        out.push_back({v, sign});
    }
    return out;
}

std::string render_letter(const Graph& g, Letter l) {
    return l.sign > 0 ? g.name(l.vertex) : g.name(l.vertex) + "^-1";
}

std::string render_word(const Graph& g, const std::vector<Letter>& w) {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += render_letter(g, w[i]);
    }
    return out;
}

} // namespace polyfree
