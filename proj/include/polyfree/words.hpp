#pragma once

#include <string>
#include <vector>

#include "polyfree/graph.hpp"

namespace polyfree {

// Signed generator letter over a graph's vertex set.
struct Letter {
    int vertex = 0;
    int sign = 1; // +1 or -1
    friend bool operator==(const Letter&, const Letter&) = default;
};

// Total order on signed letters: v0 < v0^-1 < v1 < v1^-1 < ...
inline int letter_rank(Letter l) { return l.vertex * 2 + (l.sign < 0 ? 1 : 0); }

inline Letter letter_inverse(Letter l) { return {l.vertex, -l.sign}; }

// Shortlex normal form of a group element over `ambient`. The letter
// sequence is always the shortlex-least geodesic representative.
struct TraceWord {
    const Graph* ambient = nullptr;
    std::vector<Letter> letters;

    int length() const { return static_cast<int>(letters.size()); }
    bool empty() const { return letters.empty(); }
    friend bool operator==(const TraceWord& a, const TraceWord& b) {
        return a.ambient == b.ambient && a.letters == b.letters;
    }
};

TraceWord trace_identity(const Graph& g);
TraceWord normalize(const Graph& g, const std::vector<Letter>& raw);
TraceWord multiply(const TraceWord& u, const TraceWord& v);
TraceWord multiply(const TraceWord& u, Letter l);
TraceWord invert(const TraceWord& u);

// Letters that begin some geodesic representative (minimal elements of
// the dependence order), sorted by letter rank.
std::vector<Letter> initial_letters(const TraceWord& u);

// True iff every vertex occurring in u is adjacent to v.
bool all_letters_adjacent_to(const TraceWord& u, int v);

inline constexpr int kBruteForceBudget = 12;

// Independent word-problem oracle: breadth-first closure of w1*w2^-1 under
// cancellation of adjacent inverse pairs and swaps of adjacent commuting
// letters, looking for the empty word.
bool brute_force_equal(const Graph& g, const std::vector<Letter>& w1,
                       const std::vector<Letter>& w2, int budget = kBruteForceBudget);

// Word syntax: whitespace-separated tokens `a` or `a^-1`.
std::vector<Letter> parse_word(const Graph& g, const std::string& text);
std::string render_letter(const Graph& g, Letter l);
std::string render_word(const Graph& g, const std::vector<Letter>& w); // identity -> "1"

} // namespace polyfree
