#pragma once

#include <string>
#include <vector>

#include "polyfree/errors.hpp"

namespace polyfree {

// Letter of a plain free group over an abstract symbol alphabet.
struct FreeLetter {
    int sym = 0;
    int sign = 1;
    friend bool operator==(const FreeLetter&, const FreeLetter&) = default;
};

// Freely reduced word (no adjacent s s^-1).
struct FreeWord {
    std::vector<FreeLetter> letters;
    int length() const { return static_cast<int>(letters.size()); }
    bool empty() const { return letters.empty(); }
    friend bool operator==(const FreeWord&, const FreeWord&) = default;
};

FreeWord free_reduce(const std::vector<FreeLetter>& raw);
FreeWord fw_multiply(const FreeWord& a, const FreeWord& b);
FreeWord fw_invert(const FreeWord& a);
// by^-1 * w * by
FreeWord conjugate(const FreeWord& w, const FreeWord& by);

struct SubgroupPresentation {
    int ambient_rank = 0;
    std::vector<FreeWord> generators; // letters over 0..ambient_rank-1
};

struct FoldedCore {
    int vertices = 0;
    long edges = 0;
    bool complete = false; // covering graph of the rose
};

struct SubgroupIndexResult {
    bool finite = false;
    long index = 0; // valid when finite
    long rank = 0;  // first Betti number of the folded core
    FoldedCore core;
};

// Stallings folding of the wedge of generator loops.
SubgroupIndexResult subgroup_index(const SubgroupPresentation& s);

// (q - 1) * index == rank - 1
bool schreier_check(long ambient_rank, long index, long rank);

} // namespace polyfree
