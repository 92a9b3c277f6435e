#include "polyfree/freegrp.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace polyfree {

FreeWord free_reduce(const std::vector<FreeLetter>& raw) {
    FreeWord out;
    for (const FreeLetter& l : raw) {
        if (l.sign != 1 && l.sign != -1) throw input_error("free letter sign must be +1 or -1");
        if (!out.letters.empty() && out.letters.back().sym == l.sym &&
            out.letters.back().sign == -l.sign) {
            out.letters.pop_back();
        } else {
            out.letters.push_back(l);
        }
    }
    return out;
}

FreeWord fw_multiply(const FreeWord& a, const FreeWord& b) {
    std::vector<FreeLetter> cat = a.letters;
    cat.insert(cat.end(), b.letters.begin(), b.letters.end());
    return free_reduce(cat);
}

FreeWord fw_invert(const FreeWord& a) {
    FreeWord out;
    out.letters.reserve(a.letters.size());
    for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it)
        out.letters.push_back({it->sym, -it->sign});
    return out;
}

FreeWord conjugate(const FreeWord& w, const FreeWord& by) {
    return fw_multiply(fw_multiply(fw_invert(by), w), by);
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

SubgroupIndexResult subgroup_index(const SubgroupPresentation& s) {
    if (s.ambient_rank < 0) throw input_error("negative ambient rank");
    // Wedge of generator loops at a base vertex.
    int next = 1;
    std::vector<std::tuple<int, int, int>> edge_list; // (u, v, label): u --label--> v
    for (const FreeWord& gen_raw : s.generators) {
        FreeWord gen = free_reduce(gen_raw.letters);
        if (gen.empty()) continue;
        int prev = 0;
        for (int i = 0; i < gen.length(); ++i) {
            const FreeLetter& l = gen.letters[i];
            if (l.sym < 0 || l.sym >= s.ambient_rank)
                throw input_error("generator uses symbol outside the ambient alphabet");
            int target = (i + 1 == gen.length()) ? 0 : next++;
            if (l.sign > 0)
                edge_list.emplace_back(prev, target, l.sym);
            else
                edge_list.emplace_back(target, prev, l.sym);
            prev = target;
        }
    }

    UnionFind uf(next);
    bool changed = true;
    while (changed) {
        changed = false;
        // out[label][vertex] and in[label][vertex] witnesses
        std::map<std::pair<int, int>, int> out_to, in_from;
        for (auto [u, v, l] : edge_list) {
            int ru = uf.find(u), rv = uf.find(v);
            auto [ito, inserted_o] = out_to.try_emplace({l, ru}, rv);
            if (!inserted_o && uf.find(ito->second) != rv) {
                uf.unite(ito->second, rv);
                changed = true;
                break;
            }
            auto [iti, inserted_i] = in_from.try_emplace({l, rv}, ru);
            if (!inserted_i && uf.find(iti->second) != ru) {
                uf.unite(iti->second, ru);
                changed = true;
                break;
            }
        }
    }

    // Collapse to the folded graph.
    std::set<int> verts;
    std::set<std::tuple<int, int, int>> edges;
    for (auto [u, v, l] : edge_list) edges.insert({uf.find(u), uf.find(v), l});
    verts.insert(uf.find(0));
    for (auto [u, v, l] : edges) { verts.insert(u); verts.insert(v); }

    // Trim hanging trees (degree-1 vertices other than the base).
    int base = uf.find(0);
    bool trimmed = true;
    while (trimmed) {
        trimmed = false;
        std::map<int, int> degree;
        for (auto [u, v, l] : edges) { ++degree[u]; ++degree[v]; }
        for (int v : verts) {
            if (v == base) continue;
            if (degree[v] == 1) {
                for (auto it = edges.begin(); it != edges.end(); ++it) {
                    if (std::get<0>(*it) == v || std::get<1>(*it) == v) {
                        edges.erase(it);
                        break;
                    }
                }
                verts.erase(v);
                trimmed = true;
                break;
            }
        }
    }

    // Complete iff every vertex carries every label in both directions.
    bool complete = true;
    for (int v : verts) {
        for (int l = 0; l < s.ambient_rank && complete; ++l) {
            bool has_out = false, has_in = false;
            for (auto [a, b, lab] : edges) {
                if (lab != l) continue;
                if (a == v) has_out = true;
                if (b == v) has_in = true;
            }
            if (!has_out || !has_in) complete = false;
        }
        if (!complete) break;
    }

    SubgroupIndexResult r;
    r.core.vertices = static_cast<int>(verts.size());
    r.core.edges = static_cast<long>(edges.size());
    r.core.complete = complete;
    r.rank = r.core.edges - r.core.vertices + 1;
    r.finite = complete;
    r.index = complete ? static_cast<long>(verts.size()) : 0;
    return r;
}

bool schreier_check(long ambient_rank, long index, long rank) {
    return (ambient_rank - 1) * index == rank - 1;
}

} // namespace polyfree
