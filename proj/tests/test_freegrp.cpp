#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "polyfree/freegrp.hpp"

using namespace polyfree;

namespace {

FreeWord fw(std::initializer_list<std::pair<int, int>> letters) {
    std::vector<FreeLetter> raw;
    for (auto [s, sg] : letters) raw.push_back({s, sg});
    return free_reduce(raw);
}

} // namespace

TEST_CASE("free reduction") {
    CHECK(fw({{0, 1}, {0, -1}, {1, 1}}) == fw({{1, 1}}));
    CHECK(fw({}).empty());
    CHECK(fw({{0, 1}, {1, 1}, {1, -1}, {0, 1}}) == fw({{0, 1}, {0, 1}}));

    SUBCASE("idempotent, length non-increasing") {
        std::mt19937 rng(11);
        std::uniform_int_distribution<int> sym(0, 2), coin(0, 1);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<FreeLetter> raw;
            for (int i = 0; i < 8; ++i) raw.push_back({sym(rng), coin(rng) ? 1 : -1});
            FreeWord r = free_reduce(raw);
            CHECK(r.length() <= 8);
            CHECK(free_reduce(r.letters) == r);
        }
    }
}

TEST_CASE("conjugation") {
    FreeWord d = fw({{0, 1}});
    FreeWord a = fw({{1, 1}});
    CHECK(conjugate(d, a) == fw({{1, -1}, {0, 1}, {1, 1}}));
    CHECK(conjugate(d, FreeWord{}) == d);
    CHECK(conjugate(a, a) == a);
}

TEST_CASE("subgroup index via folding") {
    SUBCASE("single generator of F2 has infinite index") {
        SubgroupPresentation p{2, {fw({{0, 1}})}};
        auto r = subgroup_index(p);
        CHECK(!r.finite);
        CHECK(r.rank == 1);
    }
    SUBCASE("index two subgroup {a, bab^-1, b^2}") {
        SubgroupPresentation p{2, {fw({{0, 1}}),
                                   fw({{1, 1}, {0, 1}, {1, -1}}),
                                   fw({{1, 1}, {1, 1}})}};
        auto r = subgroup_index(p);
        CHECK(r.finite);
        CHECK(r.index == 2);
        CHECK(r.rank == 3);
        CHECK(schreier_check(2, r.index, r.rank));
    }
    SUBCASE("the whole group") {
        SubgroupPresentation p{2, {fw({{0, 1}}), fw({{1, 1}})}};
        auto r = subgroup_index(p);
        CHECK(r.finite);
        CHECK(r.index == 1);
        CHECK(r.rank == 2);
    }
    SUBCASE("trivial subgroup") {
        SubgroupPresentation p{2, {}};
        auto r = subgroup_index(p);
        CHECK(!r.finite);
        CHECK(r.rank == 0);
    }
}

TEST_CASE("schreier_check arithmetic") {
    CHECK(schreier_check(2, 2, 3));
    CHECK(schreier_check(1, 1, 1));
    CHECK(!schreier_check(2, 2, 4));
}

TEST_CASE("folding is generator-order independent") {
    std::vector<FreeWord> gens{fw({{0, 1}}),
                               fw({{1, 1}, {0, 1}, {1, -1}}),
                               fw({{1, 1}, {1, 1}})};
    for (std::size_t shift = 0; shift < gens.size(); ++shift) {
        std::vector<FreeWord> rotated(gens.begin() + shift, gens.end());
        rotated.insert(rotated.end(), gens.begin(), gens.begin() + shift);
        SubgroupPresentation p{2, rotated};
        auto r = subgroup_index(p);
        CHECK(r.finite);
        CHECK(r.index == 2);
        CHECK(r.rank == 3);
    }
}

TEST_CASE("random finite-index kernels satisfy the Schreier identity") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> mod(2, 5);
    for (int trial = 0; trial < 20; ++trial) {
        int m = mod(rng);
        std::uniform_int_distribution<int> im(0, m - 1);
        int sa, sb;
        do {
            sa = im(rng);
            sb = im(rng);
        } while (std::gcd(std::gcd(sa, sb), m) != 1);
        // kernel generators from coset representatives a^0 .. hand-rolled BFS
        std::vector<FreeWord> reps(m);
        std::vector<bool> have(m, false);
        have[0] = true;
        std::vector<int> frontier{0};
        while (!frontier.empty()) {
            std::vector<int> next;
            for (int v : frontier) {
                int idx = 0;
                for (int img : {sa, sb}) {
                    int w = (v + img) % m;
                    if (!have[w]) {
                        have[w] = true;
                        reps[w] = fw_multiply(reps[v], fw({{idx, 1}}));
                        next.push_back(w);
                    }
                    ++idx;
                }
            }
            frontier = std::move(next);
        }
        SubgroupPresentation p;
        p.ambient_rank = 2;
        for (int v = 0; v < m; ++v) {
            int idx = 0;
            for (int img : {sa, sb}) {
                int w = (v + img) % m;
                FreeWord gen =
                    fw_multiply(fw_multiply(reps[v], fw({{idx, 1}})), fw_invert(reps[w]));
                if (!gen.empty()) p.generators.push_back(gen);
                ++idx;
            }
        }
        auto r = subgroup_index(p);
        CHECK(r.finite);
        CHECK(r.index == m);
        CHECK(schreier_check(2, r.index, r.rank));
    }
}
