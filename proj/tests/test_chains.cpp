#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <set>

#include "pindraw/chains.hpp"
#include "pindraw/cover.hpp"
#include "pindraw/rng.hpp"

using namespace pindraw;

TEST_CASE("generic_direction picks the first safe slope") {
    PointSet distinct_x{{{rat(0), rat(5)}, {rat(1), rat(5)}, {rat(2), rat(9)}}};
    auto d1 = generic_direction(distinct_x);
    CHECK(d1.dx == rat(1));
    CHECK(d1.dy == rat(0));

    PointSet vertical{{{rat(0), rat(0)}, {rat(0), rat(1)}}};
    auto d2 = generic_direction(vertical);
    CHECK(d2.dy == rat(1));  // t = 0 is the only forbidden integer

    Rng rng(99);
    std::set<std::pair<long, long>> coords;
    while (coords.size() < 10)
        coords.insert({rng.next_in(-20, 20), rng.next_in(-20, 20)});
    PointSet random;
    for (auto [x, y] : coords) random.points.push_back({rat(x), rat(y)});
    auto d = generic_direction(random);
    std::set<Rat> proj;
    for (const auto& p : random.points) proj.insert(project(d, p));
    CHECK(proj.size() == random.points.size());
}

TEST_CASE("alternating_runs follows the greedy trace") {
    auto one = alternating_runs({1, 2, 3, 4});
    CHECK(one.r() == 1);
    CHECK(one.parts[0] == std::vector<int>{1, 2, 3, 4});

    auto two = alternating_runs({3, 2, 1});
    REQUIRE(two.r() == 2);
    CHECK(two.parts[0] == std::vector<int>{3});
    CHECK(two.parts[1] == std::vector<int>{2, 1});

    auto three = alternating_runs({2, 4, 1, 3});
    REQUIRE(three.r() == 3);
    CHECK(three.parts[0] == std::vector<int>{2, 4});
    CHECK(three.parts[1] == std::vector<int>{1});
    CHECK(three.parts[2] == std::vector<int>{3});

    CHECK_THROWS_AS(alternating_runs({1, 1, 2}), NotAPermutationError);
    CHECK_THROWS_AS(alternating_runs({0, 1, 2}), NotAPermutationError);
}

TEST_CASE("alternating_runs properties on random permutations") {
    Rng rng(4);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(rng.next_below(40));
        auto perm = rng.permutation(n);
        for (int& x : perm) ++x;  // 1-based
        auto cp = alternating_runs(perm);
        // Concatenating parts restores the sequence.
        std::vector<int> cat;
        for (const auto& part : cp.parts)
            cat.insert(cat.end(), part.begin(), part.end());
        CHECK(cat == perm);
        // Direction flags hold strictly.
        for (int i = 0; i < cp.r(); ++i) {
            const auto& part = cp.parts[static_cast<std::size_t>(i)];
            for (std::size_t j = 0; j + 1 < part.size(); ++j) {
                if (cp.increasing_part(i))
                    CHECK(part[j] < part[j + 1]);
                else
                    CHECK(part[j] > part[j + 1]);
            }
        }
        // r is at most the interior extremum count plus two.
        CHECK(cp.r() <= interior_extrema(perm) + 2);
    }
}

TEST_CASE("interleave_empty doubles the partition") {
    auto a = interleave_empty({{1, 2, 3}});
    REQUIRE(a.r() == 2);
    CHECK(a.parts[1].empty());

    auto b = interleave_empty({{1}, {2}, {3}});
    CHECK(b.r() == 6);

    auto c = interleave_empty({});
    CHECK(c.r() == 0);
}

TEST_CASE("min_common_chain_cover on known instances") {
    // k=1 identity: a single chain.
    auto c1 = min_common_chain_cover({{0, 1, 2, 3, 4}});
    CHECK(c1.size() == 1);

    // k=1, values (2,1,4,3): minimum equals the longest strictly decreasing
    // subsequence, which is 2.
    auto c2 = min_common_chain_cover({{1, 0, 3, 2}});
    CHECK(c2.size() == 2);

    // k=2 identity + reverse: nothing is comparable, n singletons.
    auto c3 = min_common_chain_cover({{0, 1, 2, 3}, {3, 2, 1, 0}});
    CHECK(c3.size() == 4);

    CHECK_THROWS_AS(min_common_chain_cover({{0, 1}, {0, 1, 2}}),
                    LengthMismatchError);
    CHECK_THROWS_AS(min_common_chain_cover({{0, 0, 1}}), NotAPermutationError);
}

TEST_CASE("cover parts are increasing in every permutation") {
    Rng rng(12);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_below(30));
        const int k = 1 + static_cast<int>(rng.next_below(3));
        std::vector<std::vector<int>> perms;
        for (int j = 0; j < k; ++j) perms.push_back(rng.permutation(n));
        auto parts = min_common_chain_cover(perms);
        auto pos = [&](int j, int x) {
            for (int i = 0; i < n; ++i)
                if (perms[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] == x)
                    return i;
            return -1;
        };
        int covered = 0;
        for (const auto& part : parts) {
            covered += static_cast<int>(part.size());
            for (std::size_t i = 0; i + 1 < part.size(); ++i)
                for (int j = 0; j < k; ++j)
                    CHECK(pos(j, part[i]) < pos(j, part[i + 1]));
        }
        CHECK(covered == n);
    }
}

TEST_CASE("brute_force_cover matches the matching-based cover") {
    CHECK(brute_force_cover({{0, 1, 2, 3, 4}}) == 1);
    CHECK(brute_force_cover({{2, 0, 1}}) == 2);  // decreasing pair forces 2
    CHECK_THROWS_AS(brute_force_cover({{0, 1, 2, 3, 4, 5, 6, 7, 8}}),
                    TooLargeError);

    Rng rng(77);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 7;
        std::vector<std::vector<int>> perms{rng.permutation(n),
                                            rng.permutation(n)};
        CHECK(static_cast<int>(min_common_chain_cover(perms).size()) ==
              brute_force_cover(perms));
    }
}

TEST_CASE("adding a permutation never shrinks the cover") {
    Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 10;
        std::vector<std::vector<int>> perms{rng.permutation(n)};
        auto r1 = min_common_chain_cover(perms).size();
        perms.push_back(rng.permutation(n));
        auto r2 = min_common_chain_cover(perms).size();
        CHECK(r2 >= r1);
    }
}

TEST_CASE("k=2 cover equals longest decreasing subsequence") {
    Rng rng(8);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 3 + static_cast<int>(rng.next_below(60));
        auto pi = rng.permutation(n);
        std::vector<int> identity(static_cast<std::size_t>(n));
        std::iota(identity.begin(), identity.end(), 0);
        auto parts = min_common_chain_cover({identity, pi});
        CHECK(static_cast<int>(parts.size()) ==
              longest_decreasing_subsequence(pi));
    }
}
