#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "pindraw/graph.hpp"

namespace pindraw {

// Hopcroft-Karp maximum matching. Left/right vertex sets both 0..n-1;
// adj[u] lists right neighbors in increasing order for determinism.
class BipartiteMatcher {
public:
    explicit BipartiteMatcher(std::vector<std::vector<int>> adj)
        : adj_(std::move(adj)), n_(static_cast<int>(adj_.size())) {}

    // Returns match_left: for each left vertex the matched right vertex or -1.
    std::vector<int> solve() {
        match_l_.assign(static_cast<std::size_t>(n_), -1);
        match_r_.assign(static_cast<std::size_t>(n_), -1);
        while (bfs()) {
            for (int u = 0; u < n_; ++u)
                if (match_l_[static_cast<std::size_t>(u)] == -1) dfs(u);
        }
        return match_l_;
    }

private:
    static constexpr int kInf = INT32_MAX;

    bool bfs() {
        std::vector<int> queue;
        dist_.assign(static_cast<std::size_t>(n_), kInf);
        for (int u = 0; u < n_; ++u) {
            if (match_l_[static_cast<std::size_t>(u)] == -1) {
                dist_[static_cast<std::size_t>(u)] = 0;
                queue.push_back(u);
            }
        }
        bool found = false;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const int u = queue[qi];
            for (int v : adj_[static_cast<std::size_t>(u)]) {
                const int w = match_r_[static_cast<std::size_t>(v)];
                if (w == -1) {
                    found = true;
                } else if (dist_[static_cast<std::size_t>(w)] == kInf) {
                    dist_[static_cast<std::size_t>(w)] =
                        dist_[static_cast<std::size_t>(u)] + 1;
                    queue.push_back(w);
                }
            }
        }
        return found;
    }

    bool dfs(int u) {
        for (int v : adj_[static_cast<std::size_t>(u)]) {
            const int w = match_r_[static_cast<std::size_t>(v)];
            if (w == -1 || (dist_[static_cast<std::size_t>(w)] ==
                                dist_[static_cast<std::size_t>(u)] + 1 &&
                            dfs(w))) {
                match_l_[static_cast<std::size_t>(u)] = v;
                match_r_[static_cast<std::size_t>(v)] = u;
                return true;
            }
        }
        dist_[static_cast<std::size_t>(u)] = kInf;
        return false;
    }

    std::vector<std::vector<int>> adj_;
    int n_;
    std::vector<int> match_l_, match_r_, dist_;
};

namespace detail {

inline void check_perms(const std::vector<std::vector<int>>& perms) {
    if (perms.empty()) throw LengthMismatchError("need at least one permutation");
    const std::size_t n = perms[0].size();
    for (const auto& p : perms) {
        if (p.size() != n) throw LengthMismatchError("permutation lengths differ");
        std::vector<char> seen(n, 0);
        for (int x : p) {
            if (x < 0 || static_cast<std::size_t>(x) >= n || seen[static_cast<std::size_t>(x)])
                throw NotAPermutationError("not a permutation of 0..n-1");
            seen[static_cast<std::size_t>(x)] = 1;
        }
    }
}

// pos[j][x] = position of element x in permutation j.
inline std::vector<std::vector<int>> positions_of(
    const std::vector<std::vector<int>>& perms) {
    std::vector<std::vector<int>> pos(perms.size());
    for (std::size_t j = 0; j < perms.size(); ++j) {
        pos[j].assign(perms[j].size(), 0);
        for (std::size_t i = 0; i < perms[j].size(); ++i)
            pos[j][static_cast<std::size_t>(perms[j][i])] = static_cast<int>(i);
    }
    return pos;
}

}  // namespace detail

// Minimum partition of 0..n-1 into sets that are increasing subsequences of
// every permutation simultaneously: each part, listed in increasing value
// order, occurs in increasing position order in every perm (the value order
// acts as an implicit extra permutation). Computed as a minimum chain cover
// of the dominance order via Dilworth's reduction to maximum bipartite
// matching. Parts are emitted in value order, sorted by first element.
inline std::vector<std::vector<int>> min_common_chain_cover(
    const std::vector<std::vector<int>>& perms) {
    detail::check_perms(perms);
    const int n = static_cast<int>(perms[0].size());
    auto pos = detail::positions_of(perms);
    auto dominated = [&](int x, int y) {
        if (x >= y) return false;
        for (const auto& p : pos)
            if (p[static_cast<std::size_t>(x)] >= p[static_cast<std::size_t>(y)])
                return false;
        return true;
    };
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (dominated(x, y)) adj[static_cast<std::size_t>(x)].push_back(y);
    auto match = BipartiteMatcher(std::move(adj)).solve();

    std::vector<char> is_head(static_cast<std::size_t>(n), 1);
    for (int u = 0; u < n; ++u)
        if (match[static_cast<std::size_t>(u)] != -1)
            is_head[static_cast<std::size_t>(match[static_cast<std::size_t>(u)])] = 0;
    std::vector<std::vector<int>> parts;
    for (int h = 0; h < n; ++h) {
        if (!is_head[static_cast<std::size_t>(h)]) continue;
        std::vector<int> chain;
        for (int x = h; x != -1; x = match[static_cast<std::size_t>(x)])
            chain.push_back(x);
        parts.push_back(std::move(chain));
    }
    std::sort(parts.begin(), parts.end());
    return parts;
}

// Exhaustive oracle: exact minimum number of common chains by subset DP.
inline int brute_force_cover(const std::vector<std::vector<int>>& perms) {
    detail::check_perms(perms);
    const int n = static_cast<int>(perms[0].size());
    if (n > 8) throw TooLargeError("brute_force_cover requires n <= 8");
    if (n == 0) return 0;
    auto pos = detail::positions_of(perms);

    const int full = (1 << n) - 1;
    std::vector<char> is_chain(static_cast<std::size_t>(full) + 1, 0);
    for (int mask = 1; mask <= full; ++mask) {
        std::vector<int> elems;  // in increasing value order
        for (int x = 0; x < n; ++x)
            if (mask & (1 << x)) elems.push_back(x);
        bool ok = true;
        for (std::size_t i = 0; ok && i + 1 < elems.size(); ++i)
            for (const auto& p : pos)
                if (p[static_cast<std::size_t>(elems[i])] >
                    p[static_cast<std::size_t>(elems[i + 1])]) {
                    ok = false;
                    break;
                }
        is_chain[static_cast<std::size_t>(mask)] = ok;
    }
    std::vector<int> best(static_cast<std::size_t>(full) + 1, n + 1);
    best[0] = 0;
    for (int mask = 1; mask <= full; ++mask) {
        // Always cover the lowest uncovered element to cut symmetry.
        const int low = mask & -mask;
        for (int sub = mask; sub; sub = (sub - 1) & mask) {
            if (!(sub & low) || !is_chain[static_cast<std::size_t>(sub)]) continue;
            best[static_cast<std::size_t>(mask)] =
                std::min(best[static_cast<std::size_t>(mask)],
                         best[static_cast<std::size_t>(mask ^ sub)] + 1);
        }
    }
    return best[static_cast<std::size_t>(full)];
}

// Longest strictly decreasing subsequence length via patience sorting;
// the independent cross-check for the k = 2 chain cover.
inline int longest_decreasing_subsequence(const std::vector<int>& seq) {
    std::vector<int> piles;  // pile tops of the LIS of the reversed order
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
        auto p = std::lower_bound(piles.begin(), piles.end(), *it);
        if (p == piles.end())
            piles.push_back(*it);
        else
            *p = *it;
    }
    return static_cast<int>(piles.size());
}

}  // namespace pindraw
