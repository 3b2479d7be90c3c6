#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "pindraw/generate.hpp"
#include "pindraw/graph.hpp"
#include "pindraw/rational.hpp"

namespace pindraw {

// Direction along which all mapped points project to distinct values.
struct Direction {
    Rat dx, dy;
};

inline Rat project(const Direction& d, const Point2& p) {
    return d.dx * p.x + d.dy * p.y;
}

// delta = (1, t) with t the smallest non-negative integer outside the
// finite set of slopes that would tie some pair of points.
inline Direction generic_direction(const PointSet& ps) {
    std::set<Rat> forbidden;
    const auto& pts = ps.points;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            const Rat dy = pts[j].y - pts[i].y;
            if (sgn(dy) == 0) continue;  // distinct x, no tie possible
            forbidden.insert((pts[i].x - pts[j].x) / dy);
        }
    }
    long t = 0;
    while (forbidden.count(rat(t))) ++t;
    return {rat(1), rat(t)};
}

// Ordered parts; part i (0-based) is a chain w.r.t. the forward order when
// i is even and the reversed order when i is odd.
struct ChainPartition {
    std::vector<std::vector<int>> parts;

    int r() const { return static_cast<int>(parts.size()); }
    bool increasing_part(int i) const { return i % 2 == 0; }
};

// Greedy alternating-runs partition of a permutation alpha over 1..n:
// the first part is the longest increasing prefix, the next the longest
// decreasing continuation, and so on. Values are returned per part.
inline ChainPartition alternating_runs(const std::vector<int>& alpha) {
    const int n = static_cast<int>(alpha.size());
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int a : alpha) {
        if (a < 1 || a > n || seen[static_cast<std::size_t>(a)])
            throw NotAPermutationError("alternating_runs expects a permutation of 1..n");
        seen[static_cast<std::size_t>(a)] = 1;
    }
    ChainPartition cp;
    std::size_t i = 0;
    bool increasing = true;
    while (i < alpha.size()) {
        std::size_t j = i + 1;
        while (j < alpha.size() &&
               (increasing ? alpha[j - 1] < alpha[j] : alpha[j - 1] > alpha[j]))
            ++j;
        cp.parts.push_back(
            std::vector<int>(alpha.begin() + static_cast<std::ptrdiff_t>(i),
                             alpha.begin() + static_cast<std::ptrdiff_t>(j)));
        i = j;
        increasing = !increasing;
    }
    return cp;
}

// Interior positions that are local extrema of alpha.
inline int interior_extrema(const std::vector<int>& alpha) {
    int count = 0;
    for (std::size_t i = 1; i + 1 < alpha.size(); ++i) {
        const bool up = alpha[i] > alpha[i - 1] && alpha[i] > alpha[i + 1];
        const bool down = alpha[i] < alpha[i - 1] && alpha[i] < alpha[i + 1];
        if (up || down) ++count;
    }
    return count;
}

// Alternate the parts with empty reversed-order parts: [V1,{},V2,{},...].
// Every input part must already be an increasing chain; the empty set is a
// chain with respect to both orders, so validity is preserved and the size
// at most doubles.
inline ChainPartition interleave_empty(const std::vector<std::vector<int>>& parts) {
    ChainPartition cp;
    for (const auto& part : parts) {
        cp.parts.push_back(part);
        cp.parts.push_back({});
    }
    return cp;
}

}  // namespace pindraw
