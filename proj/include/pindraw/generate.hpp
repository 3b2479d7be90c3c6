#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "pindraw/embed.hpp"
#include "pindraw/geometry.hpp"
#include "pindraw/graph.hpp"
#include "pindraw/rng.hpp"

namespace pindraw {

enum class GraphModel { Triangulation, Subgraph };
enum class PointShape { Convex, Grid, Random };

struct PointSet {
    std::vector<Point2> points;
};

namespace detail {

// Random maximal planar graph: stacked insertions followed by random
// diagonal flips to spread the degree distribution.
struct GrowingTriangulation {
    RotationSystem rot;
    std::set<Edge> edges;

    GrowingTriangulation() {
        rot.rot = {{1, 2}, {2, 0}, {0, 1}};
        edges = {{0, 1}, {0, 2}, {1, 2}};
    }

    void insert_in_face(int u, int v) {
        const int p = rot.succ(v, u);
        const int x = static_cast<int>(rot.rot.size());
        rot.insert_after(u, p, x);
        rot.insert_after(v, u, x);
        rot.insert_after(p, v, x);
        rot.rot.push_back({u, p, v});
        edges.insert(make_edge(u, x));
        edges.insert(make_edge(v, x));
        edges.insert(make_edge(p, x));
    }

    bool flip(int u, int v) {
        if (!edges.count(make_edge(u, v))) return false;
        const int p = rot.succ(v, u);
        const int q = rot.succ(u, v);
        if (p == q || edges.count(make_edge(p, q))) return false;
        rot.insert_after(p, v, q);
        rot.insert_after(q, u, p);
        rot.remove(u, v);
        rot.remove(v, u);
        edges.erase(make_edge(u, v));
        edges.insert(make_edge(p, q));
        return true;
    }

    // Random directed edge, weighted by degree (fine for an approximate
    // sampler).
    std::pair<int, int> random_dart(Rng& rng) const {
        while (true) {
            int u = static_cast<int>(rng.next_below(rot.rot.size()));
            const auto& r = rot.rot[static_cast<std::size_t>(u)];
            if (r.empty()) continue;
            int v = r[rng.next_below(r.size())];
            return {u, v};
        }
    }
};

}  // namespace detail

// Approximate random planar graph sampler; deterministic per seed. The
// triangulation model returns a maximal planar graph on n vertices; the
// subgraph model then deletes each edge independently with probability 1/2.
inline PlanarGraph gen_planar(int n, GraphModel model, std::uint64_t seed) {
    if (n < 1) throw DegenerateInputError("gen_planar requires n >= 1");
    Rng rng(seed);
    PlanarGraph g;
    if (n == 1) {
        g = PlanarGraph{1, {}};
    } else if (n == 2) {
        g = make_graph(2, {{0, 1}});
    } else {
        detail::GrowingTriangulation t;
        while (static_cast<int>(t.rot.rot.size()) < n) {
            auto [u, v] = t.random_dart(rng);
            t.insert_in_face(u, v);
        }
        const int flips = 10 * n;
        for (int i = 0; i < flips; ++i) {
            auto [u, v] = t.random_dart(rng);
            t.flip(u, v);
        }
        g = make_graph(n, {t.edges.begin(), t.edges.end()});
    }
    if (model == GraphModel::Subgraph) {
        std::vector<Edge> kept;
        for (const Edge& e : g.edges)
            if (rng.next_bool()) kept.push_back(e);
        g = make_graph(n, std::move(kept));
    }
    return g;
}

// Isomorphic copy under a uniformly random permutation; the permutation maps
// old label -> new label and is returned for reversion.
inline std::pair<PlanarGraph, std::vector<int>> relabel_random(
    const PlanarGraph& g, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<int> perm = rng.permutation(g.n);
    std::vector<Edge> edges;
    edges.reserve(g.edges.size());
    for (const auto& [u, v] : g.edges)
        edges.push_back(make_edge(perm[static_cast<std::size_t>(u)],
                                  perm[static_cast<std::size_t>(v)]));
    return {make_graph(g.n, std::move(edges)), std::move(perm)};
}

inline PlanarGraph apply_relabel(const PlanarGraph& g,
                                 const std::vector<int>& perm) {
    std::vector<Edge> edges;
    edges.reserve(g.edges.size());
    for (const auto& [u, v] : g.edges)
        edges.push_back(make_edge(perm[static_cast<std::size_t>(u)],
                                  perm[static_cast<std::size_t>(v)]));
    return make_graph(g.n, std::move(edges));
}

inline std::vector<int> inverse_permutation(const std::vector<int>& perm) {
    std::vector<int> inv(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i)
        inv[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
    return inv;
}

// Exhaustive labeled-planar-graph oracle: every labeled simple planar graph
// on {0..n-1}, exactly once. O(2^(n(n-1)/2)) with a planarity test per
// candidate -- strictly a small-n testing device.
inline void enumerate_planar_small(
    int n, const std::function<void(const PlanarGraph&)>& emit) {
    if (n > 8) throw TooLargeError("enumerate_planar_small requires n <= 8");
    if (n < 0) throw DegenerateInputError("n >= 0 required");
    std::vector<Edge> all_pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all_pairs.push_back({u, v});
    const std::size_t m = all_pairs.size();
    for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (1ULL << i)) edges.push_back(all_pairs[i]);
        PlanarGraph g = make_graph(n, std::move(edges));
        if (validate(g)) continue;  // edge bound prunes most non-planar masks
        if (planar_embed(g)) emit(g);
    }
}

inline std::uint64_t count_planar_small(int n) {
    std::uint64_t c = 0;
    enumerate_planar_small(n, [&](const PlanarGraph&) { ++c; });
    return c;
}

// True iff every point is a vertex of the convex hull (no duplicates, no
// point inside or on an edge of the hull).
inline bool convex_position(const std::vector<Point2>& pts) {
    const std::size_t n = pts.size();
    if (n <= 2) {
        return n < 2 || !(pts[0] == pts[1]);
    }
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return pts[a].x < pts[b].x || (pts[a].x == pts[b].x && pts[a].y < pts[b].y);
    });
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (pts[idx[i]] == pts[idx[i + 1]]) return false;
    auto build = [&](bool upper) {
        std::vector<std::size_t> hull;
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t i = idx[upper ? n - 1 - k : k];
            while (hull.size() >= 2) {
                Orientation o = orient(pts[hull[hull.size() - 2]],
                                       pts[hull.back()], pts[i]);
                if (o == Orientation::Right) break;
                hull.pop_back();  // left turns and collinear points are not strict hull vertices
            }
            hull.push_back(i);
        }
        return hull;
    };
    auto lower = build(false), upper = build(true);
    return lower.size() + upper.size() - 2 == n;
}

// n distinct rational points; convex shape lies on a parabola, grid uses
// distinct integer cells, random rejects duplicates.
inline PointSet gen_points(int n, PointShape shape, std::uint64_t seed) {
    if (n < 1) throw DegenerateInputError("gen_points requires n >= 1");
    Rng rng(seed);
    PointSet ps;
    switch (shape) {
        case PointShape::Convex: {
            std::set<long> xs;
            while (static_cast<int>(xs.size()) < n)
                xs.insert(rng.next_in(-3L * n, 3L * n));
            for (long x : xs) ps.points.push_back({rat(x), rat(x) * rat(x)});
            if (!convex_position(ps.points))
                throw InternalError("convex generator not in convex position");
            break;
        }
        case PointShape::Grid: {
            long side = 1;
            while (side * side < n) ++side;
            side += 1;
            std::vector<std::pair<long, long>> cells;
            for (long x = 0; x < side; ++x)
                for (long y = 0; y < side; ++y) cells.push_back({x, y});
            rng.shuffle(cells);
            for (int i = 0; i < n; ++i)
                ps.points.push_back({rat(cells[static_cast<std::size_t>(i)].first),
                                     rat(cells[static_cast<std::size_t>(i)].second)});
            break;
        }
        case PointShape::Random: {
            std::set<std::pair<long, long>> seen;
            const long box = 10L * n * n + 10;
            while (static_cast<int>(seen.size()) < n)
                seen.insert({rng.next_in(0, box), rng.next_in(0, box)});
            for (const auto& [x, y] : seen) ps.points.push_back({rat(x), rat(y)});
            break;
        }
    }
    return ps;
}

}  // namespace pindraw
