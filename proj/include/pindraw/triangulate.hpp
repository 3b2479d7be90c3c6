#pragma once

#include <algorithm>
#include <set>
#include <tuple>
#include <vector>

#include "pindraw/embed.hpp"
#include "pindraw/graph.hpp"

namespace pindraw {

struct TriangulateResult {
    PlanarGraph graph;
    RotationSystem rot;
    std::vector<Edge> added_edges;
};

// Adds chords until every face walk has length 3. The embedding is edited
// in place through local rotation surgery, so existing edges stay put.
inline TriangulateResult triangulate(const PlanarGraph& g,
                                     const RotationSystem& rs) {
    if (g.n < 3) throw DegenerateInputError("triangulate requires n >= 3");

    PlanarGraph out = g;
    RotationSystem rot = rs;
    std::vector<Edge> added;
    std::set<Edge> present(out.edges.begin(), out.edges.end());

    auto add_chord = [&](const std::vector<int>& walk, std::size_t i,
                         std::size_t j) {
        const std::size_t L = walk.size();
        const int a = walk[i], b = walk[j];
        const int a_prev = walk[(i + L - 1) % L], a_next = walk[(i + 1) % L];
        const int b_prev = walk[(j + L - 1) % L], b_next = walk[(j + 1) % L];
        // succ_a(a_prev) becomes b, succ_a(b) stays a_next (and likewise at b),
        // which is exactly an insertion directly after the anchor neighbor.
        (void)a_next;
        (void)b_next;
        rot.insert_after(a, a_prev, b);
        rot.insert_after(b, b_prev, a);
        Edge e = make_edge(a, b);
        present.insert(e);
        added.push_back(e);
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& walk : face_walks(rot)) {
            const std::size_t L = walk.size();
            if (L <= 3) continue;
            bool done = false;
            for (std::size_t i = 0; i < L && !done; ++i) {
                for (std::size_t d = 2; d + 1 < L && !done; ++d) {
                    const std::size_t j = (i + d) % L;
                    const int a = walk[i], b = walk[j];
                    if (a == b || present.count(make_edge(a, b))) continue;
                    add_chord(walk, i, j);
                    done = true;
                }
            }
            if (!done)
                throw InternalError("unchordable face of length > 3");
            changed = true;
            break;  // retrace faces after each insertion
        }
    }

    std::vector<Edge> all(out.edges);
    all.insert(all.end(), added.begin(), added.end());
    out = make_graph(out.n, std::move(all));
    if (!euler_ok(out, rot)) throw InternalError("triangulation broke Euler");
    return {std::move(out), std::move(rot), std::move(added)};
}

}  // namespace pindraw
