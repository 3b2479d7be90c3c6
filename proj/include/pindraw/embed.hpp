#pragma once

#include <algorithm>
#include <cassert>
#include <optional>
#include <set>
#include <vector>

#include "pindraw/graph.hpp"

namespace pindraw {

// Combinatorial embedding: cyclic neighbor order per vertex. Face tracing
// follows next(u->v) = (v, successor of u in rot[v]).
struct RotationSystem {
    std::vector<std::vector<int>> rot;

    int succ(int v, int u) const {
        const auto& r = rot[static_cast<std::size_t>(v)];
        for (std::size_t i = 0; i < r.size(); ++i)
            if (r[i] == u) return r[(i + 1) % r.size()];
        throw InternalError("rotation successor: edge not present");
    }

    // Insert x into rot[v] directly after neighbor `after`.
    void insert_after(int v, int after, int x) {
        auto& r = rot[static_cast<std::size_t>(v)];
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (r[i] == after) {
                r.insert(r.begin() + static_cast<std::ptrdiff_t>(i) + 1, x);
                return;
            }
        }
        throw InternalError("rotation insert: anchor not present");
    }

    void replace(int v, int oldnb, int newnb) {
        auto& r = rot[static_cast<std::size_t>(v)];
        for (auto& w : r)
            if (w == oldnb) {
                w = newnb;
                return;
            }
        throw InternalError("rotation replace: neighbor not present");
    }

    void remove(int v, int nb) {
        auto& r = rot[static_cast<std::size_t>(v)];
        auto it = std::find(r.begin(), r.end(), nb);
        if (it == r.end()) throw InternalError("rotation remove: neighbor not present");
        r.erase(it);
    }
};

// All face walks; each directed edge appears on exactly one walk. Walks are
// vertex sequences read cyclically (may repeat vertices at cut vertices).
inline std::vector<std::vector<int>> face_walks(const RotationSystem& rs) {
    const int n = static_cast<int>(rs.rot.size());
    std::set<std::pair<int, int>> used;
    std::vector<std::vector<int>> walks;
    for (int u = 0; u < n; ++u) {
        for (int v : rs.rot[static_cast<std::size_t>(u)]) {
            if (used.count({u, v})) continue;
            std::vector<int> walk;
            int a = u, b = v;
            while (!used.count({a, b})) {
                used.insert({a, b});
                walk.push_back(a);
                int c = rs.succ(b, a);
                a = b;
                b = c;
            }
            walks.push_back(std::move(walk));
        }
    }
    return walks;
}

// Isolated vertices bound a face of their own in the traced count.
inline int traced_face_count(const PlanarGraph& g, const RotationSystem& rs) {
    int isolated = 0;
    for (const auto& r : rs.rot)
        if (r.empty()) ++isolated;
    return static_cast<int>(face_walks(rs).size()) + isolated;
}

// Face count with all components sharing one outer face, so that
// n - m + F = 1 + C holds.
inline int face_count(const PlanarGraph& g, const RotationSystem& rs) {
    return traced_face_count(g, rs) - (component_count(g) - 1);
}

inline bool euler_ok(const PlanarGraph& g, const RotationSystem& rs) {
    const int c = component_count(g);
    return g.n - static_cast<int>(g.edges.size()) + face_count(g, rs) == 1 + c;
}

namespace detail {

// Tarjan block decomposition: returns per-block edge lists.
inline std::vector<std::vector<Edge>> blocks(const PlanarGraph& g) {
    auto adj = adjacency(g);
    std::vector<int> num(static_cast<std::size_t>(g.n), -1),
        low(static_cast<std::size_t>(g.n), 0);
    std::vector<Edge> stack;
    std::vector<std::vector<Edge>> result;
    int counter = 0;

    struct Frame {
        int v, parent;
        std::size_t idx;
    };
    for (int s = 0; s < g.n; ++s) {
        if (num[static_cast<std::size_t>(s)] != -1) continue;
        std::vector<Frame> frames{{s, -1, 0}};
        num[static_cast<std::size_t>(s)] = low[static_cast<std::size_t>(s)] = counter++;
        while (!frames.empty()) {
            Frame& f = frames.back();
            auto& nbrs = adj[static_cast<std::size_t>(f.v)];
            if (f.idx < nbrs.size()) {
                int w = nbrs[f.idx++];
                if (w == f.parent) continue;
                if (num[static_cast<std::size_t>(w)] == -1) {
                    stack.push_back(make_edge(f.v, w));
                    num[static_cast<std::size_t>(w)] =
                        low[static_cast<std::size_t>(w)] = counter++;
                    frames.push_back({w, f.v, 0});
                } else if (num[static_cast<std::size_t>(w)] <
                           num[static_cast<std::size_t>(f.v)]) {
                    stack.push_back(make_edge(f.v, w));
                    low[static_cast<std::size_t>(f.v)] = std::min(
                        low[static_cast<std::size_t>(f.v)],
                        num[static_cast<std::size_t>(w)]);
                }
            } else {
                int v = f.v, parent = f.parent;
                frames.pop_back();
                if (parent != -1) {
                    low[static_cast<std::size_t>(parent)] =
                        std::min(low[static_cast<std::size_t>(parent)],
                                 low[static_cast<std::size_t>(v)]);
                    if (low[static_cast<std::size_t>(v)] >=
                        num[static_cast<std::size_t>(parent)]) {
                        std::vector<Edge> block;
                        Edge top = make_edge(parent, v);
                        while (true) {
                            Edge e = stack.back();
                            stack.pop_back();
                            block.push_back(e);
                            if (e == top) break;
                        }
                        result.push_back(std::move(block));
                    }
                }
            }
        }
    }
    return result;
}

// One bridge/chord fragment relative to the embedded subgraph.
struct Fragment {
    std::vector<int> attachments;     // on H, sorted
    std::vector<int> interior;        // off H (empty for a chord)
    Edge chord{-1, -1};               // valid when interior is empty
};

// DMP planarity + embedding for one biconnected block. Vertices are global
// labels; `edges` are the block's edges. On success appends each block
// vertex's local rotation into rot_parts[v].
inline bool embed_block(int n_total, const std::vector<Edge>& edges,
                        std::vector<std::vector<std::vector<int>>>& rot_parts) {
    if (edges.size() == 1) {
        auto [u, v] = edges[0];
        rot_parts[static_cast<std::size_t>(u)].push_back({v});
        rot_parts[static_cast<std::size_t>(v)].push_back({u});
        return true;
    }

    std::vector<int> verts;
    for (auto [u, v] : edges) {
        verts.push_back(u);
        verts.push_back(v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_total));
    for (auto [u, v] : edges) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    for (int v : verts)
        std::sort(adj[static_cast<std::size_t>(v)].begin(),
                  adj[static_cast<std::size_t>(v)].end());

    // Initial cycle: walk never-backtracking until a path vertex repeats
    // (biconnected, so every vertex has degree >= 2).
    std::vector<int> cycle;
    {
        std::vector<int> pos_on_path(static_cast<std::size_t>(n_total), -1);
        std::vector<int> path{verts[0]};
        pos_on_path[static_cast<std::size_t>(verts[0])] = 0;
        int prev = -1;
        while (true) {
            const int v = path.back();
            int next = -1;
            for (int w : adj[static_cast<std::size_t>(v)]) {
                if (w == prev) continue;
                next = w;
                break;
            }
            if (next == -1) throw InternalError("degree-1 vertex in block");
            if (pos_on_path[static_cast<std::size_t>(next)] != -1) {
                cycle.assign(path.begin() +
                                 pos_on_path[static_cast<std::size_t>(next)],
                             path.end());
                break;
            }
            pos_on_path[static_cast<std::size_t>(next)] =
                static_cast<int>(path.size());
            path.push_back(next);
            prev = v;
        }
    }

    std::vector<char> in_h(static_cast<std::size_t>(n_total), 0);
    std::set<Edge> h_edges;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        in_h[static_cast<std::size_t>(cycle[i])] = 1;
        h_edges.insert(make_edge(cycle[i], cycle[(i + 1) % cycle.size()]));
    }
    std::vector<std::vector<int>> faces{cycle,
                                        {cycle.rbegin(), cycle.rend()}};

    const std::size_t m_block = edges.size();
    while (h_edges.size() < m_block) {
        // Fragments: chords first, then components off H.
        std::vector<Fragment> frags;
        for (auto [u, v] : edges) {
            if (in_h[static_cast<std::size_t>(u)] && in_h[static_cast<std::size_t>(v)] &&
                !h_edges.count(make_edge(u, v))) {
                Fragment f;
                f.attachments = {std::min(u, v), std::max(u, v)};
                f.chord = make_edge(u, v);
                frags.push_back(std::move(f));
            }
        }
        std::vector<int> comp(static_cast<std::size_t>(n_total), -1);
        int comp_count = 0;
        for (int s : verts) {
            if (in_h[static_cast<std::size_t>(s)] || comp[static_cast<std::size_t>(s)] != -1)
                continue;
            std::vector<int> stack{s};
            comp[static_cast<std::size_t>(s)] = comp_count;
            std::vector<int> members{s};
            std::set<int> attach;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int w : adj[static_cast<std::size_t>(v)]) {
                    if (in_h[static_cast<std::size_t>(w)]) {
                        attach.insert(w);
                    } else if (comp[static_cast<std::size_t>(w)] == -1) {
                        comp[static_cast<std::size_t>(w)] = comp_count;
                        members.push_back(w);
                        stack.push_back(w);
                    }
                }
            }
            Fragment f;
            f.attachments.assign(attach.begin(), attach.end());
            f.interior = std::move(members);
            frags.push_back(std::move(f));
            ++comp_count;
        }
        if (frags.empty()) throw InternalError("no fragment but H incomplete");

        // Admissible faces per fragment.
        std::size_t chosen = frags.size();
        std::size_t chosen_count = SIZE_MAX;
        std::vector<std::size_t> chosen_faces;
        for (std::size_t fi = 0; fi < frags.size(); ++fi) {
            std::vector<std::size_t> adm;
            for (std::size_t k = 0; k < faces.size(); ++k) {
                std::set<int> fv(faces[k].begin(), faces[k].end());
                bool ok = true;
                for (int a : frags[fi].attachments)
                    if (!fv.count(a)) {
                        ok = false;
                        break;
                    }
                if (ok) adm.push_back(k);
            }
            if (adm.empty()) return false;  // NonPlanar
            if (adm.size() < chosen_count) {
                chosen_count = adm.size();
                chosen = fi;
                chosen_faces = adm;
            }
        }
        const Fragment& frag = frags[chosen];

        // Path between two attachments through the fragment.
        std::vector<int> path;
        if (frag.interior.empty()) {
            path = {frag.chord.first, frag.chord.second};
        } else {
            int a = frag.attachments[0];
            // BFS from a through interior vertices to another attachment.
            std::vector<int> prev(static_cast<std::size_t>(n_total), -2);
            std::vector<int> queue{a};
            prev[static_cast<std::size_t>(a)] = -1;
            int goal = -1;
            for (std::size_t qi = 0; qi < queue.size() && goal == -1; ++qi) {
                int v = queue[qi];
                for (int w : adj[static_cast<std::size_t>(v)]) {
                    if (prev[static_cast<std::size_t>(w)] != -2) continue;
                    if (in_h[static_cast<std::size_t>(w)]) {
                        if (v != a && w != a) {
                            prev[static_cast<std::size_t>(w)] = v;
                            goal = w;
                            break;
                        }
                        continue;
                    }
                    if (comp[static_cast<std::size_t>(w)] !=
                        comp[static_cast<std::size_t>(frag.interior[0])])
                        continue;
                    prev[static_cast<std::size_t>(w)] = v;
                    queue.push_back(w);
                }
            }
            if (goal == -1) throw InternalError("fragment path not found");
            for (int x = goal; x != -1; x = prev[static_cast<std::size_t>(x)])
                path.push_back(x);
            std::reverse(path.begin(), path.end());
        }

        // Embed path into the first admissible face of the chosen fragment.
        const std::size_t face_idx = chosen_faces[0];
        std::vector<int> walk = faces[face_idx];
        const int a = path.front(), b = path.back();
        std::size_t ia = SIZE_MAX, ib = SIZE_MAX;
        for (std::size_t i = 0; i < walk.size(); ++i) {
            if (walk[i] == a && ia == SIZE_MAX) ia = i;
            if (walk[i] == b && ib == SIZE_MAX) ib = i;
        }
        if (ia == SIZE_MAX || ib == SIZE_MAX)
            throw InternalError("attachment not on admissible face");

        const std::size_t L = walk.size();
        std::vector<int> f1, f2;
        for (std::size_t i = ia;; i = (i + 1) % L) {
            f1.push_back(walk[i]);
            if (i == ib) break;
        }
        for (std::size_t k = path.size() - 2; k >= 1; --k)
            f1.push_back(path[k]);
        for (std::size_t i = ib;; i = (i + 1) % L) {
            f2.push_back(walk[i]);
            if (i == ia) break;
        }
        for (std::size_t k = 1; k + 1 < path.size(); ++k) f2.push_back(path[k]);

        faces[face_idx] = std::move(f1);
        faces.push_back(std::move(f2));

        for (std::size_t k = 0; k + 1 < path.size(); ++k)
            h_edges.insert(make_edge(path[k], path[k + 1]));
        for (std::size_t k = 1; k + 1 < path.size(); ++k)
            in_h[static_cast<std::size_t>(path[k])] = 1;
    }

    // Derive local rotations from face walks: succ_v(u) = w for each
    // consecutive u -> v -> w.
    std::vector<std::vector<std::pair<int, int>>> succ_pairs(
        static_cast<std::size_t>(n_total));
    for (const auto& walk : faces) {
        const std::size_t L = walk.size();
        for (std::size_t i = 0; i < L; ++i) {
            int u = walk[i], v = walk[(i + 1) % L], w = walk[(i + 2) % L];
            succ_pairs[static_cast<std::size_t>(v)].push_back({u, w});
        }
    }
    for (int v : verts) {
        auto& pairs = succ_pairs[static_cast<std::size_t>(v)];
        std::vector<int> order;
        int cur = pairs[0].first;
        for (std::size_t step = 0; step < pairs.size(); ++step) {
            order.push_back(cur);
            int nxt = -1;
            for (auto [u, w] : pairs)
                if (u == cur) {
                    nxt = w;
                    break;
                }
            if (nxt == -1) throw InternalError("broken rotation cycle");
            cur = nxt;
        }
        if (cur != pairs[0].first ||
            order.size() != adj[static_cast<std::size_t>(v)].size())
            throw InternalError("rotation is not a single cycle");
        rot_parts[static_cast<std::size_t>(v)].push_back(std::move(order));
    }
    return true;
}

}  // namespace detail

// Planarity test with embedding (Demoucron-Malgrange-Pertuiset per block).
// nullopt means the graph admits no planar embedding.
inline std::optional<RotationSystem> planar_embed(const PlanarGraph& g) {
    if (auto err = validate(g)) {
        if (*err == GraphError::TooManyEdges) return std::nullopt;
        throw std::invalid_argument(std::string("invalid graph: ") +
                                    to_string(*err));
    }
    std::vector<std::vector<std::vector<int>>> rot_parts(
        static_cast<std::size_t>(g.n));
    for (const auto& block : detail::blocks(g))
        if (!detail::embed_block(g.n, block, rot_parts)) return std::nullopt;

    RotationSystem rs;
    rs.rot.resize(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v)
        for (const auto& part : rot_parts[static_cast<std::size_t>(v)])
            rs.rot[static_cast<std::size_t>(v)].insert(
                rs.rot[static_cast<std::size_t>(v)].end(), part.begin(),
                part.end());
    if (!euler_ok(g, rs)) throw InternalError("embedding fails Euler check");
    return rs;
}

}  // namespace pindraw
