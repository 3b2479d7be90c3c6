#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "pindraw/embed.hpp"
#include "pindraw/generate.hpp"
#include "pindraw/graph.hpp"
#include "pindraw/hamilton.hpp"
#include "pindraw/rational.hpp"
#include "pindraw/triangulate.hpp"

namespace pindraw {

enum class Page { Top, Bottom };

struct Arc {
    Edge edge;
    Page page;
    Rat lo, hi;  // spine coordinates, lo < hi
};

// Two-page topological book embedding; each edge is one arc, or two arcs on
// opposite pages sharing a spine crossing at a non-integer coordinate.
struct BookEmbedding {
    std::vector<int> spine;  // spine[i] = vertex at position i
    std::vector<Arc> arcs;

    std::vector<int> positions() const {
        std::vector<int> pos(spine.size());
        for (std::size_t i = 0; i < spine.size(); ++i)
            pos[static_cast<std::size_t>(spine[i])] = static_cast<int>(i);
        return pos;
    }
};

enum class BookError {
    SpineOrderInvalid,
    EdgeCoverMismatch,
    EdgeSplitTwice,
    CrossingArcsOnPage,
};

inline const char* to_string(BookError e) {
    switch (e) {
        case BookError::SpineOrderInvalid: return "SpineOrderInvalid";
        case BookError::EdgeCoverMismatch: return "EdgeCoverMismatch";
        case BookError::EdgeSplitTwice: return "EdgeSplitTwice";
        case BookError::CrossingArcsOnPage: return "CrossingArcsOnPage";
    }
    return "?";
}

inline std::optional<BookError> validate_book(const PlanarGraph& g,
                                              const BookEmbedding& be) {
    if (static_cast<int>(be.spine.size()) != g.n)
        return BookError::SpineOrderInvalid;
    std::vector<char> seen(static_cast<std::size_t>(g.n), 0);
    for (int v : be.spine) {
        if (v < 0 || v >= g.n || seen[static_cast<std::size_t>(v)])
            return BookError::SpineOrderInvalid;
        seen[static_cast<std::size_t>(v)] = 1;
    }
    auto pos = be.positions();

    std::map<Edge, std::vector<const Arc*>> by_edge;
    for (const Arc& a : be.arcs) {
        if (a.lo >= a.hi) return BookError::EdgeCoverMismatch;
        by_edge[a.edge].push_back(&a);
    }
    if (by_edge.size() != g.edges.size()) return BookError::EdgeCoverMismatch;
    for (const Edge& e : g.edges) {
        auto it = by_edge.find(e);
        if (it == by_edge.end()) return BookError::EdgeCoverMismatch;
        const auto& arcs = it->second;
        const Rat pu = rat(pos[static_cast<std::size_t>(e.first)]);
        const Rat pv = rat(pos[static_cast<std::size_t>(e.second)]);
        const Rat lo = std::min(pu, pv), hi = std::max(pu, pv);
        if (arcs.size() == 1) {
            if (arcs[0]->lo != lo || arcs[0]->hi != hi)
                return BookError::EdgeCoverMismatch;
        } else if (arcs.size() == 2) {
            // Two arcs on opposite pages sharing exactly one crossing
            // coordinate; the remaining endpoints are the vertex positions.
            // (The crossing need not lie between the endpoints: an edge may
            // hook around past both before crossing the spine.)
            const Arc *a = arcs[0], *b = arcs[1];
            if (a->page == b->page) return BookError::EdgeSplitTwice;
            std::vector<Rat> shared;
            for (const Rat& x : {a->lo, a->hi})
                if (x == b->lo || x == b->hi) shared.push_back(x);
            if (shared.size() != 1) return BookError::EdgeSplitTwice;
            const Rat& c = shared[0];
            if (c.get_den() == 1) return BookError::EdgeSplitTwice;
            if (c <= 0 || c >= g.n) return BookError::EdgeSplitTwice;
            std::vector<Rat> rest;
            for (const Rat& x : {a->lo, a->hi, b->lo, b->hi})
                if (x != c) rest.push_back(x);
            std::sort(rest.begin(), rest.end());
            if (rest.size() != 2 || rest[0] != lo || rest[1] != hi)
                return BookError::EdgeSplitTwice;
        } else {
            return BookError::EdgeSplitTwice;
        }
    }
    // Same-page arcs must not strictly interleave.
    for (std::size_t i = 0; i < be.arcs.size(); ++i) {
        for (std::size_t j = i + 1; j < be.arcs.size(); ++j) {
            const Arc &a = be.arcs[i], &b = be.arcs[j];
            if (a.page != b.page) continue;
            if ((a.lo < b.lo && b.lo < a.hi && a.hi < b.hi) ||
                (b.lo < a.lo && a.lo < b.hi && b.hi < a.hi))
                return BookError::CrossingArcsOnPage;
        }
    }
    return std::nullopt;
}

namespace detail {

enum class EdgeClass { Protected, PieceProtected, Free };

// Subdivision-based augmentation to a 4-connected triangulation; edges of
// the input triangulation are subdivided at most once each.
struct Augmenter {
    RotationSystem rot;
    std::set<Edge> edges;
    std::map<Edge, EdgeClass> cls;
    std::map<int, Edge> crossing_of;  // dummy vertex -> drawn edge it splits
    std::set<Edge> drawn;
    int next_label;

    Augmenter(const TriangulateResult& t, const std::set<Edge>& drawn_edges)
        : rot(t.rot),
          edges(t.graph.edges.begin(), t.graph.edges.end()),
          drawn(drawn_edges),
          next_label(t.graph.n) {
        for (const Edge& e : edges) cls[e] = EdgeClass::Protected;
    }

    int subdivide(Edge e) {
        const auto [u, v] = e;
        const int p = rot.succ(v, u);
        const int q = rot.succ(u, v);
        const int x = next_label++;
        rot.replace(u, v, x);
        rot.replace(v, u, x);
        rot.insert_after(p, v, x);
        rot.insert_after(q, u, x);
        rot.rot.push_back({u, p, v, q});

        const EdgeClass piece_cls = cls[e] == EdgeClass::Protected
                                        ? EdgeClass::PieceProtected
                                        : EdgeClass::Free;
        edges.erase(e);
        cls.erase(e);
        for (Edge ne : {make_edge(u, x), make_edge(x, v)}) {
            edges.insert(ne);
            cls[ne] = piece_cls;
        }
        for (Edge ne : {make_edge(x, p), make_edge(x, q)}) {
            edges.insert(ne);
            cls[ne] = EdgeClass::Free;
        }
        if (drawn.count(e)) crossing_of[x] = e;
        return x;
    }

    std::pair<int, int> apexes(Edge e) const {
        return {rot.succ(e.second, e.first), rot.succ(e.first, e.second)};
    }

    std::vector<std::array<int, 3>> separating_triangles() const {
        std::set<std::array<int, 3>> faces;
        for (const auto& w : face_walks(rot)) {
            if (w.size() != 3) throw InternalError("non-triangular face");
            std::array<int, 3> t{w[0], w[1], w[2]};
            std::sort(t.begin(), t.end());
            faces.insert(t);
        }
        std::vector<std::vector<int>> adj(rot.rot.size());
        for (const Edge& e : edges) {
            adj[static_cast<std::size_t>(e.first)].push_back(e.second);
            adj[static_cast<std::size_t>(e.second)].push_back(e.first);
        }
        std::vector<std::array<int, 3>> result;
        for (const Edge& e : edges) {
            const auto [u, v] = e;
            std::set<int> nu(adj[static_cast<std::size_t>(u)].begin(),
                             adj[static_cast<std::size_t>(u)].end());
            for (int w : adj[static_cast<std::size_t>(v)]) {
                if (w <= v || !nu.count(w)) continue;
                if (u >= v || v >= w) continue;  // count each triple once
                std::array<int, 3> t{u, v, w};
                if (!faces.count(t)) result.push_back(t);
            }
        }
        std::sort(result.begin(), result.end());
        return result;
    }

    void four_connect() {
        const int budget = 20 * next_label + 1000;
        for (int iter = 0; iter < budget; ++iter) {
            auto seps = separating_triangles();
            if (seps.empty()) return;
            Edge fallback{-1, -1};
            Edge pick{-1, -1};
            for (const auto& t : seps) {
                for (Edge e : {make_edge(t[0], t[1]), make_edge(t[0], t[2]),
                               make_edge(t[1], t[2])}) {
                    if (cls.at(e) == EdgeClass::PieceProtected) continue;
                    if (fallback.first == -1) fallback = e;
                    auto [p, q] = apexes(e);
                    if (!edges.count(make_edge(p, q))) {
                        pick = e;
                        break;
                    }
                }
                if (pick.first != -1) break;
            }
            if (pick.first != -1) {
                subdivide(pick);
            } else if (fallback.first != -1) {
                // Creates at most the triangle (x, p, q); splitting the free
                // chord (x, p) removes it without creating another.
                auto [p, q] = apexes(fallback);
                (void)q;
                int x = subdivide(fallback);
                subdivide(make_edge(x, p));
            } else {
                throw InternalError("separating triangle with no subdividable edge");
            }
        }
        throw InternalError("four_connect budget exceeded");
    }

    std::vector<std::vector<int>> adjacency() const {
        std::vector<std::vector<int>> adj(rot.rot.size());
        for (const Edge& e : edges) {
            adj[static_cast<std::size_t>(e.first)].push_back(e.second);
            adj[static_cast<std::size_t>(e.second)].push_back(e.first);
        }
        for (auto& a : adj) std::sort(a.begin(), a.end());
        return adj;
    }
};

// Deterministic book embedding of a (connected or not) planar graph.
// Returns nullopt iff the graph is non-planar.
inline std::optional<BookEmbedding> book_embed_deterministic(
    const PlanarGraph& g) {
    const int n = g.n;
    BookEmbedding be;
    if (n == 0) return be;
    if (n == 1) {
        be.spine = {0};
        return be;
    }
    if (n == 2) {
        be.spine = {0, 1};
        if (!g.edges.empty())
            be.arcs.push_back({g.edges[0], Page::Bottom, rat(0), rat(1)});
        return be;
    }

    // Connect components, then embed and triangulate.
    PlanarGraph work = g;
    {
        auto comp = component_ids(g);
        const int c = 1 + *std::max_element(comp.begin(), comp.end());
        if (c > 1) {
            std::vector<int> rep(static_cast<std::size_t>(c), -1);
            for (int v = 0; v < n; ++v)
                if (rep[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])] == -1)
                    rep[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])] = v;
            std::vector<Edge> edges = work.edges;
            for (int i = 1; i < c; ++i)
                edges.push_back(make_edge(rep[0], rep[static_cast<std::size_t>(i)]));
            work = make_graph(n, std::move(edges));
        }
    }
    auto rs = planar_embed(work);
    if (!rs) return std::nullopt;
    auto tri = triangulate(work, *rs);

    Augmenter aug(tri, {g.edges.begin(), g.edges.end()});
    aug.four_connect();

    std::vector<int> cycle = hamiltonian_cycle(aug.adjacency());

    // Open the cycle at vertex 0, choosing the direction with the smaller
    // second label.
    {
        const std::size_t L = cycle.size();
        std::size_t z = 0;
        while (cycle[z] != 0) ++z;
        std::rotate(cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(z),
                    cycle.end());
        if (cycle[L - 1] < cycle[1])
            std::reverse(cycle.begin() + 1, cycle.end());
    }
    const std::size_t L = cycle.size();
    std::vector<std::size_t> cycle_index(static_cast<std::size_t>(aug.next_label));
    for (std::size_t i = 0; i < L; ++i)
        cycle_index[static_cast<std::size_t>(cycle[i])] = i;

    // Spine coordinates: originals at integers, crossing dummies spread
    // evenly inside their gap; other dummies are dropped.
    std::vector<Rat> coord(static_cast<std::size_t>(aug.next_label), rat(0));
    {
        be.spine.clear();
        std::vector<std::vector<int>> gap_dummies;
        std::vector<int> originals;
        for (std::size_t i = 0; i < L; ++i) {
            int v = cycle[i];
            if (v < n) {
                originals.push_back(v);
                gap_dummies.push_back({});
            } else if (aug.crossing_of.count(v)) {
                gap_dummies.back().push_back(v);
            }
        }
        be.spine = originals;
        for (std::size_t k = 0; k < originals.size(); ++k) {
            coord[static_cast<std::size_t>(originals[k])] = rat(static_cast<long>(k));
            const auto& ds = gap_dummies[k];
            for (std::size_t t = 0; t < ds.size(); ++t)
                coord[static_cast<std::size_t>(ds[t])] =
                    rat(static_cast<long>(k)) +
                    Rat(static_cast<long>(t + 1),
                        static_cast<long>(ds.size() + 1));
        }
    }

    // Side of each non-cycle edge relative to the cycle: scan the rotation
    // at each endpoint from the outgoing cycle edge to the incoming one.
    std::set<Edge> on_cycle;
    for (std::size_t i = 0; i < L; ++i)
        on_cycle.insert(make_edge(cycle[i], cycle[(i + 1) % L]));
    auto side_of = [&](int w, int z) -> int {
        const int nxt = cycle[(cycle_index[static_cast<std::size_t>(w)] + 1) % L];
        const int prv = cycle[(cycle_index[static_cast<std::size_t>(w)] + L - 1) % L];
        int cur = nxt;
        while (true) {
            cur = aug.rot.succ(w, cur);
            if (cur == prv) return 1;
            if (cur == z) return 0;
        }
    };
    auto chord_side = [&](int a, int b) -> int {
        const int sa = side_of(a, b);
        const int sb = side_of(b, a);
        if (sa != sb) throw InternalError("inconsistent chord side");
        return sa;
    };
    auto page_of_piece = [&](int a, int b) -> std::optional<Page> {
        if (on_cycle.count(make_edge(a, b))) return std::nullopt;  // free
        return chord_side(a, b) == 0 ? Page::Top : Page::Bottom;
    };

    // Arcs of the drawn edges.
    std::map<Edge, int> dummy_of;
    for (const auto& [x, e] : aug.crossing_of) dummy_of[e] = x;
    for (const Edge& e : g.edges) {
        auto it = dummy_of.find(e);
        if (it == dummy_of.end()) {
            std::optional<Page> p = page_of_piece(e.first, e.second);
            const Rat a = coord[static_cast<std::size_t>(e.first)];
            const Rat b = coord[static_cast<std::size_t>(e.second)];
            be.arcs.push_back({e, p.value_or(Page::Bottom), std::min(a, b),
                               std::max(a, b)});
        } else {
            const int x = it->second;
            std::optional<Page> p1 = page_of_piece(e.first, x);
            std::optional<Page> p2 = page_of_piece(x, e.second);
            const Rat cu = coord[static_cast<std::size_t>(e.first)];
            const Rat cx = coord[static_cast<std::size_t>(x)];
            const Rat cv = coord[static_cast<std::size_t>(e.second)];
            if (p1 && p2 && *p1 != *p2) {
                be.arcs.push_back({e, *p1, std::min(cu, cx), std::max(cu, cx)});
                be.arcs.push_back({e, *p2, std::min(cx, cv), std::max(cx, cv)});
            } else if (p1 && p2) {
                // Both pieces hang on the same side of the cycle: the edge
                // only touches the spine at x. Any arc interleaving the
                // direct span would interleave one of the pieces, so a
                // single arc is safe and the touch point disappears.
                be.arcs.push_back({e, *p1, std::min(cu, cv), std::max(cu, cv)});
            } else if (!p1 && !p2) {
                // Cycle runs u -> x -> v, so the span contains no events.
                be.arcs.push_back({e, Page::Bottom, std::min(cu, cv),
                                   std::max(cu, cv)});
            } else {
                const Page fixed = p1 ? *p1 : *p2;
                const Page other =
                    fixed == Page::Top ? Page::Bottom : Page::Top;
                const Page q1 = p1 ? *p1 : other;
                const Page q2 = p2 ? *p2 : other;
                be.arcs.push_back({e, q1, std::min(cu, cx), std::max(cu, cx)});
                be.arcs.push_back({e, q2, std::min(cx, cv), std::max(cx, cv)});
            }
        }
    }
    return be;
}

}  // namespace detail

// Book embedding with a seed-randomized spine: relabel uniformly at random,
// run the deterministic construction, revert the labels (the spine order of
// a uniformly random graph is then uniformly random).
inline std::optional<BookEmbedding> book_embed(const PlanarGraph& g,
                                               std::uint64_t seed) {
    auto [h, perm] = relabel_random(g, seed);
    auto be_h = detail::book_embed_deterministic(h);
    if (!be_h) return std::nullopt;
    auto inv = inverse_permutation(perm);
    BookEmbedding be;
    be.spine.reserve(be_h->spine.size());
    for (int v : be_h->spine)
        be.spine.push_back(inv[static_cast<std::size_t>(v)]);
    be.arcs.reserve(be_h->arcs.size());
    for (const Arc& a : be_h->arcs)
        be.arcs.push_back({make_edge(inv[static_cast<std::size_t>(a.edge.first)],
                                     inv[static_cast<std::size_t>(a.edge.second)]),
                           a.page, a.lo, a.hi});
    return be;
}

// Spine events: every vertex plus every crossing point, in coordinate order.
struct GammaEvent {
    Rat coord;
    int vertex = -1;            // -1 for crossing events
    Edge crossing_edge{-1, -1};
    std::vector<Edge> top;      // left-to-right attachment order
    std::vector<Edge> bottom;
};

struct GammaSequence {
    std::vector<GammaEvent> events;
};

// Left-to-right attachment order at an event: arcs arriving from the left
// come first, then departures, each sorted by the far endpoint descending
// (the outermost arc of a departure bundle attaches leftmost; nesting of
// the page closures depends on exactly this order).
inline GammaSequence gamma_sequence(const BookEmbedding& be) {
    GammaSequence gs;
    const int n = static_cast<int>(be.spine.size());
    std::map<Rat, GammaEvent> events;
    for (int i = 0; i < n; ++i) {
        GammaEvent ev;
        ev.coord = rat(i);
        ev.vertex = be.spine[static_cast<std::size_t>(i)];
        events[ev.coord] = ev;
    }
    std::map<Edge, std::vector<const Arc*>> by_edge;
    for (const Arc& a : be.arcs) by_edge[a.edge].push_back(&a);
    for (const auto& [e, arcs] : by_edge) {
        if (arcs.size() < 2) continue;
        // The crossing is the coordinate the two arcs share.
        Rat c;
        bool found = false;
        for (const Rat& x : {arcs[0]->lo, arcs[0]->hi})
            if (x == arcs[1]->lo || x == arcs[1]->hi) {
                c = x;
                found = true;
            }
        if (!found) throw InternalError("crossing arcs share no coordinate");
        GammaEvent ev;
        ev.coord = c;
        ev.crossing_edge = e;
        events[c] = ev;
    }

    struct End {
        Rat opposite;
        Edge edge;
    };
    std::map<Rat, std::vector<End>> top_ends, bottom_ends;
    for (const Arc& a : be.arcs) {
        auto& side = a.page == Page::Top ? top_ends : bottom_ends;
        side[a.lo].push_back({a.hi, a.edge});
        side[a.hi].push_back({a.lo, a.edge});
    }
    auto order_ends = [](const Rat& here, std::vector<End>& ends) {
        std::sort(ends.begin(), ends.end(), [&](const End& a, const End& b) {
            const bool da = a.opposite > here, db = b.opposite > here;
            if (da != db) return db;         // arrivals first
            return a.opposite > b.opposite;  // far endpoint descending
        });
    };
    for (auto& [c, ev] : events) {
        auto it = top_ends.find(c);
        if (it != top_ends.end()) {
            order_ends(c, it->second);
            for (const End& e : it->second) ev.top.push_back(e.edge);
        }
        auto ib = bottom_ends.find(c);
        if (ib != bottom_ends.end()) {
            order_ends(c, ib->second);
            for (const End& e : ib->second) ev.bottom.push_back(e.edge);
        }
    }
    for (auto& [c, ev] : events) gs.events.push_back(std::move(ev));
    return gs;
}

}  // namespace pindraw
