#pragma once

#include <cassert>
#include <optional>
#include <variant>

#include "pindraw/rational.hpp"

namespace pindraw {

enum class Orientation { Left, Right, Collinear };

// Sign of the exact cross product (b-a) x (c-a).
inline Orientation orient(const Point2& a, const Point2& b, const Point2& c) {
    const int s = sgn(cross(b - a, c - a));
    if (s > 0) return Orientation::Left;
    if (s < 0) return Orientation::Right;
    return Orientation::Collinear;
}

struct Segment {
    Point2 a;
    Point2 b;

    bool degenerate() const { return a == b; }
};

// p assumed collinear with s; true iff p lies on the closed segment.
inline bool on_segment_collinear(const Segment& s, const Point2& p) {
    const Rat lox = s.a.x <= s.b.x ? s.a.x : s.b.x;
    const Rat hix = s.a.x <= s.b.x ? s.b.x : s.a.x;
    const Rat loy = s.a.y <= s.b.y ? s.a.y : s.b.y;
    const Rat hiy = s.a.y <= s.b.y ? s.b.y : s.a.y;
    return lox <= p.x && p.x <= hix && loy <= p.y && p.y <= hiy;
}

struct NoIntersection {};
struct PointIntersection {
    Point2 p;
};
struct OverlapIntersection {};  // collinear overlap of positive length

using IntersectResult =
    std::variant<NoIntersection, PointIntersection, OverlapIntersection>;

// Exact classification of the intersection of two closed segments.
inline IntersectResult intersect_segments(const Segment& s, const Segment& t) {
    const Point2 r = s.b - s.a;
    const Point2 q = t.b - t.a;
    const Rat denom = cross(r, q);
    const Point2 diff = t.a - s.a;

    if (sgn(denom) == 0) {
        if (sgn(cross(diff, r)) != 0) return NoIntersection{};
        // Collinear: project onto the dominant axis of r (or q if s degenerate).
        const Point2 axis = s.degenerate() ? q : r;
        auto coord = [&](const Point2& p) -> Rat {
            return sgn(axis.x) != 0 ? p.x : p.y;
        };
        Rat s0 = coord(s.a), s1 = coord(s.b), t0 = coord(t.a), t1 = coord(t.b);
        if (s0 > s1) std::swap(s0, s1);
        if (t0 > t1) std::swap(t0, t1);
        const Rat lo = s0 >= t0 ? s0 : t0;
        const Rat hi = s1 <= t1 ? s1 : t1;
        if (lo > hi) return NoIntersection{};
        if (lo < hi) return OverlapIntersection{};
        // Single shared point.
        Point2 p = s.a;
        if (coord(s.b) == lo) p = s.b;
        if (coord(t.a) == lo) p = t.a;
        if (coord(t.b) == lo) p = t.b;
        // Reconstruct the point exactly from whichever endpoint matched.
        for (const Point2* cand : {&s.a, &s.b, &t.a, &t.b}) {
            if (coord(*cand) == lo) {
                p = *cand;
                break;
            }
        }
        return PointIntersection{p};
    }

    const Rat u = cross(diff, q) / denom;
    const Rat v = cross(diff, r) / denom;
    if (u < 0 || u > 1 || v < 0 || v > 1) return NoIntersection{};
    Point2 p{s.a.x + u * r.x, s.a.y + u * r.y};
    return PointIntersection{p};
}

// True iff the closed segments meet at any point other than the declared
// shared endpoint. A collinear overlap always counts.
inline bool segments_intersect(const Segment& s, const Segment& t,
                               const std::optional<Point2>& sharing = {}) {
    const IntersectResult res = intersect_segments(s, t);
    if (std::holds_alternative<NoIntersection>(res)) return false;
    if (std::holds_alternative<OverlapIntersection>(res)) return true;
    const Point2& p = std::get<PointIntersection>(res).p;
    if (sharing && p == *sharing) return false;
    return true;
}

}  // namespace pindraw
