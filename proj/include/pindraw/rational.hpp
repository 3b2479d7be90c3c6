#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pindraw {

// Exact rational scalar. mpq_class keeps values canonical (reduced,
// positive denominator), which the serialization below relies on.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// "num/den" with the "/den" part omitted when den == 1.
inline std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::optional<Rat> rat_from_string(const std::string& s) {
    if (s.empty()) return std::nullopt;
    try {
        Rat q;
        if (q.set_str(s, 10) != 0) return std::nullopt;
        if (q.get_den() == 0) return std::nullopt;
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

struct Point2 {
    Rat x;
    Rat y;

    bool operator==(const Point2& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point2& o) const { return !(*this == o); }
};

inline Point2 operator-(const Point2& a, const Point2& b) {
    return {a.x - b.x, a.y - b.y};
}

inline Rat cross(const Point2& a, const Point2& b) {
    return a.x * b.y - a.y * b.x;
}

inline Rat dot(const Point2& a, const Point2& b) {
    return a.x * b.x + a.y * b.y;
}

inline double to_double(const Rat& q) { return q.get_d(); }

}  // namespace pindraw
