#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pindraw {

using Edge = std::pair<int, int>;  // normalized u < v

struct PlanarGraph {
    int n = 0;
    std::vector<Edge> edges;  // sorted, unique, u < v

    bool has_edge(int u, int v) const {
        if (u > v) std::swap(u, v);
        return std::binary_search(edges.begin(), edges.end(), Edge{u, v});
    }
};

inline Edge make_edge(int u, int v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

// Normalizes edge order; duplicates and loops are kept so validate can
// report them.
inline PlanarGraph make_graph(int n, std::vector<Edge> edges) {
    for (auto& [u, v] : edges)
        if (u > v) std::swap(u, v);
    std::sort(edges.begin(), edges.end());
    return PlanarGraph{n, std::move(edges)};
}

enum class GraphError { SelfLoop, DuplicateEdge, TooManyEdges, BadLabel };

inline const char* to_string(GraphError e) {
    switch (e) {
        case GraphError::SelfLoop: return "SelfLoop";
        case GraphError::DuplicateEdge: return "DuplicateEdge";
        case GraphError::TooManyEdges: return "TooManyEdges";
        case GraphError::BadLabel: return "BadLabel";
    }
    return "?";
}

inline std::optional<GraphError> validate(const PlanarGraph& g) {
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const auto& [u, v] = g.edges[i];
        if (u < 0 || v >= g.n) return GraphError::BadLabel;
        if (u == v) return GraphError::SelfLoop;
        if (i > 0 && g.edges[i] == g.edges[i - 1]) return GraphError::DuplicateEdge;
    }
    // Necessary planarity bound, checked eagerly.
    if (g.n >= 3 &&
        g.edges.size() > static_cast<std::size_t>(3 * g.n - 6))
        return GraphError::TooManyEdges;
    if (g.n < 3 && g.edges.size() > static_cast<std::size_t>(g.n == 2 ? 1 : 0))
        return GraphError::TooManyEdges;
    return std::nullopt;
}

inline std::vector<std::vector<int>> adjacency(const PlanarGraph& g) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.n));
    for (const auto& [u, v] : g.edges) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    return adj;
}

inline std::vector<int> component_ids(const PlanarGraph& g) {
    auto adj = adjacency(g);
    std::vector<int> comp(static_cast<std::size_t>(g.n), -1);
    int c = 0;
    std::vector<int> stack;
    for (int s = 0; s < g.n; ++s) {
        if (comp[static_cast<std::size_t>(s)] != -1) continue;
        stack.push_back(s);
        comp[static_cast<std::size_t>(s)] = c;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[static_cast<std::size_t>(v)]) {
                if (comp[static_cast<std::size_t>(w)] == -1) {
                    comp[static_cast<std::size_t>(w)] = c;
                    stack.push_back(w);
                }
            }
        }
        ++c;
    }
    return comp;
}

inline int component_count(const PlanarGraph& g) {
    auto ids = component_ids(g);
    return ids.empty() ? 0 : 1 + *std::max_element(ids.begin(), ids.end());
}

// Errors shared across modules; names follow the operations' contracts.
struct TooLargeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DegenerateInputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotAPermutationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct LengthMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct SizeMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct InvalidPartitionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct MappingMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace pindraw
