#pragma once

#include <algorithm>
#include <vector>

#include "pindraw/graph.hpp"

namespace pindraw {

// Hamiltonian cycle by backtracking with degree and connectivity pruning.
// Intended for 4-connected planar triangulations, where a cycle always
// exists (Tutte) and the pruning keeps the search shallow in practice.
class HamiltonianSearch {
public:
    explicit HamiltonianSearch(const std::vector<std::vector<int>>& adj)
        : adj_(adj), n_(static_cast<int>(adj.size())) {}

    std::vector<int> find_cycle() {
        if (n_ == 3) return {0, 1, 2};
        visited_.assign(static_cast<std::size_t>(n_), 0);
        path_.clear();
        path_.push_back(0);
        visited_[0] = 1;
        nodes_ = 0;
        if (!extend()) throw InternalError("hamiltonian cycle not found");
        return path_;
    }

private:
    bool feasible() const {
        const int s = 0;
        const int t = path_.back();
        // Every unvisited vertex needs two usable connections; s needs one.
        int s_free = 0;
        for (int w : adj_[static_cast<std::size_t>(s)])
            if (!visited_[static_cast<std::size_t>(w)] || w == t) ++s_free;
        if (s_free < 1) return false;
        for (int u = 0; u < n_; ++u) {
            if (visited_[static_cast<std::size_t>(u)]) continue;
            int free = 0;
            for (int w : adj_[static_cast<std::size_t>(u)])
                if (!visited_[static_cast<std::size_t>(w)] || w == t || w == s)
                    ++free;
            if (free < 2) return false;
        }
        // Unvisited vertices plus s must be reachable from t.
        std::vector<char> seen(static_cast<std::size_t>(n_), 0);
        std::vector<int> queue{t};
        seen[static_cast<std::size_t>(t)] = 1;
        int reached = 0;
        bool s_reached = false;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            for (int w : adj_[static_cast<std::size_t>(queue[qi])]) {
                if (seen[static_cast<std::size_t>(w)]) continue;
                if (w == s) {
                    s_reached = true;
                    seen[static_cast<std::size_t>(w)] = 1;
                    continue;
                }
                if (visited_[static_cast<std::size_t>(w)]) continue;
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                queue.push_back(w);
            }
        }
        const int unvisited = n_ - static_cast<int>(path_.size());
        return reached == unvisited && s_reached;
    }

    bool extend() {
        if (++nodes_ > kNodeBudget)
            throw InternalError("hamiltonian search budget exceeded");
        const int t = path_.back();
        if (static_cast<int>(path_.size()) == n_) {
            for (int w : adj_[static_cast<std::size_t>(t)])
                if (w == 0) return true;
            return false;
        }
        std::vector<std::pair<int, int>> cands;  // (onward options, vertex)
        for (int w : adj_[static_cast<std::size_t>(t)]) {
            if (visited_[static_cast<std::size_t>(w)]) continue;
            int onward = 0;
            for (int z : adj_[static_cast<std::size_t>(w)])
                if (!visited_[static_cast<std::size_t>(z)]) ++onward;
            cands.push_back({onward, w});
        }
        std::sort(cands.begin(), cands.end());
        for (auto [onward, w] : cands) {
            visited_[static_cast<std::size_t>(w)] = 1;
            path_.push_back(w);
            if (feasible() && extend()) return true;
            path_.pop_back();
            visited_[static_cast<std::size_t>(w)] = 0;
        }
        return false;
    }

    static constexpr long kNodeBudget = 200'000'000;

    const std::vector<std::vector<int>>& adj_;
    int n_;
    std::vector<char> visited_;
    std::vector<int> path_;
    long nodes_ = 0;
};

inline std::vector<int> hamiltonian_cycle(
    const std::vector<std::vector<int>>& adj) {
    return HamiltonianSearch(adj).find_cycle();
}

}  // namespace pindraw
