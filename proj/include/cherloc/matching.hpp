#pragma once

/**
 * @file matching.hpp
 * @brief Maximum bipartite matching (Hopcroft-Karp).
 */

#include <cstddef>
#include <limits>
#include <queue>
#include <vector>

namespace cherloc {

/// adjacency[u] lists the right vertices adjacent to left vertex u.
class BipartiteMatcher {
public:
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    BipartiteMatcher(std::size_t right_count, std::vector<std::vector<std::size_t>> adjacency)
        : adj_(std::move(adjacency)),
          match_left_(adj_.size(), npos),
          match_right_(right_count, npos),
          dist_(adj_.size(), 0) {}

    std::size_t run() {
        std::size_t size = 0;
        while (bfs())
            for (std::size_t u = 0; u < adj_.size(); ++u)
                if (match_left_[u] == npos && dfs(u)) ++size;
        return size;
    }

    /// Partner of left vertex u after run(), or npos.
    std::size_t partner_of_left(std::size_t u) const { return match_left_[u]; }

private:
    static constexpr std::size_t inf = std::numeric_limits<std::size_t>::max();

    bool bfs() {
        std::queue<std::size_t> q;
        bool found_free = false;
        for (std::size_t u = 0; u < adj_.size(); ++u) {
            if (match_left_[u] == npos) {
                dist_[u] = 0;
                q.push(u);
            } else {
                dist_[u] = inf;
            }
        }
        while (!q.empty()) {
            std::size_t u = q.front();
            q.pop();
            for (std::size_t v : adj_[u]) {
                std::size_t w = match_right_[v];
                if (w == npos) {
                    found_free = true;
                } else if (dist_[w] == inf) {
                    dist_[w] = dist_[u] + 1;
                    q.push(w);
                }
            }
        }
        return found_free;
    }

    bool dfs(std::size_t u) {
        for (std::size_t v : adj_[u]) {
            std::size_t w = match_right_[v];
            if (w == npos || (dist_[w] == dist_[u] + 1 && dfs(w))) {
                match_left_[u] = v;
                match_right_[v] = u;
                return true;
            }
        }
        dist_[u] = inf;
        return false;
    }

    std::vector<std::vector<std::size_t>> adj_;
    std::vector<std::size_t> match_left_;
    std::vector<std::size_t> match_right_;
    std::vector<std::size_t> dist_;
};

inline std::size_t maximum_matching_size(std::size_t right_count, std::vector<std::vector<std::size_t>> adjacency) {
    BipartiteMatcher m(right_count, std::move(adjacency));
    return m.run();
}

}  // namespace cherloc
