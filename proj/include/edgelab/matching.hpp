#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "edgelab/graph.hpp"

namespace edgelab {

/// Set of pairwise vertex-disjoint edges of a host graph.
struct Matching {
    std::vector<std::pair<int, int>> edges; // u < v, lexicographic
    int size = 0;
    VertexSet covered;
};

namespace detail {

// Edmonds' blossom algorithm, single-source augmenting BFS with blossom
// contraction via the `base` array. O(n^3); at n <= 64 that is instant.
class BlossomSolver {
public:
    explicit BlossomSolver(const Graph& g)
        : g_(g),
          n_(g.vertex_count()),
          match_(static_cast<std::size_t>(n_), -1),
          parent_(static_cast<std::size_t>(n_), -1),
          base_(static_cast<std::size_t>(n_), 0),
          used_(static_cast<std::size_t>(n_), 0),
          in_blossom_(static_cast<std::size_t>(n_), 0) {}

    std::vector<int> solve() {
        for (int v = 0; v < n_; ++v) {
            if (match_[static_cast<std::size_t>(v)] != -1) continue;
            const int leaf = find_augmenting_path(v);
            if (leaf != -1) augment(leaf);
        }
        return match_;
    }

private:
    int find_augmenting_path(int root) {
        std::fill(used_.begin(), used_.end(), 0);
        std::fill(parent_.begin(), parent_.end(), -1);
        for (int i = 0; i < n_; ++i) base_[static_cast<std::size_t>(i)] = i;

        queue_.clear();
        used_[static_cast<std::size_t>(root)] = 1;
        queue_.push_back(root);
        for (std::size_t head = 0; head < queue_.size(); ++head) {
            const int v = queue_[head];
            for (int to : g_.neighbors(v)) {
                if (base_[static_cast<std::size_t>(v)] == base_[static_cast<std::size_t>(to)] ||
                    match_[static_cast<std::size_t>(v)] == to)
                    continue;
                if (to == root ||
                    (match_[static_cast<std::size_t>(to)] != -1 &&
                     parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(to)])] != -1)) {
                    contract_blossom(v, to);
                } else if (parent_[static_cast<std::size_t>(to)] == -1) {
                    parent_[static_cast<std::size_t>(to)] = v;
                    if (match_[static_cast<std::size_t>(to)] == -1) return to;
                    const int mate = match_[static_cast<std::size_t>(to)];
                    used_[static_cast<std::size_t>(mate)] = 1;
                    queue_.push_back(mate);
                }
            }
        }
        return -1;
    }

    int lowest_common_base(int a, int b) const {
        std::vector<char> seen(static_cast<std::size_t>(n_), 0);
        int x = a;
        while (true) {
            x = base_[static_cast<std::size_t>(x)];
            seen[static_cast<std::size_t>(x)] = 1;
            if (match_[static_cast<std::size_t>(x)] == -1) break;
            x = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(x)])];
        }
        int y = b;
        while (true) {
            y = base_[static_cast<std::size_t>(y)];
            if (seen[static_cast<std::size_t>(y)]) return y;
            y = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(y)])];
        }
    }

    void mark_path(int v, int stem, int child) {
        while (base_[static_cast<std::size_t>(v)] != stem) {
            const int mate = match_[static_cast<std::size_t>(v)];
            in_blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(v)])] = 1;
            in_blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(mate)])] = 1;
            parent_[static_cast<std::size_t>(v)] = child;
            child = mate;
            v = parent_[static_cast<std::size_t>(mate)];
        }
    }

    void contract_blossom(int v, int to) {
        const int stem = lowest_common_base(v, to);
        std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
        mark_path(v, stem, to);
        mark_path(to, stem, v);
        for (int i = 0; i < n_; ++i) {
            if (!in_blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(i)])]) continue;
            base_[static_cast<std::size_t>(i)] = stem;
            if (!used_[static_cast<std::size_t>(i)]) {
                used_[static_cast<std::size_t>(i)] = 1;
                queue_.push_back(i);
            }
        }
    }

    void augment(int leaf) {
        int v = leaf;
        while (v != -1) {
            const int pv = parent_[static_cast<std::size_t>(v)];
            const int next = match_[static_cast<std::size_t>(pv)];
            match_[static_cast<std::size_t>(v)] = pv;
            match_[static_cast<std::size_t>(pv)] = v;
            v = next;
        }
    }

    const Graph& g_;
    int n_;
    std::vector<int> match_, parent_, base_;
    std::vector<char> used_, in_blossom_;
    std::vector<int> queue_;
};

inline constexpr int kBruteMatchingCap = 16;

inline void check_brute_cap(const Graph& g) {
    if (g.vertex_count() > kBruteMatchingCap)
        throw CapacityError("brute-force matching capped at 16 vertices");
}

// Exhaustive matching search branching on the lowest active vertex: match it
// to each active neighbor, or drop it from consideration.
inline int nu_exhaustive(const Graph& g) {
    const int n = g.vertex_count();
    int best = 0;
    const auto rec = [&](auto&& self, std::uint64_t active, int count) -> void {
        best = std::max(best, count);
        while (active) {
            const int v = std::countr_zero(active);
            const std::uint64_t candidates = g.neighbors(v).bits() & active;
            active &= active - 1; // v resolved: matched in a branch below, or skipped
            if (count + std::popcount(active) / 2 + (candidates ? 1 : 0) <= best) return;
            for (std::uint64_t rest = candidates; rest;) {
                const int w = std::countr_zero(rest);
                rest &= rest - 1;
                self(self, active & ~(std::uint64_t{1} << w), count + 1);
            }
        }
    };
    rec(rec, VertexSet::all(n).bits(), 0);
    return best;
}

} // namespace detail

/// Maximum matching via the blossom algorithm. Which maximum matching is
/// returned is unspecified; rely only on size, validity, and coverage.
inline Matching max_matching(const Graph& g) {
    detail::BlossomSolver solver(g);
    const std::vector<int> mate = solver.solve();
    Matching m;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const int w = mate[static_cast<std::size_t>(v)];
        if (w == -1) continue;
        m.covered = m.covered.with(v);
        if (v < w) m.edges.emplace_back(v, w);
    }
    m.size = static_cast<int>(m.edges.size());
    return m;
}

inline int matching_number(const Graph& g) { return max_matching(g).size; }

/// Exact nu(g) by exhaustive search; independent oracle for the blossom path.
inline int max_matching_bruteforce(const Graph& g) {
    detail::check_brute_cap(g);
    return detail::nu_exhaustive(g);
}

inline bool has_perfect_matching(const Graph& g) {
    const int n = g.vertex_count();
    return n % 2 == 0 && matching_number(g) == n / 2;
}

inline bool is_factor_critical(const Graph& g) {
    if (g.vertex_count() < 1) throw DomainError("is_factor_critical: empty graph");
    if (!g.is_connected()) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!has_perfect_matching(g.delete_vertex(v))) return false;
    return true;
}

/// Enumerates every maximum matching (as a u<v edge list). The visitor may
/// return false to stop early. Exhaustive: capped at 16 vertices.
inline void for_each_maximum_matching(const Graph& g,
                                      const std::function<bool(const std::vector<std::pair<int, int>>&)>& visit) {
    detail::check_brute_cap(g);
    const int target = detail::nu_exhaustive(g);
    std::vector<std::pair<int, int>> current;
    bool stop = false;
    const auto rec = [&](auto&& self, std::uint64_t active, int count) -> void {
        if (stop) return;
        if (count == target) {
            if (!visit(current)) stop = true;
            return;
        }
        if (count + std::popcount(active) / 2 < target) return;
        const int v = std::countr_zero(active);
        const std::uint64_t candidates = g.neighbors(v).bits() & active;
        active &= active - 1;
        for (std::uint64_t rest = candidates; rest && !stop;) {
            const int w = std::countr_zero(rest);
            rest &= rest - 1;
            current.emplace_back(v, w);
            self(self, active & ~(std::uint64_t{1} << w), count + 1);
            current.pop_back();
        }
        self(self, active, count); // v stays unmatched
    };
    rec(rec, VertexSet::all(g.vertex_count()).bits(), 0);
}

} // namespace edgelab
