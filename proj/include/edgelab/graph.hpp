#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "edgelab/errors.hpp"

namespace edgelab {

inline constexpr int kMaxVertices = 64;

/// Set of vertex indices, backed by one 64-bit word.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr VertexSet all(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s = s.with(v);
        return s;
    }

    constexpr bool contains(int v) const { return (bits_ >> v) & 1u; }
    constexpr VertexSet with(int v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
    constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
    constexpr std::uint64_t bits() const { return bits_; }
    /// Smallest member; set must be nonempty.
    constexpr int first() const { return std::countr_zero(bits_); }

    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    constexpr bool operator==(const VertexSet&) const = default;

    class iterator {
    public:
        int operator*() const { return std::countr_zero(bits_); }
        iterator& operator++() {
            bits_ &= bits_ - 1;
            return *this;
        }
        bool operator!=(const iterator& o) const { return bits_ != o.bits_; }

    private:
        friend class VertexSet;
        explicit iterator(std::uint64_t b) : bits_(b) {}
        std::uint64_t bits_;
    };
    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

private:
    std::uint64_t bits_ = 0;
};

/// Immutable simple graph on at most 64 vertices.
///
/// Adjacency is stored as one neighbor bitset per vertex (symmetric, no loops).
/// All mutators return a new graph; values are freely shareable across threads.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) {
        check_order(n);
        n_ = n;
        adj_.assign(static_cast<std::size_t>(n), 0);
    }

    Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
        for (auto [u, v] : edges) add_edge_internal(u, v);
    }

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge_internal(u, v);
        return g;
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return edge_count_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (adj_[static_cast<std::size_t>(u)] >> v) & 1u;
    }

    VertexSet neighbors(int v) const {
        check_vertex(v);
        return VertexSet(adj_[static_cast<std::size_t>(v)]);
    }

    int degree(int v) const {
        check_vertex(v);
        return std::popcount(adj_[static_cast<std::size_t>(v)]);
    }

    int max_degree() const {
        if (n_ == 0) throw DomainError("max_degree: graph has no vertices");
        int best = 0;
        for (std::uint64_t row : adj_) best = std::max(best, std::popcount(row));
        return best;
    }

    Graph with_edge(int u, int v) const {
        Graph g = *this;
        g.add_edge_internal(u, v);
        return g;
    }

    /// New graph with one extra vertex adjacent to exactly `nbrs`.
    Graph with_vertex(VertexSet nbrs) const {
        if (n_ >= kMaxVertices) throw CapacityError("with_vertex: 64-vertex cap");
        if (!nbrs.subset_of(VertexSet::all(n_)))
            throw DomainError("with_vertex: neighbor outside vertex range");
        Graph g = *this;
        g.n_ = n_ + 1;
        g.adj_.push_back(nbrs.bits());
        for (int w : nbrs) g.adj_[static_cast<std::size_t>(w)] |= std::uint64_t{1} << n_;
        g.edge_count_ += nbrs.size();
        return g;
    }

    /// Induced subgraph on V \ {v}; remaining indices are compacted.
    Graph delete_vertex(int v) const {
        check_vertex(v);
        Graph g;
        g.n_ = n_ - 1;
        g.adj_.reserve(static_cast<std::size_t>(g.n_));
        const std::uint64_t low = (std::uint64_t{1} << v) - 1;
        for (int u = 0; u < n_; ++u) {
            if (u == v) continue;
            std::uint64_t row = adj_[static_cast<std::size_t>(u)];
            row = (row & low) | ((row >> (v + 1)) << v);
            g.adj_.push_back(row);
            g.edge_count_ += std::popcount(row);
        }
        g.edge_count_ /= 2;
        return g;
    }

    /// Induced subgraph on `keep`, vertices renumbered in ascending order.
    Graph induced(VertexSet keep) const {
        if (!keep.subset_of(VertexSet::all(n_)))
            throw DomainError("induced: vertex outside range");
        std::vector<int> map(static_cast<std::size_t>(n_), -1);
        int m = 0;
        for (int v : keep) map[static_cast<std::size_t>(v)] = m++;
        Graph g(m);
        for (int v : keep)
            for (int w : neighbors(v) & keep)
                if (v < w) g.add_edge_internal(map[static_cast<std::size_t>(v)], map[static_cast<std::size_t>(w)]);
        return g;
    }

    /// Relabel by `new_index` (a permutation of 0..n-1; new_index[old] = new).
    Graph relabeled(const std::vector<int>& new_index) const {
        if (static_cast<int>(new_index.size()) != n_)
            throw DomainError("relabeled: permutation size mismatch");
        std::uint64_t seen = 0;
        for (int p : new_index) {
            if (p < 0 || p >= n_) throw DomainError("relabeled: index out of range");
            seen |= std::uint64_t{1} << p;
        }
        if (seen != VertexSet::all(n_).bits()) throw DomainError("relabeled: not a permutation");
        Graph g(n_);
        for (int u = 0; u < n_; ++u)
            for (int w : neighbors(u))
                if (u < w)
                    g.add_edge_internal(new_index[static_cast<std::size_t>(u)],
                                        new_index[static_cast<std::size_t>(w)]);
        return g;
    }

    Graph complement() const {
        Graph g(n_);
        const std::uint64_t full = VertexSet::all(n_).bits();
        for (int v = 0; v < n_; ++v) {
            std::uint64_t row = full & ~adj_[static_cast<std::size_t>(v)] & ~(std::uint64_t{1} << v);
            g.adj_[static_cast<std::size_t>(v)] = row;
            g.edge_count_ += std::popcount(row);
        }
        g.edge_count_ /= 2;
        return g;
    }

    /// Connected components, ordered by smallest member.
    std::vector<VertexSet> components() const {
        std::vector<VertexSet> out;
        std::uint64_t unseen = VertexSet::all(n_).bits();
        while (unseen) {
            std::uint64_t comp = unseen & (~unseen + 1); // lowest unseen vertex
            std::uint64_t frontier = comp;
            while (frontier) {
                std::uint64_t next = 0;
                for (int v : VertexSet(frontier)) next |= adj_[static_cast<std::size_t>(v)];
                frontier = next & ~comp;
                comp |= frontier;
            }
            out.push_back(VertexSet(comp));
            unseen &= ~comp;
        }
        return out;
    }

    bool is_connected() const { return n_ <= 1 || components().size() == 1; }

    VertexSet vertices() const { return VertexSet::all(n_); }

    VertexSet isolated_vertices() const {
        VertexSet s;
        for (int v = 0; v < n_; ++v)
            if (adj_[static_cast<std::size_t>(v)] == 0) s = s.with(v);
        return s;
    }

    /// Edge list with u < v, lexicographic.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(edge_count_));
        for (int u = 0; u < n_; ++u)
            for (int w : neighbors(u))
                if (u < w) out.emplace_back(u, w);
        return out;
    }

    bool operator==(const Graph&) const = default;

private:
    static void check_order(int n) {
        if (n < 0) throw DomainError("negative vertex count");
        if (n > kMaxVertices) throw CapacityError("graph larger than 64 vertices");
    }
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw DomainError("vertex index out of range");
    }
    void add_edge_internal(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw DomainError("self-loop");
        std::uint64_t bit_v = std::uint64_t{1} << v;
        if (adj_[static_cast<std::size_t>(u)] & bit_v) return;
        adj_[static_cast<std::size_t>(u)] |= bit_v;
        adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
        ++edge_count_;
    }

    int n_ = 0;
    int edge_count_ = 0;
    std::vector<std::uint64_t> adj_;
};

/// Block-diagonal union; total order must stay within the 64-vertex cap.
inline Graph disjoint_union(const std::vector<Graph>& parts) {
    long long total = 0;
    for (const Graph& p : parts) total += p.vertex_count();
    if (total > kMaxVertices) throw CapacityError("disjoint_union: 64-vertex cap");
    Graph g(static_cast<int>(total));
    int base = 0;
    for (const Graph& p : parts) {
        for (auto [u, v] : p.edges()) g = g.with_edge(base + u, base + v);
        base += p.vertex_count();
    }
    return g;
}

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g = g.with_edge(u, v);
    return g;
}

inline Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g = g.with_edge(v, v + 1);
    return g;
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw DomainError("cycle needs >= 3 vertices");
    Graph g = path_graph(n);
    return g.with_edge(n - 1, 0);
}

/// K_{1,leaves}; vertex 0 is the center.
inline Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g = g.with_edge(0, v);
    return g;
}

inline Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g = g.with_edge(u, a + v);
    return g;
}

/// Circulant graph: i ~ i+d (mod n) for each offset d.
inline Graph circulant_graph(int n, const std::vector<int>& offsets) {
    Graph g(n);
    for (int v = 0; v < n; ++v)
        for (int d : offsets) {
            if (d <= 0 || 2 * d > n) throw DomainError("circulant offset out of range");
            g = g.with_edge(v, (v + d) % n);
        }
    return g;
}

} // namespace edgelab
