#pragma once

#include <istream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "edgelab/canon.hpp"
#include "edgelab/graph.hpp"
#include "edgelab/graph6.hpp"
#include "edgelab/matching.hpp"
#include "edgelab/np_exact.hpp"

namespace edgelab {

enum class ConstraintMode { LessEq, Exact };

/// Parameter constraints for enumeration and extremal search. During
/// generation every bound is used as a hereditary "<=" prune; the mode only
/// decides which graphs the stream finally yields.
struct GraphFilter {
    std::optional<int> alpha;      // independence number
    std::optional<int> nu;         // matching number
    std::optional<int> max_deg;    // maximum degree
    ConstraintMode mode = ConstraintMode::LessEq;
    bool no_isolated = false;
};

namespace detail {

inline constexpr int kEnumCap = 9;

inline bool within_caps(const Graph& g, const GraphFilter& f) {
    if (f.max_deg && g.vertex_count() > 0 && g.max_degree() > *f.max_deg) return false;
    if (f.nu && matching_number(g) > *f.nu) return false;
    if (f.alpha && independence_number(g) > *f.alpha) return false;
    return true;
}

inline bool matches(const Graph& g, const GraphFilter& f) {
    if (f.no_isolated && !g.isolated_vertices().empty()) return false;
    if (f.mode == ConstraintMode::LessEq) return within_caps(g, f);
    if (f.max_deg && (g.vertex_count() == 0 ? 0 : g.max_degree()) != *f.max_deg) return false;
    if (f.nu && matching_number(g) != *f.nu) return false;
    if (f.alpha && independence_number(g) != *f.alpha) return false;
    return true;
}

} // namespace detail

/// Streams one representative per isomorphism class of graphs on exactly n
/// vertices, in a fixed deterministic order. Generation grows graphs one
/// vertex at a time and keeps a child only if deleting its canonically-last
/// vertex reproduces the parent (canonical augmentation), so each class
/// appears exactly once and nothing is ever materialized globally.
class GraphStream {
public:
    explicit GraphStream(int n, GraphFilter filter = {}) : n_(n), filter_(filter) {
        if (n < 1 || n > detail::kEnumCap)
            throw CapacityError("exhaustive enumeration capped at 1..9 vertices");
        const Graph root(1);
        if (detail::within_caps(root, filter_))
            stack_.push_back(Level{root, canonical_form(root).g6, 0, {}});
    }

    std::optional<Graph> next() {
        if (n_ == 1) {
            if (stack_.empty()) return std::nullopt;
            const Graph g = stack_.back().g;
            stack_.clear();
            if (!detail::matches(g, filter_)) return std::nullopt;
            ++yielded_;
            return g;
        }
        while (!stack_.empty()) {
            Level& top = stack_.back();
            const int k = top.g.vertex_count();
            if (top.next_mask >= (std::uint32_t{1} << k)) {
                stack_.pop_back();
                continue;
            }
            const VertexSet nbrs(top.next_mask++);
            const Graph child = top.g.with_vertex(nbrs);
            if (!detail::within_caps(child, filter_)) continue;

            const LabeledCanonicalForm lc = canonical_form_labeled(child);
            int last = -1;
            for (int v = 0; v <= k; ++v)
                if (lc.labeling[static_cast<std::size_t>(v)] == k) {
                    last = v;
                    break;
                }
            if (canonical_form(child.delete_vertex(last)).g6 != top.canon) continue;
            if (!top.accepted.insert(lc.form.g6).second) continue;

            if (k + 1 == n_) {
                if (!detail::matches(child, filter_)) continue;
                ++yielded_;
                return child;
            }
            stack_.push_back(Level{child, lc.form.g6, 0, {}});
        }
        return std::nullopt;
    }

    std::uint64_t yielded() const { return yielded_; }
    const GraphFilter& filter() const { return filter_; }

private:
    struct Level {
        Graph g;
        std::string canon;
        std::uint32_t next_mask;
        std::set<std::string> accepted;
    };

    int n_;
    GraphFilter filter_;
    std::vector<Level> stack_;
    std::uint64_t yielded_ = 0;
};

inline GraphStream all_graphs(int n, GraphFilter filter = {}) { return GraphStream(n, filter); }

/// Exact maximum edge count over every graph with 1..n_max vertices meeting
/// the filter, plus all attaining graphs as canonical graph6 strings.
struct SearchOutcome {
    bool empty_space = true;
    long long max_edges = -1;
    std::vector<std::string> extremal_g6; // sorted, one per isomorphism class
    std::uint64_t graphs_scanned = 0;
};

inline SearchOutcome extremal_search(const GraphFilter& filter, int n_max) {
    if (n_max < 1 || n_max > detail::kEnumCap)
        throw CapacityError("extremal_search capped at 1..9 vertices");
    SearchOutcome out;
    for (int n = 1; n <= n_max; ++n) {
        GraphStream stream(n, filter);
        while (const auto g = stream.next()) {
            ++out.graphs_scanned;
            const long long e = g->edge_count();
            if (out.empty_space || e > out.max_edges) {
                out.empty_space = false;
                out.max_edges = e;
                out.extremal_g6.clear();
            }
            if (e == out.max_edges) out.extremal_g6.push_back(canonical_form(*g).g6);
        }
    }
    std::sort(out.extremal_g6.begin(), out.extremal_g6.end());
    return out;
}

/// Ingestion mode: same search over an externally produced newline-delimited
/// graph6 stream (isomorphic duplicates are collapsed).
inline SearchOutcome extremal_search_stream(std::istream& in, const GraphFilter& filter) {
    SearchOutcome out;
    std::set<std::string> attaining;
    g6_read_stream(in, [&](const Graph& g) {
        if (!detail::matches(g, filter)) return;
        ++out.graphs_scanned;
        const long long e = g.edge_count();
        if (out.empty_space || e > out.max_edges) {
            out.empty_space = false;
            out.max_edges = e;
            attaining.clear();
        }
        if (e == out.max_edges) attaining.insert(canonical_form(g).g6);
    });
    out.extremal_g6.assign(attaining.begin(), attaining.end());
    return out;
}

} // namespace edgelab
