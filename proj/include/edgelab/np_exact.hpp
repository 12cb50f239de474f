#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "edgelab/graph.hpp"

namespace edgelab {

/// Proper-coloring witness. For kind Vertex, assignment[i] is the class of
/// vertex i; for kind Edge it is indexed by the lexicographic u<v edge list.
struct ColoringCertificate {
    enum class Kind { Vertex, Edge };
    Kind kind = Kind::Vertex;
    int num_classes = 0;
    std::vector<int> assignment;
};

struct ColoringResult {
    int count = 0;
    std::optional<ColoringCertificate> certificate;
};

inline bool certificate_valid(const Graph& g, const ColoringCertificate& cert) {
    const auto classes_ok = [&](const std::vector<int>& a) {
        std::vector<char> seen(static_cast<std::size_t>(cert.num_classes), 0);
        for (int c : a) {
            if (c < 0 || c >= cert.num_classes) return false;
            seen[static_cast<std::size_t>(c)] = 1;
        }
        return std::all_of(seen.begin(), seen.end(), [](char s) { return s != 0; });
    };
    if (cert.kind == ColoringCertificate::Kind::Vertex) {
        if (static_cast<int>(cert.assignment.size()) != g.vertex_count()) return false;
        if (!classes_ok(cert.assignment)) return false;
        for (auto [u, v] : g.edges())
            if (cert.assignment[static_cast<std::size_t>(u)] == cert.assignment[static_cast<std::size_t>(v)])
                return false;
        return true;
    }
    const auto edge_list = g.edges();
    if (static_cast<int>(cert.assignment.size()) != static_cast<int>(edge_list.size())) return false;
    if (!classes_ok(cert.assignment)) return false;
    for (std::size_t i = 0; i < edge_list.size(); ++i)
        for (std::size_t j = i + 1; j < edge_list.size(); ++j) {
            const bool share = edge_list[i].first == edge_list[j].first ||
                               edge_list[i].first == edge_list[j].second ||
                               edge_list[i].second == edge_list[j].first ||
                               edge_list[i].second == edge_list[j].second;
            if (share && cert.assignment[i] == cert.assignment[j]) return false;
        }
    return true;
}

namespace detail {

inline constexpr int kAlphaCap = 40;
inline constexpr int kChromaticCap = 16;
inline constexpr int kEdgeColorCap = 24;

// Greedy clique cover of `cand`; the number of cliques bounds any
// independent set inside cand from above.
inline int clique_cover_bound(const Graph& g, std::uint64_t cand) {
    int cliques = 0;
    while (cand) {
        const int v = std::countr_zero(cand);
        std::uint64_t clique = std::uint64_t{1} << v;
        cand &= cand - 1;
        for (std::uint64_t rest = cand; rest;) {
            const int u = std::countr_zero(rest);
            rest &= rest - 1;
            if ((clique & ~g.neighbors(u).bits()) == 0) {
                clique |= std::uint64_t{1} << u;
                cand &= ~(std::uint64_t{1} << u);
            }
        }
        ++cliques;
    }
    return cliques;
}

// Branch and bound for a maximum independent set, branching on the highest
// remaining degree and bounding with the greedy clique cover.
inline std::uint64_t solve_max_independent(const Graph& g) {
    std::uint64_t best_set = 0;
    int best = 0;
    const auto rec = [&](auto&& self, std::uint64_t cand, std::uint64_t chosen, int count) -> void {
        if (count + std::popcount(cand) <= best) return;
        if (!cand) {
            if (count > best) {
                best = count;
                best_set = chosen;
            }
            return;
        }
        if (count + clique_cover_bound(g, cand) <= best) return;
        int v = -1, vdeg = -1;
        for (std::uint64_t rest = cand; rest;) {
            const int u = std::countr_zero(rest);
            rest &= rest - 1;
            const int d = std::popcount(g.neighbors(u).bits() & cand);
            if (d > vdeg) {
                vdeg = d;
                v = u;
            }
        }
        const std::uint64_t bit_v = std::uint64_t{1} << v;
        self(self, cand & ~g.neighbors(v).bits() & ~bit_v, chosen | bit_v, count + 1);
        self(self, cand & ~bit_v, chosen, count);
    };
    rec(rec, VertexSet::all(g.vertex_count()).bits(), 0, 0);
    return best_set;
}

// Exact chromatic number: k-feasibility loop from the clique lower bound,
// DSATUR vertex selection, new color classes opened in index order. The
// pinned max clique fixes one color permutation per class.
inline ColoringResult exact_chromatic(const Graph& g, bool with_certificate) {
    const int n = g.vertex_count();
    ColoringResult result;
    if (n == 0) {
        if (with_certificate) result.certificate = ColoringCertificate{ColoringCertificate::Kind::Vertex, 0, {}};
        return result;
    }

    const std::uint64_t clique_bits = solve_max_independent(g.complement());
    std::vector<int> clique;
    for (int v : VertexSet(clique_bits)) clique.push_back(v);
    const int lower = static_cast<int>(clique.size());

    std::vector<int> colors(static_cast<std::size_t>(n), -1);
    const auto try_k = [&](int k) -> bool {
        std::fill(colors.begin(), colors.end(), -1);
        if (lower > k) return false;
        for (int i = 0; i < lower; ++i) colors[static_cast<std::size_t>(clique[i])] = i;
        int used = lower;
        const auto rec = [&](auto&& self, int uncolored) -> bool {
            if (uncolored == 0) return true;
            // DSATUR: most distinct neighbor colors, then highest degree.
            int pick = -1, pick_sat = -1, pick_deg = -1;
            for (int v = 0; v < n; ++v) {
                if (colors[static_cast<std::size_t>(v)] != -1) continue;
                std::uint64_t sat = 0;
                for (int w : g.neighbors(v))
                    if (colors[static_cast<std::size_t>(w)] != -1)
                        sat |= std::uint64_t{1} << colors[static_cast<std::size_t>(w)];
                const int s = std::popcount(sat);
                const int d = g.degree(v);
                if (s > pick_sat || (s == pick_sat && d > pick_deg)) {
                    pick = v;
                    pick_sat = s;
                    pick_deg = d;
                }
            }
            std::uint64_t forbidden = 0;
            for (int w : g.neighbors(pick))
                if (colors[static_cast<std::size_t>(w)] != -1)
                    forbidden |= std::uint64_t{1} << colors[static_cast<std::size_t>(w)];
            const int limit = std::min(k, used + 1); // one fresh class at most
            for (int c = 0; c < limit; ++c) {
                if ((forbidden >> c) & 1u) continue;
                colors[static_cast<std::size_t>(pick)] = c;
                const int prev_used = used;
                used = std::max(used, c + 1);
                if (self(self, uncolored - 1)) return true;
                used = prev_used;
                colors[static_cast<std::size_t>(pick)] = -1;
            }
            return false;
        };
        return rec(rec, n - lower);
    };

    for (int k = std::max(lower, 1);; ++k) {
        if (try_k(k)) {
            result.count = k;
            break;
        }
    }
    if (with_certificate) {
        // compact class indices so every class below num_classes is nonempty
        std::vector<int> remap(static_cast<std::size_t>(result.count), -1);
        int next = 0;
        std::vector<int> assignment(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            const int c = colors[static_cast<std::size_t>(v)];
            if (remap[static_cast<std::size_t>(c)] == -1) remap[static_cast<std::size_t>(c)] = next++;
            assignment[static_cast<std::size_t>(v)] = remap[static_cast<std::size_t>(c)];
        }
        result.certificate = ColoringCertificate{ColoringCertificate::Kind::Vertex, next, std::move(assignment)};
        result.count = next;
    }
    return result;
}

inline Graph line_graph(const Graph& g) {
    const auto edge_list = g.edges();
    Graph lg(static_cast<int>(edge_list.size()));
    for (std::size_t i = 0; i < edge_list.size(); ++i)
        for (std::size_t j = i + 1; j < edge_list.size(); ++j) {
            const bool share = edge_list[i].first == edge_list[j].first ||
                               edge_list[i].first == edge_list[j].second ||
                               edge_list[i].second == edge_list[j].first ||
                               edge_list[i].second == edge_list[j].second;
            if (share) lg = lg.with_edge(static_cast<int>(i), static_cast<int>(j));
        }
    return lg;
}

} // namespace detail

/// Size of a maximum independent set. Capped at 40 vertices.
inline int independence_number(const Graph& g) {
    if (g.vertex_count() > detail::kAlphaCap)
        throw CapacityError("independence_number capped at 40 vertices");
    return std::popcount(detail::solve_max_independent(g));
}

inline VertexSet maximum_independent_set(const Graph& g) {
    if (g.vertex_count() > detail::kAlphaCap)
        throw CapacityError("independence_number capped at 40 vertices");
    return VertexSet(detail::solve_max_independent(g));
}

/// Exact chromatic number. Capped at 16 vertices.
inline ColoringResult chromatic_number(const Graph& g, bool with_certificate = false) {
    if (g.vertex_count() > detail::kChromaticCap)
        throw CapacityError("chromatic_number capped at 16 vertices");
    return detail::exact_chromatic(g, with_certificate);
}

/// Exact chromatic index via vertex-coloring of the line graph. Capped at 24 edges.
inline ColoringResult chromatic_index(const Graph& g, bool with_certificate = false) {
    if (g.edge_count() > detail::kEdgeColorCap)
        throw CapacityError("chromatic_index capped at 24 edges");
    ColoringResult r = detail::exact_chromatic(detail::line_graph(g), with_certificate);
    if (r.certificate) r.certificate->kind = ColoringCertificate::Kind::Edge;
    return r;
}

} // namespace edgelab
