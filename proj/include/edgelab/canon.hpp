#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "edgelab/graph.hpp"
#include "edgelab/graph6.hpp"

namespace edgelab {

/// graph6 string of the canonically relabeled graph. Two graphs are
/// isomorphic exactly when their canonical forms compare equal.
struct CanonicalForm {
    std::string g6;
    bool operator==(const CanonicalForm&) const = default;
    bool operator<(const CanonicalForm& o) const { return g6 < o.g6; }
};

namespace detail {

inline constexpr int kCanonCap = 16;

// Canonical form search: iterated color refinement, then backtracking over
// the refinement-compatible orderings, individualizing one vertex of the
// first non-singleton cell at a time and keeping the least adjacency
// encoding seen at the leaves. The refinement key packs the exact
// neighbor-color count vector into one word (4 bits per color, n <= 16), so
// ranking by (old color, key) is the exact lexicographic multiset order:
// cells only split, earlier cells stay earlier, and low-degree cells sort
// first.
class Canonizer {
public:
    explicit Canonizer(const Graph& g) : n_(g.vertex_count()) {
        for (int v = 0; v < n_; ++v) adj_[v] = g.neighbors(v).bits();
    }

    // Returns labeling old->new; fills `body` with the winning g6 body bytes.
    std::array<int, kCanonCap> run(std::string& body) {
        if (n_ == 0) {
            body.clear();
            return {};
        }
        std::array<int, kCanonCap> color{};
        search(color);
        body = best_body_;
        return best_perm_;
    }

private:
    void refine(std::array<int, kCanonCap>& color) const {
        std::array<std::uint64_t, kCanonCap> key{};
        std::array<int, kCanonCap> order{};
        while (true) {
            for (int v = 0; v < n_; ++v) {
                std::uint64_t counts = 0;
                for (std::uint64_t rest = adj_[v]; rest;) {
                    const int w = std::countr_zero(rest);
                    rest &= rest - 1;
                    counts += std::uint64_t{1} << (4 * (15 - color[w]));
                }
                key[v] = counts;
                order[v] = v;
            }
            std::sort(order.begin(), order.begin() + n_, [&](int a, int b) {
                if (color[a] != color[b]) return color[a] < color[b];
                if (key[a] != key[b]) return key[a] < key[b];
                return a < b; // stable tiebreak inside a class; does not split
            });
            std::array<int, kCanonCap> next{};
            int rank = 0;
            next[order[0]] = 0;
            for (int i = 1; i < n_; ++i) {
                const int a = order[i - 1], b = order[i];
                if (color[a] != color[b] || key[a] != key[b]) ++rank;
                next[b] = rank;
            }
            bool changed = false;
            for (int v = 0; v < n_; ++v) changed |= (next[v] != color[v]);
            if (!changed) return;
            color = next;
        }
    }

    // Individualization-refinement: the color vector is an ordered partition
    // (color = cell rank = final position once discrete). Individualizing a
    // vertex splits it off at the front of its own cell, so earlier cells
    // keep their positions down the whole subtree.
    void search(std::array<int, kCanonCap> color) {
        refine(color);

        std::array<int, kCanonCap> count{};
        for (int v = 0; v < n_; ++v) ++count[color[v]];
        int target = -1;
        for (int c = 0; c < n_; ++c)
            if (count[c] > 1) {
                target = c;
                break;
            }

        if (target < 0) {
            consider_leaf(color);
            return;
        }

        std::array<int, kCanonCap> cands{};
        int num_cands = 0;
        for (int v = 0; v < n_; ++v)
            if (color[v] == target) cands[num_cands++] = v;
        for (int i = 0; i < num_cands; ++i) {
            const int u = cands[i];
            // Skip u if swapping it with an earlier candidate is an
            // automorphism: the two subtrees yield identical encodings.
            bool redundant = false;
            for (int j = 0; j < i && !redundant; ++j) {
                const int w = cands[j];
                const std::uint64_t self = (std::uint64_t{1} << u) | (std::uint64_t{1} << w);
                redundant = ((adj_[u] ^ adj_[w]) & ~self) == 0;
            }
            if (redundant) continue;
            std::array<int, kCanonCap> child = color;
            for (int v = 0; v < n_; ++v)
                if (child[v] > target) ++child[v];
            for (int k = 0; k < num_cands; ++k)
                if (cands[k] != u) child[cands[k]] = target + 1;
            search(child);
        }
    }

    void consider_leaf(const std::array<int, kCanonCap>& perm) {
        std::array<int, kCanonCap> inv{};
        for (int v = 0; v < n_; ++v) inv[perm[v]] = v;
        std::string body;
        body.reserve(static_cast<std::size_t>(n_ * (n_ - 1) / 2 + 5) / 6);
        int acc = 0, nbits = 0;
        for (int col = 1; col < n_; ++col) {
            const std::uint64_t row_bits = adj_[inv[col]];
            for (int row = 0; row < col; ++row) {
                acc = (acc << 1) | static_cast<int>((row_bits >> inv[row]) & 1u);
                if (++nbits == 6) {
                    body.push_back(static_cast<char>(acc + 63));
                    acc = 0;
                    nbits = 0;
                }
            }
        }
        if (nbits > 0) body.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
        if (!have_best_ || body < best_body_) {
            best_body_ = std::move(body);
            best_perm_ = perm;
            have_best_ = true;
        }
    }

    int n_;
    std::array<std::uint64_t, kCanonCap> adj_{};
    std::string best_body_;
    std::array<int, kCanonCap> best_perm_{};
    bool have_best_ = false;
};

inline void check_canon_cap(const Graph& g) {
    if (g.vertex_count() > kCanonCap) throw CapacityError("canonical labeling capped at 16 vertices");
}

} // namespace detail

struct LabeledCanonicalForm {
    CanonicalForm form;
    std::vector<int> labeling; // old index -> canonical position
};

/// Canonical form plus the labeling that realizes it: the lexicographically
/// least graph6 string over the refinement-compatible orderings, which is
/// identical for isomorphic graphs and distinct otherwise.
inline LabeledCanonicalForm canonical_form_labeled(const Graph& g) {
    detail::check_canon_cap(g);
    const int n = g.vertex_count();
    detail::Canonizer c(g);
    std::string body;
    const auto perm = c.run(body);

    LabeledCanonicalForm out;
    out.labeling.assign(perm.begin(), perm.begin() + n);
    out.form.g6.push_back(static_cast<char>(n + 63));
    out.form.g6 += body;
    return out;
}

inline CanonicalForm canonical_form(const Graph& g) { return canonical_form_labeled(g).form; }

inline std::vector<int> canonical_labeling(const Graph& g) { return canonical_form_labeled(g).labeling; }

inline bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

} // namespace edgelab
