#pragma once

#include <utility>
#include <vector>

#include "edgelab/graph.hpp"
#include "edgelab/rational.hpp"

namespace edgelab {

enum class BoundRegime {
    AlphaNuLt,        // 2*alpha < 3*(nu+1): clique construction wins
    AlphaNuGt,        // 2*alpha > 3*(nu+1): split construction wins
    AlphaNuEq,        // tie: both extremal
    AlphaDelta,       // alpha * C(delta+1, 2), unique
    DeltaNuDivides,   // ceil(delta/2) | nu: unique extremal
    DeltaNuNondivides,// otherwise: at least two extremal graphs
    DeltaNuTrivial,   // delta = 1 or nu = 1
};

enum class ExtremalCount { One, Two, Many };

/// A closed-form edge bound together with the regime that produced it and
/// the theorem's claim about how many graphs attain it.
struct BoundCase {
    BoundRegime regime;
    long long value = 0;
    ExtremalCount expected_extremal_count = ExtremalCount::One;
};

inline constexpr long long choose2(long long n) { return n * (n - 1) / 2; }

namespace detail {

inline void require_positive(int x, const char* what) {
    if (x < 1) throw DomainError(std::string(what) + " must be positive");
}

inline int ceil_half(int d) { return (d + 1) / 2; }

} // namespace detail

/// G_{alpha,nu}: K_{2nu+1} plus alpha-1 isolated vertices.
inline Graph build_G(int alpha, int nu) {
    detail::require_positive(alpha, "alpha");
    detail::require_positive(nu, "nu");
    const long long total = 2LL * nu + 1 + (alpha - 1);
    if (total > kMaxVertices) throw CapacityError("build_G: 64-vertex cap");
    Graph g(static_cast<int>(total));
    for (int u = 0; u < 2 * nu + 1; ++u)
        for (int v = u + 1; v < 2 * nu + 1; ++v) g = g.with_edge(u, v);
    return g;
}

/// H_{alpha,nu}: K_{alpha,nu} with the nu-side completed to a clique.
/// Vertices 0..alpha-1 form the independent side. Requires alpha >= nu.
inline Graph build_H(int alpha, int nu) {
    detail::require_positive(alpha, "alpha");
    detail::require_positive(nu, "nu");
    if (alpha < nu) throw DomainError("build_H requires alpha >= nu");
    const long long total = static_cast<long long>(alpha) + nu;
    if (total > kMaxVertices) throw CapacityError("build_H: 64-vertex cap");
    Graph g(static_cast<int>(total));
    for (int u = 0; u < alpha; ++u)
        for (int v = 0; v < nu; ++v) g = g.with_edge(u, alpha + v);
    for (int u = 0; u < nu; ++u)
        for (int v = u + 1; v < nu; ++v) g = g.with_edge(alpha + u, alpha + v);
    return g;
}

/// F_{alpha,delta}: alpha disjoint copies of K_{delta+1}.
inline Graph build_F(int alpha, int delta) {
    detail::require_positive(alpha, "alpha");
    detail::require_positive(delta, "delta");
    const long long total = static_cast<long long>(alpha) * (delta + 1);
    if (total > kMaxVertices) throw CapacityError("build_F: 64-vertex cap");
    std::vector<Graph> parts(static_cast<std::size_t>(alpha), complete_graph(delta + 1));
    return disjoint_union(parts);
}

/// J_delta: K_{delta+1} for even delta. For odd delta = 2j-1, K_{2j} minus
/// the perfect matching {2i, 2i+1}, plus an apex joined to vertices 0..2j-2.
inline Graph build_J(int delta) {
    if (delta < 2) throw DomainError("build_J requires delta >= 2");
    if (delta + 2 > kMaxVertices) throw CapacityError("build_J: 64-vertex cap");
    if (delta % 2 == 0) return complete_graph(delta + 1);
    const int j = (delta + 1) / 2;
    Graph g(2 * j + 1);
    for (int u = 0; u < 2 * j; ++u)
        for (int v = u + 1; v < 2 * j; ++v)
            if (!(u / 2 == v / 2)) g = g.with_edge(u, v);
    for (int u = 0; u < 2 * j - 1; ++u) g = g.with_edge(u, 2 * j);
    return g;
}

/// e1(alpha, nu) = max{ C(2nu+1,2), alpha*nu + C(nu,2) }, with the regime
/// decided by the sign of 2*alpha - 3*(nu+1).
inline BoundCase e1(int alpha, int nu) {
    detail::require_positive(alpha, "alpha");
    detail::require_positive(nu, "nu");
    const long long clique_value = choose2(2LL * nu + 1);
    const long long split_value = static_cast<long long>(alpha) * nu + choose2(nu);
    const int sign = 2 * alpha - 3 * (nu + 1);
    BoundCase bc;
    bc.value = std::max(clique_value, split_value);
    if (sign < 0) {
        bc.regime = BoundRegime::AlphaNuLt;
        bc.expected_extremal_count = ExtremalCount::One;
    } else if (sign > 0) {
        bc.regime = BoundRegime::AlphaNuGt;
        bc.expected_extremal_count = ExtremalCount::One;
    } else {
        bc.regime = BoundRegime::AlphaNuEq;
        bc.expected_extremal_count = ExtremalCount::Two;
    }
    return bc;
}

/// e2(alpha, delta) = alpha * C(delta+1, 2); the extremal graph is unique.
inline BoundCase e2(int alpha, int delta) {
    detail::require_positive(alpha, "alpha");
    detail::require_positive(delta, "delta");
    return BoundCase{BoundRegime::AlphaDelta,
                     static_cast<long long>(alpha) * choose2(delta + 1),
                     ExtremalCount::One};
}

/// e3(delta, nu) = delta*nu + floor(nu / ceil(delta/2)) * floor(delta/2).
inline BoundCase e3(int delta, int nu) {
    detail::require_positive(delta, "delta");
    detail::require_positive(nu, "nu");
    const int j = detail::ceil_half(delta);
    BoundCase bc;
    bc.value = static_cast<long long>(delta) * nu + static_cast<long long>(nu / j) * (delta / 2);
    if (delta == 1 || nu == 1) {
        bc.regime = BoundRegime::DeltaNuTrivial;
        // Remark cases: only (delta=3, nu=1) admits two extremal graphs.
        bc.expected_extremal_count = (nu == 1 && delta == 3) ? ExtremalCount::Two : ExtremalCount::One;
    } else if (nu % j == 0) {
        bc.regime = BoundRegime::DeltaNuDivides;
        bc.expected_extremal_count = ExtremalCount::One;
    } else {
        bc.regime = BoundRegime::DeltaNuNondivides;
        bc.expected_extremal_count = ExtremalCount::Many;
    }
    return bc;
}

/// Right side of the matching-bound inequality:
/// (delta + floor(delta/2)/ceil(delta/2)) * nu, exactly. Equals the e3
/// value iff ceil(delta/2) divides nu.
inline Rational eq9_upper(int delta, int nu) {
    detail::require_positive(delta, "delta");
    detail::require_positive(nu, "nu");
    const int j = detail::ceil_half(delta);
    return Rational(static_cast<long long>(delta) * j + delta / 2, j) * Rational(nu);
}

namespace detail {

// Factor-critical component absorbing one J_delta and one K_{1,delta}:
// 2*ceil(delta/2)+3 vertices, delta + |E(J_delta)| edges, max degree delta.
// Even delta gives an exact circulant; odd delta completes a spanning odd
// cycle with chords by deterministic backtracking (first solution in edge
// order). A spanning odd cycle keeps the graph factor-critical.
inline Graph merged_component(int delta) {
    const int j = ceil_half(delta);
    const int m = 2 * j + 3;
    if (m > kMaxVertices) throw CapacityError("merged component: 64-vertex cap");
    const long long j_edges = static_cast<long long>(delta) * j + delta / 2;
    const long long target = delta + j_edges;

    if (delta % 2 == 0) {
        std::vector<int> offsets;
        for (int d = 1; d <= delta / 2; ++d) offsets.push_back(d);
        return circulant_graph(m, offsets);
    }

    std::vector<std::pair<int, int>> edge_list;
    std::vector<int> deg(static_cast<std::size_t>(m), 2);
    for (int v = 0; v < m; ++v) edge_list.emplace_back(std::min(v, (v + 1) % m), std::max(v, (v + 1) % m));
    std::vector<std::pair<int, int>> chords;
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v)
            if (v - u != 1 && !(u == 0 && v == m - 1)) chords.emplace_back(u, v);

    long long need = target - m;
    const auto rec = [&](auto&& self, std::size_t idx) -> bool {
        if (need == 0) return true;
        if (idx == chords.size()) return false;
        long long slack = 0;
        for (int d : deg) slack += delta - d;
        if (slack / 2 < need) return false;
        if (static_cast<long long>(chords.size() - idx) < need) return false;
        const auto [u, v] = chords[idx];
        if (deg[static_cast<std::size_t>(u)] < delta && deg[static_cast<std::size_t>(v)] < delta) {
            ++deg[static_cast<std::size_t>(u)];
            ++deg[static_cast<std::size_t>(v)];
            edge_list.emplace_back(u, v);
            --need;
            if (self(self, idx + 1)) return true;
            ++need;
            edge_list.pop_back();
            --deg[static_cast<std::size_t>(u)];
            --deg[static_cast<std::size_t>(v)];
        }
        return self(self, idx + 1);
    };
    if (!rec(rec, 0)) throw DomainError("merged component: no chord completion found");
    return Graph::from_edges(m, edge_list);
}

} // namespace detail

/// Both non-isomorphic witnesses for the nondivisible case: the canonical
/// extremal graph s*J_delta + t*K_{1,delta}, and the alternative that swaps
/// two stars for K_{2,delta} (t >= 2) or absorbs the star into a larger
/// factor-critical component (t = 1).
inline std::pair<Graph, Graph> build_second_extremal(int delta, int nu) {
    if (delta < 2 || nu < 2) throw DomainError("build_second_extremal requires delta, nu >= 2");
    const int j = detail::ceil_half(delta);
    if (nu % j == 0)
        throw DomainError("build_second_extremal: ceil(delta/2) divides nu, extremal graph is unique");
    const int s = nu / j;
    const int t = nu - j * s;

    std::vector<Graph> first;
    for (int i = 0; i < s; ++i) first.push_back(build_J(delta));
    for (int i = 0; i < t; ++i) first.push_back(star_graph(delta));
    const Graph witness1 = disjoint_union(first);

    std::vector<Graph> second;
    if (t >= 2) {
        for (int i = 0; i < s; ++i) second.push_back(build_J(delta));
        for (int i = 0; i < t - 2; ++i) second.push_back(star_graph(delta));
        second.push_back(complete_bipartite(2, delta));
    } else {
        for (int i = 0; i < s - 1; ++i) second.push_back(build_J(delta));
        second.push_back(detail::merged_component(delta));
    }
    return {witness1, disjoint_union(second)};
}

/// Predicted extremal sets, as the theorems state them. Under "=" semantics
/// the set is {G}, {H}, or both. Under "<=" semantics the clique form's
/// value does not depend on alpha, so every G_{a,nu} with a <= alpha attains
/// it too (the same graph with fewer isolated vertices); the split form is
/// strictly increasing in alpha and adds only H_{alpha,nu} itself.
inline std::vector<Graph> predicted_extremal_alpha_nu(int alpha, int nu, bool le_mode = false) {
    const BoundCase bc = e1(alpha, nu);
    if (!le_mode) {
        switch (bc.regime) {
        case BoundRegime::AlphaNuLt: return {build_G(alpha, nu)};
        case BoundRegime::AlphaNuGt: return {build_H(alpha, nu)};
        default: return {build_G(alpha, nu), build_H(alpha, nu)};
        }
    }
    std::vector<Graph> out;
    if (bc.value == choose2(2LL * nu + 1))
        for (int a = 1; a <= alpha; ++a) out.push_back(build_G(a, nu));
    if (bc.value == static_cast<long long>(alpha) * nu + choose2(nu)) out.push_back(build_H(alpha, nu));
    return out;
}

inline std::vector<Graph> predicted_extremal_alpha_delta(int alpha, int delta) {
    return {build_F(alpha, delta)};
}

/// Predicted extremal set for the delta-nu bound under "=" or "<="
/// constraints (no isolated vertices). In the nondivisible regime this is
/// the pair of known witnesses, a subset of the full extremal family.
inline std::vector<Graph> predicted_extremal_delta_nu(int delta, int nu, bool le_mode) {
    detail::require_positive(delta, "delta");
    detail::require_positive(nu, "nu");
    if (delta == 1) {
        return {disjoint_union(std::vector<Graph>(static_cast<std::size_t>(nu), complete_graph(2)))};
    }
    if (nu == 1) {
        if (delta == 2) return {complete_graph(3)};
        if (delta == 3 && le_mode) return {complete_graph(3), star_graph(3)};
        return {star_graph(delta)};
    }
    const int j = detail::ceil_half(delta);
    if (nu % j == 0) {
        std::vector<Graph> parts(static_cast<std::size_t>(nu / j), build_J(delta));
        return {disjoint_union(parts)};
    }
    auto [w1, w2] = build_second_extremal(delta, nu);
    return {w1, w2};
}

} // namespace edgelab
