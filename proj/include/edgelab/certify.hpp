#pragma once

#include <atomic>
#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "edgelab/canon.hpp"
#include "edgelab/enumerate.hpp"
#include "edgelab/extremal.hpp"
#include "edgelab/gallai_edmonds.hpp"
#include "edgelab/graph.hpp"
#include "edgelab/matching.hpp"
#include "edgelab/np_exact.hpp"

#include "json.hpp"

namespace edgelab {

enum class TheoremId {
    AlphaNu,
    AlphaDelta,
    DeltaNu,
    DeltaNuUnique,
    EdGalStructure,
    Stability,
    Gallai,
    Brooks,
    Vizing,
    ErdosGallai,
    AlphaNuN2,
};

inline const char* theorem_name(TheoremId id) {
    switch (id) {
    case TheoremId::AlphaNu: return "ALPHA_NU";
    case TheoremId::AlphaDelta: return "ALPHA_DELTA";
    case TheoremId::DeltaNu: return "DELTA_NU";
    case TheoremId::DeltaNuUnique: return "DELTA_NU_UNIQUE";
    case TheoremId::EdGalStructure: return "ED_GAL_STRUCTURE";
    case TheoremId::Stability: return "STABILITY";
    case TheoremId::Gallai: return "GALLAI";
    case TheoremId::Brooks: return "BROOKS";
    case TheoremId::Vizing: return "VIZING";
    case TheoremId::ErdosGallai: return "ERDOS_GALLAI";
    case TheoremId::AlphaNuN2: return "ALPHA_NU_N2";
    }
    return "?";
}

inline std::optional<TheoremId> theorem_from_name(std::string name) {
    for (char& c : name) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    for (TheoremId id : {TheoremId::AlphaNu, TheoremId::AlphaDelta, TheoremId::DeltaNu,
                         TheoremId::DeltaNuUnique, TheoremId::EdGalStructure, TheoremId::Stability,
                         TheoremId::Gallai, TheoremId::Brooks, TheoremId::Vizing,
                         TheoremId::ErdosGallai, TheoremId::AlphaNuN2})
        if (name == theorem_name(id)) return id;
    return std::nullopt;
}

struct GridAxis {
    std::string name;
    int lo = 0, hi = 0;
};
using GridSpec = std::vector<GridAxis>;

/// Parses "alpha=1..4,nu=2" into axes.
inline GridSpec parse_grid(const std::string& text) {
    GridSpec spec;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        const auto eq = part.find('=');
        if (eq == std::string::npos) throw DomainError("grid: expected key=lo..hi in '" + part + "'");
        GridAxis axis;
        axis.name = part.substr(0, eq);
        const std::string range = part.substr(eq + 1);
        const auto dots = range.find("..");
        try {
            if (dots == std::string::npos) {
                axis.lo = axis.hi = std::stoi(range);
            } else {
                axis.lo = std::stoi(range.substr(0, dots));
                axis.hi = std::stoi(range.substr(dots + 2));
            }
        } catch (const std::exception&) {
            throw DomainError("grid: bad range '" + range + "'");
        }
        if (axis.lo > axis.hi) throw DomainError("grid: empty range '" + part + "'");
        spec.push_back(axis);
    }
    if (spec.empty()) throw DomainError("grid: empty specification");
    return spec;
}

struct CellOutcome {
    std::vector<std::pair<std::string, int>> params;
    std::string mode;   // "eq", "le", or "-" for invariant suites
    bool no_isolated = false;
    int n_cap = 0;
    std::uint64_t graphs_scanned = 0;
    std::optional<long long> predicted_bound;
    std::optional<long long> observed_max;
    std::vector<std::string> predicted_extremal;
    std::vector<std::string> observed_extremal;
    std::optional<std::uint64_t> violations;
    std::vector<std::string> counterexamples; // first few offending graphs
    std::string note;
    bool pass = false;
};

struct VerificationReport {
    std::string theorem;
    std::string mode;
    bool no_isolated = false;
    GridSpec grid;
    std::vector<CellOutcome> cells;
    bool all_pass = false;
};

struct CertifyOptions {
    TheoremId theorem = TheoremId::AlphaNu;
    std::optional<GridSpec> grid;
    std::optional<int> n_cap;
    std::optional<ConstraintMode> mode;
    std::optional<bool> no_isolated;
    int jobs = 1;
};

namespace detail {

inline constexpr std::size_t kMaxCounterexamples = 5;

inline std::string mode_name(ConstraintMode m) { return m == ConstraintMode::Exact ? "eq" : "le"; }

inline std::vector<std::string> canonical_set(const std::vector<Graph>& graphs) {
    std::vector<std::string> out;
    for (const Graph& g : graphs) out.push_back(canonical_form(g).g6);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline int default_cap_alpha_nu(int alpha, int nu) { return std::min(2 * nu + alpha + 1, 9); }

inline int default_cap_alpha_delta(int alpha, int delta) {
    return std::min(alpha * (delta + 1) + 2, 9);
}

inline int default_cap_delta_nu(int delta, int nu) {
    int witness = 0;
    for (const Graph& g : predicted_extremal_delta_nu(delta, nu, false))
        witness = std::max(witness, g.vertex_count());
    return std::min(witness + 2, 9);
}

// ---- bound-theorem cells ---------------------------------------------------

inline CellOutcome cell_alpha_nu(int alpha, int nu, ConstraintMode mode, int n_cap) {
    CellOutcome cell;
    cell.params = {{"alpha", alpha}, {"nu", nu}};
    cell.mode = mode_name(mode);
    cell.n_cap = n_cap;
    const BoundCase bc = e1(alpha, nu);
    cell.predicted_bound = bc.value;
    cell.predicted_extremal =
        canonical_set(predicted_extremal_alpha_nu(alpha, nu, mode == ConstraintMode::LessEq));

    GraphFilter filter;
    filter.alpha = alpha;
    filter.nu = nu;
    filter.mode = mode;
    const SearchOutcome found = extremal_search(filter, n_cap);
    cell.graphs_scanned = found.graphs_scanned;
    if (found.empty_space) {
        cell.note = "empty search space";
        return cell;
    }
    cell.observed_max = found.max_edges;
    cell.observed_extremal = found.extremal_g6;
    cell.pass = found.max_edges == bc.value && cell.observed_extremal == cell.predicted_extremal;
    return cell;
}

inline CellOutcome cell_alpha_delta(int alpha, int delta, ConstraintMode mode, int n_cap) {
    CellOutcome cell;
    cell.params = {{"alpha", alpha}, {"delta", delta}};
    cell.mode = mode_name(mode);
    cell.n_cap = n_cap;
    const BoundCase bc = e2(alpha, delta);
    cell.predicted_bound = bc.value;
    cell.predicted_extremal = canonical_set(predicted_extremal_alpha_delta(alpha, delta));

    GraphFilter filter;
    filter.alpha = alpha;
    filter.max_deg = delta;
    filter.mode = mode;
    const SearchOutcome found = extremal_search(filter, n_cap);
    cell.graphs_scanned = found.graphs_scanned;
    if (found.empty_space) {
        cell.note = "empty search space";
        return cell;
    }
    cell.observed_max = found.max_edges;
    cell.observed_extremal = found.extremal_g6;
    cell.pass = found.max_edges == bc.value && cell.observed_extremal == cell.predicted_extremal;
    return cell;
}

inline CellOutcome cell_delta_nu(int delta, int nu, ConstraintMode mode, int n_cap, bool no_isolated,
                                 bool check_uniqueness) {
    CellOutcome cell;
    cell.params = {{"delta", delta}, {"nu", nu}};
    cell.mode = mode_name(mode);
    cell.no_isolated = no_isolated;
    cell.n_cap = n_cap;
    const BoundCase bc = e3(delta, nu);
    cell.predicted_bound = bc.value;

    GraphFilter filter;
    filter.max_deg = delta;
    filter.nu = nu;
    filter.mode = mode;
    filter.no_isolated = no_isolated;
    const SearchOutcome found = extremal_search(filter, n_cap);
    cell.graphs_scanned = found.graphs_scanned;
    if (found.empty_space) {
        cell.note = "empty search space";
        return cell;
    }
    cell.observed_max = found.max_edges;
    cell.observed_extremal = found.extremal_g6;
    cell.pass = found.max_edges == bc.value;
    if (!check_uniqueness) return cell;

    const std::vector<Graph> predicted =
        predicted_extremal_delta_nu(delta, nu, mode == ConstraintMode::LessEq);
    if (bc.regime != BoundRegime::DeltaNuNondivides) {
        cell.predicted_extremal = canonical_set(predicted);
        cell.pass = cell.pass && cell.observed_extremal == cell.predicted_extremal;
    } else {
        // Nondivisible regime: at least two extremal graphs, with two known
        // witnesses; require every witness that fits under the cap.
        std::vector<Graph> in_cap;
        for (const Graph& g : predicted)
            if (g.vertex_count() <= n_cap) in_cap.push_back(g);
        cell.predicted_extremal = canonical_set(in_cap);
        cell.note = "nondivisible regime: predicted witnesses are a subset of the extremal family";
        bool contained = true;
        for (const std::string& s : cell.predicted_extremal)
            contained = contained &&
                        std::find(cell.observed_extremal.begin(), cell.observed_extremal.end(), s) !=
                            cell.observed_extremal.end();
        cell.pass = cell.pass && contained && cell.observed_extremal.size() >= 2;
    }
    return cell;
}

// ---- invariant-suite cells -------------------------------------------------

template <typename Predicate>
CellOutcome cell_invariant(int n, const char* cap_note, int hard_cap, Predicate&& ok) {
    CellOutcome cell;
    cell.params = {{"n", n}};
    cell.mode = "-";
    cell.n_cap = n;
    if (n > hard_cap) {
        cell.note = cap_note;
        cell.violations = 0;
        return cell;
    }
    std::uint64_t violations = 0;
    GraphStream stream(n);
    while (const auto g = stream.next()) {
        ++cell.graphs_scanned;
        if (!ok(*g)) {
            ++violations;
            if (cell.counterexamples.size() < kMaxCounterexamples)
                cell.counterexamples.push_back(g6_encode(*g));
        }
    }
    cell.violations = violations;
    cell.pass = violations == 0;
    return cell;
}

inline bool gallai_holds(const Graph& g) {
    if (!g.is_connected()) return true;
    const int base = matching_number(g);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (matching_number(g.delete_vertex(v)) != base) return true; // premise fails
    return is_factor_critical(g);
}

inline bool is_complete(const Graph& g) {
    return static_cast<long long>(g.edge_count()) == choose2(g.vertex_count());
}

inline bool is_odd_cycle(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 3 || n % 2 == 0 || !g.is_connected()) return false;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

inline bool brooks_holds(const Graph& g) {
    const int chi = chromatic_number(g).count;
    const int delta = g.max_degree();
    if (chi > delta + 1) return false;
    if (g.is_connected() && !is_complete(g) && !is_odd_cycle(g) && chi > delta) return false;
    return true;
}

inline bool vizing_holds(const Graph& g) {
    const int chi_prime = chromatic_index(g).count;
    const int delta = g.edge_count() == 0 ? 0 : g.max_degree();
    if (chi_prime < delta || chi_prime > delta + 1) return false;
    return g.edge_count() <= static_cast<long long>(chi_prime) * matching_number(g);
}

// ---- Erdos-Gallai cells ----------------------------------------------------

inline long long erdos_gallai_bound(int n, int nu) {
    return std::max(choose2(2LL * nu + 1), static_cast<long long>(n - nu) * nu + choose2(nu));
}

inline Graph padded_to(const Graph& g, int n) {
    Graph out = g;
    while (out.vertex_count() < n) out = out.with_vertex(VertexSet{});
    return out;
}

// Attaining graphs, padded with isolated vertices to exactly n, must land in
// the predicted extremal family for their own independence number. The
// padding normalization is what makes the classification exact: a graph can
// attain the bound on fewer than n vertices (K_5 at n=6), and only its
// padded form lies in the stated family.
inline bool attains_alpha_nu_n2(const Graph& g, int n, int nu) {
    const Graph padded = padded_to(g, n);
    if (matching_number(padded) != nu) return false;
    const int alpha = independence_number(padded);
    if (alpha != n - nu && alpha != n - 2 * nu) return false;
    for (const Graph& candidate : predicted_extremal_alpha_nu(alpha, nu))
        if (candidate.vertex_count() == n && is_isomorphic(padded, candidate)) return true;
    return false;
}

inline CellOutcome cell_erdos_gallai(int n, int nu, bool classify_attaining) {
    CellOutcome cell;
    cell.params = {{"n", n}, {"nu", nu}};
    cell.mode = "le";
    cell.n_cap = n;
    const long long bound = erdos_gallai_bound(n, nu);
    const long long split_form = static_cast<long long>(n - nu) * nu + choose2(nu);
    cell.predicted_bound = bound;

    GraphFilter filter;
    filter.nu = nu;
    filter.mode = ConstraintMode::LessEq;
    std::uint64_t violations = 0;
    long long observed = -1;
    const auto flag = [&](const Graph& g) {
        ++violations;
        if (cell.counterexamples.size() < kMaxCounterexamples)
            cell.counterexamples.push_back(g6_encode(g));
    };
    for (int k = 1; k <= n; ++k) {
        GraphStream stream(k, filter);
        while (const auto g = stream.next()) {
            ++cell.graphs_scanned;
            const long long e = g->edge_count();
            observed = std::max(observed, e);
            if (e > bound) flag(*g);
            if (classify_attaining) {
                if (e == bound && !attains_alpha_nu_n2(*g, n, nu)) flag(*g);
            } else {
                // Edge-count lemma: alpha below n-nu and the split form
                // strictly dominant force a strict inequality.
                if (independence_number(*g) < n - nu && choose2(2LL * nu + 1) < split_form &&
                    e >= split_form)
                    flag(*g);
            }
        }
    }
    cell.observed_max = observed;
    cell.violations = violations;
    cell.pass = violations == 0 && observed == bound;
    return cell;
}

} // namespace detail

/// Runs one certification cell grid. Cells execute independently (optionally
/// across a worker pool); the report content does not depend on the job count.
inline VerificationReport run_certification(const CertifyOptions& opts) {
    VerificationReport report;
    report.theorem = theorem_name(opts.theorem);

    const bool is_bound_theorem =
        opts.theorem == TheoremId::AlphaNu || opts.theorem == TheoremId::AlphaDelta ||
        opts.theorem == TheoremId::DeltaNu || opts.theorem == TheoremId::DeltaNuUnique;
    const bool is_eg = opts.theorem == TheoremId::ErdosGallai || opts.theorem == TheoremId::AlphaNuN2;

    ConstraintMode mode = opts.mode.value_or(ConstraintMode::Exact);
    bool no_isolated = opts.no_isolated.value_or(opts.theorem == TheoremId::DeltaNu ||
                                                 opts.theorem == TheoremId::DeltaNuUnique);
    report.mode = is_bound_theorem ? detail::mode_name(mode) : (is_eg ? "le" : "-");
    report.no_isolated = no_isolated;

    GridSpec grid;
    if (opts.grid) {
        grid = *opts.grid;
    } else {
        switch (opts.theorem) {
        case TheoremId::AlphaNu: grid = {{"alpha", 1, 4}, {"nu", 1, 2}}; break;
        case TheoremId::AlphaDelta: grid = {{"alpha", 1, 2}, {"delta", 1, 3}}; break;
        case TheoremId::DeltaNu:
        case TheoremId::DeltaNuUnique: grid = {{"delta", 2, 4}, {"nu", 1, 3}}; break;
        case TheoremId::ErdosGallai:
        case TheoremId::AlphaNuN2: grid = {{"n", 6, 8}, {"nu", 1, 3}}; break;
        default: grid = {{"n", 1, 7}}; break;
        }
    }
    report.grid = grid;

    // materialize the cell list
    std::vector<std::vector<std::pair<std::string, int>>> cells;
    std::vector<std::pair<std::string, int>> current;
    const auto expand = [&](auto&& self, std::size_t axis) -> void {
        if (axis == grid.size()) {
            cells.push_back(current);
            return;
        }
        for (int v = grid[axis].lo; v <= grid[axis].hi; ++v) {
            current.emplace_back(grid[axis].name, v);
            self(self, axis + 1);
            current.pop_back();
        }
    };
    expand(expand, 0);

    const auto param = [](const std::vector<std::pair<std::string, int>>& ps,
                          const std::string& key) -> std::optional<int> {
        for (const auto& [k, v] : ps)
            if (k == key) return v;
        return std::nullopt;
    };

    const auto run_cell = [&](const std::vector<std::pair<std::string, int>>& ps)
        -> std::optional<CellOutcome> {
        switch (opts.theorem) {
        case TheoremId::AlphaNu: {
            const int alpha = param(ps, "alpha").value(), nu = param(ps, "nu").value();
            const int cap = opts.n_cap.value_or(detail::default_cap_alpha_nu(alpha, nu));
            return detail::cell_alpha_nu(alpha, nu, mode, cap);
        }
        case TheoremId::AlphaDelta: {
            const int alpha = param(ps, "alpha").value(), delta = param(ps, "delta").value();
            const int cap = opts.n_cap.value_or(detail::default_cap_alpha_delta(alpha, delta));
            return detail::cell_alpha_delta(alpha, delta, mode, cap);
        }
        case TheoremId::DeltaNu:
        case TheoremId::DeltaNuUnique: {
            const int delta = param(ps, "delta").value(), nu = param(ps, "nu").value();
            const int cap = opts.n_cap.value_or(detail::default_cap_delta_nu(delta, nu));
            return detail::cell_delta_nu(delta, nu, mode, cap, no_isolated,
                                         opts.theorem == TheoremId::DeltaNuUnique);
        }
        case TheoremId::ErdosGallai:
        case TheoremId::AlphaNuN2: {
            const int n = param(ps, "n").value(), nu = param(ps, "nu").value();
            if (2 * nu + 2 > n) return std::nullopt; // outside the theorem's hypotheses
            return detail::cell_erdos_gallai(n, nu, opts.theorem == TheoremId::AlphaNuN2);
        }
        case TheoremId::Gallai: {
            const int n = param(ps, "n").value();
            return detail::cell_invariant(n, "enumeration cap exceeded", detail::kEnumCap,
                                          detail::gallai_holds);
        }
        case TheoremId::Brooks: {
            const int n = param(ps, "n").value();
            return detail::cell_invariant(n, "enumeration cap exceeded", detail::kEnumCap,
                                          detail::brooks_holds);
        }
        case TheoremId::Vizing: {
            const int n = param(ps, "n").value();
            return detail::cell_invariant(n, "chromatic_index edge cap exceeded beyond n=7", 7,
                                          detail::vizing_holds);
        }
        case TheoremId::EdGalStructure: {
            const int n = param(ps, "n").value();
            return detail::cell_invariant(n, "enumeration cap exceeded", detail::kEnumCap,
                                          [](const Graph& g) { return verify_structure_theorem(g); });
        }
        case TheoremId::Stability: {
            const int n = param(ps, "n").value();
            return detail::cell_invariant(n, "enumeration cap exceeded", detail::kEnumCap,
                                          [](const Graph& g) { return verify_stability(g); });
        }
        }
        return std::nullopt;
    };

    // per-cell failures (cap overruns and the like) become failing cells so
    // the rest of the grid still runs
    const auto run_cell_guarded = [&](const std::vector<std::pair<std::string, int>>& ps)
        -> std::optional<CellOutcome> {
        try {
            return run_cell(ps);
        } catch (const std::exception& e) {
            CellOutcome cell;
            cell.params = ps;
            cell.mode = "-";
            cell.note = e.what();
            return cell;
        }
    };

    std::vector<std::optional<CellOutcome>> results(cells.size());
    const int jobs = std::max(1, opts.jobs);
    if (jobs == 1 || cells.size() <= 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) results[i] = run_cell_guarded(cells[i]);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), cells.size());
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                while (true) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= cells.size()) break;
                    results[i] = run_cell_guarded(cells[i]);
                }
            });
        for (std::thread& t : pool) t.join();
    }

    report.all_pass = true;
    for (auto& r : results) {
        if (!r) continue;
        report.all_pass = report.all_pass && r->pass;
        report.cells.push_back(std::move(*r));
    }
    return report;
}

// ---- rendering -------------------------------------------------------------

inline nlohmann::ordered_json report_to_json(const VerificationReport& report) {
    nlohmann::ordered_json j;
    j["tool"] = "edgelab";
    j["theorem"] = report.theorem;
    j["mode"] = report.mode;
    j["no_isolated"] = report.no_isolated;
    nlohmann::ordered_json grid = nlohmann::ordered_json::object();
    for (const GridAxis& axis : report.grid) grid[axis.name] = {axis.lo, axis.hi};
    j["grid"] = grid;
    nlohmann::ordered_json cells = nlohmann::ordered_json::array();
    for (const CellOutcome& cell : report.cells) {
        nlohmann::ordered_json c;
        nlohmann::ordered_json params = nlohmann::ordered_json::object();
        for (const auto& [k, v] : cell.params) params[k] = v;
        c["params"] = params;
        c["mode"] = cell.mode;
        c["n_cap"] = cell.n_cap;
        c["graphs_scanned"] = cell.graphs_scanned;
        if (cell.predicted_bound) c["predicted_bound"] = *cell.predicted_bound;
        if (cell.observed_max) c["observed_max"] = *cell.observed_max;
        if (!cell.predicted_extremal.empty()) c["predicted_extremal"] = cell.predicted_extremal;
        if (!cell.observed_extremal.empty()) c["observed_extremal"] = cell.observed_extremal;
        if (cell.violations) c["violations"] = *cell.violations;
        if (!cell.counterexamples.empty()) c["counterexamples"] = cell.counterexamples;
        if (!cell.note.empty()) c["note"] = cell.note;
        c["pass"] = cell.pass;
        cells.push_back(std::move(c));
    }
    j["cells"] = cells;
    j["cells_total"] = report.cells.size();
    std::size_t passed = 0;
    for (const CellOutcome& cell : report.cells) passed += cell.pass ? 1 : 0;
    j["cells_passed"] = passed;
    j["all_pass"] = report.all_pass;
    return j;
}

inline std::string report_json(const VerificationReport& report) {
    return report_to_json(report).dump(2) + "\n";
}

inline std::string report_text(const VerificationReport& report) {
    std::ostringstream out;
    out << "theorem " << report.theorem << "  mode=" << report.mode
        << "  no_isolated=" << (report.no_isolated ? "yes" : "no") << "\n";
    for (const CellOutcome& cell : report.cells) {
        out << "  ";
        for (const auto& [k, v] : cell.params) out << k << "=" << v << " ";
        out << "n_cap=" << cell.n_cap << " scanned=" << cell.graphs_scanned;
        if (cell.predicted_bound) out << " predicted=" << *cell.predicted_bound;
        if (cell.observed_max) out << " observed=" << *cell.observed_max;
        if (cell.violations) out << " violations=" << *cell.violations;
        if (!cell.observed_extremal.empty()) {
            out << " extremal=[";
            for (std::size_t i = 0; i < cell.observed_extremal.size(); ++i)
                out << (i ? " " : "") << cell.observed_extremal[i];
            out << "]";
        }
        if (!cell.note.empty()) out << " note=\"" << cell.note << "\"";
        out << (cell.pass ? "  PASS" : "  FAIL") << "\n";
    }
    out << (report.all_pass ? "ALL PASS" : "FAILURES PRESENT") << "\n";
    return out.str();
}

} // namespace edgelab
