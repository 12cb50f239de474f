#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <sstream>

#include "edgelab/canon.hpp"
#include "edgelab/enumerate.hpp"
#include "edgelab/extremal.hpp"
#include "oracles.hpp"

using namespace edgelab;

namespace {

std::vector<Graph> collect(int n, GraphFilter filter = {}) {
    std::vector<Graph> out;
    GraphStream stream(n, filter);
    while (const auto g = stream.next()) out.push_back(*g);
    return out;
}

} // namespace

TEST_CASE("unfiltered class counts match the frozen golden values") {
    const std::vector<std::size_t> expected = {1, 2, 4, 11, 34, 156, 1044};
    for (int n = 1; n <= 7; ++n) CHECK(collect(n).size() == expected[static_cast<std::size_t>(n - 1)]);
}

TEST_CASE("connected and isolated-free class counts") {
    // cross-checks the generator against two independent well-known series
    const std::vector<std::size_t> connected = {1, 1, 2, 6, 21, 112, 853};
    // adding an isolated vertex embeds classes(n-1) into classes(n), so the
    // isolated-free count is classes(n) - classes(n-1)
    const std::vector<std::size_t> isolated_free = {0, 1, 2, 7, 23, 122, 888};
    for (int n = 1; n <= 7; ++n) {
        std::size_t conn = 0, no_iso = 0;
        for (const Graph& g : collect(n)) {
            if (g.is_connected()) ++conn;
            if (g.isolated_vertices().empty()) ++no_iso;
        }
        CHECK(conn == connected[static_cast<std::size_t>(n - 1)]);
        CHECK(no_iso == isolated_free[static_cast<std::size_t>(n - 1)]);
    }
}

TEST_CASE("stream equals the labeled-enumeration oracle") {
    SECTION("brute-force canonical dedup, n <= 5") {
        for (int n = 1; n <= 5; ++n) {
            std::set<std::string> from_stream;
            for (const Graph& g : collect(n)) from_stream.insert(oracles::brute_min_g6(g));
            CHECK(from_stream == oracles::labeled_dedup_classes(n, true));
        }
    }
    SECTION("library canonical dedup, n = 6") {
        std::set<std::string> from_stream;
        for (const Graph& g : collect(6)) from_stream.insert(canonical_form(g).g6);
        CHECK(from_stream == oracles::labeled_dedup_classes(6, false));
    }
}

TEST_CASE("streams yield one representative per class, no repeats") {
    for (int n = 1; n <= 7; ++n) {
        std::set<std::string> forms;
        for (const Graph& g : collect(n)) CHECK(forms.insert(canonical_form(g).g6).second);
    }
}

TEST_CASE("filter examples") {
    GraphFilter max_deg_one;
    max_deg_one.max_deg = 1;
    max_deg_one.mode = ConstraintMode::LessEq;
    CHECK(collect(3, max_deg_one).size() == 2); // edgeless; one edge + isolated
}

TEST_CASE("filter soundness and completeness") {
    GraphFilter filter;
    filter.nu = 2;
    filter.max_deg = 3;
    filter.mode = ConstraintMode::LessEq;
    for (int n = 4; n <= 6; ++n) {
        std::size_t direct = 0;
        for (const Graph& g : collect(n))
            if (g.max_degree() <= 3 && matching_number(g) <= 2) ++direct;
        const auto filtered = collect(n, filter);
        CHECK(filtered.size() == direct);
        for (const Graph& g : filtered) {
            CHECK(g.max_degree() <= 3);
            CHECK(matching_number(g) <= 2);
        }
    }
}

TEST_CASE("exact-mode filter") {
    GraphFilter filter;
    filter.alpha = 2;
    filter.nu = 2;
    filter.mode = ConstraintMode::Exact;
    for (const Graph& g : collect(5, filter)) {
        CHECK(independence_number(g) == 2);
        CHECK(matching_number(g) == 2);
    }
}

TEST_CASE("no-isolated flag") {
    GraphFilter filter;
    filter.no_isolated = true;
    for (const Graph& g : collect(5, filter)) CHECK(g.isolated_vertices().empty());
    std::size_t with_isolated = 0;
    for (const Graph& g : collect(5))
        if (!g.isolated_vertices().empty()) ++with_isolated;
    CHECK(collect(5, filter).size() + with_isolated == 34);
}

TEST_CASE("two runs yield identical streams") {
    GraphFilter filter;
    filter.max_deg = 3;
    filter.mode = ConstraintMode::LessEq;
    const auto a = collect(6, filter);
    const auto b = collect(6, filter);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("yielded counter") {
    GraphStream stream(4);
    std::uint64_t pulls = 0;
    while (stream.next()) ++pulls;
    CHECK(pulls == 11);
    CHECK(stream.yielded() == 11);
}

TEST_CASE("enumeration caps") {
    CHECK_THROWS_AS(GraphStream(0), CapacityError);
    CHECK_THROWS_AS(GraphStream(10), CapacityError);
    CHECK_THROWS_AS(extremal_search(GraphFilter{}, 10), CapacityError);
}

TEST_CASE("extremal search examples") {
    SECTION("alpha = nu = 1 gives the triangle") {
        GraphFilter f;
        f.alpha = 1;
        f.nu = 1;
        f.mode = ConstraintMode::Exact;
        const SearchOutcome out = extremal_search(f, 4);
        CHECK_FALSE(out.empty_space);
        CHECK(out.max_edges == 3);
        REQUIRE(out.extremal_g6.size() == 1);
        CHECK(out.extremal_g6[0] == canonical_form(complete_graph(3)).g6);
    }
    SECTION("delta=3, nu=1, exact mode: only the star") {
        GraphFilter f;
        f.max_deg = 3;
        f.nu = 1;
        f.mode = ConstraintMode::Exact;
        f.no_isolated = true;
        const SearchOutcome out = extremal_search(f, 5);
        CHECK(out.max_edges == 3);
        REQUIRE(out.extremal_g6.size() == 1);
        CHECK(out.extremal_g6[0] == canonical_form(star_graph(3)).g6);
    }
    SECTION("delta<=3, nu<=1: both the triangle and the star") {
        GraphFilter f;
        f.max_deg = 3;
        f.nu = 1;
        f.mode = ConstraintMode::LessEq;
        f.no_isolated = true;
        const SearchOutcome out = extremal_search(f, 5);
        CHECK(out.max_edges == 3);
        REQUIRE(out.extremal_g6.size() == 2);
        std::set<std::string> expected = {canonical_form(complete_graph(3)).g6,
                                          canonical_form(star_graph(3)).g6};
        CHECK(std::set<std::string>(out.extremal_g6.begin(), out.extremal_g6.end()) == expected);
    }
    SECTION("empty space is reported, not thrown") {
        GraphFilter f;
        f.max_deg = 3;
        f.mode = ConstraintMode::Exact;
        const SearchOutcome out = extremal_search(f, 3); // needs 4 vertices
        CHECK(out.empty_space);
        CHECK(out.graphs_scanned == 0);
    }
}

TEST_CASE("ingestion mode matches generation") {
    GraphFilter f;
    f.alpha = 2;
    f.nu = 2;
    f.mode = ConstraintMode::Exact;
    const SearchOutcome generated = extremal_search(f, 6);

    std::stringstream buf;
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : collect(n)) g6_write_line(buf, g);
    const SearchOutcome ingested = extremal_search_stream(buf, f);

    CHECK(ingested.max_edges == generated.max_edges);
    CHECK(ingested.extremal_g6 == generated.extremal_g6);
    CHECK(ingested.graphs_scanned == generated.graphs_scanned);
}
