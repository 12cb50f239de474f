#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "edgelab/canon.hpp"
#include "edgelab/enumerate.hpp"
#include "oracles.hpp"

using namespace edgelab;

TEST_CASE("canonical form is invariant under relabeling") {
    std::mt19937 rng(41);
    for (int n : {1, 2, 3, 5, 7, 9, 12}) {
        for (int trial = 0; trial < 4; ++trial) {
            const Graph g = oracles::random_graph(n, 0.2 + 0.2 * trial, rng);
            const CanonicalForm base = canonical_form(g);
            for (int p = 0; p < 50; ++p)
                CHECK(canonical_form(g.relabeled(oracles::random_permutation(n, rng))) == base);
        }
    }
}

TEST_CASE("canonical form encodes a graph of the same class") {
    std::mt19937 rng(43);
    for (int n = 1; n <= 6; ++n)
        for (int trial = 0; trial < 20; ++trial) {
            const Graph g = oracles::random_graph(n, 0.4, rng);
            const CanonicalForm form = canonical_form(g);
            CHECK(oracles::brute_isomorphic(g6_decode(form.g6), g));
            // the form is one of the orderings' encodings, never an outside string
            bool in_orbit = false;
            std::vector<int> perm(static_cast<std::size_t>(n));
            std::iota(perm.begin(), perm.end(), 0);
            do {
                in_orbit = in_orbit || g6_encode(g.relabeled(perm)) == form.g6;
            } while (!in_orbit && std::next_permutation(perm.begin(), perm.end()));
            CHECK(in_orbit);
        }
}

TEST_CASE("canonical labeling realizes the form") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = oracles::random_graph(8, 0.4, rng);
        const LabeledCanonicalForm lc = canonical_form_labeled(g);
        CHECK(g6_encode(g.relabeled(lc.labeling)) == lc.form.g6);
    }
}

TEST_CASE("canonical form distinguishes small non-isomorphic graphs") {
    CHECK(canonical_form(path_graph(3)) != canonical_form(complete_graph(3)));
    // same degree sums, different graphs
    const Graph c4_k1 = disjoint_union({cycle_graph(4), Graph(1)});
    const Graph star_k1 = disjoint_union({star_graph(3), Graph(1)});
    CHECK_FALSE(oracles::brute_isomorphic(c4_k1, star_k1));
    CHECK(canonical_form(c4_k1) != canonical_form(star_k1));
}

TEST_CASE("is_isomorphic matches brute force on all pairs of classes, n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        std::vector<Graph> reps;
        GraphStream stream(n);
        while (const auto g = stream.next()) reps.push_back(*g);
        std::mt19937 rng(53);
        for (std::size_t i = 0; i < reps.size(); ++i)
            for (std::size_t j = i; j < reps.size(); ++j) {
                const Graph shuffled = reps[j].relabeled(oracles::random_permutation(n, rng));
                CHECK(is_isomorphic(reps[i], shuffled) == oracles::brute_isomorphic(reps[i], shuffled));
            }
    }
}

TEST_CASE("isomorphism examples") {
    CHECK(is_isomorphic(complete_graph(5), complete_graph(5)));
    const Graph pet = oracles::petersen();
    CHECK(is_isomorphic(pet, pet.relabeled({9, 8, 7, 6, 5, 4, 3, 2, 1, 0})));
    CHECK_FALSE(is_isomorphic(cycle_graph(6), disjoint_union({complete_graph(3), complete_graph(3)})));
}

TEST_CASE("canonical form is idempotent under decode and re-encode") {
    std::mt19937 rng(59);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = oracles::random_graph(7, 0.45, rng);
        const CanonicalForm form = canonical_form(g);
        CHECK(canonical_form(g6_decode(form.g6)) == form);
        CHECK(g6_encode(g6_decode(form.g6)) == form.g6);
    }
}

TEST_CASE("highly symmetric graphs stay cheap") {
    CHECK(canonical_form(complete_graph(16)).g6 == g6_encode(complete_graph(16)));
    CHECK(canonical_form(Graph(16)).g6 == g6_encode(Graph(16)));
    CHECK(canonical_form(complete_bipartite(8, 8)).g6.size() == g6_encode(complete_bipartite(8, 8)).size());
}

TEST_CASE("canonical labeling cap") {
    CHECK_THROWS_AS(canonical_form(Graph(17)), CapacityError);
    CHECK_THROWS_AS(is_isomorphic(Graph(17), Graph(17)), CapacityError);
}
