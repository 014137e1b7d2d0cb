#include <map>
#include <string>

#include "doctest.h"
#include "test_helpers.hpp"
#include "tgl/io.hpp"
#include "tgl/sampler.hpp"

using namespace tgl;

TEST_CASE("samples are deterministic in (seed, index)") {
    SampleConfig cfg;
    cfg.n = 9;
    cfg.seed = 0xfeedbeef;
    const std::string a = serialize_tanglegram(random_tanglegram(cfg, 3));
    const std::string b = serialize_tanglegram(random_tanglegram(cfg, 3));
    CHECK(a == b);
    CHECK(a != serialize_tanglegram(random_tanglegram(cfg, 4)));

    cfg.seed = 0xfeedbeee;
    CHECK(a != serialize_tanglegram(random_tanglegram(cfg, 3)));

    cfg.distribution = Distribution::plane_uniform;
    cfg.seed = 0xfeedbeef;
    const std::string c = serialize_tanglegram(random_tanglegram(cfg, 3));
    CHECK(c == serialize_tanglegram(random_tanglegram(cfg, 3)));
}

TEST_CASE("size-2 sample is the unique size-2 tanglegram") {
    SampleConfig cfg;
    cfg.n = 2;
    cfg.seed = 5;
    const std::string canon = canonical_form(random_tanglegram(cfg, 0));
    for (int i = 1; i < 10; ++i) CHECK(canonical_form(random_tanglegram(cfg, i)) == canon);
}

TEST_CASE("random_tree rejects n < 1 and satisfies the node count law") {
    Rng rng(9);
    CHECK_THROWS_AS(random_tree(0, rng), std::invalid_argument);
    CHECK(random_tree(1, rng).node_count() == 1);
    for (int n : {2, 5, 30}) {
        const BinaryTree t = random_tree(n, rng);
        CHECK(t.leaf_count() == n);
        CHECK(t.node_count() == 2 * n - 1);
    }
}

TEST_CASE("grafting sampler is uniform over labeled topologies") {
    const int draws = 100000;

    {
        Rng rng(20240301);
        std::map<std::string, int> freq;
        for (int i = 0; i < draws; ++i) ++freq[testing::topology_key(random_tree(3, rng))];
        REQUIRE(freq.size() == 3);  // (2*3-3)!! labeled topologies
        for (const auto& [key, count] : freq)
            CHECK(std::abs(count / static_cast<double>(draws) - 1.0 / 3) < 0.02);
    }
    {
        Rng rng(20240302);
        std::map<std::string, int> freq;
        for (int i = 0; i < draws; ++i) ++freq[testing::topology_key(random_tree(4, rng))];
        REQUIRE(freq.size() == 15);  // (2*4-3)!!
        for (const auto& [key, count] : freq)
            CHECK(std::abs(count / static_cast<double>(draws) - 1.0 / 15) < 0.02);
    }
}

TEST_CASE("plane sampler is uniform over plane trees") {
    const int draws = 100000;
    Rng rng(20240303);
    std::map<std::string, int> freq;
    for (int i = 0; i < draws; ++i) ++freq[serialize_tree(random_plane_tree(3, rng))];
    REQUIRE(freq.size() == 2);  // Catalan(2) plane shapes, labels positional
    for (const auto& [key, count] : freq)
        CHECK(std::abs(count / static_cast<double>(draws) - 0.5) < 0.02);

    // Larger sanity check: 5 plane shapes at n = 4.
    std::map<std::string, int> freq4;
    for (int i = 0; i < draws; ++i) ++freq4[serialize_tree(random_plane_tree(4, rng))];
    REQUIRE(freq4.size() == 5);
    for (const auto& [key, count] : freq4)
        CHECK(std::abs(count / static_cast<double>(draws) - 0.2) < 0.02);
}

TEST_CASE("generated tanglegrams satisfy the core invariants") {
    for (int i = 0; i < 30; ++i) {
        Rng sizes(50 + i);
        const int n = 1 + static_cast<int>(sizes.below(40));
        const Tanglegram t = testing::random_tanglegram_of_size(n, 1000 + i);
        CHECK(t.size() == n);
        CHECK(t.left().node_count() == 2 * n - 1);
        CHECK(t.right().node_count() == 2 * n - 1);
        CHECK(static_cast<int>(t.edges().size()) == n);
        // from_trees already enforces the bijection; spot-check inverses.
        for (const MatchingEdge& e : t.edges()) {
            CHECK(t.right_partner(e.left_leaf) == e.right_leaf);
            CHECK(t.left_partner(e.right_leaf) == e.left_leaf);
        }
    }
}

TEST_CASE("bounded draws reject an empty range") {
    Rng rng(3);
    CHECK_THROWS_AS(rng.below(0), std::invalid_argument);
}
