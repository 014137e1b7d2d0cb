#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "test_helpers.hpp"
#include "tgl/bound.hpp"
#include "tgl/families.hpp"
#include "tgl/io.hpp"
#include "tgl/layout.hpp"
#include "tgl/sampler.hpp"
#include "tgl/solver.hpp"

using namespace tgl;

namespace {

std::vector<std::set<std::string>> part_labels(const BinaryTree& t, const CladePartition& p) {
    std::vector<std::set<std::string>> out;
    for (int i = 0; i < p.part_count(); ++i) {
        std::set<std::string> labels;
        for (int leaf : p.part(i)) labels.insert(t.label(leaf));
        out.push_back(std::move(labels));
    }
    return out;
}

bool is_ancestor(const BinaryTree& t, int a, int b) {  // a strict ancestor of b
    for (int v = t.parent(b); v >= 0; v = t.parent(v))
        if (v == a) return true;
    return false;
}

void check_partition_invariants(const BinaryTree& t, const CladePartition& p, double cap) {
    // Disjoint cover by clades of size at most cap, with maximal defining
    // nodes and no nesting.
    std::set<int> covered;
    REQUIRE(p.offsets.size() == p.node_ids.size() + 1);
    for (int i = 0; i < p.part_count(); ++i) {
        const int v = p.node_ids[i];
        const auto [lo, hi] = t.leaf_span(v);
        CHECK(p.part_size(i) == hi - lo);
        CHECK(static_cast<double>(p.part_size(i)) <= cap);
        CHECK(t.subtree_leaf_count(v) == p.part_size(i));
        if (t.parent(v) >= 0)
            CHECK(static_cast<double>(t.subtree_leaf_count(t.parent(v))) > cap);
        for (int leaf : p.part(i)) CHECK(covered.insert(leaf).second);
    }
    CHECK(static_cast<int>(covered.size()) == t.leaf_count());
    for (size_t i = 0; i < p.node_ids.size(); ++i)
        for (size_t j = 0; j < p.node_ids.size(); ++j)
            if (i != j) CHECK(!is_ancestor(t, p.node_ids[i], p.node_ids[j]));
}

}  // namespace

TEST_CASE("clade partition of the size-6 caterpillar with cap 2") {
    const CladePartition p = clade_partition(caterpillar(6), 2.0);
    const auto labels = part_labels(caterpillar(6), p);
    REQUIRE(labels.size() == 5);
    CHECK(labels[0] == std::set<std::string>{"u1"});
    CHECK(labels[1] == std::set<std::string>{"u2"});
    CHECK(labels[2] == std::set<std::string>{"u3"});
    CHECK(labels[3] == std::set<std::string>{"u4"});
    CHECK(labels[4] == std::set<std::string>{"u5", "u6"});
}

TEST_CASE("trivial and invalid caps") {
    const BinaryTree t = caterpillar(5);
    const CladePartition whole = clade_partition(t, 5.0);
    REQUIRE(whole.part_count() == 1);
    CHECK(whole.part_size(0) == 5);
    CHECK(whole.node_ids[0] == t.root());
    CHECK(whole.clade(0).node == t.root());
    CHECK(whole.clade(0).side == Side::left);

    CHECK_THROWS_AS(clade_partition(t, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(clade_partition(t, 0.5), std::invalid_argument);

    // A single-leaf tree has the one-part partition.
    Rng rng(1);
    const BinaryTree leaf = random_tree(1, rng);
    CHECK(clade_partition(leaf, 2.0).part_count() == 1);
}

TEST_CASE("partition invariants hold for random trees and cap sweep") {
    Rng rng(42);
    for (int i = 0; i < 40; ++i) {
        const int n = 2 + static_cast<int>(rng.below(60));
        const BinaryTree t = random_tree(n, rng);
        for (double cap : {2.0, std::sqrt(static_cast<double>(n)), n / 2.0,
                           static_cast<double>(n)}) {
            if (cap <= 1.0) continue;
            check_partition_invariants(t, clade_partition(t, cap), cap);
        }
    }
}

TEST_CASE("grid trees decompose into their built-in clades at cap k") {
    for (int k : {2, 3, 4}) {
        const Tanglegram t = grid_family_caterpillar(k);
        for (const BinaryTree* tree : {&t.left(), &t.right()}) {
            const CladePartition p = clade_partition(*tree, static_cast<double>(k));
            REQUIRE(p.part_count() == k);
            for (int i = 0; i < p.part_count(); ++i) CHECK(p.part_size(i) == k);
        }
    }
}

TEST_CASE("clade matrix entries and marginals") {
    {
        const Tanglegram t = testing::random_tanglegram_of_size(7, 77);
        const CladePartition l = clade_partition(t.left(), 7.0, Side::left);
        const CladePartition r = clade_partition(t.right(), 7.0, Side::right);
        const CladeMatrix m = clade_matrix(t, l, r);
        REQUIRE(m.rows == 1);
        REQUIRE(m.cols == 1);
        CHECK(m.at(0, 0) == 7);
    }
    {
        const Tanglegram t = grid_family_caterpillar(3);
        const CladeMatrix m =
            clade_matrix(t, clade_partition(t.left(), 3.0, Side::left),
                         clade_partition(t.right(), 3.0, Side::right));
        REQUIRE(m.rows == 3);
        REQUIRE(m.cols == 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) CHECK(m.at(i, j) == 1);
    }
    {
        const Tanglegram p4 = caterpillar_tanglegram(4);
        const CladeMatrix m =
            clade_matrix(p4, clade_partition(p4.left(), 2.0, Side::left),
                         clade_partition(p4.right(), 2.0, Side::right));
        std::vector<long long> row_sums(m.rows, 0), col_sums(m.cols, 0);
        for (int i = 0; i < m.rows; ++i)
            for (int j = 0; j < m.cols; ++j) {
                row_sums[i] += m.at(i, j);
                col_sums[j] += m.at(i, j);
            }
        std::sort(row_sums.begin(), row_sums.end());
        std::sort(col_sums.begin(), col_sums.end());
        CHECK(row_sums == std::vector<long long>{1, 1, 2});
        CHECK(col_sums == std::vector<long long>{1, 1, 2});
    }
    // Marginals on random instances.
    for (int i = 0; i < 10; ++i) {
        const Tanglegram t = testing::random_tanglegram_of_size(12, 600 + i);
        const CladePartition l = clade_partition(t.left(), 3.0, Side::left);
        const CladePartition r = clade_partition(t.right(), 4.0, Side::right);
        const CladeMatrix m = clade_matrix(t, l, r);
        long long total = 0;
        for (int a = 0; a < m.rows; ++a) {
            long long row = 0;
            for (int b = 0; b < m.cols; ++b) row += m.at(a, b);
            CHECK(row == static_cast<long long>(l.part_size(a)));
            total += row;
        }
        for (int b = 0; b < m.cols; ++b) {
            long long col = 0;
            for (int a = 0; a < m.rows; ++a) col += m.at(a, b);
            CHECK(col == static_cast<long long>(r.part_size(b)));
        }
        CHECK(total == 12);
    }

    // Partitions must belong to the tanglegram's own trees. (A caterpillar
    // and a balanced tree of equal size lay their nodes out differently, so
    // the structural check fires.)
    const Tanglegram t = Tanglegram::from_trees(build_tree("((a,b),(c,d))"),
                                                build_tree("((a,b),(c,d))"));
    const BinaryTree cat = Tanglegram::from_trees(caterpillar(4, "w"), caterpillar(4, "w")).left();
    CHECK_THROWS_AS(clade_matrix(t, clade_partition(cat, 2.0, Side::left),
                                 clade_partition(t.right(), 2.0, Side::right)),
                    std::invalid_argument);
    CHECK_THROWS_AS(clade_matrix(t, clade_partition(caterpillar(6), 2.0, Side::left),
                                 clade_partition(t.right(), 2.0, Side::right)),
                    std::invalid_argument);
}

TEST_CASE("lower bound values") {
    // A trivial partition on either side gives 0.
    const Tanglegram p8 = caterpillar_tanglegram(8);
    CHECK(crossing_lower_bound(p8, 8.0, 2.0) == 0);
    CHECK(crossing_lower_bound(p8, 2.0, 8.0) == 0);

    // The grid family with caps sqrt(n) realizes its structural bound.
    for (int k : {2, 3, 4}) {
        const Tanglegram t = grid_family_caterpillar(k);
        const double cap = std::sqrt(static_cast<double>(t.size()));
        const long long quad = pairs_of(k) * pairs_of(k);
        CHECK(crossing_lower_bound(t, cap, cap) == quad);
    }

    CHECK_THROWS_AS(crossing_lower_bound(p8, 1.0, 2.0), std::invalid_argument);
}

TEST_CASE("lower bound on the size-8 caterpillar tanglegram with caps 2") {
    const Tanglegram p8 = caterpillar_tanglegram(8);
    const long long bound = crossing_lower_bound(p8, 2.0, 2.0);
    CHECK(bound >= 0);
    CHECK(bound <= exact_crt(p8).crt);  // crt is 5; only soundness is promised
}

TEST_CASE("sampled instances keep the bound below the exact value") {
    SampleConfig cfg;
    cfg.n = 9;
    cfg.seed = 12321;
    cfg.count = 100;
    for (int i = 0; i < 100; ++i) {
        const Tanglegram t = random_tanglegram(cfg, i);
        CHECK(crossing_lower_bound(t, 3.0, 3.0) <= exact_crt(t).crt);
    }
}

TEST_CASE("lower bound is sound against the exact solver") {
    for (int n = 2; n <= 9; ++n) {
        for (int i = 0; i < 6; ++i) {
            const Tanglegram t = testing::random_tanglegram_of_size(n, 700 + 10 * n + i);
            const long long exact = brute_force_crt(t).crossings;
            for (double a : {2.0, std::sqrt(static_cast<double>(n)), n / 2.0,
                             static_cast<double>(n)}) {
                for (double b : {2.0, std::sqrt(static_cast<double>(n)), n / 2.0,
                                 static_cast<double>(n)}) {
                    if (a <= 1.0 || b <= 1.0) continue;
                    CHECK(crossing_lower_bound(t, a, b) <= exact);
                }
            }
        }
    }
}

TEST_CASE("bound reads structure, not drawings") {
    Rng rng(246);
    for (int i = 0; i < 8; ++i) {
        const Tanglegram t = testing::random_tanglegram_of_size(14, 800 + i);
        const long long reference = crossing_lower_bound(t, 4.0, 7.0);
        const Tanglegram redrawn = parse_tanglegram(serialize_tanglegram(Tanglegram::from_trees(
            reorder_children(t.left(), testing::random_switch_vector(t.left(), rng)),
            reorder_children(t.right(), testing::random_switch_vector(t.right(), rng)))));
        CHECK(crossing_lower_bound(redrawn, 4.0, 7.0) == reference);
    }
}
