#pragma once

// Shared oracles and generators for the test suites. The oracles stay
// deliberately naive and independent of the library's optimized paths.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tgl/layout.hpp"
#include "tgl/sampler.hpp"
#include "tgl/sampler_rng.hpp"
#include "tgl/tanglegram.hpp"

namespace tgl::testing {

// All-pairs crossing count straight from the definition: two matching edges
// cross iff their endpoint ranks disagree between the sides.
inline long long naive_crossing_count(const Tanglegram& t, const TanglegramLayout& d) {
    const LeafOrder lo = leaf_order(t.left(), d.left);
    const LeafOrder ro = leaf_order(t.right(), d.right);
    const auto& edges = t.edges();
    long long count = 0;
    for (size_t i = 0; i < edges.size(); ++i) {
        for (size_t j = i + 1; j < edges.size(); ++j) {
            const long long dl = lo.rank(edges[i].left_leaf) - lo.rank(edges[j].left_leaf);
            const long long dr = ro.rank(edges[i].right_leaf) - ro.rank(edges[j].right_leaf);
            if (dl * dr < 0) ++count;
        }
    }
    return count;
}

// Switch vector whose bits are the binary digits of m, most significant
// first (ascending m = lexicographic order).
inline SwitchVector switch_vector_from_index(std::uint64_t m, int size) {
    SwitchVector s(size);
    for (int i = 0; i < size; ++i) s.set(i, (m >> (size - 1 - i)) & 1);
    return s;
}

// Exhaustive right-side minimum for a fixed left vector.
inline long long right_enumeration_minimum(const Tanglegram& t, const SwitchVector& left) {
    const int k = t.right().internal_count();
    long long best = -1;
    for (std::uint64_t m = 0; m < (1ull << k); ++m) {
        const long long c =
            crossing_count(t, TanglegramLayout{left, switch_vector_from_index(m, k)});
        if (best < 0 || c < best) best = c;
    }
    return best;
}

inline SwitchVector random_switch_vector(const BinaryTree& t, Rng& rng) {
    SwitchVector s(t.internal_count());
    for (int i = 0; i < s.size(); ++i) s.set(i, rng.below(2) == 1);
    return s;
}

inline Tanglegram random_tanglegram_of_size(int n, std::uint64_t seed, int index = 0) {
    SampleConfig cfg;
    cfg.n = n;
    cfg.seed = seed;
    return random_tanglegram(cfg, index);
}

// Label-aware canonical key of a leaf-labeled topology (child order
// ignored); used for uniformity counting.
inline std::string topology_key(const BinaryTree& t, int v) {
    if (t.is_leaf(v)) return t.label(v);
    std::string a = topology_key(t, t.left_child(v));
    std::string b = topology_key(t, t.right_child(v));
    if (b < a) std::swap(a, b);
    return "(" + a + "," + b + ")";
}

inline std::string topology_key(const BinaryTree& t) { return topology_key(t, t.root()); }

// Sorted leaf depths, for checking caterpillar profiles.
inline std::vector<int> leaf_depths(const BinaryTree& t) {
    std::vector<int> depths;
    for (int v : t.leaves_in_order()) depths.push_back(t.depth(v));
    std::sort(depths.begin(), depths.end());
    return depths;
}

}  // namespace tgl::testing
