#pragma once

#include <cstdint>
#include <vector>

#include "tgl/tanglegram.hpp"
#include "tgl/tree.hpp"

namespace tgl {

// One orientation bit per internal node of one tree, aligned to
// BinaryTree::internal_nodes(): bit 0 keeps the stored child order at that
// node, bit 1 swaps it.
class SwitchVector {
public:
    SwitchVector() = default;
    explicit SwitchVector(int size, bool ones = false) : bits_(size, ones ? 1 : 0) {}
    static SwitchVector zeros(const BinaryTree& t) { return SwitchVector(t.internal_count()); }
    static SwitchVector ones(const BinaryTree& t) { return SwitchVector(t.internal_count(), true); }

    int size() const { return static_cast<int>(bits_.size()); }
    bool bit(int i) const { return bits_[i] != 0; }
    void set(int i, bool b) { bits_[i] = b ? 1 : 0; }
    void flip_all();

    std::string to_string() const;  // "0110..." in slot order
    friend bool operator==(const SwitchVector&, const SwitchVector&) = default;
    friend auto operator<=>(const SwitchVector& a, const SwitchVector& b) { return a.bits_ <=> b.bits_; }

private:
    std::vector<std::uint8_t> bits_;
};

// A combinatorial drawing of a tanglegram: one switch vector per tree.
struct TanglegramLayout {
    SwitchVector left;
    SwitchVector right;
    friend bool operator==(const TanglegramLayout&, const TanglegramLayout&) = default;
};

// Top-to-bottom order of one tree's leaves induced by a layout. Every clade
// occupies a contiguous block of ranks.
class LeafOrder {
public:
    LeafOrder() = default;

    // Wraps an explicit sequence of leaf node ids; throws if it is not a
    // permutation of t's leaves realizable by some switch vector.
    static LeafOrder from_sequence(const BinaryTree& t, std::vector<int> leaves);

    int size() const { return static_cast<int>(leaves_.size()); }
    const std::vector<int>& leaves() const { return leaves_; }
    // Rank (0-based, top to bottom) of a leaf node id.
    int rank(int leaf) const { return rank_[leaf]; }

private:
    friend LeafOrder leaf_order(const BinaryTree&, const SwitchVector&);
    std::vector<int> leaves_;
    std::vector<int> rank_;  // indexed by node id
};

// Depth-first leaf order: at each internal node the stored children are
// visited in order when its bit is 0 and swapped when it is 1.
LeafOrder leaf_order(const BinaryTree& t, const SwitchVector& s);

// Number of unordered matching-edge pairs whose endpoint orders disagree
// between the two sides; counted as inversions in O(n log n).
long long crossing_count(const Tanglegram& t, const TanglegramLayout& d);

// All right bits complemented, left unchanged. An involution; summing the
// crossing counts of d and mirror_right(d) gives C(n,2).
TanglegramLayout mirror_right(TanglegramLayout d);

struct BruteForceResult {
    long long crossings = 0;
    TanglegramLayout layout;  // lexicographically least optimum (left bits, then right)
};

// Exact minimum over all 2^(n-1) * 2^(n-1) layouts. Throws beyond `cap`.
BruteForceResult brute_force_crt(const Tanglegram& t, int cap = 10);

// Copy of the tree with the stored child order flipped wherever the switch
// bit is 1 (node ids preserved). leaf_order(result, zeros) equals
// leaf_order(t, s).
BinaryTree reorder_children(const BinaryTree& t, const SwitchVector& s);

inline long long pairs_of(long long n) { return n * (n - 1) / 2; }

}  // namespace tgl
