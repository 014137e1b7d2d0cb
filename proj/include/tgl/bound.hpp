#pragma once

#include <span>
#include <vector>

#include "tgl/tanglegram.hpp"
#include "tgl/tree.hpp"

namespace tgl {

// Partition of one tree's leaves into clades of size at most `cap`: the
// clades at the highest nodes whose leaf count is <= cap (so each defining
// node's parent, if any, has leaf count > cap). Defining nodes may be
// leaves; no defining node is an ancestor of another. Parts are stored
// back to back (offsets[i]..offsets[i+1]) to keep construction linear.
struct CladePartition {
    Side side = Side::left;
    double cap = 0.0;
    std::vector<int> node_ids;     // defining nodes, pre-order
    std::vector<int> offsets;      // part_count()+1 entries into leaves
    std::vector<int> leaves;       // concatenated leaf node ids, stored order
    int part_count() const { return static_cast<int>(node_ids.size()); }
    CladeRef clade(int i) const { return CladeRef{side, node_ids[i]}; }
    std::span<const int> part(int i) const {
        return {leaves.data() + offsets[i], static_cast<size_t>(offsets[i + 1] - offsets[i])};
    }
    int part_size(int i) const { return offsets[i + 1] - offsets[i]; }
};

// Counts of matching edges between each left clade and each right clade.
// Row sums are the left part sizes, column sums the right part sizes.
struct CladeMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<long long> counts;  // row-major
    long long at(int i, int j) const { return counts[static_cast<size_t>(i) * cols + j]; }
};

// Requires cap > 1. Runs in O(n).
CladePartition clade_partition(const BinaryTree& tree, double cap, Side side = Side::left);

// Requires the partitions to cover exactly t's left and right leaf sets.
CladeMatrix clade_matrix(const Tanglegram& t, const CladePartition& left,
                         const CladePartition& right);

// Sum over unordered pairs of left parts and of right parts of
// min(M[i1][j1]*M[i2][j2], M[i1][j2]*M[i2][j1]); never exceeds the tangle
// crossing number.
long long lower_bound_from_matrix(const CladeMatrix& m);

// Requires cap_left, cap_right > 1. O(n^4) overall.
long long crossing_lower_bound(const Tanglegram& t, double cap_left, double cap_right);

}  // namespace tgl
