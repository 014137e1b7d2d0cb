#include "tgl/bound.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace tgl {

CladePartition clade_partition(const BinaryTree& tree, double cap, Side side) {
    if (!(cap > 1.0)) throw std::invalid_argument("clade_partition: cap must be > 1");
    if (tree.empty()) throw std::invalid_argument("clade_partition: empty tree");

    CladePartition partition;
    partition.side = side;
    partition.cap = cap;

    // A node defines a part when its leaf count fits the cap but its
    // parent's does not. Scanning the pre-order sequence and skipping
    // selected subtrees wholesale gives that directly: a node is reached
    // only when every ancestor was over the cap. Selected clades appear in
    // leaf order, so the concatenated leaf ids are just leaves_in_order().
    const std::vector<int>& pre = tree.preorder();
    const std::vector<int>& sizes = tree.preorder_leaf_counts();
    const std::vector<int>& parent_sizes = tree.preorder_parent_leaf_counts();
    partition.leaves = tree.leaves_in_order();
    // Integer cap: sizes are integers, so size <= cap iff size <= floor(cap).
    const int icap =
        static_cast<int>(std::min(cap, static_cast<double>(tree.leaf_count())));
    const int count = tree.node_count();
    partition.node_ids.resize(tree.leaf_count());
    partition.offsets.resize(tree.leaf_count() + 1);
    // A node is selected iff it fits the cap and its parent does not; the
    // selected clades appear in pre-order and tile the leaf sequence.
    // Unconditional stores with a compaction counter keep the iterations
    // independent of one another.
    int k = 0;
    for (int i = 0; i < count; ++i) {
        partition.node_ids[k] = pre[i];
        partition.offsets[k + 1] = sizes[i];
        k += static_cast<int>(sizes[i] <= icap && parent_sizes[i] > icap);
    }
    partition.node_ids.resize(k);
    partition.offsets.resize(k + 1);
    partition.offsets[0] = 0;
    for (int j = 1; j <= k; ++j) partition.offsets[j] += partition.offsets[j - 1];
    return partition;
}

CladeMatrix clade_matrix(const Tanglegram& t, const CladePartition& left,
                         const CladePartition& right) {
    if (left.side != Side::left || right.side != Side::right)
        throw std::invalid_argument("clade_matrix: partitions on the wrong sides");

    auto part_index = [](const BinaryTree& tree, const CladePartition& p) {
        std::vector<int> index(tree.node_count(), -1);
        int covered = 0;
        if (p.offsets.size() != p.node_ids.size() + 1)
            throw std::invalid_argument("clade_matrix: malformed partition");
        for (int i = 0; i < p.part_count(); ++i) {
            // Each part must be exactly the clade at its defining node, in
            // this tree.
            const int v = p.node_ids[i];
            if (v < 0 || v >= tree.node_count())
                throw std::invalid_argument("clade_matrix: partition does not fit the tree");
            const auto [lo, hi] = tree.leaf_span(v);
            const auto part = p.part(i);
            if (hi - lo != static_cast<int>(part.size()))
                throw std::invalid_argument("clade_matrix: partition does not fit the tree");
            for (int k = 0; k < hi - lo; ++k) {
                const int leaf = part[k];
                if (leaf != tree.leaves_in_order()[lo + k] || index[leaf] != -1)
                    throw std::invalid_argument("clade_matrix: partition does not fit the tree");
                index[leaf] = i;
                ++covered;
            }
        }
        if (covered != tree.leaf_count())
            throw std::invalid_argument("clade_matrix: partition does not cover the leaves");
        return index;
    };
    const std::vector<int> left_part = part_index(t.left(), left);
    const std::vector<int> right_part = part_index(t.right(), right);

    CladeMatrix m;
    m.rows = left.part_count();
    m.cols = right.part_count();
    m.counts.assign(static_cast<size_t>(m.rows) * m.cols, 0);
    for (const MatchingEdge& e : t.edges())
        ++m.counts[static_cast<size_t>(left_part[e.left_leaf]) * m.cols +
                   right_part[e.right_leaf]];
    return m;
}

long long lower_bound_from_matrix(const CladeMatrix& m) {
    // Unordered pairs only: i1 < i2 and j1 < j2.
    long long total = 0;
    for (int i1 = 0; i1 + 1 < m.rows; ++i1) {
        for (int i2 = i1 + 1; i2 < m.rows; ++i2) {
            const long long* row1 = &m.counts[static_cast<size_t>(i1) * m.cols];
            const long long* row2 = &m.counts[static_cast<size_t>(i2) * m.cols];
            for (int j1 = 0; j1 + 1 < m.cols; ++j1) {
                if (row1[j1] == 0 && row2[j1] == 0) continue;
                for (int j2 = j1 + 1; j2 < m.cols; ++j2) {
                    total += std::min(row1[j1] * row2[j2], row1[j2] * row2[j1]);
                }
            }
        }
    }
    return total;
}

long long crossing_lower_bound(const Tanglegram& t, double cap_left, double cap_right) {
    const CladePartition left = clade_partition(t.left(), cap_left, Side::left);
    const CladePartition right = clade_partition(t.right(), cap_right, Side::right);
    return lower_bound_from_matrix(clade_matrix(t, left, right));
}

}  // namespace tgl
