#include "tgl/layout.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "tgl/errors.hpp"

namespace tgl {

void SwitchVector::flip_all() {
    for (auto& b : bits_) b ^= 1;
}

std::string SwitchVector::to_string() const {
    std::string s;
    s.reserve(bits_.size());
    for (auto b : bits_) s += b ? '1' : '0';
    return s;
}

LeafOrder leaf_order(const BinaryTree& t, const SwitchVector& s) {
    if (s.size() != t.internal_count())
        throw std::invalid_argument("leaf_order: switch vector length mismatch");
    LeafOrder order;
    order.leaves_.reserve(t.leaf_count());
    order.rank_.assign(t.node_count(), -1);
    std::vector<int> stack{t.root()};
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        if (t.is_leaf(v)) {
            order.rank_[v] = static_cast<int>(order.leaves_.size());
            order.leaves_.push_back(v);
            continue;
        }
        int first = t.left_child(v);
        int second = t.right_child(v);
        if (s.bit(t.switch_slot(v))) std::swap(first, second);
        stack.push_back(second);
        stack.push_back(first);
    }
    return order;
}

LeafOrder LeafOrder::from_sequence(const BinaryTree& t, std::vector<int> leaves) {
    if (static_cast<int>(leaves.size()) != t.leaf_count())
        throw std::invalid_argument("leaf order: wrong length");
    LeafOrder order;
    order.rank_.assign(t.node_count(), -1);
    for (int i = 0; i < static_cast<int>(leaves.size()); ++i) {
        const int v = leaves[i];
        if (v < 0 || v >= t.node_count() || !t.is_leaf(v) || order.rank_[v] >= 0)
            throw std::invalid_argument("leaf order: not a permutation of the leaves");
        order.rank_[v] = i;
    }
    // Realizability: every clade's ranks must form a contiguous block.
    // Post-order accumulation of (min, max) per subtree.
    std::vector<std::pair<int, int>> range(t.node_count(), {-1, -1});
    for (int v : t.leaves_in_order()) range[v] = {order.rank_[v], order.rank_[v]};
    // internal_nodes() is ascending; process deepest-first instead.
    std::vector<int> internals = t.internal_nodes();
    std::sort(internals.begin(), internals.end(),
              [&](int a, int b) { return t.depth(a) > t.depth(b); });
    for (int v : internals) {
        const auto [alo, ahi] = range[t.left_child(v)];
        const auto [blo, bhi] = range[t.right_child(v)];
        range[v] = {std::min(alo, blo), std::max(ahi, bhi)};
        if (range[v].second - range[v].first + 1 != t.subtree_leaf_count(v))
            throw std::invalid_argument("leaf order: not realizable by switches");
    }
    order.leaves_ = std::move(leaves);
    return order;
}

namespace {

// Fenwick tree over ranks, for inversion counting.
class BitCounter {
public:
    explicit BitCounter(int n) : tree_(n + 1, 0) {}
    void add(int i) {
        for (++i; i < static_cast<int>(tree_.size()); i += i & -i) ++tree_[i];
    }
    // Count of inserted values <= i.
    long long prefix(int i) const {
        long long s = 0;
        for (++i; i > 0; i -= i & -i) s += tree_[i];
        return s;
    }

private:
    std::vector<long long> tree_;
};

}  // namespace

long long crossing_count(const Tanglegram& t, const TanglegramLayout& d) {
    if (d.left.size() != t.left().internal_count() ||
        d.right.size() != t.right().internal_count())
        throw std::invalid_argument("crossing_count: layout does not fit the tanglegram");
    const LeafOrder lo = leaf_order(t.left(), d.left);
    const LeafOrder ro = leaf_order(t.right(), d.right);

    // Right ranks of the matching read in left-rank order; crossings are its
    // inversions.
    const int n = t.size();
    std::vector<int> seq(n);
    for (int i = 0; i < n; ++i) seq[i] = ro.rank(t.right_partner(lo.leaves()[i]));

    BitCounter bit(n);
    long long inversions = 0;
    for (int i = 0; i < n; ++i) {
        inversions += i - bit.prefix(seq[i]);
        bit.add(seq[i]);
    }
    return inversions;
}

TanglegramLayout mirror_right(TanglegramLayout d) {
    d.right.flip_all();
    return d;
}

namespace {

// Bits of m spread most-significant-first over `size` slots, so ascending m
// enumerates switch vectors in lexicographic order.
SwitchVector vector_from_index(std::uint64_t m, int size) {
    SwitchVector s(size);
    for (int i = 0; i < size; ++i) s.set(i, (m >> (size - 1 - i)) & 1);
    return s;
}

}  // namespace

BruteForceResult brute_force_crt(const Tanglegram& t, int cap) {
    if (t.size() > cap) throw CapExceeded("brute_force_crt", t.size(), cap);
    const int kl = t.left().internal_count();
    const int kr = t.right().internal_count();
    BruteForceResult best;
    best.crossings = -1;
    for (std::uint64_t ml = 0; ml < (1ull << kl); ++ml) {
        const SwitchVector left = vector_from_index(ml, kl);
        for (std::uint64_t mr = 0; mr < (1ull << kr); ++mr) {
            TanglegramLayout d{left, vector_from_index(mr, kr)};
            const long long c = crossing_count(t, d);
            if (best.crossings < 0 || c < best.crossings) {
                best.crossings = c;
                best.layout = std::move(d);
            }
        }
    }
    return best;
}

BinaryTree reorder_children(const BinaryTree& t, const SwitchVector& s) {
    if (s.size() != t.internal_count())
        throw std::invalid_argument("reorder_children: switch vector length mismatch");
    std::vector<TreeNode> nodes;
    nodes.reserve(t.node_count());
    for (int v = 0; v < t.node_count(); ++v) nodes.push_back(t.node(v));
    for (int v : t.internal_nodes()) {
        if (s.bit(t.switch_slot(v))) std::swap(nodes[v].left, nodes[v].right);
    }
    return BinaryTree::from_nodes(std::move(nodes), t.root());
}

}  // namespace tgl
