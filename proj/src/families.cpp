#include "tgl/families.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tgl {

namespace {

std::string num_label(const std::string& prefix, int i) {
    return prefix + std::to_string(i);
}

// Caterpillar with explicit per-leaf labels: labels[i] goes to the leaf of
// index i+1 (depth i+1 for i+1 <= n-2; the two deepest leaves are n-1, n in
// stored order).
BinaryTree caterpillar_labeled(int n, const std::vector<std::string>& labels) {
    if (n < 2) throw std::invalid_argument("caterpillar: need n >= 2");
    TreeScaffold s;
    // Built bottom-up: the deep cherry first, then one spine node per
    // shallower leaf. Spine nodes store the leaf first, the deeper clade
    // second, so the all-zero switch order is label 1..n top to bottom.
    int deep = s.add_internal(s.add_leaf(labels[n - 2]), s.add_leaf(labels[n - 1]));
    for (int i = n - 2; i >= 1; --i) deep = s.add_internal(s.add_leaf(labels[i - 1]), deep);
    s.set_root(deep);
    return s.freeze();
}

}  // namespace

BinaryTree caterpillar(int n, const std::string& prefix) {
    std::vector<std::string> labels;
    labels.reserve(n < 2 ? 0 : n);
    for (int i = 1; i <= n; ++i) labels.push_back(num_label(prefix, i));
    return caterpillar_labeled(n, labels);
}

Tanglegram caterpillar_tanglegram(int n) {
    if (n < 4) throw std::invalid_argument("caterpillar_tanglegram: need n >= 4");
    BinaryTree left = caterpillar(n, "u");
    // Right leaf j carries the label of its partner: leaf n-j of the left
    // for j in [n-1], leaf n for j = n.
    std::vector<std::string> labels(n);
    for (int j = 1; j <= n - 1; ++j) labels[j - 1] = num_label("u", n - j);
    labels[n - 1] = num_label("u", n);
    return Tanglegram::from_trees(std::move(left), caterpillar_labeled(n, labels));
}

namespace {

// Left or right half of the grid construction: the leaves of `spine` (the
// size-k tree at position 0) are replaced by the remaining k subtrees in
// stored order; component i's leaf j receives labels(i, j).
BinaryTree grid_side(const std::vector<BinaryTree>& trees, int k,
                     const std::function<std::string(int, int)>& label_of) {
    const BinaryTree& spine = trees[0];
    TreeScaffold s = TreeScaffold::from_tree(spine);
    std::vector<int> spine_leaves = spine.leaves_in_order();
    for (int i = 1; i <= k; ++i) {
        const BinaryTree& comp = trees[i];
        const int attach = spine_leaves[i - 1];
        // Copy comp into the scaffold; its root takes over the attach node.
        std::vector<int> remap(comp.node_count(), -1);
        remap[comp.root()] = attach;
        for (int v = 0; v < comp.node_count(); ++v) {
            if (v != comp.root()) remap[v] = s.add_leaf("");
        }
        int leaf_index = 0;
        for (int v : comp.leaves_in_order()) {
            s.node(remap[v]).label = label_of(i, ++leaf_index);
        }
        for (int v = 0; v < comp.node_count(); ++v) {
            TreeNode& nd = s.node(remap[v]);
            if (!comp.is_leaf(v)) {
                nd.label.clear();
                nd.left = remap[comp.left_child(v)];
                nd.right = remap[comp.right_child(v)];
                s.node(nd.left).parent = remap[v];
                s.node(nd.right).parent = remap[v];
            }
        }
    }
    return s.freeze();
}

}  // namespace

Tanglegram grid_family(const std::vector<BinaryTree>& subtrees) {
    if (subtrees.size() < 6 || subtrees.size() % 2 != 0)
        throw std::invalid_argument("grid_family: need 2k+2 subtrees with k >= 2");
    const int k = static_cast<int>(subtrees.size()) / 2 - 1;
    for (const BinaryTree& t : subtrees) {
        if (t.leaf_count() != k)
            throw std::invalid_argument("grid_family: every subtree must have exactly " +
                                        std::to_string(k) + " leaves");
    }
    std::vector<BinaryTree> left_parts(subtrees.begin(), subtrees.begin() + k + 1);
    std::vector<BinaryTree> right_parts(subtrees.begin() + k + 1, subtrees.end());
    // Left leaf (i, j) is matched with right leaf (j, i); the shared label
    // is named by the left coordinates.
    BinaryTree left = grid_side(left_parts, k, [](int i, int j) {
        return "e" + std::to_string(i) + "_" + std::to_string(j);
    });
    BinaryTree right = grid_side(right_parts, k, [](int i, int j) {
        return "e" + std::to_string(j) + "_" + std::to_string(i);
    });
    return Tanglegram::from_trees(std::move(left), std::move(right));
}

Tanglegram grid_family_caterpillar(int k) {
    if (k < 2) throw std::invalid_argument("grid_family: need k >= 2");
    std::vector<BinaryTree> parts;
    parts.reserve(2 * k + 2);
    for (int i = 0; i < 2 * k + 2; ++i) parts.push_back(caterpillar(k, "c"));
    return grid_family(parts);
}

Tanglegram extend_family(const Tanglegram& base, int n, Rng& rng) {
    const int k2 = base.size();
    int k = 0;
    while ((k + 1) * (k + 1) <= k2) ++k;
    if (k * k != k2) throw std::invalid_argument("extend_family: base size is not a square");
    if (n < k2 || n >= (k + 1) * (k + 1))
        throw std::invalid_argument("extend_family: need k^2 <= n < (k+1)^2");
    if (n == k2) return base;

    // A label prefix no existing label starts with, so the new leaves stay
    // distinct.
    std::string prefix = "ext";
    for (bool clash = true; clash;) {
        clash = false;
        for (int v : base.left().leaves_in_order()) {
            if (base.left().label(v).starts_with(prefix)) {
                prefix += '_';
                clash = true;
                break;
            }
        }
    }

    TreeScaffold left = TreeScaffold::from_tree(base.left());
    TreeScaffold right = TreeScaffold::from_tree(base.right());
    for (int t = 1; t <= n - k2; ++t) {
        const std::string label = prefix + std::to_string(t);
        left.graft_leaf_on_edge(static_cast<int>(rng.below(left.edge_slots())), label);
        right.graft_leaf_on_edge(static_cast<int>(rng.below(right.edge_slots())), label);
    }
    return Tanglegram::from_trees(left.freeze(), right.freeze());
}

}  // namespace tgl
