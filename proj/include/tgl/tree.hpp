#pragma once

#include <string>
#include <utility>
#include <vector>

namespace tgl {

// One node of a rooted binary tree. Internal nodes have both children set,
// leaves have neither; `label` is meaningful for leaves only.
struct TreeNode {
    int parent = -1;
    int left = -1;
    int right = -1;
    std::string label;
};

class TreeScaffold;

// Immutable rooted binary tree with string-labeled leaves. Every node has 0
// or 2 children; a size-n tree has n leaves and n-1 internal nodes. Derived
// tables (depths, subtree sizes, the stored-order leaf sequence) are computed
// once at construction, so instances are safe to share between threads.
class BinaryTree {
public:
    BinaryTree() = default;

    // Validates structure and labels, then builds the lookup tables.
    // Throws std::invalid_argument on any violation.
    static BinaryTree from_nodes(std::vector<TreeNode> nodes, int root);

    bool empty() const { return nodes_.empty(); }
    int root() const { return root_; }
    int node_count() const { return static_cast<int>(nodes_.size()); }
    int leaf_count() const { return leaf_count_; }
    int internal_count() const { return static_cast<int>(internal_.size()); }

    const TreeNode& node(int v) const { return nodes_[v]; }
    bool is_leaf(int v) const { return nodes_[v].left < 0; }
    int parent(int v) const { return nodes_[v].parent; }
    int left_child(int v) const { return nodes_[v].left; }
    int right_child(int v) const { return nodes_[v].right; }
    const std::string& label(int v) const { return nodes_[v].label; }
    int depth(int v) const { return depth_[v]; }
    int subtree_leaf_count(int v) const { return subtree_leaves_[v]; }

    // Internal nodes in ascending node-index order; switch vectors are
    // aligned to this sequence.
    const std::vector<int>& internal_nodes() const { return internal_; }
    // Position of internal node v within internal_nodes().
    int switch_slot(int v) const { return slot_[v]; }

    // All nodes in stored pre-order; a node's subtree occupies the
    // 2*subtree_leaf_count(v)-1 consecutive entries starting at it.
    const std::vector<int>& preorder() const { return preorder_; }
    // subtree_leaf_count(preorder()[i]), laid out for sequential scans.
    const std::vector<int>& preorder_leaf_counts() const { return preorder_leaves_; }
    // Same for the parent of preorder()[i]; INT_MAX at the root's slot.
    const std::vector<int>& preorder_parent_leaf_counts() const { return preorder_parent_; }
    // Leaves in stored child order (depth-first, left child before right).
    const std::vector<int>& leaves_in_order() const { return leaf_seq_; }
    // Position of a leaf within leaves_in_order().
    int leaf_position(int leaf) const { return leaf_pos_[leaf]; }
    // Half-open span [first, last) of positions in leaves_in_order() covered
    // by the clade at v.
    std::pair<int, int> leaf_span(int v) const { return {span_lo_[v], span_hi_[v]}; }

    // Leaf node id carrying `label`, or -1.
    int find_leaf(const std::string& label) const;

private:
    friend class TreeScaffold;
    void build_tables();

    std::vector<TreeNode> nodes_;
    int root_ = -1;
    int leaf_count_ = 0;
    std::vector<int> depth_;
    std::vector<int> subtree_leaves_;
    std::vector<int> internal_;
    std::vector<int> slot_;
    std::vector<int> preorder_;
    std::vector<int> preorder_leaves_;
    std::vector<int> preorder_parent_;
    std::vector<int> leaf_seq_;
    std::vector<int> leaf_pos_;
    std::vector<int> span_lo_;
    std::vector<int> span_hi_;
};

// Mutable builder for BinaryTree. Grafting enumerates attachment edges as:
// all non-root nodes in ascending index order (the edge above each), then
// the virtual edge above the root last — edge_slots() == node_count().
class TreeScaffold {
public:
    TreeScaffold() = default;
    static TreeScaffold singleton(std::string label);
    static TreeScaffold from_tree(const BinaryTree& t);

    int add_leaf(std::string label);
    int add_internal(int left, int right);
    void set_root(int v) { root_ = v; }
    int root() const { return root_; }
    int node_count() const { return static_cast<int>(nodes_.size()); }
    bool is_leaf(int v) const { return nodes_[v].left < 0; }
    TreeNode& node(int v) { return nodes_[v]; }

    int edge_slots() const { return static_cast<int>(nodes_.size()); }
    // Subdivides the chosen edge with a fresh internal node and hangs a new
    // leaf off it (stored second). Returns the new leaf's node id.
    int graft_leaf_on_edge(int edge_slot, std::string label);

    BinaryTree freeze() const;

private:
    std::vector<TreeNode> nodes_;
    int root_ = -1;
};

}  // namespace tgl
