#include "tgl/tree.hpp"

#include <climits>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace tgl {

namespace {

void check(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

bool label_ok(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c == '(' || c == ')' || c == ',' || c == ';') return false;
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f') return false;
    }
    return true;
}

}  // namespace

BinaryTree BinaryTree::from_nodes(std::vector<TreeNode> nodes, int root) {
    check(!nodes.empty(), "tree: no nodes");
    const int count = static_cast<int>(nodes.size());
    check(root >= 0 && root < count, "tree: root out of range");
    check(nodes[root].parent == -1, "tree: root has a parent");

    std::unordered_set<std::string> seen;
    for (int v = 0; v < count; ++v) {
        const TreeNode& nd = nodes[v];
        check((nd.left < 0) == (nd.right < 0), "tree: node with exactly one child");
        if (v != root) {
            check(nd.parent >= 0 && nd.parent < count, "tree: missing parent link");
            const TreeNode& p = nodes[nd.parent];
            check(p.left == v || p.right == v, "tree: inconsistent parent link");
        }
        if (nd.left >= 0) {
            check(nd.left < count && nd.right < count && nd.left != nd.right,
                  "tree: bad child index");
            check(nodes[nd.left].parent == v && nodes[nd.right].parent == v,
                  "tree: child does not point back to parent");
        } else {
            check(label_ok(nd.label), "tree: bad leaf label");
            check(seen.insert(nd.label).second, "tree: duplicate leaf label");
        }
    }

    BinaryTree t;
    t.nodes_ = std::move(nodes);
    t.root_ = root;
    t.build_tables();
    // Connectivity: the traversal from the root must have reached everything.
    check(static_cast<int>(t.leaf_seq_.size()) == t.leaf_count_ &&
              t.leaf_count_ * 2 - 1 == count,
          "tree: disconnected or not full binary");
    return t;
}

void BinaryTree::build_tables() {
    const int count = node_count();
    depth_.assign(count, 0);
    subtree_leaves_.assign(count, 0);
    internal_.clear();
    slot_.assign(count, -1);
    preorder_.clear();
    preorder_.reserve(count);
    leaf_seq_.clear();
    leaf_pos_.assign(count, -1);
    span_lo_.assign(count, 0);
    span_hi_.assign(count, 0);
    leaf_count_ = 0;

    for (int v = 0; v < count; ++v) {
        if (nodes_[v].left < 0) {
            ++leaf_count_;
        } else {
            internal_.push_back(v);
        }
    }
    for (int i = 0; i < static_cast<int>(internal_.size()); ++i) slot_[internal_[i]] = i;

    // Iterative DFS in stored child order; post-processing on the way out
    // fills subtree sizes and spans.
    std::vector<std::pair<int, int>> stack;  // (node, state 0=enter 1=exit)
    stack.emplace_back(root_, 0);
    while (!stack.empty()) {
        auto [v, state] = stack.back();
        stack.pop_back();
        if (state == 0) {
            preorder_.push_back(v);
            depth_[v] = nodes_[v].parent < 0 ? 0 : depth_[nodes_[v].parent] + 1;
            span_lo_[v] = static_cast<int>(leaf_seq_.size());
            if (nodes_[v].left < 0) {
                leaf_pos_[v] = static_cast<int>(leaf_seq_.size());
                leaf_seq_.push_back(v);
                subtree_leaves_[v] = 1;
                span_hi_[v] = span_lo_[v] + 1;
            } else {
                stack.emplace_back(v, 1);
                stack.emplace_back(nodes_[v].right, 0);
                stack.emplace_back(nodes_[v].left, 0);
            }
        } else {
            subtree_leaves_[v] = subtree_leaves_[nodes_[v].left] + subtree_leaves_[nodes_[v].right];
            span_hi_[v] = static_cast<int>(leaf_seq_.size());
        }
    }
    preorder_leaves_.resize(count);
    preorder_parent_.resize(count);
    for (int i = 0; i < count; ++i) {
        const int v = preorder_[i];
        preorder_leaves_[i] = subtree_leaves_[v];
        preorder_parent_[i] =
            nodes_[v].parent < 0 ? INT_MAX : subtree_leaves_[nodes_[v].parent];
    }
}

int BinaryTree::find_leaf(const std::string& label) const {
    for (int v : leaf_seq_) {
        if (nodes_[v].label == label) return v;
    }
    return -1;
}

TreeScaffold TreeScaffold::singleton(std::string label) {
    TreeScaffold s;
    s.set_root(s.add_leaf(std::move(label)));
    return s;
}

TreeScaffold TreeScaffold::from_tree(const BinaryTree& t) {
    TreeScaffold s;
    s.nodes_.reserve(t.node_count());
    for (int v = 0; v < t.node_count(); ++v) s.nodes_.push_back(t.node(v));
    s.root_ = t.root();
    return s;
}

int TreeScaffold::add_leaf(std::string label) {
    nodes_.push_back(TreeNode{-1, -1, -1, std::move(label)});
    return static_cast<int>(nodes_.size()) - 1;
}

int TreeScaffold::add_internal(int left, int right) {
    const int v = static_cast<int>(nodes_.size());
    nodes_.push_back(TreeNode{-1, left, right, {}});
    nodes_[left].parent = v;
    nodes_[right].parent = v;
    return v;
}

int TreeScaffold::graft_leaf_on_edge(int edge_slot, std::string label) {
    if (edge_slot < 0 || edge_slot >= edge_slots())
        throw std::invalid_argument("graft: edge slot out of range");

    // Slots: non-root nodes in ascending index order, virtual root edge last.
    int below = -1;
    if (edge_slot < edge_slots() - 1) below = edge_slot < root_ ? edge_slot : edge_slot + 1;

    const int leaf = add_leaf(std::move(label));
    if (below < 0) {
        const int old_root = root_;
        const int joint = add_internal(old_root, leaf);
        root_ = joint;
    } else {
        const int above = nodes_[below].parent;
        const int joint = add_internal(below, leaf);
        nodes_[joint].parent = above;
        if (nodes_[above].left == below)
            nodes_[above].left = joint;
        else
            nodes_[above].right = joint;
    }
    return leaf;
}

BinaryTree TreeScaffold::freeze() const {
    return BinaryTree::from_nodes(nodes_, root_);
}

}  // namespace tgl
