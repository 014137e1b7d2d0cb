#include "tgl/tanglegram.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace tgl {

Tanglegram Tanglegram::from_trees(BinaryTree left, BinaryTree right) {
    if (left.empty() || right.empty())
        throw std::invalid_argument("tanglegram: empty tree");
    if (left.leaf_count() != right.leaf_count())
        throw std::invalid_argument("tanglegram: trees have different sizes");

    std::unordered_map<std::string, int> right_by_label;
    right_by_label.reserve(right.leaf_count());
    for (int v : right.leaves_in_order()) right_by_label.emplace(right.label(v), v);

    Tanglegram t;
    t.partner_of_left_.assign(left.node_count(), -1);
    t.partner_of_right_.assign(right.node_count(), -1);
    for (int v = 0; v < left.node_count(); ++v) {
        if (!left.is_leaf(v)) continue;
        auto it = right_by_label.find(left.label(v));
        if (it == right_by_label.end())
            throw std::invalid_argument("tanglegram: leaf label sets differ (" + left.label(v) +
                                        " has no partner)");
        t.edges_.push_back(MatchingEdge{v, it->second});
        t.partner_of_left_[v] = it->second;
        t.partner_of_right_[it->second] = v;
    }
    t.left_ = std::move(left);
    t.right_ = std::move(right);
    return t;
}

int Tanglegram::edge_by_label(const std::string& label) const {
    for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
        if (left_.label(edges_[i].left_leaf) == label) return i;
    }
    return -1;
}

namespace {

// Rebuild of one tree restricted to the kept leaves: degree-2 nodes are
// suppressed and the new root is the surviving node nearest the old root.
// Stored child order of surviving nodes is preserved.
BinaryTree restrict_tree(const BinaryTree& t, const std::vector<char>& keep_leaf) {
    std::vector<TreeNode> out;
    std::vector<int> reduced(t.node_count(), -2);  // new index of reduced subtree, -1 if gone
    std::vector<std::pair<int, int>> stack;
    stack.emplace_back(t.root(), 0);
    while (!stack.empty()) {
        auto [v, state] = stack.back();
        stack.pop_back();
        if (state == 0) {
            if (t.is_leaf(v)) {
                if (keep_leaf[v]) {
                    reduced[v] = static_cast<int>(out.size());
                    out.push_back(TreeNode{-1, -1, -1, t.label(v)});
                } else {
                    reduced[v] = -1;
                }
            } else {
                stack.emplace_back(v, 1);
                stack.emplace_back(t.right_child(v), 0);
                stack.emplace_back(t.left_child(v), 0);
            }
        } else {
            const int l = reduced[t.left_child(v)];
            const int r = reduced[t.right_child(v)];
            if (l >= 0 && r >= 0) {
                const int nv = static_cast<int>(out.size());
                out.push_back(TreeNode{-1, l, r, {}});
                out[l].parent = nv;
                out[r].parent = nv;
                reduced[v] = nv;
            } else {
                reduced[v] = l >= 0 ? l : r;
            }
        }
    }
    const int new_root = reduced[t.root()];
    if (new_root < 0) throw std::invalid_argument("induce: no leaves kept on one side");
    return BinaryTree::from_nodes(std::move(out), new_root);
}

}  // namespace

Tanglegram induce_subtanglegram(const Tanglegram& t, const std::vector<MatchingEdge>& keep) {
    if (keep.empty()) throw std::invalid_argument("induce: empty edge set");
    std::vector<char> keep_left(t.left().node_count(), 0);
    std::vector<char> keep_right(t.right().node_count(), 0);
    for (const MatchingEdge& e : keep) {
        if (e.left_leaf < 0 || e.left_leaf >= t.left().node_count() ||
            !t.left().is_leaf(e.left_leaf) || t.right_partner(e.left_leaf) != e.right_leaf)
            throw std::invalid_argument("induce: edge not in tanglegram");
        keep_left[e.left_leaf] = 1;
        keep_right[e.right_leaf] = 1;
    }
    return Tanglegram::from_trees(restrict_tree(t.left(), keep_left),
                                  restrict_tree(t.right(), keep_right));
}

Tanglegram remove_edge(const Tanglegram& t, const MatchingEdge& e) {
    if (t.size() < 2) throw std::invalid_argument("remove_edge: size-1 tanglegram");
    std::vector<MatchingEdge> keep;
    keep.reserve(t.size() - 1);
    for (const MatchingEdge& f : t.edges()) {
        if (!(f == e)) keep.push_back(f);
    }
    if (static_cast<int>(keep.size()) != t.size() - 1)
        throw std::invalid_argument("remove_edge: edge not in tanglegram");
    return induce_subtanglegram(t, keep);
}

// ---------------------------------------------------------------------------
// Canonical form.
//
// Per tree, an AHU shape code orders children (smaller code first); nodes
// whose children tie are "free". The leaf orderings compatible with the
// canonical shape differ exactly by the free bits. Among those, the matching
// permutation pi (right rank of the partner of the i-th left leaf) is
// minimized lexicographically: a DFS over the left tree's free bits reveals
// pi one position at a time, while right free bits are fixed greedily on
// first use. The greedy is exact for a fixed left order because a free right
// bit only moves the ranks of leaves below it, and putting the current
// partner's side first strictly lowers its rank without touching earlier
// positions.
// ---------------------------------------------------------------------------

namespace {

struct ShapeInfo {
    std::vector<int> code;        // shape class id per node
    std::vector<char> swap_need;  // stored children must swap for canonical order
    std::vector<char> free_node;  // both children have equal shape codes
    std::string canonical;        // canonical shape string of the whole tree
};

ShapeInfo analyze_shape(const BinaryTree& t) {
    ShapeInfo info;
    info.code.assign(t.node_count(), -1);
    info.swap_need.assign(t.node_count(), 0);
    info.free_node.assign(t.node_count(), 0);

    // Deepest first, so children are coded before parents.
    std::vector<int> order(t.node_count());
    for (int v = 0; v < t.node_count(); ++v) order[v] = v;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return t.depth(a) > t.depth(b); });

    std::unordered_map<std::string, int> interner;
    std::vector<std::string> strings;
    auto intern = [&](std::string s) {
        auto [it, fresh] = interner.emplace(s, static_cast<int>(strings.size()));
        if (fresh) strings.push_back(std::move(s));
        return it->second;
    };
    const int leaf_code = intern("L");

    for (int v : order) {
        if (t.is_leaf(v)) {
            info.code[v] = leaf_code;
            continue;
        }
        int a = info.code[t.left_child(v)];
        int b = info.code[t.right_child(v)];
        if (strings[a] > strings[b]) {
            info.swap_need[v] = 1;
            std::swap(a, b);
        } else if (a == b) {
            info.free_node[v] = 1;
        }
        info.code[v] = intern("(" + strings[a] + strings[b] + ")");
    }
    info.canonical = strings[info.code[t.root()]];
    return info;
}

// Lazily decided free bits of the right tree, with undo.
class RightRanker {
public:
    RightRanker(const BinaryTree& t, const ShapeInfo& shape) : t_(t), shape_(shape) {
        decision_.assign(t.node_count(), -1);
    }

    int checkpoint() const { return static_cast<int>(undo_.size()); }
    void rollback(int mark) {
        while (static_cast<int>(undo_.size()) > mark) {
            decision_[undo_.back()] = -1;
            undo_.pop_back();
        }
    }

    // Canonical rank of a right leaf; undecided free bits on its root path
    // are set now so that the leaf's side comes first.
    int rank(int leaf) {
        int r = 0;
        for (int v = leaf; t_.parent(v) >= 0; v = t_.parent(v)) {
            const int p = t_.parent(v);
            const bool stored_first = t_.left_child(p) == v;
            bool first;
            if (shape_.free_node[p]) {
                if (decision_[p] < 0) {
                    decision_[p] = stored_first ? 0 : 1;
                    undo_.push_back(p);
                }
                first = stored_first == (decision_[p] == 0);
            } else {
                first = stored_first == !shape_.swap_need[p];
            }
            if (!first)
                r += t_.subtree_leaf_count(stored_first ? t_.right_child(p) : t_.left_child(p));
        }
        return r;
    }

private:
    const BinaryTree& t_;
    const ShapeInfo& shape_;
    std::vector<int> decision_;
    std::vector<int> undo_;
};

class CanonicalSearch {
public:
    CanonicalSearch(const Tanglegram& t, const ShapeInfo& left_shape,
                    const ShapeInfo& right_shape)
        : t_(t), shape_(left_shape), ranker_(t.right(), right_shape) {
        current_.resize(t.size());
    }

    std::vector<int> run() {
        work_.push_back(t_.left().root());
        dfs(0, true);
        return best_;
    }

private:
    // `tied`: the prefix written so far equals best_'s prefix (pruning is
    // only sound then; completions always do a full compare).
    void dfs(int pos, bool tied) {
        if (work_.empty()) {
            if (best_.empty() || current_ < best_) best_ = current_;
            return;
        }
        const int v = work_.back();
        work_.pop_back();
        if (t_.left().is_leaf(v)) {
            const int mark = ranker_.checkpoint();
            const int r = ranker_.rank(t_.right_partner(v));
            bool dead = false;
            if (tied && !best_.empty()) {
                if (r > best_[pos]) dead = true;
                if (r < best_[pos]) tied = false;
            }
            if (!dead) {
                current_[pos] = r;
                dfs(pos + 1, tied);
            }
            ranker_.rollback(mark);
        } else {
            const int a = t_.left().left_child(v);
            const int b = t_.left().right_child(v);
            if (shape_.free_node[v]) {
                visit_ordered(a, b, pos, tied);
                visit_ordered(b, a, pos, tied);
            } else if (shape_.swap_need[v]) {
                visit_ordered(b, a, pos, tied);
            } else {
                visit_ordered(a, b, pos, tied);
            }
        }
        work_.push_back(v);
    }

    void visit_ordered(int first, int second, int pos, bool tied) {
        work_.push_back(second);
        work_.push_back(first);
        dfs(pos, tied);
        work_.pop_back();
        work_.pop_back();
    }

    const Tanglegram& t_;
    const ShapeInfo& shape_;
    RightRanker ranker_;
    std::vector<int> work_;
    std::vector<int> current_;
    std::vector<int> best_;
};

}  // namespace

std::string canonical_form(const Tanglegram& t) {
    const ShapeInfo left_shape = analyze_shape(t.left());
    const ShapeInfo right_shape = analyze_shape(t.right());
    CanonicalSearch search(t, left_shape, right_shape);
    const std::vector<int> pi = search.run();

    std::string out = left_shape.canonical;
    out += '/';
    out += right_shape.canonical;
    out += '/';
    for (size_t i = 0; i < pi.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(pi[i]);
    }
    return out;
}

bool isomorphic(const Tanglegram& a, const Tanglegram& b) {
    if (a.size() != b.size()) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace tgl
