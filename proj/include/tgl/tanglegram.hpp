#pragma once

#include <string>
#include <vector>

#include "tgl/tree.hpp"

namespace tgl {

// One matching edge, as leaf node ids into the two trees.
struct MatchingEdge {
    int left_leaf = -1;
    int right_leaf = -1;
    friend bool operator==(const MatchingEdge&, const MatchingEdge&) = default;
};

enum class Side { left, right };

// Reference to a clade: the subtree of all descendants of `node` in the
// designated tree.
struct CladeRef {
    Side side = Side::left;
    int node = -1;
};

// A pair of rooted binary trees of equal size plus a perfect matching
// between their leaf sets. The matching is encoded by shared leaf labels:
// two leaves are matched iff they carry the same label. Immutable.
class Tanglegram {
public:
    Tanglegram() = default;

    // Throws std::invalid_argument if either tree is empty or the two label
    // sets differ.
    static Tanglegram from_trees(BinaryTree left, BinaryTree right);

    int size() const { return left_.leaf_count(); }
    const BinaryTree& left() const { return left_; }
    const BinaryTree& right() const { return right_; }

    // Edges sorted by left leaf node id.
    const std::vector<MatchingEdge>& edges() const { return edges_; }
    int right_partner(int left_leaf) const { return partner_of_left_[left_leaf]; }
    int left_partner(int right_leaf) const { return partner_of_right_[right_leaf]; }
    // Index into edges() of the edge whose leaves carry `label`, or -1.
    int edge_by_label(const std::string& label) const;

private:
    BinaryTree left_;
    BinaryTree right_;
    std::vector<MatchingEdge> edges_;
    std::vector<int> partner_of_left_;
    std::vector<int> partner_of_right_;
};

// Restriction of t to the kept matching edges: both trees are reduced to the
// kept leaves, degree-2 nodes are suppressed, and the root is re-chosen as
// the surviving node closest to the old root. Keep must be a nonempty subset
// of t.edges().
Tanglegram induce_subtanglegram(const Tanglegram& t, const std::vector<MatchingEdge>& keep);

// t minus one matching edge (size must be at least 2).
Tanglegram remove_edge(const Tanglegram& t, const MatchingEdge& e);

// Canonical form: equal strings iff the tanglegrams are isomorphic (a pair
// of tree isomorphisms carrying matched leaf pairs to matched leaf pairs).
// Shape ties left open by per-tree canonicalization are resolved by
// lexicographically minimizing the induced matching permutation over the
// residual symmetry, so labels never influence the result.
std::string canonical_form(const Tanglegram& t);

bool isomorphic(const Tanglegram& a, const Tanglegram& b);

}  // namespace tgl
