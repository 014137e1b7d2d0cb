#include "tgl/sampler.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace tgl {

const char* distribution_name(Distribution d) {
    switch (d) {
        case Distribution::shape_uniform_substitute:
            return "shape-uniform-substitute";
        case Distribution::plane_uniform:
            return "plane-uniform";
    }
    return "?";
}

namespace {

std::vector<std::string> default_labels(int n, const std::string& prefix) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 1; i <= n; ++i) labels.push_back(prefix + std::to_string(i));
    return labels;
}

// Leaf i+1 grafted onto one of the 2i-1 edges (virtual root edge included)
// uniformly at random: uniform over the (2n-3)!! leaf-labeled topologies.
BinaryTree random_tree_labeled(int n, Rng& rng, const std::vector<std::string>& labels) {
    if (n < 1) throw std::invalid_argument("random_tree: need n >= 1");
    TreeScaffold s = TreeScaffold::singleton(labels[0]);
    for (int i = 2; i <= n; ++i) {
        const int slot = static_cast<int>(rng.below(static_cast<std::uint64_t>(s.edge_slots())));
        s.graft_leaf_on_edge(slot, labels[i - 1]);
    }
    return s.freeze();
}

// Uniform over the Catalan-many plane binary trees with n leaves, via the
// cycle lemma: shuffle n-1 internal and n leaf symbols; exactly one rotation
// is a valid preorder, the one starting right after the first position
// attaining the minimum prefix sum.
BinaryTree random_plane_tree_labeled(int n, Rng& rng, const std::vector<std::string>& labels) {
    if (n < 1) throw std::invalid_argument("random_plane_tree: need n >= 1");
    const int len = 2 * n - 1;
    std::vector<char> symbol(len, 0);  // 1 = internal, 0 = leaf
    for (int i = 0; i < n - 1; ++i) symbol[i] = 1;
    for (int i = len - 1; i > 0; --i) {
        const int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
        std::swap(symbol[i], symbol[j]);
    }
    int sum = 0, min_sum = 1, min_pos = -1;
    for (int i = 0; i < len; ++i) {
        sum += symbol[i] ? 1 : -1;
        if (sum < min_sum) {
            min_sum = sum;
            min_pos = i;
        }
    }
    const int start = (min_pos + 1) % len;

    // Build from the rotated preorder sequence.
    std::vector<TreeNode> nodes;
    nodes.reserve(len);
    std::vector<int> open;   // internal nodes still missing children
    std::vector<int> arity;  // attached-children count, parallel to open
    int leaf_index = 0;
    int root = -1;
    for (int i = 0; i < len; ++i) {
        const bool internal = symbol[(start + i) % len] != 0;
        const int v = static_cast<int>(nodes.size());
        nodes.push_back(TreeNode{-1, -1, -1, internal ? std::string() : labels[leaf_index++]});
        if (root < 0) {
            root = v;
        } else {
            const int p = open.back();
            (arity.back() == 0 ? nodes[p].left : nodes[p].right) = v;
            nodes[v].parent = p;
            ++arity.back();
        }
        if (internal) {
            open.push_back(v);
            arity.push_back(0);
        } else {
            while (!open.empty() && arity.back() == 2) {
                open.pop_back();
                arity.pop_back();
            }
        }
    }
    return BinaryTree::from_nodes(std::move(nodes), root);
}

}  // namespace

BinaryTree random_tree(int n, Rng& rng, const std::string& prefix) {
    return random_tree_labeled(n, rng, default_labels(n, prefix));
}

BinaryTree random_plane_tree(int n, Rng& rng, const std::string& prefix) {
    return random_plane_tree_labeled(n, rng, default_labels(n, prefix));
}

Tanglegram random_tanglegram(const SampleConfig& cfg, int index) {
    if (cfg.n < 1 || cfg.count < 1) throw std::invalid_argument("random_tanglegram: bad config");
    Rng rng = Rng::stream(cfg.seed, static_cast<std::uint64_t>(cfg.n),
                          static_cast<std::uint64_t>(index));
    const std::vector<std::string> left_labels = default_labels(cfg.n, "x");

    auto draw = [&](const std::vector<std::string>& labels) {
        return cfg.distribution == Distribution::plane_uniform
                   ? random_plane_tree_labeled(cfg.n, rng, labels)
                   : random_tree_labeled(cfg.n, rng, labels);
    };

    BinaryTree left = draw(left_labels);
    // Uniform bijection: the right tree's i-th created leaf takes the label
    // of left leaf perm[i].
    const std::vector<int> perm = rng.permutation(cfg.n);
    std::vector<std::string> right_labels(cfg.n);
    for (int i = 0; i < cfg.n; ++i) right_labels[i] = left_labels[perm[i]];
    BinaryTree right = draw(right_labels);
    return Tanglegram::from_trees(std::move(left), std::move(right));
}

}  // namespace tgl
