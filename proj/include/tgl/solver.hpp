#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tgl/layout.hpp"
#include "tgl/tanglegram.hpp"

namespace tgl {

// Every unordered pair of matching edges, grouped by the lowest common
// ancestor of the pair's right-tree endpoints. With the left leaf order
// fixed, the switch bit at that ancestor alone decides whether the pair
// crosses, so the groups can be optimized independently.
class PairLcaTable {
public:
    explicit PairLcaTable(const Tanglegram& t);

    struct Pair {
        int edge_a;  // indices into t.edges()
        int edge_b;
    };

    // Pairs whose right-endpoint LCA is the internal node at this switch
    // slot of the right tree; edge_a's right endpoint lies in the stored
    // first child's clade.
    const std::vector<Pair>& group(int slot) const { return groups_[slot]; }
    int group_count() const { return static_cast<int>(groups_.size()); }
    long long total_pairs() const;

private:
    std::vector<std::vector<Pair>> groups_;
};

struct SolverStats {
    std::uint64_t nodes_visited = 0;
    std::uint64_t leaves_evaluated = 0;
    std::uint64_t pruned = 0;
    double seconds = 0.0;
};

struct CrossingReport {
    long long crt = 0;
    TanglegramLayout witness;
    SolverStats stats;
};

struct SolverOptions {
    int cap = 20;       // hard error beyond this size
    bool prune = true;  // branch-and-bound pruning (never changes the result)
};

// Minimum crossing count over all right switch vectors with the left leaf
// order fixed, and the vector achieving it (ties prefer bit 0). O(n^2).
std::pair<long long, SwitchVector> one_sided_optimum(const Tanglegram& t,
                                                     const LeafOrder& left_order);

// Exact tangle crossing number: left switch vectors are enumerated with the
// root bit pinned to 0 (complementing every bit on both sides is a vertical
// reflection, so nothing is lost) and each is scored by the per-node right
// optimum; prefixes whose already-decided pairs force the incumbent are cut.
CrossingReport exact_crt(const Tanglegram& t, const SolverOptions& opts = {});

// True iff the tangle crossing number is 0 (search aborts at incumbent 0).
bool is_planar(const Tanglegram& t, int cap = 20);

}  // namespace tgl
