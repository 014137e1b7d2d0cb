#include "tgl/solver.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tgl/errors.hpp"

namespace tgl {

PairLcaTable::PairLcaTable(const Tanglegram& t) {
    const BinaryTree& r = t.right();
    groups_.resize(r.internal_count());
    std::vector<int> edge_of_right(r.node_count(), -1);
    for (int i = 0; i < static_cast<int>(t.edges().size()); ++i)
        edge_of_right[t.edges()[i].right_leaf] = i;

    const std::vector<int>& seq = r.leaves_in_order();
    for (int w : r.internal_nodes()) {
        auto& group = groups_[r.switch_slot(w)];
        const auto [alo, ahi] = r.leaf_span(r.left_child(w));
        const auto [blo, bhi] = r.leaf_span(r.right_child(w));
        group.reserve(static_cast<size_t>(ahi - alo) * (bhi - blo));
        for (int x = alo; x < ahi; ++x) {
            for (int y = blo; y < bhi; ++y) {
                group.push_back(Pair{edge_of_right[seq[x]], edge_of_right[seq[y]]});
            }
        }
    }
}

long long PairLcaTable::total_pairs() const {
    long long total = 0;
    for (const auto& g : groups_) total += static_cast<long long>(g.size());
    return total;
}

std::pair<long long, SwitchVector> one_sided_optimum(const Tanglegram& t,
                                                     const LeafOrder& left_order) {
    // Revalidates the order against this tanglegram's left tree (length,
    // permutation, realizability).
    const LeafOrder order = LeafOrder::from_sequence(t.left(), left_order.leaves());

    const PairLcaTable table(t);
    SwitchVector bits(t.right().internal_count());
    long long total = 0;
    for (int slot = 0; slot < table.group_count(); ++slot) {
        const auto& group = table.group(slot);
        long long c0 = 0;
        for (const PairLcaTable::Pair& p : group) {
            // With bit 0 the pair's right endpoints keep stored order
            // (edge_a's side first); it crosses iff the left ranks disagree.
            if (order.rank(t.edges()[p.edge_a].left_leaf) >
                order.rank(t.edges()[p.edge_b].left_leaf))
                ++c0;
        }
        const long long c1 = static_cast<long long>(group.size()) - c0;
        total += std::min(c0, c1);
        bits.set(slot, c1 < c0);
    }
    return {total, std::move(bits)};
}

namespace {

struct PairEffect {
    int right_slot;     // LCA group of the pair's right endpoints
    int crosses_if[2];  // crossing under right bit 0, for left bit 0 / 1
};

// The solver's working set: for each left internal node (in pre-order), the
// pairs whose left LCA it is, with the pair's right group and orientation.
struct SearchTables {
    std::vector<int> preorder_nodes;            // left internal nodes, root first
    std::vector<std::vector<PairEffect>> bucket;  // aligned to preorder_nodes
    int right_slots = 0;
};

SearchTables build_tables(const Tanglegram& t) {
    const BinaryTree& l = t.left();
    const BinaryTree& r = t.right();
    SearchTables tables;
    tables.right_slots = r.internal_count();

    // Pre-order over internal nodes.
    std::vector<int> stack{l.root()};
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        if (l.is_leaf(v)) continue;
        tables.preorder_nodes.push_back(v);
        stack.push_back(l.right_child(v));
        stack.push_back(l.left_child(v));
    }
    tables.bucket.resize(tables.preorder_nodes.size());

    const std::vector<int>& lseq = l.leaves_in_order();
    for (size_t d = 0; d < tables.preorder_nodes.size(); ++d) {
        const int u = tables.preorder_nodes[d];
        const auto [alo, ahi] = l.leaf_span(l.left_child(u));
        const auto [blo, bhi] = l.leaf_span(l.right_child(u));
        auto& bucket = tables.bucket[d];
        bucket.reserve(static_cast<size_t>(ahi - alo) * (bhi - blo));
        for (int x = alo; x < ahi; ++x) {
            for (int y = blo; y < bhi; ++y) {
                const int rx = t.right_partner(lseq[x]);
                const int ry = t.right_partner(lseq[y]);
                // Right LCA by walking up from the deeper endpoint.
                int a = rx, b = ry;
                while (a != b) {
                    if (r.depth(a) >= r.depth(b))
                        a = r.parent(a);
                    else
                        b = r.parent(b);
                }
                // aligned: rx's block precedes ry's under right bit 0.
                const bool aligned = r.leaf_position(rx) < r.leaf_position(ry);
                PairEffect eff;
                eff.right_slot = r.switch_slot(a);
                // Left bit 0 keeps x's clade above y's; the pair then
                // crosses under right bit 0 iff the right order is flipped.
                eff.crosses_if[0] = aligned ? 0 : 1;
                eff.crosses_if[1] = aligned ? 1 : 0;
                bucket.push_back(eff);
            }
        }
    }
    return tables;
}

class ExactSearch {
public:
    ExactSearch(const Tanglegram& t, const SolverOptions& opts)
        : t_(t), opts_(opts), tables_(build_tables(t)) {
        c0_.assign(tables_.right_slots, 0);
        decided_.assign(tables_.right_slots, 0);
        left_bits_ = SwitchVector(t.left().internal_count());
    }

    CrossingReport run() {
        CrossingReport report;

        // Incumbent: the one-sided optimum of the all-zero left vector is
        // always a valid layout.
        const SwitchVector zero_left(t_.left().internal_count());
        auto [init_value, init_right] = one_sided_optimum(t_, leaf_order(t_.left(), zero_left));
        incumbent_ = init_value;
        witness_ = TanglegramLayout{zero_left, std::move(init_right)};

        if (!tables_.preorder_nodes.empty() && incumbent_ > 0) dfs(0);

        report.crt = incumbent_;
        report.witness = std::move(witness_);
        report.stats = stats_;
        return report;
    }

    SolverStats stats_;

private:
    void dfs(size_t depth) {
        ++stats_.nodes_visited;
        if (done_) return;
        if (depth == tables_.preorder_nodes.size()) {
            ++stats_.leaves_evaluated;
            if (bound_ < incumbent_) {
                incumbent_ = bound_;
                witness_.left = left_bits_;
                witness_.right = SwitchVector(tables_.right_slots);
                for (int slot = 0; slot < tables_.right_slots; ++slot)
                    witness_.right.set(slot, decided_[slot] - c0_[slot] < c0_[slot]);
                if (incumbent_ == 0) done_ = true;
            }
            return;
        }
        const int u = tables_.preorder_nodes[depth];
        const int slot = t_.left().switch_slot(u);
        const int last_bit = depth == 0 ? 0 : 1;  // root bit pinned to 0
        for (int bit = 0; bit <= last_bit && !done_; ++bit) {
            apply(depth, bit);
            left_bits_.set(slot, bit != 0);
            if (opts_.prune && bound_ >= incumbent_) {
                ++stats_.pruned;
            } else {
                dfs(depth + 1);
            }
            undo(depth, bit);
        }
        left_bits_.set(slot, false);
    }

    void apply(size_t depth, int bit) {
        for (const PairEffect& eff : tables_.bucket[depth]) {
            const int w = eff.right_slot;
            bound_ -= term(w);
            ++decided_[w];
            c0_[w] += eff.crosses_if[bit];
            bound_ += term(w);
        }
    }

    void undo(size_t depth, int bit) {
        for (const PairEffect& eff : tables_.bucket[depth]) {
            const int w = eff.right_slot;
            bound_ -= term(w);
            c0_[w] -= eff.crosses_if[bit];
            --decided_[w];
            bound_ += term(w);
        }
    }

    long long term(int w) const {
        return std::min<long long>(c0_[w], decided_[w] - c0_[w]);
    }

    const Tanglegram& t_;
    SolverOptions opts_;
    SearchTables tables_;
    std::vector<int> c0_;
    std::vector<int> decided_;
    long long bound_ = 0;
    long long incumbent_ = 0;
    TanglegramLayout witness_;
    SwitchVector left_bits_;
    bool done_ = false;
};

}  // namespace

CrossingReport exact_crt(const Tanglegram& t, const SolverOptions& opts) {
    if (t.size() > opts.cap) throw CapExceeded("exact_crt", t.size(), opts.cap);
    const auto start = std::chrono::steady_clock::now();
    ExactSearch search(t, opts);
    CrossingReport report = search.run();
    report.stats.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

bool is_planar(const Tanglegram& t, int cap) {
    SolverOptions opts;
    opts.cap = cap;
    return exact_crt(t, opts).crt == 0;
}

}  // namespace tgl
