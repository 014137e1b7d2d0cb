#pragma once

#include <string>
#include <vector>

#include "tgl/sampler_rng.hpp"
#include "tgl/tanglegram.hpp"
#include "tgl/tree.hpp"

namespace tgl {

// The caterpillar with n leaves: one leaf at each depth 1..n-2 and two at
// depth n-1. Leaves are labeled "<prefix>1".."<prefix>n" by depth, the two
// deepest leaves getting n-1 (stored first) and n. Requires n >= 2.
BinaryTree caterpillar(int n, const std::string& prefix = "u");

// The caterpillar tanglegram of size n >= 4: two caterpillars with leaf i of
// the left matched to leaf n-i of the right for i in [n-1], and the two
// deepest leaves matched to each other.
Tanglegram caterpillar_tanglegram(int n);

// Grid-like family member of size k^2. `subtrees` holds 2k+2 trees of k
// leaves each, ordered (L0..Lk, R0..Rk): the roots of L1..Lk are identified
// with the leaves of L0 in stored order (same on the right), and leaf j of
// Li is matched to leaf i of Rj. Requires k >= 2.
Tanglegram grid_family(const std::vector<BinaryTree>& subtrees);

// Convenience: grid_family with every component a caterpillar of size k.
Tanglegram grid_family_caterpillar(int k);

// Grows `base` (of size k^2) to size n, k^2 <= n < (k+1)^2, by attaching
// n - k^2 fresh matched leaf pairs at rng-chosen edges (including the
// virtual root edge) on each side. The result contains `base` as the
// subtanglegram induced by the original edges.
Tanglegram extend_family(const Tanglegram& base, int n, Rng& rng);

}  // namespace tgl
