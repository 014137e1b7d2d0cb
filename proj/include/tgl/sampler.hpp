#pragma once

#include <cstdint>
#include <string>

#include "tgl/sampler_rng.hpp"
#include "tgl/tanglegram.hpp"
#include "tgl/tree.hpp"

namespace tgl {

enum class Distribution {
    // Uniform over the (2n-3)!! leaf-labeled topologies, by iterative
    // grafting of leaf i+1 onto a uniformly chosen edge (virtual root edge
    // included). Default; drives the simulation harness.
    shape_uniform_substitute,
    // Uniform over the Catalan-many ordered (plane) binary trees with n
    // leaves, leaves labeled by position.
    plane_uniform,
};

const char* distribution_name(Distribution d);

struct SampleConfig {
    int n = 1;
    std::uint64_t seed = 0;
    int count = 1;
    Distribution distribution = Distribution::shape_uniform_substitute;
};

// Uniformly random leaf-labeled topology on n leaves (labels
// "<prefix>1".."<prefix>n" in creation order), by random edge grafting.
BinaryTree random_tree(int n, Rng& rng, const std::string& prefix = "x");

// Uniformly random ordered (plane) binary tree shape on n leaves, labeled
// "<prefix>1".."<prefix>n" in plane order.
BinaryTree random_plane_tree(int n, Rng& rng, const std::string& prefix = "x");

// Two independent tree draws plus a uniformly random bijection between their
// leaf sets; fully determined by (cfg.seed, index) and cfg.n.
Tanglegram random_tanglegram(const SampleConfig& cfg, int index);

}  // namespace tgl
