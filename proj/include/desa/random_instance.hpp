#pragma once

#include <random>

#include "desa/instance.hpp"

namespace desa {

struct GeneratorOptions {
    int max_events = 5;
    int max_plant_states = 5;
    int max_supervisor_states = 5;
    int max_damage_states = 4;
    /// Every pair (product triple, estimate) must be realizable by a
    /// closed-loop string of at most this length; this makes the bounded
    /// brute-force checks exact on generated instances.
    int depth_bound = 6;
    int max_attempts = 5000;
};

/// Draws a random valid instance: nesting-correct alphabet, valid normal
/// supervisor, damage language disjoint from the closed loop, and the depth
/// certificate above. Regenerates until all conditions hold.
ProblemInstance random_instance(std::mt19937_64& rng, const GeneratorOptions& opts = {});

}  // namespace desa
