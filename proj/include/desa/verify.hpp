#pragma once

#include <random>

#include "desa/attacked_loop.hpp"
#include "desa/instance.hpp"
#include "desa/oracle.hpp"

namespace desa {

/// One full synthesis pass over an instance, all intermediate artifacts kept.
struct SynthesisRun {
    SupervisorRealization supervisor;
    Fsa damage_complete;
    AnnotatedSupervisor annotated;
    GeneralizedProduct product;
    MooreAttacker attacker;
    AttackVerdict verdict;
};

SynthesisRun run_synthesis(const ProblemInstance& inst);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CheckReport {
    bool attackable = false;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks) {
            if (!c.pass) return false;
        }
        return true;
    }
};

/// Compares the synthesis pipeline against the brute-force oracle on one
/// instance, at string bound max_len. Pruning checks draw from `rng`.
CheckReport cross_check(const ProblemInstance& inst, int max_len, std::mt19937_64& rng,
                        int prunings = 20);

struct CampaignSummary {
    int instances = 0;
    int attackable = 0;
    int checks = 0;
    int failures = 0;
    std::vector<std::string> failure_details;
};

/// Generates `n` seeded random instances and cross-checks each.
CampaignSummary run_campaign(uint64_t seed, int n, int max_len, int prunings = 20);

}  // namespace desa
