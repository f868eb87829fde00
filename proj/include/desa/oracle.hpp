#pragma once

#include <optional>

#include "desa/attack_synthesis.hpp"

namespace desa {

/// Brute-force reference semantics, computed by direct string walks over the
/// raw transition functions. None of it goes through the product or subset
/// machinery it is used to check.

/// L(V/G) up to max_len by its inductive definition, length-lexicographic.
std::vector<std::vector<std::string>> oracle_closed_loop(
    const Fsa& g, const SupervisorRealization& sr, int max_len,
    int guard = kEnumerationGuardDefault);

/// Attacker observation of a closed-loop string, by walking the supervisor.
std::vector<ObsLabel> oracle_observation(const SupervisorRealization& sr,
                                         std::span<const std::string> s);

/// Membership in the damage language (marked behavior of h).
bool oracle_in_damage(const Fsa& h, std::span<const std::string> s);

/// All attack pairs with |s| <= max_len: s.sigma damaging, and every
/// observation-equivalent one-step sigma-extension in the plant damaging
/// too. Exact on instances whose estimates are fully realized within the
/// bound.
std::vector<AttackPair> oracle_attack_pairs(const Fsa& g, const SupervisorRealization& sr,
                                            const Fsa& h, int max_len);

/// Attackable events carried by some attack pair observation-equivalent to
/// `obs`. Throws ObservationNotFeasible when no string <= max_len yields obs.
std::set<std::string> oracle_I(const Fsa& g, const SupervisorRealization& sr, const Fsa& h,
                               std::span<const ObsLabel> obs, int max_len);

/// One-step sigma-extensions in the plant of strings observation-equivalent
/// to pair.s, bounded by max_len on the extension length.
std::vector<std::vector<std::string>> oracle_En(const Fsa& g, const SupervisorRealization& sr,
                                                const AttackPair& pair, int max_len);

struct PairVerification {
    bool valid = false;
    /// A one-step extension violating the attack-pair conditions, when found.
    /// The equivalence condition is only checked up to max_len.
    std::optional<std::vector<std::string>> counterexample;
};

PairVerification verify_attack_pair(const Fsa& g, const SupervisorRealization& sr,
                                    const Fsa& h, const AttackPair& pair, int max_len);

}  // namespace desa
