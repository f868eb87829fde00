#pragma once

#include <optional>

#include "desa/attack_synthesis.hpp"

namespace desa {

inline const std::string kDamageState = "DAMAGE";
inline const std::string kDetectedState = "DETECTED_NO_DAMAGE";

/// The attacked closed loop: plant, supervisor, damage tracker and attacker
/// running together. Its language is L(V_A/G). A step that leaves the
/// supervised behavior is possible only through an attacked event and ends
/// in one of the two absorbing verdict states.
class AttackedLoop {
public:
    struct StateInfo {
        std::string plant, supervisor, damage, attacker;
    };

    const Fsa& fsa() const { return fsa_; }
    const EventUniverse& universe() const { return universe_; }
    const StateInfo& info(const std::string& state) const { return info_.at(state); }

    /// Supervisor command at a composite state.
    EventSet command(const std::string& state) const;
    /// Attacker decision at a composite state (attackable part of the
    /// command plus the attacked events of the estimate).
    std::set<std::string> attack_decision(const std::string& state) const;

    bool damage_reachable() const { return fsa_.has_state(kDamageState); }
    bool detected_reachable() const { return fsa_.has_state(kDetectedState); }

private:
    friend AttackedLoop build_attacked_loop(const Fsa&, const SupervisorRealization&,
                                            const MooreAttacker&, const Fsa&);
    Fsa fsa_;
    std::map<std::string, StateInfo> info_;
    std::map<std::string, EventSet> command_at_;               // supervisor state -> command
    std::map<std::string, std::set<std::string>> attack_at_;   // estimate -> attacked events
    EventUniverse universe_;
};

/// Builds the attacked loop for an enabling Moore attacker. The attacker
/// component steps on every supervisor-observable event; unobservable events
/// leave it fixed. Throws ObservationDesync when the attacker lacks a
/// transition for a feasible observation.
AttackedLoop build_attacked_loop(const Fsa& g, const SupervisorRealization& sr,
                                 const MooreAttacker& a, const Fsa& h);

struct SuccessReport {
    bool successful = false;
    bool damage_reachable = false;
    bool detected_reachable = false;
    /// Shortest string reaching DETECTED_NO_DAMAGE, when one exists.
    std::optional<std::vector<std::string>> counterexample;
};

/// Successful iff a damaging string is reachable and no detected-without-
/// damage string is (exact reachability on the loop automaton).
SuccessReport check_success(const AttackedLoop& loop);

struct ReplayStep {
    std::string plant, supervisor, damage, attacker;
    EventSet command;                      // gamma
    std::set<std::string> attack_decision; // delta gamma
    EventSet modified_command;             // gamma'
    std::string event;
    std::string status;  // ok | damage | detected | blocked:... | halted
};

struct ReplayTrace {
    std::vector<ReplayStep> steps;
    std::string verdict;      // running | DAMAGE | DETECTED_NO_DAMAGE
    std::string stop_reason;  // empty | plant-undefined | command-disabled | halted
};

/// Step-by-step transcript of feeding `s` to the attacked loop; purely
/// diagnostic, accepts any event sequence and reports what blocked.
ReplayTrace replay(const AttackedLoop& loop, std::span<const std::string> s);

}  // namespace desa
