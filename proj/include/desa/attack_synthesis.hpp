#pragma once

#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "desa/supervisory.hpp"

namespace desa {

inline const std::string kTopState = "TOP";  // one-step attack hits the damage set
inline const std::string kBotState = "BOT";  // one-step attack detected without damage

/// Supervisor with each observable edge relabeled by the command issued at
/// the successor state; unobservable edges kept as plain events.
struct AnnotatedSupervisor {
    Fsa fsa;
    EventUniverse universe;
};

AnnotatedSupervisor annotate_supervisor(const SupervisorRealization& sr);

/// Drops the annotations again; recovers the supervisor automaton exactly.
Fsa strip_annotations(const AnnotatedSupervisor& sa);

bool is_complete(const Fsa& h, const EventUniverse& u);

/// Makes the damage automaton complete by routing every missing transition
/// into a fresh unmarked sink. When all state names are integers the sink is
/// the next integer, otherwise "dump". The marked language is unchanged.
Fsa complete_damage_automaton(const Fsa& h, const EventUniverse& u);

/// Product of plant, annotated supervisor and damage automaton. Inside
/// Q x X x Z it transduces closed-loop strings into attacker observations;
/// the extra TOP/BOT states classify every one-step extension with a
/// supervisor-disabled attackable event.
struct GeneralizedProduct {
    Fsa fsa;  // triple states "(q,x,z)" plus TOP and BOT
    EventUniverse universe;
    EventSet initial_command;  // command at the supervisor's initial state
};

/// Builds the reachable generalized product. Requires a complete damage
/// automaton and checks, exactly, that the damage language is disjoint from
/// the closed-loop behavior (DamageOverlapsClosedLoop with a witness string
/// otherwise).
GeneralizedProduct generalized_product(const Fsa& g, const AnnotatedSupervisor& sa,
                                       const Fsa& h);

/// Deterministic Moore automaton over the attacker's observation alphabet.
/// Each state is an estimate: the set of product triples compatible with the
/// observations so far. lf(y) holds the attackable events whose one-step
/// attack is guaranteed damaging across the whole estimate.
struct MooreAttacker {
    Fsa fsa;                                            // labels are ObsLabel
    std::map<std::string, std::set<std::string>> lf;    // state -> attacked events
    std::map<std::string, std::vector<std::string>> members;  // state -> sorted triples
    EventSet initial_command;
    EventUniverse universe;
};

/// Subset construction of the generalized product w.r.t. the attacker's
/// observation alphabet, plus the attack labeling.
MooreAttacker subset_with_labels(const GeneralizedProduct& gp);

struct AttackVerdict {
    bool attackable = false;
    std::vector<ObsLabel> witness_observation;  // shortest, when attackable
    std::string witness_state;
    std::set<std::string> attacked_events;      // Lf at the witness state
};

/// Attackable iff some reachable estimate has a nonempty attack label.
/// The witness is the BFS-shortest observation sequence, ties broken by
/// label order.
AttackVerdict is_attackable(const MooreAttacker& m);

struct AttackPair {
    std::vector<std::string> s;  // string in L(S||G)
    std::string sigma;           // attackable event with s.sigma damaging
};

/// Shortest underlying closed-loop string that realizes the witness
/// observation and reaches a triple with a TOP edge, together with that
/// event. Throws NotAttackable.
AttackPair extract_attack_pair(const MooreAttacker& m, const GeneralizedProduct& gp);

/// The supremal attacker's full decision for a feasible observation
/// sequence: the attackable part of the last command plus the attack label
/// of the reached estimate. Throws ObservationNotFeasible.
std::set<std::string> supremal_attack_decision(const MooreAttacker& m,
                                               std::span<const ObsLabel> obs);

/// Joint walk of the generalized product and the subset machine: node
/// (triple, estimate) with the triple a member of the estimate. `depth` is
/// the length of a shortest underlying closed-loop string realizing the
/// node; `word` is the length-then-label-lexicographic least such string.
struct EstimatePairWalk {
    struct Node {
        std::string triple;
        std::string estimate;
        int depth = 0;
        std::vector<std::string> word;
    };
    std::vector<Node> nodes;  // BFS discovery order
    int max_depth = 0;
};

EstimatePairWalk walk_estimate_pairs(const GeneralizedProduct& gp, const MooreAttacker& m);

}  // namespace desa
