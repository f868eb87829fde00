#pragma once

#include <span>
#include <vector>

#include "desa/automata_ops.hpp"
#include "desa/event_universe.hpp"
#include "desa/fsa.hpp"

namespace desa {

/// A control command: the set of events the supervisor currently enables.
/// Always a superset of the uncontrollable events for a valid supervisor.
struct ControlCommand {
    EventSet enabled;

    bool operator==(const ControlCommand&) const = default;
};

/// A supervisor automaton that passed the controllability and normal
/// observability checks against its universe. The enabled set at a state is
/// exactly the set of events defined there.
class SupervisorRealization {
public:
    const Fsa& fsa() const { return fsa_; }
    const EventUniverse& universe() const { return universe_; }

    /// Control command at a supervisor state; throws UnknownState.
    ControlCommand command_at(const std::string& state) const;

    /// The command issued before anything has been observed.
    ControlCommand initial_command() const { return command_at(fsa_.initial()); }

private:
    friend SupervisorRealization validate_supervisor(const Fsa&, const EventUniverse&, bool);
    SupervisorRealization(Fsa fsa, EventUniverse universe)
        : fsa_(std::move(fsa)), universe_(std::move(universe)) {}

    Fsa fsa_;
    EventUniverse universe_;
};

/// Validates `s` against `u`. With repair_selfloops, missing unobservable
/// self-loops are added first; nothing else is ever repaired.
/// Throws AlphabetNestingViolation, ControllabilityViolation or
/// ObservabilityViolation.
SupervisorRealization validate_supervisor(const Fsa& s, const EventUniverse& u,
                                          bool repair_selfloops = false);

/// Natural projection: erases the events outside `onto`.
std::vector<std::string> project(std::span<const std::string> s, const EventSet& onto);

/// The closed loop S || G, reachable part; its language is L(V/G).
/// Product states are named "(plant,supervisor)".
Fsa closed_loop(const Fsa& g, const SupervisorRealization& sr);

/// The attacker's observation sequence for a string the supervisor can
/// follow: one (event-or-empty, command) label per supervisor-observable
/// event. Throws StringNotInClosedLoop when the supervisor cannot follow s.
std::vector<ObsLabel> attacker_observation(const SupervisorRealization& sr,
                                           std::span<const std::string> s);

}  // namespace desa
