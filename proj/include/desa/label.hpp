#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "desa/event_universe.hpp"

namespace desa {

/// One letter of the attacker's observation alphabet: an event the attacker
/// saw (or "" when it only intercepted a command) together with the command
/// issued by the supervisor right after the step. The same (event, command)
/// shape also carries the annotated supervisor's observable edges, where the
/// event part is a supervisor-observable event.
struct ObsLabel {
    std::string event;                  // "" encodes the empty observation
    std::vector<std::string> command;   // sorted, duplicate-free

    ObsLabel() = default;
    ObsLabel(std::string ev, const EventSet& gamma)
        : event(std::move(ev)), command(gamma.begin(), gamma.end()) {}
    ObsLabel(std::string ev, std::vector<std::string> gamma)
        : event(std::move(ev)), command(std::move(gamma)) {}

    EventSet command_set() const { return EventSet(command.begin(), command.end()); }

    auto operator<=>(const ObsLabel&) const = default;

    /// Canonical rendering, e.g. "(eps,{b,c})" or "(c,{a,b})".
    std::string text() const;
};

/// Transition label. Three shapes cover every machine in the pipeline:
///  - kEvent: a plain event (plant, supervisor, damage automaton, and the
///    attackable one-step edges of the generalized product);
///  - kObs: an (event, command) pair on its own (annotated supervisor edges,
///    subset-machine edges);
///  - kPair: a plant event bundled with its observation annotation; an empty
///    annotation encodes the unobservable-move labels.
struct Label {
    enum class Kind { kEvent, kObs, kPair };

    Kind kind = Kind::kEvent;
    std::string event;             // kEvent/kPair: the plant event; kObs: ""
    std::optional<ObsLabel> obs;   // kObs: the label; kPair: nullopt = no observation

    static Label plain(std::string event);
    static Label observation(ObsLabel l);
    static Label annotated(std::string plant_event, std::optional<ObsLabel> l);

    auto operator<=>(const Label&) const = default;

    std::string text() const;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep);

}  // namespace desa
