#include "desa/supervisory.hpp"

#include "desa/errors.hpp"

namespace desa {

namespace {

EventSet defined_events(const Fsa& fsa, const std::string& state) {
    EventSet out;
    for (const auto& [label, dst] : fsa.out(state)) out.insert(label.event);
    return out;
}

}  // namespace

ControlCommand SupervisorRealization::command_at(const std::string& state) const {
    if (!fsa_.has_state(state)) throw UnknownState(state);
    return ControlCommand{defined_events(fsa_, state)};
}

SupervisorRealization validate_supervisor(const Fsa& s, const EventUniverse& u,
                                          bool repair_selfloops) {
    u.validate();

    Fsa fsa = s;
    for (const auto& label : fsa.alphabet()) {
        if (label.kind != Label::Kind::kEvent || !u.contains(label.event)) {
            throw Error(ErrorKind::kInternal,
                        "supervisor carries a label outside the alphabet: " + label.text());
        }
    }

    const EventSet unobservable = u.unobservable();
    if (repair_selfloops) {
        for (const auto& x : fsa.states()) {
            for (const auto& e : unobservable) {
                if (fsa.next(x, Label::plain(e)) == nullptr) {
                    fsa.add_transition(x, Label::plain(e), x);
                }
            }
        }
    }

    for (const auto& x : fsa.states()) {
        for (const auto& e : unobservable) {
            const std::string* t = fsa.next(x, Label::plain(e));
            if (t == nullptr) {
                throw ObservabilityViolation(x, e, "missing self-loop");
            }
            if (*t != x) {
                throw ObservabilityViolation(x, e, "transition is not a self-loop");
            }
        }
        for (const auto& e : u.uncontrollable()) {
            if (unobservable.count(e) != 0) continue;  // covered above
            if (fsa.next(x, Label::plain(e)) == nullptr) {
                throw ControllabilityViolation(x, e);
            }
        }
    }
    return SupervisorRealization(std::move(fsa), u);
}

std::vector<std::string> project(std::span<const std::string> s, const EventSet& onto) {
    std::vector<std::string> out;
    for (const auto& e : s) {
        if (onto.count(e) != 0) out.push_back(e);
    }
    return out;
}

Fsa closed_loop(const Fsa& g, const SupervisorRealization& sr) {
    return sync_product(g, sr.fsa());
}

std::vector<ObsLabel> attacker_observation(const SupervisorRealization& sr,
                                           std::span<const std::string> s) {
    const EventUniverse& u = sr.universe();
    std::vector<ObsLabel> out;
    std::vector<std::string> consumed;
    std::string x = sr.fsa().initial();
    for (const auto& e : s) {
        const std::string* t = sr.fsa().next(x, Label::plain(e));
        if (t == nullptr) {
            throw StringNotInClosedLoop("supervisor cannot follow event '" + e + "' after \"" +
                                        join(consumed, " ") + "\"");
        }
        consumed.push_back(e);
        x = *t;
        if (u.is_observable(e)) {
            out.emplace_back(u.is_attacker_observable(e) ? e : std::string(),
                             defined_events(sr.fsa(), x));
        }
    }
    return out;
}

}  // namespace desa
