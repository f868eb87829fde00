#pragma once

#include <set>
#include <string>

namespace desa {

using EventSet = std::set<std::string>;

/// The alphabet with its control/observation/attack partitions.
///
/// validate() enforces the normal regime used throughout:
///   Sigma_ca <= Sigma_oa <= Sigma_o  and  Sigma_ca <= Sigma_c <= Sigma_o.
class EventUniverse {
public:
    EventUniverse() = default;
    EventUniverse(EventSet events, EventSet controllable, EventSet observable,
                  EventSet attackable, EventSet attacker_observable);

    const EventSet& events() const { return events_; }
    const EventSet& controllable() const { return controllable_; }
    const EventSet& observable() const { return observable_; }
    const EventSet& attackable() const { return attackable_; }
    const EventSet& attacker_observable() const { return attacker_observable_; }

    EventSet uncontrollable() const;
    EventSet unobservable() const;

    bool contains(const std::string& event) const { return events_.count(event) != 0; }
    bool is_controllable(const std::string& e) const { return controllable_.count(e) != 0; }
    bool is_observable(const std::string& e) const { return observable_.count(e) != 0; }
    bool is_attackable(const std::string& e) const { return attackable_.count(e) != 0; }
    bool is_attacker_observable(const std::string& e) const {
        return attacker_observable_.count(e) != 0;
    }

    /// Throws AlphabetNestingViolation unless every inclusion of the normal
    /// supervisor/attacker regime holds.
    void validate() const;

    bool operator==(const EventUniverse&) const = default;

private:
    EventSet events_;
    EventSet controllable_;
    EventSet observable_;
    EventSet attackable_;
    EventSet attacker_observable_;
};

}  // namespace desa
