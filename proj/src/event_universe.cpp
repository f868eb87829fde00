#include "desa/event_universe.hpp"

#include <algorithm>

#include "desa/errors.hpp"

namespace desa {

EventUniverse::EventUniverse(EventSet events, EventSet controllable, EventSet observable,
                             EventSet attackable, EventSet attacker_observable)
    : events_(std::move(events)),
      controllable_(std::move(controllable)),
      observable_(std::move(observable)),
      attackable_(std::move(attackable)),
      attacker_observable_(std::move(attacker_observable)) {}

EventSet EventUniverse::uncontrollable() const {
    EventSet out;
    std::set_difference(events_.begin(), events_.end(), controllable_.begin(),
                        controllable_.end(), std::inserter(out, out.end()));
    return out;
}

EventSet EventUniverse::unobservable() const {
    EventSet out;
    std::set_difference(events_.begin(), events_.end(), observable_.begin(), observable_.end(),
                        std::inserter(out, out.end()));
    return out;
}

namespace {

void require_subset(const EventSet& a, const EventSet& b, const std::string& what) {
    for (const auto& e : a) {
        if (b.count(e) == 0) {
            throw AlphabetNestingViolation(what + ": event '" + e + "' breaks the inclusion");
        }
    }
}

}  // namespace

void EventUniverse::validate() const {
    require_subset(controllable_, events_, "controllable set not within the alphabet");
    require_subset(observable_, events_, "observable set not within the alphabet");
    require_subset(controllable_, observable_, "normal supervisor requires controllable events to be observable");
    require_subset(attacker_observable_, observable_,
                   "attacker-observable events must be observable to the supervisor");
    require_subset(attackable_, controllable_, "attackable events must be controllable");
    require_subset(attackable_, attacker_observable_,
                   "attackable events must be observable to the attacker");
}

}  // namespace desa
