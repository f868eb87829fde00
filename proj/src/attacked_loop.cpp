#include "desa/attacked_loop.hpp"

#include <algorithm>
#include <deque>

#include "desa/errors.hpp"

namespace desa {

namespace {

EventSet defined_events(const Fsa& fsa, const std::string& state) {
    EventSet out;
    for (const auto& [label, dst] : fsa.out(state)) out.insert(label.event);
    return out;
}

}  // namespace

EventSet AttackedLoop::command(const std::string& state) const {
    return command_at_.at(info_.at(state).supervisor);
}

std::set<std::string> AttackedLoop::attack_decision(const std::string& state) const {
    EventSet gamma = command(state);
    std::set<std::string> out;
    for (const auto& e : gamma) {
        if (universe_.is_attackable(e)) out.insert(e);
    }
    const auto& lf = attack_at_.at(info_.at(state).attacker);
    out.insert(lf.begin(), lf.end());
    return out;
}

AttackedLoop build_attacked_loop(const Fsa& g, const SupervisorRealization& sr,
                                 const MooreAttacker& a, const Fsa& h) {
    const EventUniverse& u = sr.universe();
    if (!is_complete(h, u)) {
        throw Error(ErrorKind::kDamageIncomplete,
                    "attacked loop requires a complete damage automaton");
    }

    AttackedLoop loop;
    loop.universe_ = u;
    loop.attack_at_ = a.lf;
    for (const auto& x : sr.fsa().states()) {
        loop.command_at_.emplace(x, defined_events(sr.fsa(), x));
    }

    auto name = [](const AttackedLoop::StateInfo& t) {
        return tuple_state({t.plant, t.supervisor, t.damage, t.attacker});
    };

    AttackedLoop::StateInfo init{g.initial(), sr.fsa().initial(), h.initial(),
                                 a.fsa.initial()};
    loop.fsa_.set_initial(name(init));
    loop.info_.emplace(name(init), init);
    for (const auto& e : u.events()) loop.fsa_.add_alphabet_label(Label::plain(e));

    std::deque<AttackedLoop::StateInfo> queue{init};
    while (!queue.empty()) {
        AttackedLoop::StateInfo t = queue.front();
        queue.pop_front();
        const std::string src = name(t);
        const EventSet gamma = loop.command_at_.at(t.supervisor);
        const auto& attacked = loop.attack_at_.at(t.attacker);

        for (const auto& e : u.events()) {
            const std::string* q2 = g.next(t.plant, Label::plain(e));
            if (q2 == nullptr) continue;

            if (gamma.count(e) != 0) {
                AttackedLoop::StateInfo n = t;
                n.plant = *q2;
                n.supervisor = *sr.fsa().next(t.supervisor, Label::plain(e));
                n.damage = *h.next(t.damage, Label::plain(e));
                if (u.is_observable(e)) {
                    ObsLabel obs(u.is_attacker_observable(e) ? e : std::string(),
                                 loop.command_at_.at(n.supervisor));
                    const std::string* y2 = a.fsa.next(t.attacker, Label::observation(obs));
                    if (y2 == nullptr) {
                        throw ObservationDesync(
                            "attacker has no transition for feasible observation " +
                            obs.text() + " at estimate " + t.attacker);
                    }
                    n.attacker = *y2;
                }
                const std::string dst = name(n);
                loop.fsa_.add_transition(src, Label::plain(e), dst);
                if (loop.info_.emplace(dst, n).second) queue.push_back(n);
            } else if (attacked.count(e) != 0) {
                // The attacker enabled a supervisor-disabled event: the step
                // leaves L(V/G) and the run halts with a verdict.
                const std::string* z2 = h.next(t.damage, Label::plain(e));
                const std::string& dst = h.is_marked(*z2) ? kDamageState : kDetectedState;
                loop.fsa_.add_transition(src, Label::plain(e), dst);
            }
        }
    }
    return loop;
}

SuccessReport check_success(const AttackedLoop& loop) {
    SuccessReport report;
    report.damage_reachable = loop.damage_reachable();
    report.detected_reachable = loop.detected_reachable();
    report.successful = report.damage_reachable && !report.detected_reachable;
    if (report.detected_reachable) {
        std::deque<std::pair<std::string, std::vector<std::string>>> queue{
            {loop.fsa().initial(), {}}};
        std::set<std::string> seen{loop.fsa().initial()};
        while (!queue.empty()) {
            auto [st, word] = queue.front();
            queue.pop_front();
            if (st == kDetectedState) {
                report.counterexample = word;
                break;
            }
            for (const auto& [label, dst] : loop.fsa().out(st)) {
                if (seen.insert(dst).second) {
                    auto next_word = word;
                    next_word.push_back(label.event);
                    queue.emplace_back(dst, std::move(next_word));
                }
            }
        }
    }
    return report;
}

ReplayTrace replay(const AttackedLoop& loop, std::span<const std::string> s) {
    ReplayTrace trace;
    trace.verdict = "running";
    std::string cur = loop.fsa().initial();

    for (const auto& e : s) {
        if (cur == kDamageState || cur == kDetectedState) {
            trace.stop_reason = "halted";
            break;
        }
        const AttackedLoop::StateInfo& t = loop.info(cur);
        ReplayStep step;
        step.plant = t.plant;
        step.supervisor = t.supervisor;
        step.damage = t.damage;
        step.attacker = t.attacker;
        step.command = loop.command(cur);
        step.attack_decision = loop.attack_decision(cur);
        for (const auto& ev : step.command) {
            if (!loop.universe().is_attackable(ev)) step.modified_command.insert(ev);
        }
        step.modified_command.insert(step.attack_decision.begin(),
                                     step.attack_decision.end());
        step.event = e;

        const std::string* dst = loop.fsa().next(cur, Label::plain(e));
        if (dst == nullptr) {
            step.status = step.modified_command.count(e) == 0 ? "blocked:command-disabled"
                                                              : "blocked:plant-undefined";
            trace.stop_reason = step.modified_command.count(e) == 0 ? "command-disabled"
                                                                    : "plant-undefined";
            trace.steps.push_back(std::move(step));
            break;
        }
        cur = *dst;
        if (cur == kDamageState) {
            step.status = "damage";
            trace.verdict = kDamageState;
        } else if (cur == kDetectedState) {
            step.status = "detected";
            trace.verdict = kDetectedState;
        } else {
            step.status = "ok";
        }
        trace.steps.push_back(std::move(step));
    }
    return trace;
}

}  // namespace desa
