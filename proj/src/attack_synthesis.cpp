#include "desa/attack_synthesis.hpp"

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

AnnotatedSupervisor annotate_supervisor(const SupervisorRealization& sr) {
    const Fsa& s = sr.fsa();
    const EventUniverse& u = sr.universe();
    Fsa out;
    out.set_initial(s.initial());
    for (const auto& x : s.states()) {
        out.add_state(x);
        for (const auto& [label, x2] : s.out(x)) {
            if (u.is_observable(label.event)) {
                out.add_transition(x, Label::observation(ObsLabel(label.event,
                                                                  defined_events(s, x2))),
                                   x2);
            } else {
                out.add_transition(x, label, x2);
            }
        }
    }
    return AnnotatedSupervisor{std::move(out), u};
}

Fsa strip_annotations(const AnnotatedSupervisor& sa) {
    Fsa out;
    out.set_initial(sa.fsa.initial());
    for (const auto& x : sa.fsa.states()) {
        out.add_state(x);
        for (const auto& [label, x2] : sa.fsa.out(x)) {
            const std::string& event =
                label.kind == Label::Kind::kObs ? label.obs->event : label.event;
            out.add_transition(x, Label::plain(event), x2);
        }
    }
    for (const auto& e : sa.universe.events()) out.add_alphabet_label(Label::plain(e));
    return out;
}

bool is_complete(const Fsa& h, const EventUniverse& u) {
    for (const auto& z : h.states()) {
        for (const auto& e : u.events()) {
            if (h.next(z, Label::plain(e)) == nullptr) return false;
        }
    }
    return true;
}

namespace {

std::string fresh_sink_name(const Fsa& h) {
    bool all_numeric = true;
    long long max_value = -1;
    for (const auto& z : h.states()) {
        if (z.empty() || !std::all_of(z.begin(), z.end(), [](char c) { return std::isdigit(c); })) {
            all_numeric = false;
            break;
        }
        max_value = std::max(max_value, std::stoll(z));
    }
    if (all_numeric) return std::to_string(max_value + 1);
    std::string name = "dump";
    while (h.has_state(name)) name += "'";
    return name;
}

}  // namespace

Fsa complete_damage_automaton(const Fsa& h, const EventUniverse& u) {
    if (is_complete(h, u)) return h;
    Fsa out = h;
    const std::string sink = fresh_sink_name(h);
    out.add_state(sink);
    for (const auto& z : out.states()) {
        for (const auto& e : u.events()) {
            if (out.next(z, Label::plain(e)) == nullptr) {
                out.add_transition(z, Label::plain(e), sink);
            }
        }
    }
    return out;
}

namespace {

// Looks up the annotated label for a supervisor-observable event at state x;
// nullptr when the supervisor disables the event there.
const Label* annotated_edge(const Fsa& sa, const std::string& x, const std::string& event) {
    for (const auto& [label, dst] : sa.out(x)) {
        if (label.kind == Label::Kind::kObs && label.obs->event == event) return &label;
    }
    return nullptr;
}

bool supervisor_enables(const Fsa& sa, const std::string& x, const std::string& event,
                        bool observable) {
    if (observable) return annotated_edge(sa, x, event) != nullptr;
    return sa.next(x, Label::plain(event)) != nullptr;
}

}  // namespace

GeneralizedProduct generalized_product(const Fsa& g, const AnnotatedSupervisor& sa,
                                       const Fsa& h) {
    const EventUniverse& u = sa.universe;
    if (!is_complete(h, u)) {
        throw Error(ErrorKind::kDamageIncomplete,
                    "generalized product requires a complete damage automaton");
    }

    // Exact disjointness precheck: L_m(H) must not meet L(S||G).
    {
        Fsa s = strip_annotations(sa);
        Fsa loop = sync_product(g, s);
        Fsa loop_all = loop;
        for (const auto& st : loop.states()) loop_all.mark(st);
        Fsa probe = sync_product(loop_all, h);
        std::deque<std::pair<std::string, std::vector<std::string>>> queue{
            {probe.initial(), {}}};
        std::set<std::string> seen{probe.initial()};
        while (!queue.empty()) {
            auto [st, word] = queue.front();
            queue.pop_front();
            if (probe.is_marked(st)) {
                throw DamageOverlapsClosedLoop(join(word, " "));
            }
            for (const auto& [label, dst] : probe.out(st)) {
                if (seen.insert(dst).second) {
                    auto next_word = word;
                    next_word.push_back(label.event);
                    queue.emplace_back(dst, std::move(next_word));
                }
            }
        }
    }

    GeneralizedProduct gp{Fsa{}, u, defined_events(strip_annotations(sa), sa.fsa.initial())};
    Fsa& out = gp.fsa;

    struct Triple {
        std::string q, x, z;
    };
    auto name = [](const Triple& t) { return tuple_state({t.q, t.x, t.z}); };

    Triple init{g.initial(), sa.fsa.initial(), h.initial()};
    out.set_initial(name(init));
    std::deque<Triple> queue{init};
    std::set<std::string> seen{name(init)};

    while (!queue.empty()) {
        Triple t = queue.front();
        queue.pop_front();
        const std::string src = name(t);
        for (const auto& e : u.events()) {
            const std::string* q2 = g.next(t.q, Label::plain(e));
            if (q2 == nullptr) continue;
            const std::string* z2 = h.next(t.z, Label::plain(e));

            if (u.is_observable(e)) {
                // Rules 1-2: supervisor-enabled observable events carry the
                // attacker's observation (event part only when the attacker
                // sees the event itself).
                if (const Label* edge = annotated_edge(sa.fsa, t.x, e)) {
                    Triple n{*q2, *sa.fsa.next(t.x, *edge), *z2};
                    ObsLabel obs(u.is_attacker_observable(e) ? e : std::string(),
                                 edge->obs->command);
                    out.add_transition(src, Label::annotated(e, obs), name(n));
                    if (seen.insert(name(n)).second) queue.push_back(n);
                }
            } else {
                // Rule 3: unobservable events carry no observation.
                if (const std::string* x2 = sa.fsa.next(t.x, Label::plain(e))) {
                    Triple n{*q2, *x2, *z2};
                    out.add_transition(src, Label::annotated(e, std::nullopt), name(n));
                    if (seen.insert(name(n)).second) queue.push_back(n);
                }
            }

            // Rules 4-5: a supervisor-disabled attackable event the plant can
            // fire ends the game, in TOP when the extension is damaging.
            if (u.is_attackable(e) &&
                !supervisor_enables(sa.fsa, t.x, e, u.is_observable(e))) {
                const std::string& verdict = h.is_marked(*z2) ? kTopState : kBotState;
                out.add_transition(src, Label::plain(e), verdict);
            }
        }
    }
    return gp;
}

MooreAttacker subset_with_labels(const GeneralizedProduct& gp) {
    // GPS^2: keep only the triple states, project every transition onto its
    // observation part; unobservable moves become epsilon moves.
    EpsilonNfa nfa(gp.fsa.initial());
    for (const auto& v : gp.fsa.states()) {
        if (v == kTopState || v == kBotState) continue;
        for (const auto& [label, dst] : gp.fsa.out(v)) {
            if (label.kind != Label::Kind::kPair) continue;
            if (label.obs) {
                nfa.add_transition(v, Label::observation(*label.obs), dst);
            } else {
                nfa.add_transition(v, std::nullopt, dst);
            }
        }
    }

    DeterminizedFsa det = determinize(nfa);
    MooreAttacker m{std::move(det.fsa), {}, std::move(det.members), gp.initial_command,
                    gp.universe};

    for (const auto& [y, members] : m.members) {
        std::set<std::string>& lf = m.lf[y];
        for (const auto& sigma : gp.universe.attackable()) {
            bool some_top = false;
            bool all_top = true;
            for (const auto& v : members) {
                const std::string* t = gp.fsa.next(v, Label::plain(sigma));
                if (t == nullptr) continue;
                if (*t == kTopState) {
                    some_top = true;
                } else {
                    all_top = false;
                }
            }
            if (some_top && all_top) lf.insert(sigma);
        }
    }
    return m;
}

AttackVerdict is_attackable(const MooreAttacker& m) {
    struct Crumb {
        std::string parent;
        ObsLabel label;
    };
    std::map<std::string, Crumb> crumbs;
    std::deque<std::string> queue{m.fsa.initial()};
    std::set<std::string> seen{m.fsa.initial()};

    while (!queue.empty()) {
        std::string y = queue.front();
        queue.pop_front();
        auto it = m.lf.find(y);
        if (it != m.lf.end() && !it->second.empty()) {
            AttackVerdict v;
            v.attackable = true;
            v.witness_state = y;
            v.attacked_events = it->second;
            std::string cur = y;
            while (cur != m.fsa.initial()) {
                const Crumb& c = crumbs.at(cur);
                v.witness_observation.push_back(c.label);
                cur = c.parent;
            }
            std::reverse(v.witness_observation.begin(), v.witness_observation.end());
            return v;
        }
        for (const auto& [label, dst] : m.fsa.out(y)) {
            if (seen.insert(dst).second) {
                crumbs.emplace(dst, Crumb{y, *label.obs});
                queue.push_back(dst);
            }
        }
    }
    return AttackVerdict{};
}

EstimatePairWalk walk_estimate_pairs(const GeneralizedProduct& gp, const MooreAttacker& m) {
    EstimatePairWalk walk;
    auto key = [](const std::string& v, const std::string& y) { return v + "|" + y; };

    // The other members of the initial estimate are found through the
    // unobservable edges, which leave the estimate component fixed.
    std::set<std::string> seen{key(gp.fsa.initial(), m.fsa.initial())};
    std::deque<EstimatePairWalk::Node> queue{{gp.fsa.initial(), m.fsa.initial(), 0, {}}};

    while (!queue.empty()) {
        EstimatePairWalk::Node node = queue.front();
        queue.pop_front();
        walk.nodes.push_back(node);
        walk.max_depth = std::max(walk.max_depth, node.depth);

        for (const auto& [label, dst] : gp.fsa.out(node.triple)) {
            if (label.kind != Label::Kind::kPair) continue;
            std::string y2 = node.estimate;
            if (label.obs) {
                const std::string* t = m.fsa.next(node.estimate, Label::observation(*label.obs));
                if (t == nullptr) continue;  // cannot happen for a matching pair
                y2 = *t;
            }
            if (seen.insert(key(dst, y2)).second) {
                EstimatePairWalk::Node next{dst, y2, node.depth + 1, node.word};
                next.word.push_back(label.event);
                queue.push_back(std::move(next));
            }
        }
    }
    return walk;
}

AttackPair extract_attack_pair(const MooreAttacker& m, const GeneralizedProduct& gp) {
    AttackVerdict verdict = is_attackable(m);
    if (!verdict.attackable) throw NotAttackable();

    EstimatePairWalk walk = walk_estimate_pairs(gp, m);
    for (const auto& node : walk.nodes) {
        if (node.estimate != verdict.witness_state) continue;
        for (const auto& sigma : verdict.attacked_events) {
            const std::string* t = gp.fsa.next(node.triple, Label::plain(sigma));
            if (t != nullptr && *t == kTopState) {
                return AttackPair{node.word, sigma};
            }
        }
    }
    throw Error(ErrorKind::kInternal, "witness estimate lost during pair extraction");
}

std::set<std::string> supremal_attack_decision(const MooreAttacker& m,
                                               std::span<const ObsLabel> obs) {
    std::string y = m.fsa.initial();
    for (const auto& l : obs) {
        const std::string* t = m.fsa.next(y, Label::observation(l));
        if (t == nullptr) {
            throw ObservationNotFeasible("observation label " + l.text() +
                                         " is not feasible at estimate " + y);
        }
        y = *t;
    }
    EventSet gamma_last =
        obs.empty() ? m.initial_command : obs.back().command_set();
    std::set<std::string> decision;
    for (const auto& e : gamma_last) {
        if (m.universe.is_attackable(e)) decision.insert(e);
    }
    const auto& lf = m.lf.at(y);
    decision.insert(lf.begin(), lf.end());
    return decision;
}

}  // namespace desa
