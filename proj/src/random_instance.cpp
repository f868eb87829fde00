#include "desa/random_instance.hpp"

#include "desa/attack_synthesis.hpp"
#include "desa/errors.hpp"
#include "desa/supervisory.hpp"

namespace desa {

namespace {

// Local helpers instead of std::uniform_int_distribution so that seeded runs
// behave the same on every standard library.
int pick(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<uint64_t>(hi - lo + 1));
}

bool chance(std::mt19937_64& rng, double p) {
    return (rng() % 10000) < static_cast<uint64_t>(p * 10000);
}

ProblemInstance draw(std::mt19937_64& rng, const GeneratorOptions& opts) {
    ProblemInstance inst;

    const int n_events = pick(rng, 2, opts.max_events);
    static const std::vector<std::string> kNames = {"a", "b", "c", "d", "e"};
    EventSet events, controllable, observable, attackable, attacker_observable;
    for (int i = 0; i < n_events; ++i) events.insert(kNames[i]);

    for (const auto& e : events) {
        const bool ctrl = chance(rng, 0.75);
        if (ctrl) controllable.insert(e);
        if (ctrl || chance(rng, 0.5)) observable.insert(e);
    }
    for (const auto& e : observable) {
        if (chance(rng, 0.6)) attacker_observable.insert(e);
    }
    std::vector<std::string> pool;
    for (const auto& e : controllable) {
        if (attacker_observable.count(e) != 0) pool.push_back(e);
    }
    for (const auto& e : pool) {
        if (chance(rng, 0.6)) attackable.insert(e);
    }
    if (attackable.empty() && !pool.empty()) {
        attackable.insert(pool[rng() % pool.size()]);
    }
    inst.universe =
        EventUniverse(events, controllable, observable, attackable, attacker_observable);
    inst.universe.validate();

    auto state_name = [](int i) { return std::to_string(i); };

    const int n_q = pick(rng, 2, opts.max_plant_states);
    inst.plant.set_initial(state_name(0));
    for (int q = 0; q < n_q; ++q) {
        inst.plant.add_state(state_name(q));
        for (const auto& e : events) {
            if (chance(rng, 0.45)) {
                inst.plant.add_transition(state_name(q), Label::plain(e),
                                          state_name(pick(rng, 0, n_q - 1)));
            }
        }
    }

    const int n_x = pick(rng, 1, opts.max_supervisor_states);
    inst.supervisor.set_initial(state_name(0));
    const EventSet unobservable = inst.universe.unobservable();
    const EventSet uncontrollable = inst.universe.uncontrollable();
    for (int x = 0; x < n_x; ++x) {
        inst.supervisor.add_state(state_name(x));
        for (const auto& e : events) {
            if (unobservable.count(e) != 0) {
                inst.supervisor.add_transition(state_name(x), Label::plain(e), state_name(x));
            } else if (uncontrollable.count(e) != 0) {
                inst.supervisor.add_transition(state_name(x), Label::plain(e),
                                               state_name(pick(rng, 0, n_x - 1)));
            } else if (chance(rng, 0.55)) {
                inst.supervisor.add_transition(state_name(x), Label::plain(e),
                                               state_name(pick(rng, 0, n_x - 1)));
            }
        }
    }

    const int n_z = pick(rng, 1, opts.max_damage_states);
    inst.damage.set_initial(state_name(0));
    for (int z = 0; z < n_z; ++z) {
        inst.damage.add_state(state_name(z));
        for (const auto& e : events) {
            if (chance(rng, 0.5)) {
                inst.damage.add_transition(state_name(z), Label::plain(e),
                                           state_name(pick(rng, 0, n_z - 1)));
            }
        }
        if (z != 0 && chance(rng, 0.35)) inst.damage.mark(state_name(z));
    }

    for (const auto& e : events) {
        inst.plant.add_alphabet_label(Label::plain(e));
        inst.supervisor.add_alphabet_label(Label::plain(e));
        inst.damage.add_alphabet_label(Label::plain(e));
    }
    return inst;
}

}  // namespace

ProblemInstance random_instance(std::mt19937_64& rng, const GeneratorOptions& opts) {
    for (int attempt = 0; attempt < opts.max_attempts; ++attempt) {
        ProblemInstance inst = draw(rng, opts);
        try {
            SupervisorRealization sr = validate_supervisor(inst.supervisor, inst.universe);
            Fsa h = complete_damage_automaton(inst.damage, inst.universe);
            GeneralizedProduct gp =
                generalized_product(inst.plant, annotate_supervisor(sr), h);
            MooreAttacker m = subset_with_labels(gp);
            if (walk_estimate_pairs(gp, m).max_depth > opts.depth_bound) continue;
            return inst;
        } catch (const DamageOverlapsClosedLoop&) {
            continue;
        }
    }
    throw Error(ErrorKind::kInternal, "random instance generation exhausted its attempts");
}

}  // namespace desa
