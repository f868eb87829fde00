#include "desa/json_io.hpp"

namespace desa {

Json obs_label_json(const ObsLabel& l) {
    return Json{{"event", l.event}, {"command", l.command}};
}

Json attacker_json(const MooreAttacker& m) {
    Json states = Json::array();
    for (const auto& [name, members] : m.members) {
        Json st{{"name", name}, {"members", members}};
        const auto& lf = m.lf.at(name);
        st["lf"] = std::vector<std::string>(lf.begin(), lf.end());
        states.push_back(std::move(st));
    }
    Json transitions = Json::array();
    for (const auto& [name, members] : m.members) {
        for (const auto& [label, dst] : m.fsa.out(name)) {
            transitions.push_back(Json{{"from", name},
                                       {"label", obs_label_json(*label.obs)},
                                       {"to", dst}});
        }
    }
    return Json{{"initial", m.fsa.initial()},
                {"initial_command",
                 std::vector<std::string>(m.initial_command.begin(), m.initial_command.end())},
                {"states", std::move(states)},
                {"transitions", std::move(transitions)}};
}

Json synthesis_json(const AttackVerdict& verdict, const MooreAttacker& m,
                    const AttackPair* pair) {
    Json out;
    out["attackable"] = verdict.attackable;
    if (verdict.attackable) {
        Json witness;
        Json obs = Json::array();
        for (const auto& l : verdict.witness_observation) obs.push_back(obs_label_json(l));
        witness["observation"] = std::move(obs);
        witness["estimate"] = verdict.witness_state;
        witness["attacked_events"] = std::vector<std::string>(verdict.attacked_events.begin(),
                                                              verdict.attacked_events.end());
        if (pair != nullptr) {
            witness["attack_pair"] = Json{{"string", pair->s}, {"event", pair->sigma}};
        }
        out["witness"] = std::move(witness);
    }
    out["attacker"] = attacker_json(m);
    return out;
}

Json replay_json(const ReplayTrace& trace) {
    Json steps = Json::array();
    auto vec = [](const auto& set) { return std::vector<std::string>(set.begin(), set.end()); };
    for (const auto& s : trace.steps) {
        steps.push_back(Json{{"plant", s.plant},
                             {"supervisor", s.supervisor},
                             {"damage", s.damage},
                             {"attacker", s.attacker},
                             {"command", vec(s.command)},
                             {"attack_decision", vec(s.attack_decision)},
                             {"modified_command", vec(s.modified_command)},
                             {"event", s.event},
                             {"status", s.status}});
    }
    Json out{{"steps", std::move(steps)}, {"verdict", trace.verdict}};
    if (!trace.stop_reason.empty()) out["stop_reason"] = trace.stop_reason;
    return out;
}

Json error_json(const Error& e) {
    return Json{{"error", Json{{"kind", to_string(e.kind())}, {"message", e.what()}}}};
}

}  // namespace desa
