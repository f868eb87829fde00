#pragma once

#include <json.hpp>

#include "desa/attack_synthesis.hpp"
#include "desa/attacked_loop.hpp"
#include "desa/errors.hpp"

namespace desa {

using Json = nlohmann::ordered_json;

Json obs_label_json(const ObsLabel& l);
Json attacker_json(const MooreAttacker& m);

/// Full synthesis report: verdict, witness, attack pair and the attacker.
Json synthesis_json(const AttackVerdict& verdict, const MooreAttacker& m,
                    const AttackPair* pair);

Json replay_json(const ReplayTrace& trace);
Json error_json(const Error& e);

}  // namespace desa
