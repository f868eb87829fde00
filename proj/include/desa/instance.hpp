#pragma once

#include <string>

#include "desa/event_universe.hpp"
#include "desa/fsa.hpp"

namespace desa {

struct InstanceOptions {
    bool repair_selfloops = false;
    int max_oracle_len = 6;
    bool strict_damage = false;

    bool operator==(const InstanceOptions&) const = default;
};

/// A parsed problem: alphabet partitions, plant, supervisor and (possibly
/// partial) damage automaton. All three automata are declared over the full
/// alphabet.
struct ProblemInstance {
    EventUniverse universe;
    Fsa plant;
    Fsa supervisor;
    Fsa damage;
    InstanceOptions options;

    bool operator==(const ProblemInstance& other) const {
        return universe == other.universe && plant == other.plant &&
               supervisor == other.supervisor && damage == other.damage;
    }
};

/// Parses the sectioned plain-text instance format:
///
///   [events]
///   name [c] [o] [ca] [oa]     # controllable/observable/attackable/
///                              # attacker-observable
///   [plant] / [supervisor] / [damage]
///   initial <state>
///   marked <state>...          # damage section only
///   <src> -> <dst> : <event>
///
/// '#' starts a comment. Errors carry file and line.
ProblemInstance parse_instance(const std::string& text, const std::string& filename = "");

ProblemInstance load_instance(const std::string& path);

/// Canonical text form; parse(serialize(i)) == i.
std::string serialize_instance(const ProblemInstance& inst);

}  // namespace desa
