#include "desa/errors.hpp"

namespace desa {

std::string to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::kParse: return "parse";
        case ErrorKind::kAlphabetNesting: return "alphabet-nesting";
        case ErrorKind::kControllability: return "controllability";
        case ErrorKind::kObservability: return "observability";
        case ErrorKind::kDamageOverlap: return "damage-overlaps-closed-loop";
        case ErrorKind::kDamageIncomplete: return "damage-incomplete";
        case ErrorKind::kNotAttackable: return "not-attackable";
        case ErrorKind::kObservationDesync: return "observation-desync";
        case ErrorKind::kObservationNotFeasible: return "observation-not-feasible";
        case ErrorKind::kStringNotInClosedLoop: return "string-not-in-closed-loop";
        case ErrorKind::kEnumerationGuard: return "enumeration-guard";
        case ErrorKind::kUnknownState: return "unknown-state";
        case ErrorKind::kInternal: return "internal";
    }
    return "internal";
}

}  // namespace desa
