#pragma once

#include <map>
#include <vector>

#include "desa/fsa.hpp"

namespace desa {

inline constexpr int kEnumerationGuardDefault = 12;

/// Synchronous product with the usual shared-alphabet rule: a label moves
/// both machines when it belongs to both alphabets, and only its owner
/// otherwise. Only the reachable part is built; states are named "(p,q)".
/// A product state is marked when both components are marked.
Fsa sync_product(const Fsa& a, const Fsa& b);

/// Subset construction result. Each state of the deterministic automaton is
/// the canonical "{...}" name of its member set, and `members` keeps the
/// sorted member names for downstream labeling.
struct DeterminizedFsa {
    Fsa fsa;
    std::map<std::string, std::vector<std::string>> members;
};

/// Subset construction; the initial state is the epsilon closure of the
/// input's initial state. Only nonempty, reachable subsets are produced.
DeterminizedFsa determinize(const EpsilonNfa& n);

/// All words of L(a) up to max_len, in length-lexicographic order.
/// Rejects max_len above the guard; the enumeration is desk-scale on purpose.
std::vector<std::vector<Label>> enumerate_language(const Fsa& a, int max_len,
                                                   int guard = kEnumerationGuardDefault);

/// Same, restricted to words ending in a marked state.
std::vector<std::vector<Label>> enumerate_marked(const Fsa& a, int max_len,
                                                 int guard = kEnumerationGuardDefault);

/// Restriction of `a` to the states reachable from its initial state.
Fsa reachable_trim(const Fsa& a);

std::vector<Label> to_labels(const std::vector<std::string>& events);
std::vector<std::string> to_events(const std::vector<Label>& word);

}  // namespace desa
