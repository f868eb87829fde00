#pragma once

#include <map>
#include <set>
#include <span>
#include <string>

#include "desa/label.hpp"

namespace desa {

/// Deterministic finite automaton with a partial transition function.
/// States are opaque names; labels are Label values. The alphabet is stored
/// explicitly because synchronization semantics depend on declared labels,
/// not just on the labels that happen to have transitions.
class Fsa {
public:
    Fsa() = default;
    explicit Fsa(const std::string& initial) { set_initial(initial); }

    void add_state(const std::string& name);
    void set_initial(const std::string& name);
    void add_alphabet_label(const Label& label) { alphabet_.insert(label); }

    /// Throws if the (src, label) slot is already taken by a different target.
    void add_transition(const std::string& src, const Label& label, const std::string& dst);
    void mark(const std::string& state);

    const std::set<std::string>& states() const { return states_; }
    const std::string& initial() const { return initial_; }
    const std::set<std::string>& marked() const { return marked_; }
    const std::set<Label>& alphabet() const { return alphabet_; }

    bool has_state(const std::string& name) const { return states_.count(name) != 0; }
    bool is_marked(const std::string& name) const { return marked_.count(name) != 0; }

    /// Successor of `state` under `label`, or nullptr when undefined.
    const std::string* next(const std::string& state, const Label& label) const;

    /// Outgoing transitions of a state, label-ordered. Empty map for states
    /// without any.
    const std::map<Label, std::string>& out(const std::string& state) const;

    /// Runs a word from `from`; nullptr as soon as a step is undefined.
    const std::string* run(const std::string& from, std::span<const Label> word) const;

    bool defined(std::span<const Label> word) const { return run(initial_, word) != nullptr; }

    size_t transition_count() const;

    bool operator==(const Fsa& other) const = default;

private:
    std::set<std::string> states_;
    std::map<std::string, std::map<Label, std::string>> delta_;
    std::string initial_;
    std::set<std::string> marked_;
    std::set<Label> alphabet_;
};

/// Nondeterministic automaton with epsilon moves; only what determinization
/// needs. The epsilon label is represented by an absent Label.
class EpsilonNfa {
public:
    EpsilonNfa() = default;
    explicit EpsilonNfa(const std::string& initial) { set_initial(initial); }

    void add_state(const std::string& name);
    void set_initial(const std::string& name);
    void add_transition(const std::string& src, const std::optional<Label>& label,
                        const std::string& dst);

    const std::set<std::string>& states() const { return states_; }
    const std::string& initial() const { return initial_; }
    const std::set<Label>& alphabet() const { return alphabet_; }

    std::set<std::string> epsilon_closure(const std::set<std::string>& from) const;
    /// One labelled step (no closure applied).
    std::set<std::string> step(const std::set<std::string>& from, const Label& label) const;

    /// Direct simulation; used as the reference semantics in tests.
    bool accepts(std::span<const Label> word) const;

private:
    std::set<std::string> states_;
    std::map<std::string, std::map<std::optional<Label>, std::set<std::string>>> delta_;
    std::string initial_;
    std::set<Label> alphabet_;
};

/// Canonical name for a product state, e.g. "(1,0,2)".
std::string tuple_state(const std::vector<std::string>& parts);

/// Canonical name for a subset state, e.g. "{(0,0,1),(1,0,2)}"; members must
/// already be sorted.
std::string subset_state(const std::vector<std::string>& members);

}  // namespace desa
