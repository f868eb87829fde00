#include "desa/fsa.hpp"

#include "desa/errors.hpp"

namespace desa {

void Fsa::add_state(const std::string& name) { states_.insert(name); }

void Fsa::set_initial(const std::string& name) {
    add_state(name);
    initial_ = name;
}

void Fsa::add_transition(const std::string& src, const Label& label, const std::string& dst) {
    auto& slot = delta_[src];
    auto it = slot.find(label);
    if (it != slot.end() && it->second != dst) {
        throw Error(ErrorKind::kInternal, "nondeterministic transition on '" + label.text() +
                                              "' at state '" + src + "'");
    }
    add_state(src);
    add_state(dst);
    alphabet_.insert(label);
    slot.emplace(label, dst);
}

void Fsa::mark(const std::string& state) {
    add_state(state);
    marked_.insert(state);
}

const std::string* Fsa::next(const std::string& state, const Label& label) const {
    auto it = delta_.find(state);
    if (it == delta_.end()) return nullptr;
    auto jt = it->second.find(label);
    if (jt == it->second.end()) return nullptr;
    return &jt->second;
}

const std::map<Label, std::string>& Fsa::out(const std::string& state) const {
    static const std::map<Label, std::string> kEmpty;
    auto it = delta_.find(state);
    return it == delta_.end() ? kEmpty : it->second;
}

const std::string* Fsa::run(const std::string& from, std::span<const Label> word) const {
    const std::string* cur = &from;
    if (!has_state(from)) return nullptr;
    for (const auto& label : word) {
        cur = next(*cur, label);
        if (cur == nullptr) return nullptr;
    }
    return cur;
}

size_t Fsa::transition_count() const {
    size_t n = 0;
    for (const auto& [state, slot] : delta_) n += slot.size();
    return n;
}

void EpsilonNfa::add_state(const std::string& name) { states_.insert(name); }

void EpsilonNfa::set_initial(const std::string& name) {
    add_state(name);
    initial_ = name;
}

void EpsilonNfa::add_transition(const std::string& src, const std::optional<Label>& label,
                                const std::string& dst) {
    add_state(src);
    add_state(dst);
    if (label) alphabet_.insert(*label);
    delta_[src][label].insert(dst);
}

std::set<std::string> EpsilonNfa::epsilon_closure(const std::set<std::string>& from) const {
    std::set<std::string> out = from;
    std::vector<std::string> stack(from.begin(), from.end());
    while (!stack.empty()) {
        std::string s = stack.back();
        stack.pop_back();
        auto it = delta_.find(s);
        if (it == delta_.end()) continue;
        auto jt = it->second.find(std::nullopt);
        if (jt == it->second.end()) continue;
        for (const auto& t : jt->second) {
            if (out.insert(t).second) stack.push_back(t);
        }
    }
    return out;
}

std::set<std::string> EpsilonNfa::step(const std::set<std::string>& from,
                                       const Label& label) const {
    std::set<std::string> out;
    for (const auto& s : from) {
        auto it = delta_.find(s);
        if (it == delta_.end()) continue;
        auto jt = it->second.find(std::optional<Label>(label));
        if (jt == it->second.end()) continue;
        out.insert(jt->second.begin(), jt->second.end());
    }
    return out;
}

bool EpsilonNfa::accepts(std::span<const Label> word) const {
    std::set<std::string> cur = epsilon_closure({initial_});
    for (const auto& label : word) {
        cur = epsilon_closure(step(cur, label));
        if (cur.empty()) return false;
    }
    return !cur.empty();
}

std::string tuple_state(const std::vector<std::string>& parts) {
    return "(" + join(parts, ",") + ")";
}

std::string subset_state(const std::vector<std::string>& members) {
    return "{" + join(members, ",") + "}";
}

}  // namespace desa
