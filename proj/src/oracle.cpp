#include "desa/oracle.hpp"

#include <algorithm>

#include "desa/errors.hpp"

namespace desa {

namespace {

EventSet defined_events(const Fsa& fsa, const std::string& state) {
    EventSet out;
    for (const auto& [label, dst] : fsa.out(state)) out.insert(label.event);
    return out;
}

const std::string* walk(const Fsa& fsa, std::span<const std::string> s) {
    const std::string* cur = &fsa.initial();
    for (const auto& e : s) {
        cur = fsa.next(*cur, Label::plain(e));
        if (cur == nullptr) return nullptr;
    }
    return cur;
}

struct Enumeration {
    std::vector<std::vector<std::string>> words;
    // observation -> indices into words, in length-lexicographic order
    std::map<std::vector<ObsLabel>, std::vector<size_t>> classes;
    std::vector<std::vector<ObsLabel>> observation;  // parallel to words
};

Enumeration enumerate_loop(const Fsa& g, const SupervisorRealization& sr, int max_len,
                           int guard) {
    if (max_len > guard) throw EnumerationGuard(max_len, guard);
    Enumeration out;

    struct Cursor {
        std::string q, x;
        std::vector<ObsLabel> obs;
    };
    std::map<std::vector<std::string>, Cursor> level{
        {{}, {g.initial(), sr.fsa().initial(), {}}}};
    const EventUniverse& u = sr.universe();

    for (int len = 0; len <= max_len; ++len) {
        for (const auto& [word, cur] : level) {
            out.classes[cur.obs].push_back(out.words.size());
            out.words.push_back(word);
            out.observation.push_back(cur.obs);
        }
        if (len == max_len) break;
        std::map<std::vector<std::string>, Cursor> next_level;
        for (const auto& [word, cur] : level) {
            // One inductive step: sigma must be enabled by the supervisor's
            // current command and fireable by the plant.
            for (const auto& e : defined_events(sr.fsa(), cur.x)) {
                const std::string* q2 = g.next(cur.q, Label::plain(e));
                if (q2 == nullptr) continue;
                Cursor n;
                n.q = *q2;
                n.x = *sr.fsa().next(cur.x, Label::plain(e));
                n.obs = cur.obs;
                if (u.is_observable(e)) {
                    n.obs.emplace_back(u.is_attacker_observable(e) ? e : std::string(),
                                       defined_events(sr.fsa(), n.x));
                }
                auto word2 = word;
                word2.push_back(e);
                next_level.emplace(std::move(word2), std::move(n));
            }
        }
        level.swap(next_level);
    }
    return out;
}

}  // namespace

std::vector<std::vector<std::string>> oracle_closed_loop(const Fsa& g,
                                                         const SupervisorRealization& sr,
                                                         int max_len, int guard) {
    return enumerate_loop(g, sr, max_len, guard).words;
}

std::vector<ObsLabel> oracle_observation(const SupervisorRealization& sr,
                                         std::span<const std::string> s) {
    std::vector<ObsLabel> out;
    std::string x = sr.fsa().initial();
    for (const auto& e : s) {
        const std::string* t = sr.fsa().next(x, Label::plain(e));
        if (t == nullptr) {
            throw StringNotInClosedLoop("supervisor cannot follow '" + e + "'");
        }
        x = *t;
        if (sr.universe().is_observable(e)) {
            out.emplace_back(sr.universe().is_attacker_observable(e) ? e : std::string(),
                             defined_events(sr.fsa(), x));
        }
    }
    return out;
}

bool oracle_in_damage(const Fsa& h, std::span<const std::string> s) {
    const std::string* z = walk(h, s);
    return z != nullptr && h.is_marked(*z);
}

namespace {

// Shared core: for each enumerated string and attackable event, test the two
// attack-pair conditions against the whole (bounded) observation class.
std::vector<AttackPair> attack_pairs_impl(const Fsa& g, const SupervisorRealization& sr,
                                          const Fsa& h, const Enumeration& en) {
    std::vector<AttackPair> out;
    const EventUniverse& u = sr.universe();
    for (size_t i = 0; i < en.words.size(); ++i) {
        const auto& s = en.words[i];
        for (const auto& sigma : u.attackable()) {
            auto extended = s;
            extended.push_back(sigma);
            if (walk(g, extended) == nullptr) continue;
            if (!oracle_in_damage(h, extended)) continue;
            bool all_damaging = true;
            for (size_t j : en.classes.at(en.observation[i])) {
                auto other = en.words[j];
                other.push_back(sigma);
                if (walk(g, other) != nullptr && !oracle_in_damage(h, other)) {
                    all_damaging = false;
                    break;
                }
            }
            if (all_damaging) out.push_back(AttackPair{s, sigma});
        }
    }
    return out;
}

}  // namespace

std::vector<AttackPair> oracle_attack_pairs(const Fsa& g, const SupervisorRealization& sr,
                                            const Fsa& h, int max_len) {
    return attack_pairs_impl(g, sr, h, enumerate_loop(g, sr, max_len, kEnumerationGuardDefault));
}

std::set<std::string> oracle_I(const Fsa& g, const SupervisorRealization& sr, const Fsa& h,
                               std::span<const ObsLabel> obs, int max_len) {
    Enumeration en = enumerate_loop(g, sr, max_len, kEnumerationGuardDefault);
    std::vector<ObsLabel> key(obs.begin(), obs.end());
    auto cls = en.classes.find(key);
    if (cls == en.classes.end()) {
        throw ObservationNotFeasible("no string up to length " + std::to_string(max_len) +
                                     " produces the requested observation");
    }
    std::set<std::string> out;
    for (const auto& pair : attack_pairs_impl(g, sr, h, en)) {
        if (oracle_observation(sr, pair.s) == key) out.insert(pair.sigma);
    }
    return out;
}

std::vector<std::vector<std::string>> oracle_En(const Fsa& g, const SupervisorRealization& sr,
                                                const AttackPair& pair, int max_len) {
    Enumeration en = enumerate_loop(g, sr, max_len, kEnumerationGuardDefault);
    std::vector<ObsLabel> key = oracle_observation(sr, pair.s);
    std::vector<std::vector<std::string>> out;
    auto cls = en.classes.find(key);
    if (cls == en.classes.end()) return out;
    for (size_t j : cls->second) {
        auto extended = en.words[j];
        extended.push_back(pair.sigma);
        if (static_cast<int>(extended.size()) <= max_len && walk(g, extended) != nullptr) {
            out.push_back(std::move(extended));
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

PairVerification verify_attack_pair(const Fsa& g, const SupervisorRealization& sr,
                                    const Fsa& h, const AttackPair& pair, int max_len) {
    PairVerification v;
    auto extended = pair.s;
    extended.push_back(pair.sigma);
    if (walk(g, extended) == nullptr || !oracle_in_damage(h, extended)) {
        v.counterexample = extended;
        return v;
    }
    Enumeration en = enumerate_loop(g, sr, max_len, kEnumerationGuardDefault);
    std::vector<ObsLabel> key = oracle_observation(sr, pair.s);
    auto cls = en.classes.find(key);
    if (cls != en.classes.end()) {
        for (size_t j : cls->second) {
            auto other = en.words[j];
            other.push_back(pair.sigma);
            if (walk(g, other) != nullptr && !oracle_in_damage(h, other)) {
                v.counterexample = other;
                return v;
            }
        }
    }
    v.valid = true;
    return v;
}

}  // namespace desa
