#include "desa/automata_ops.hpp"

#include <algorithm>
#include <deque>

#include "desa/errors.hpp"

namespace desa {

Fsa sync_product(const Fsa& a, const Fsa& b) {
    Fsa out;
    std::set<Label> all;
    all.insert(a.alphabet().begin(), a.alphabet().end());
    all.insert(b.alphabet().begin(), b.alphabet().end());
    for (const auto& l : all) out.add_alphabet_label(l);

    auto name = [](const std::string& p, const std::string& q) { return tuple_state({p, q}); };

    std::deque<std::pair<std::string, std::string>> queue{{a.initial(), b.initial()}};
    std::set<std::string> seen{name(a.initial(), b.initial())};
    out.set_initial(name(a.initial(), b.initial()));

    while (!queue.empty()) {
        auto [p, q] = queue.front();
        queue.pop_front();
        const std::string src = name(p, q);
        if (a.is_marked(p) && b.is_marked(q)) out.mark(src);

        for (const auto& l : all) {
            const bool in_a = a.alphabet().count(l) != 0;
            const bool in_b = b.alphabet().count(l) != 0;
            const std::string* pa = in_a ? a.next(p, l) : nullptr;
            const std::string* pb = in_b ? b.next(q, l) : nullptr;
            std::string np, nq;
            if (in_a && in_b) {
                if (pa == nullptr || pb == nullptr) continue;
                np = *pa;
                nq = *pb;
            } else if (in_a) {
                if (pa == nullptr) continue;
                np = *pa;
                nq = q;
            } else {
                if (pb == nullptr) continue;
                np = p;
                nq = *pb;
            }
            const std::string dst = name(np, nq);
            out.add_transition(src, l, dst);
            if (seen.insert(dst).second) queue.emplace_back(np, nq);
        }
    }
    return out;
}

DeterminizedFsa determinize(const EpsilonNfa& n) {
    DeterminizedFsa out;

    auto canonical = [](const std::set<std::string>& subset) {
        return std::vector<std::string>(subset.begin(), subset.end());
    };

    std::set<std::string> init = n.epsilon_closure({n.initial()});
    std::vector<std::string> init_members = canonical(init);
    std::string init_name = subset_state(init_members);
    out.fsa.set_initial(init_name);
    out.members.emplace(init_name, init_members);

    std::deque<std::set<std::string>> queue{init};
    std::set<std::string> seen{init_name};

    while (!queue.empty()) {
        std::set<std::string> cur = queue.front();
        queue.pop_front();
        const std::string src = subset_state(canonical(cur));
        for (const auto& label : n.alphabet()) {
            std::set<std::string> nxt = n.epsilon_closure(n.step(cur, label));
            if (nxt.empty()) continue;
            std::vector<std::string> members = canonical(nxt);
            const std::string dst = subset_state(members);
            out.fsa.add_transition(src, label, dst);
            if (seen.insert(dst).second) {
                out.members.emplace(dst, std::move(members));
                queue.push_back(nxt);
            }
        }
    }
    return out;
}

namespace {

std::vector<std::vector<Label>> enumerate_impl(const Fsa& a, int max_len, int guard,
                                               bool marked_only) {
    if (max_len < 0) throw Error(ErrorKind::kInternal, "negative enumeration length");
    if (max_len > guard) throw EnumerationGuard(max_len, guard);

    std::vector<std::vector<Label>> out;
    // Level sets keyed by word; map order gives the lexicographic order
    // within each length.
    std::map<std::vector<Label>, std::string> level{{{}, a.initial()}};
    for (int len = 0; len <= max_len; ++len) {
        for (const auto& [word, state] : level) {
            if (!marked_only || a.is_marked(state)) out.push_back(word);
        }
        if (len == max_len) break;
        std::map<std::vector<Label>, std::string> next_level;
        for (const auto& [word, state] : level) {
            for (const auto& [label, dst] : a.out(state)) {
                std::vector<Label> extended = word;
                extended.push_back(label);
                next_level.emplace(std::move(extended), dst);
            }
        }
        level.swap(next_level);
    }
    return out;
}

}  // namespace

std::vector<std::vector<Label>> enumerate_language(const Fsa& a, int max_len, int guard) {
    return enumerate_impl(a, max_len, guard, false);
}

std::vector<std::vector<Label>> enumerate_marked(const Fsa& a, int max_len, int guard) {
    return enumerate_impl(a, max_len, guard, true);
}

Fsa reachable_trim(const Fsa& a) {
    std::set<std::string> reach{a.initial()};
    std::deque<std::string> queue{a.initial()};
    while (!queue.empty()) {
        std::string s = queue.front();
        queue.pop_front();
        for (const auto& [label, dst] : a.out(s)) {
            if (reach.insert(dst).second) queue.push_back(dst);
        }
    }
    Fsa out;
    out.set_initial(a.initial());
    for (const auto& l : a.alphabet()) out.add_alphabet_label(l);
    for (const auto& s : reach) {
        out.add_state(s);
        if (a.is_marked(s)) out.mark(s);
        for (const auto& [label, dst] : a.out(s)) out.add_transition(s, label, dst);
    }
    return out;
}

std::vector<Label> to_labels(const std::vector<std::string>& events) {
    std::vector<Label> out;
    out.reserve(events.size());
    for (const auto& e : events) out.push_back(Label::plain(e));
    return out;
}

std::vector<std::string> to_events(const std::vector<Label>& word) {
    std::vector<std::string> out;
    out.reserve(word.size());
    for (const auto& l : word) out.push_back(l.event);
    return out;
}

}  // namespace desa
