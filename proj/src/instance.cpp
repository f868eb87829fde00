#include "desa/instance.hpp"

#include <fstream>
#include <sstream>

#include "desa/errors.hpp"

namespace desa {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

constexpr const char* kBadNameChars = "(){},|\"";

struct Section {
    Fsa* fsa = nullptr;
    bool marks_allowed = false;
    bool has_initial = false;
    std::set<std::pair<std::string, std::string>> seen_transitions;
};

}  // namespace

ProblemInstance parse_instance(const std::string& text, const std::string& filename) {
    ProblemInstance inst;
    EventSet events, controllable, observable, attackable, attacker_observable;

    std::map<std::string, Section> sections;
    sections["plant"] = Section{&inst.plant, false};
    sections["supervisor"] = Section{&inst.supervisor, false};
    sections["damage"] = Section{&inst.damage, true};

    std::string current;
    bool events_seen = false;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    auto fail = [&](const std::string& msg) -> void { throw ParseError(filename, lineno, msg); };

    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') fail("malformed section header");
            current = line.substr(1, line.size() - 2);
            if (current == "events") {
                if (events_seen) fail("duplicate [events] section");
                events_seen = true;
            } else if (sections.count(current) == 0) {
                fail("unknown section '" + current + "'");
            }
            continue;
        }

        if (current.empty()) fail("content before the first section header");

        if (current == "events") {
            std::vector<std::string> toks = split_ws(line);
            const std::string& name = toks[0];
            if (name.find_first_of(kBadNameChars) != std::string::npos) {
                fail("event name '" + name + "' contains a reserved character");
            }
            if (!events.insert(name).second) fail("duplicate event '" + name + "'");
            for (size_t i = 1; i < toks.size(); ++i) {
                if (toks[i] == "c") controllable.insert(name);
                else if (toks[i] == "o") observable.insert(name);
                else if (toks[i] == "ca") attackable.insert(name);
                else if (toks[i] == "oa") attacker_observable.insert(name);
                else fail("unknown event flag '" + toks[i] + "'");
            }
            continue;
        }

        Section& sec = sections.at(current);
        std::vector<std::string> toks = split_ws(line);
        if (toks[0] == "initial") {
            if (toks.size() != 2) fail("'initial' takes exactly one state");
            if (sec.has_initial) fail("duplicate 'initial' in [" + current + "]");
            if (toks[1].find_first_of(kBadNameChars) != std::string::npos) {
                fail("state name '" + toks[1] + "' contains a reserved character");
            }
            sec.fsa->set_initial(toks[1]);
            sec.has_initial = true;
            continue;
        }
        if (toks[0] == "marked") {
            if (!sec.marks_allowed) fail("'marked' is only allowed in [damage]");
            for (size_t i = 1; i < toks.size(); ++i) sec.fsa->mark(toks[i]);
            continue;
        }

        // transition line: src -> dst : event
        auto arrow = line.find("->");
        auto colon = arrow == std::string::npos ? std::string::npos : line.find(':', arrow + 2);
        if (arrow == std::string::npos || colon == std::string::npos) {
            fail("expected 'src -> dst : event'");
        }
        std::string src = trim(line.substr(0, arrow));
        std::string dst = trim(line.substr(arrow + 2, colon - arrow - 2));
        std::string event = trim(line.substr(colon + 1));
        if (src.empty() || dst.empty() || event.empty()) fail("expected 'src -> dst : event'");
        for (const auto* name : {&src, &dst}) {
            if (name->find_first_of(kBadNameChars) != std::string::npos) {
                fail("state name '" + *name + "' contains a reserved character");
            }
        }
        if (!events_seen || events.count(event) == 0) fail("unknown event '" + event + "'");
        if (!sec.seen_transitions.emplace(src, event).second) {
            fail("duplicate transition from '" + src + "' on '" + event + "'");
        }
        sec.fsa->add_transition(src, Label::plain(event), dst);
    }

    if (!events_seen) throw ParseError(filename, lineno, "missing [events] section");
    for (const auto& [name, sec] : sections) {
        if (!sec.has_initial) {
            throw ParseError(filename, lineno, "section [" + name + "] missing 'initial'");
        }
    }
    inst.universe = EventUniverse(events, controllable, observable, attackable,
                                  attacker_observable);
    inst.universe.validate();

    for (const auto& e : events) {
        inst.plant.add_alphabet_label(Label::plain(e));
        inst.supervisor.add_alphabet_label(Label::plain(e));
        inst.damage.add_alphabet_label(Label::plain(e));
    }
    return inst;
}

ProblemInstance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, "cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str(), path);
}

namespace {

void serialize_fsa(std::ostringstream& out, const std::string& name, const Fsa& fsa,
                   bool with_marks) {
    out << "[" << name << "]\n";
    out << "initial " << fsa.initial() << "\n";
    if (with_marks && !fsa.marked().empty()) {
        out << "marked";
        for (const auto& z : fsa.marked()) out << " " << z;
        out << "\n";
    }
    for (const auto& s : fsa.states()) {
        for (const auto& [label, dst] : fsa.out(s)) {
            out << s << " -> " << dst << " : " << label.event << "\n";
        }
    }
    out << "\n";
}

}  // namespace

std::string serialize_instance(const ProblemInstance& inst) {
    std::ostringstream out;
    out << "[events]\n";
    for (const auto& e : inst.universe.events()) {
        out << e;
        if (inst.universe.is_controllable(e)) out << " c";
        if (inst.universe.is_observable(e)) out << " o";
        if (inst.universe.is_attackable(e)) out << " ca";
        if (inst.universe.is_attacker_observable(e)) out << " oa";
        out << "\n";
    }
    out << "\n";
    serialize_fsa(out, "plant", inst.plant, false);
    serialize_fsa(out, "supervisor", inst.supervisor, false);
    serialize_fsa(out, "damage", inst.damage, true);
    std::string text = out.str();
    while (!text.empty() && text.back() == '\n') text.pop_back();
    text.push_back('\n');
    return text;
}

}  // namespace desa
