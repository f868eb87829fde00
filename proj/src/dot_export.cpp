#include "desa/dot_export.hpp"

#include <sstream>

namespace desa {

namespace {

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

void emit_header(std::ostringstream& out, const std::string& name, const std::string& initial) {
    out << "digraph " << name << " {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=circle];\n";
    out << "  __start [shape=point];\n";
    out << "  __start -> \"" << escape(initial) << "\";\n";
}

void emit_edges(std::ostringstream& out, const Fsa& fsa) {
    for (const auto& s : fsa.states()) {
        for (const auto& [label, dst] : fsa.out(s)) {
            out << "  \"" << escape(s) << "\" -> \"" << escape(dst) << "\" [label=\""
                << escape(label.text()) << "\"];\n";
        }
    }
}

}  // namespace

std::string to_dot(const AnnotatedSupervisor& sa) {
    std::ostringstream out;
    emit_header(out, "annotated_supervisor", sa.fsa.initial());
    emit_edges(out, sa.fsa);
    out << "}\n";
    return out.str();
}

std::string to_dot(const GeneralizedProduct& gp) {
    std::ostringstream out;
    emit_header(out, "generalized_product", gp.fsa.initial());
    for (const auto& s : gp.fsa.states()) {
        if (s == kTopState) {
            out << "  \"" << kTopState
                << "\" [shape=doublecircle, style=bold, label=\"TOP\"];\n";
        } else if (s == kBotState) {
            out << "  \"" << kBotState << "\" [shape=square, label=\"BOT\"];\n";
        }
    }
    emit_edges(out, gp.fsa);
    out << "}\n";
    return out.str();
}

std::string to_dot(const MooreAttacker& m) {
    std::ostringstream out;
    emit_header(out, "moore_attacker", m.fsa.initial());
    for (const auto& [name, members] : m.members) {
        const auto& lf = m.lf.at(name);
        std::string label = name + " | Lf={" +
                            join(std::vector<std::string>(lf.begin(), lf.end()), ",") + "}";
        out << "  \"" << escape(name) << "\" [shape=box, label=\"" << escape(label) << "\"";
        if (!lf.empty()) out << ", style=bold";
        out << "];\n";
    }
    emit_edges(out, m.fsa);
    out << "}\n";
    return out.str();
}

}  // namespace desa
