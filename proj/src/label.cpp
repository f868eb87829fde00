#include "desa/label.hpp"

#include <sstream>

namespace desa {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += sep;
        out += parts[i];
    }
    return out;
}

std::string ObsLabel::text() const {
    std::string out = "(";
    out += event.empty() ? "eps" : event;
    out += ",{";
    out += join(command, ",");
    out += "})";
    return out;
}

Label Label::plain(std::string event) {
    Label l;
    l.kind = Kind::kEvent;
    l.event = std::move(event);
    return l;
}

Label Label::observation(ObsLabel obs) {
    Label l;
    l.kind = Kind::kObs;
    l.obs = std::move(obs);
    return l;
}

Label Label::annotated(std::string plant_event, std::optional<ObsLabel> obs) {
    Label l;
    l.kind = Kind::kPair;
    l.event = std::move(plant_event);
    l.obs = std::move(obs);
    return l;
}

std::string Label::text() const {
    switch (kind) {
        case Kind::kEvent:
            return event;
        case Kind::kObs:
            return obs->text();
        case Kind::kPair:
            return "(" + event + "," + (obs ? obs->text() : std::string("eps")) + ")";
    }
    return {};
}

}  // namespace desa
