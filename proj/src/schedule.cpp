#include "sweep/schedule.hpp"

#include <json.hpp>

namespace sweep {

const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Cleared: return "cleared";
        case SolveStatus::Unclearable: return "unclearable";
        case SolveStatus::Timeout: return "timeout";
        case SolveStatus::StateLimit: return "state-limit";
    }
    return "unknown";
}

std::string schedule_to_json(const Schedule& s) {
    nlohmann::ordered_json j;
    if (!s.clearable()) {
        j["clearable"] = false;
        j["status"] = to_string(s.status);
        return j.dump() + "\n";
    }
    j["clearable"] = true;
    j["cost"] = s.cost;
    j["placement"] = s.placement;
    j["moves"] = s.moves;
    j["trace"] = nlohmann::ordered_json::array();
    for (const auto& step : s.trace) {
        nlohmann::ordered_json t;
        t["pos"] = step.position;
        t["components"] = step.components;
        t["dirty"] = step.dirty;
        j["trace"].push_back(std::move(t));
    }
    return j.dump() + "\n";
}

}  // namespace sweep
