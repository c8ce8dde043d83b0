#include <cosmetry/json_io.hpp>

#include <json.hpp>

namespace cosmetry {

namespace {

using json = nlohmann::ordered_json;

json data_object(const std::vector<std::pair<std::string, std::string>>& kvs) {
    json obj = json::object();
    for (const auto& [k, v] : kvs) obj[k] = v;
    return obj;
}

}  // namespace

std::string to_json(const ObstructionReport& report) {
    json j;
    j["verdict"] = verdict_str(report.verdict);
    j["fired"] = report.fired;
    j["trail"] = json::array();
    for (const TrailStep& s : report.trail) {
        json entry;
        entry["step"] = s.step;
        entry["ref"] = s.ref;
        entry["data"] = data_object(s.data);
        j["trail"].push_back(std::move(entry));
    }
    j["witnesses"] = data_object(report.witnesses);
    return j.dump();
}

std::string to_json(const SurgeryDescription& description) {
    json j;
    if (const auto* rs = std::get_if<ReducibleSum>(&description)) {
        j["type"] = "reducible_sum";
        j["companion_slope"] = rs->companion_slope.str();
        j["lens"] = "L(" + rs->lens_q.get_str() + "," + rs->lens_p.get_str() + ")";
    } else if (const auto* cs = std::get_if<CompanionSurgery>(&description)) {
        j["type"] = "companion_surgery";
        j["slope"] = cs->slope.str();
    } else {
        const auto& g = std::get<GraphPiece>(description);
        j["type"] = "graph";
        j["exterior"] = g.exterior_label;
        json piece;
        piece["genus"] = g.piece.genus;
        piece["boundary_components"] = g.piece.boundary_components;
        piece["fibers"] = json::array();
        for (const Rational& rho : g.piece.fibers) piece["fibers"].push_back(rho.str());
        j["piece"] = std::move(piece);
        j["gluing"] = {{"m", {g.gluing.m_c2.get_str(), g.gluing.m_h.get_str()}},
                       {"l", {g.gluing.l_c2.get_str(), g.gluing.l_h.get_str()}}};
    }
    return j.dump();
}

std::string to_json_line(const CandidatePair& candidate) {
    json j;
    j["m"] = candidate.m.get_str();
    j["n"] = candidate.n.get_str();
    j["nprime"] = candidate.nprime.get_str();
    j["passed"] = candidate.passed;
    if (candidate.family_b) {
        j["family_b"] = {{"r", candidate.family_b->first.get_str()},
                         {"k", candidate.family_b->second.get_str()}};
    } else {
        j["family_b"] = nullptr;
    }
    return j.dump();
}

}  // namespace cosmetry
