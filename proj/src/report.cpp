#include "parabraid/report.hpp"

namespace parabraid {

bool SuiteReport::all_pass() const {
    for (const auto& r : records) {
        if (!r.pass) return false;
    }
    return true;
}

void SuiteReport::add(CheckRecord record) { records.push_back(std::move(record)); }

void SuiteReport::merge(const SuiteReport& other) {
    records.insert(records.end(), other.records.begin(), other.records.end());
}

nlohmann::ordered_json to_json(const CheckRecord& record) {
    nlohmann::ordered_json j;
    j["suite"] = record.suite;
    j["check_id"] = record.check_id;
    j["anchor"] = record.anchor;
    nlohmann::ordered_json params;
    for (const auto& [k, v] : record.parameters) params[k] = v;
    j["parameters"] = std::move(params);
    j["status"] = record.pass ? "pass" : "fail";
    j["witness"] = record.witness;
    return j;
}

nlohmann::ordered_json to_json(const SuiteReport& report, const std::string& command,
                               const std::map<std::string, std::string>& parameters) {
    nlohmann::ordered_json j;
    j["tool"] = "parabraid";
    j["command"] = command;
    nlohmann::ordered_json params;
    for (const auto& [k, v] : parameters) params[k] = v;
    j["parameters"] = std::move(params);
    nlohmann::ordered_json records = nlohmann::ordered_json::array();
    for (const auto& r : report.records) records.push_back(to_json(r));
    j["records"] = std::move(records);
    j["checks"] = report.records.size();
    j["status"] = report.all_pass() ? "pass" : "fail";
    return j;
}

std::string render_json(const nlohmann::ordered_json& doc) { return doc.dump(2) + "\n"; }

}  // namespace parabraid
