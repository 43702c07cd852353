#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace parabraid {

// One verification record.  `anchor` names the algebraic fact being checked,
// stable across releases so reports can be diffed.
struct CheckRecord {
    std::string suite;
    std::string check_id;
    std::string anchor;
    std::map<std::string, std::string> parameters;
    bool pass = false;
    std::string witness;
};

struct SuiteReport {
    std::vector<CheckRecord> records;

    bool all_pass() const;
    void add(CheckRecord record);
    void merge(const SuiteReport& other);
};

nlohmann::ordered_json to_json(const CheckRecord& record);
nlohmann::ordered_json to_json(const SuiteReport& report, const std::string& command,
                               const std::map<std::string, std::string>& parameters);

// Serialized with a trailing newline; byte-identical for identical inputs.
std::string render_json(const nlohmann::ordered_json& doc);

}  // namespace parabraid
