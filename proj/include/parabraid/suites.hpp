#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parabraid/report.hpp"

namespace parabraid {

// Command-line run configuration.  Unset optionals leave the suite on its
// default verification grid; explicit values pin a single grid point.
struct RunConfig {
    std::optional<int> modes;
    std::optional<int> order;    // p
    std::optional<int> factors;  // q
    std::optional<int> cutoff;   // N
    std::optional<int> bound;    // D
    std::string relator_text;    // content of --relators FILE (may be empty)

    void validate() const;  // throws std::invalid_argument
};

const std::vector<std::string>& suite_names();

// Runs one named suite (or "all") and returns its records.
SuiteReport run_suite(const std::string& suite, const RunConfig& config);

}  // namespace parabraid
