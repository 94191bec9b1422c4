#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

namespace ordered_ramsey::cli {

struct ReproOutcome {
    bool pass = true;
    nlohmann::json checks = nlohmann::json::array();
};

/// Runs the named reproduction check.  Every check rebuilds its inputs from
/// the generators; nothing is read from the cache.  Unknown ids are a usage
/// error.
ReproOutcome run_repro(const std::string& id);

const std::vector<std::string>& repro_ids();

}  // namespace ordered_ramsey::cli
