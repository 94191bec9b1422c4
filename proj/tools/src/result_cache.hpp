#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>

namespace ordered_ramsey::cli {

/// Append-only JSONL store for expensive results.  Every record wraps a
/// result with the toolkit version, a timestamp, and the exact parameter
/// key that produced it.  Lookups re-verify every stored witness; a
/// malformed or non-verifying record makes the whole lookup fail rather
/// than being skipped.
class ResultCache {
public:
    ResultCache(std::string path, bool enabled)
        : path_(std::move(path)), enabled_(enabled) {}

    std::optional<nlohmann::json> lookup(const std::string& kind,
                                         const nlohmann::json& key) const;
    void store(const std::string& kind, const nlohmann::json& key,
               const nlohmann::json& result) const;

private:
    std::string path_;
    bool enabled_;
};

}  // namespace ordered_ramsey::cli
