#include "result_cache.hpp"

#include <sys/file.h>

#include <chrono>
#include <cstdio>
#include <sstream>

#include "ordered_ramsey/json_io.hpp"
#include "ordered_ramsey/version.hpp"

namespace ordered_ramsey::cli {
namespace {

using nlohmann::json;

// Advisory flock held for the lifetime of the handle.  A missing file on
// read is not an error, it just means no cache yet.
class LockedFile {
public:
    LockedFile(const std::string& path, const char* mode, int lock_op) {
        f_ = std::fopen(path.c_str(), mode);
        if (!f_) return;
        if (flock(fileno(f_), lock_op) != 0) {
            std::fclose(f_);
            f_ = nullptr;
            fail(errc::cache_corrupt, "cannot lock cache file " + path);
        }
    }
    LockedFile(const LockedFile&) = delete;
    LockedFile& operator=(const LockedFile&) = delete;
    ~LockedFile() {
        if (f_) {
            flock(fileno(f_), LOCK_UN);
            std::fclose(f_);
        }
    }
    std::FILE* get() const { return f_; }

private:
    std::FILE* f_ = nullptr;
};

json parse_record(const std::string& line) {
    try {
        return parse_json_text(line);
    } catch (const error&) {
        fail(errc::cache_corrupt, "cache record is not valid JSON");
    }
}

void verify_record(const json& rec) {
    if (!rec.is_object() || !rec.contains("kind") || !rec.contains("key") ||
        !rec.contains("result") || !rec.contains("version") ||
        !rec.contains("timestamp") || !rec["kind"].is_string())
        fail(errc::cache_corrupt, "cache record missing fields");
    const std::string kind = rec["kind"];
    try {
        if (kind == "ramsey") {
            RamseyResult r = ramsey_result_from_json(rec["result"]);
            if (r.witness &&
                (r.witness->n != r.lo - 1 || !is_free(*r.witness, r.graph)))
                fail(errc::cache_corrupt, "cached search witness does not re-verify");
        } else if (kind == "extremal") {
            ExtremalResult r = extremal_result_from_json(rec["result"]);
            if (r.witness.count_ones() != r.value ||
                matrix_contains(r.witness, r.pattern))
                fail(errc::cache_corrupt, "cached extremal witness does not re-verify");
        } else {
            fail(errc::cache_corrupt, "unknown cache record kind '" + kind + "'");
        }
    } catch (const error& e) {
        if (e.code() == errc::cache_corrupt) throw;
        fail(errc::cache_corrupt, std::string("cache record rejected: ") + e.what());
    }
}

}  // namespace

std::optional<json> ResultCache::lookup(const std::string& kind,
                                        const json& key) const {
    if (!enabled_) return std::nullopt;
    LockedFile lf(path_, "r", LOCK_SH);
    if (!lf.get()) return std::nullopt;

    std::string text;
    char buf[1 << 16];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, lf.get())) > 0)
        text.append(buf, got);

    std::optional<json> hit;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        json rec = parse_record(line);
        verify_record(rec);
        if (!hit && rec["kind"] == kind && rec["key"] == key) hit = rec["result"];
    }
    return hit;
}

void ResultCache::store(const std::string& kind, const json& key,
                        const json& result) const {
    if (!enabled_) return;
    LockedFile lf(path_, "a", LOCK_EX);
    if (!lf.get()) fail(errc::cache_corrupt, "cannot open cache file " + path_);
    json rec{{"version", k_version},
             {"timestamp", std::chrono::duration_cast<std::chrono::seconds>(
                               std::chrono::system_clock::now().time_since_epoch())
                               .count()},
             {"kind", kind},
             {"key", key},
             {"result", result}};
    std::string line = rec.dump() + "\n";
    std::fwrite(line.data(), 1, line.size(), lf.get());
}

}  // namespace ordered_ramsey::cli
