#pragma once

#include <string>
#include <utility>
#include <vector>

namespace oddmorph {

/// Outcome of a verifier. Negative verdicts carry a short machine-readable
/// code (e.g. "neither-vertex", "edge-reuse") plus key/value detail, so
/// callers and tests can assert *why* validation failed.
struct Verdict {
    bool ok = true;
    std::string code;    // empty when ok
    std::string message; // human-readable, empty when ok
    std::vector<std::pair<std::string, std::string>> detail;

    explicit operator bool() const { return ok; }

    static Verdict pass() { return {}; }

    static Verdict fail(std::string code_, std::string message_,
                        std::vector<std::pair<std::string, std::string>> detail_ = {}) {
        Verdict v;
        v.ok = false;
        v.code = std::move(code_);
        v.message = std::move(message_);
        v.detail = std::move(detail_);
        return v;
    }

    /// Append a detail entry, returning *this for chaining.
    Verdict& with(const std::string& key, const std::string& value) {
        detail.emplace_back(key, value);
        return *this;
    }
};

} // namespace oddmorph
