#pragma once

#include <chrono>
#include <map>
#include <string>
#include <vector>

namespace qtoda::cli {

struct CheckRecord {
    std::string id;
    std::string anchor;  // which statement is being checked
    bool pass = false;
    std::string residual;  // dump of the failing residual, empty on success
    std::map<std::string, std::string> details;
    double wall_ms = 0;
};

struct VerificationReport {
    std::string suite;
    std::vector<CheckRecord> checks;

    bool pass() const;
    void append(const VerificationReport& other);
    /// Record a check; the callable returns false or throws on failure.
    template <class F>
    CheckRecord& run(std::string id, std::string anchor, F&& body);

    std::string to_json(int indent = 2) const;
    std::string to_text() const;
};

/// Shorten long residual dumps for reports.
std::string clip(const std::string& s, size_t limit = 4000);

template <class F>
CheckRecord& VerificationReport::run(std::string id, std::string anchor, F&& body)
{
    CheckRecord rec;
    rec.id = std::move(id);
    rec.anchor = std::move(anchor);
    auto t0 = std::chrono::steady_clock::now();
    try {
        rec.pass = body(rec);
    } catch (const std::exception& e) {
        rec.pass = false;
        rec.residual = std::string("exception: ") + e.what();
    }
    rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    checks.push_back(std::move(rec));
    return checks.back();
}

}  // namespace qtoda::cli
