#include "qtoda_cli/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace qtoda::cli {

bool VerificationReport::pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

void VerificationReport::append(const VerificationReport& other)
{
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

std::string VerificationReport::to_json(int indent) const
{
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["status"] = pass() ? "pass" : "fail";
    j["checked"] = checks.size();
    auto& arr = j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json r;
        r["id"] = c.id;
        r["anchor"] = c.anchor;
        r["status"] = c.pass ? "pass" : "fail";
        if (!c.residual.empty()) r["residual"] = c.residual;
        if (!c.details.empty()) r["details"] = c.details;
        r["wall_ms"] = std::round(c.wall_ms * 1000) / 1000;
        arr.push_back(std::move(r));
    }
    return j.dump(indent);
}

std::string VerificationReport::to_text() const
{
    std::ostringstream os;
    for (const auto& c : checks) {
        char ms[32];
        std::snprintf(ms, sizeof ms, "%.1f", c.wall_ms);
        os << (c.pass ? "PASS " : "FAIL ") << c.id << "  [" << c.anchor << "]  (" << ms << " ms)\n";
        for (const auto& [k, v] : c.details) os << "       " << k << ": " << v << '\n';
        if (!c.residual.empty()) os << "       residual: " << c.residual << '\n';
    }
    size_t passed = std::count_if(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
    os << suite << ": " << (pass() ? "pass" : "fail") << " (" << passed << "/" << checks.size() << " checks)\n";
    return os.str();
}

std::string clip(const std::string& s, size_t limit)
{
    if (s.size() <= limit) return s;
    return s.substr(0, limit) + " ... (" + std::to_string(s.size() - limit) + " more characters)";
}

}  // namespace qtoda::cli
