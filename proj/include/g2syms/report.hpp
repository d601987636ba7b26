#pragma once

// Check reports shared by the audit and certification pipelines. Every check
// lands in a report with an exact description of any discrepancy; nothing is
// rounded and nothing is swallowed.

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace g2syms {

enum class Verdict { Pass, Fail, Inconclusive };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        default: return "inconclusive";
    }
}

struct CheckResult {
    std::string name;
    Verdict verdict = Verdict::Pass;
    std::string details;
};

struct Report {
    std::vector<CheckResult> checks;
    std::map<std::string, std::string> quantities;
    std::vector<std::string> notes;

    void add(std::string name, bool ok, std::string details = "") {
        checks.push_back({std::move(name), ok ? Verdict::Pass : Verdict::Fail, std::move(details)});
    }
    void add(std::string name, Verdict v, std::string details = "") {
        checks.push_back({std::move(name), v, std::move(details)});
    }
    void merge(const Report& other, const std::string& prefix = "") {
        for (const CheckResult& c : other.checks)
            checks.push_back({prefix + c.name, c.verdict, c.details});
        for (const auto& [k, v] : other.quantities) quantities[prefix + k] = v;
        for (const std::string& n : other.notes) notes.push_back(n);
    }

    bool all_pass() const {
        return std::all_of(checks.begin(), checks.end(),
                           [](const CheckResult& c) { return c.verdict == Verdict::Pass; });
    }
    bool any_fail() const {
        return std::any_of(checks.begin(), checks.end(),
                           [](const CheckResult& c) { return c.verdict == Verdict::Fail; });
    }
    bool any_inconclusive() const {
        return std::any_of(checks.begin(), checks.end(),
                           [](const CheckResult& c) { return c.verdict == Verdict::Inconclusive; });
    }
    const CheckResult* find(const std::string& name) const {
        for (const CheckResult& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }

    std::string summary() const {
        std::ostringstream os;
        for (const CheckResult& c : checks) {
            os << "[" << to_string(c.verdict) << "] " << c.name;
            if (!c.details.empty()) os << "  (" << c.details << ")";
            os << "\n";
        }
        for (const auto& [k, v] : quantities) os << "  " << k << " = " << v << "\n";
        for (const std::string& n : notes) os << "  note: " << n << "\n";
        return os.str();
    }
};

}  // namespace g2syms
