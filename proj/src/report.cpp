#include "ydlab/report.hpp"

#include <json.hpp>

#include <sstream>

namespace ydlab {

Check& VerificationReport::require_eq(const std::string& label, const LinMap& lhs,
                                      const LinMap& rhs) {
    Check c;
    c.label = label;
    auto diff = LinMap::first_difference(lhs, rhs);
    if (diff) {
        c.passed = false;
        c.counterexample = *diff;
    }
    checks.push_back(std::move(c));
    return checks.back();
}

Check& VerificationReport::require(const std::string& label, bool ok, const std::string& note) {
    Check c;
    c.label = label;
    c.passed = ok;
    c.note = note;
    checks.push_back(std::move(c));
    return checks.back();
}

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix) {
    for (Check c : other.checks) {
        if (!prefix.empty()) c.label = prefix + "/" + c.label;
        checks.push_back(std::move(c));
    }
    for (const auto& n : other.notes) notes.push_back(prefix.empty() ? n : prefix + ": " + n);
}

std::string VerificationReport::to_text() const {
    std::ostringstream out;
    out << "subject: " << subject << "\n";
    for (const auto& c : checks) {
        out << (c.passed ? "PASS" : "FAIL") << "  " << c.label;
        if (c.counterexample) {
            out << "  (first difference at (" << c.counterexample->row << ","
                << c.counterexample->col << "): " << c.counterexample->lhs
                << " != " << c.counterexample->rhs << ")";
        }
        if (!c.note.empty()) out << "  [" << c.note << "]";
        out << "\n";
    }
    for (const auto& n : notes) out << "note: " << n << "\n";
    if (seed) out << "seed: " << *seed << "\n";
    out << "elapsed_ms: " << elapsed_ms << "\n";
    out << "result: " << (passed() ? "pass" : "fail") << "\n";
    return out.str();
}

std::string VerificationReport::to_json_text() const {
    nlohmann::json j;
    j["subject"] = subject;
    j["passed"] = passed();
    j["elapsed_ms"] = elapsed_ms;
    if (seed) j["seed"] = *seed;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json jc;
        jc["label"] = c.label;
        jc["passed"] = c.passed;
        if (c.counterexample) {
            jc["counterexample"] = {{"row", c.counterexample->row},
                                    {"col", c.counterexample->col},
                                    {"lhs", c.counterexample->lhs},
                                    {"rhs", c.counterexample->rhs}};
        }
        if (!c.note.empty()) jc["note"] = c.note;
        j["checks"].push_back(jc);
    }
    if (!notes.empty()) j["notes"] = notes;
    return j.dump(2);
}

}  // namespace ydlab
