#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ydlab/linmap.hpp"

namespace ydlab {

// One named identity check.  For matrix checks the counterexample carries the
// first differing flat coordinate and both entry values; structural checks
// (group tables, element indices) describe the witness in `note`.
struct Check {
    std::string label;
    bool passed = true;
    std::optional<LinMap::Difference> counterexample;
    std::string note;
};

struct VerificationReport {
    std::string subject;
    std::vector<Check> checks;
    std::vector<std::string> notes;
    std::optional<unsigned long> seed;
    double elapsed_ms = 0.0;

    bool passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }

    // Adds a matrix-equality check; records the first differing coordinate on
    // failure.
    Check& require_eq(const std::string& label, const LinMap& lhs, const LinMap& rhs);
    Check& require(const std::string& label, bool ok, const std::string& note = "");
    void note(const std::string& text) { notes.push_back(text); }
    void merge(const VerificationReport& other, const std::string& prefix = "");

    std::string to_text() const;
    std::string to_json_text() const;
};

}  // namespace ydlab
