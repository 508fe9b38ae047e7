#pragma once

#include <optional>
#include <string>
#include <vector>

#include "balcube/binomial.hpp"

namespace balcube {

// One verified property. Counts are exact; `witness` carries the canonical
// text of an offending (or extremal) vertex or family when there is one.
struct CheckResult {
    std::string name;
    bool pass = false;
    std::optional<Count> m;         // segment length / slice size the check ran at
    std::optional<Count> measured;
    std::optional<Count> bound;
    std::string detail;
    std::string witness;
};

struct VerificationReport {
    std::string subject;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Stable line-oriented rendering; byte-identical across runs by construction.
std::string render_text(const VerificationReport& report);

}  // namespace balcube
