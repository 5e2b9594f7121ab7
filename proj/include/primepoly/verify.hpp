#pragma once

// Cross-checks of every closed-form result for one (d, e) against the
// brute-force oracle, over several bases.

#include "primepoly/oracle.hpp"

#include <iosfwd>
#include <string>

namespace primepoly {

enum class CheckStatus { Pass, Fail, Skip };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
};

struct VerificationReport {
    int d = 0;
    int e = 0;
    std::vector<ExactRat> bases;
    std::vector<CheckResult> checks;

    bool passed() const;
    /// Deterministic text rendering, one line per check.
    void write(std::ostream& os) const;
};

/// Throws std::invalid_argument for d < 2, e < 2, an empty base list or a base <= 1.
VerificationReport verify_instance(int d, int e, const std::vector<ExactRat>& bases,
                                   const OracleLimits& limits = {});

}  // namespace primepoly
