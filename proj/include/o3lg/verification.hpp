#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace o3lg {

enum class CheckStatus { Pass, Fail, Ledgered };

std::string status_name(CheckStatus s);

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
    std::string ledger_id;  // set when the outcome is explained by a known discrepancy
};

struct SuiteResult {
    int criterion = 0;
    std::string title;
    // Whether a ledgered mismatch still counts as meeting the criterion.
    bool ledger_allowed = false;
    std::vector<CheckResult> checks;
    double seconds = 0.0;

    int count(CheckStatus s) const;
    // strict: ledgered checks fail unless ledger_allowed.  lenient: only
    // outright failures count.
    bool passed(bool strict = true) const;
};

struct VerifyOptions {
    std::uint64_t seed = 1;
    int trials = 10;       // random draws per numeric check
    int oracle_lmax = 6;   // rank sweep bound
};

constexpr int kCriterionCount = 12;

std::string criterion_title(int id);
SuiteResult run_criterion(int id, const VerifyOptions& opt = {});

} // namespace o3lg
