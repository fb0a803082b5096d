#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace factoradic::reference {

struct VerifyOptions {
    std::size_t smax = 7;
    std::uint64_t nmax = 10080;
    std::uint64_t kmax = 12;
};

struct SuiteResult {
    std::string name;
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    /// Description of the first mismatch, empty when the suite passed.
    std::string first_failure;

    bool passed() const noexcept { return failures == 0; }
};

struct VerifyReport {
    std::vector<SuiteResult> suites;

    bool passed() const noexcept;
};

/// Runs every fast path against its brute-force counterpart over the ranges
/// in `options`. Throws RangeTooLarge if options.smax exceeds the enumeration
/// limit.
VerifyReport run_verification(const VerifyOptions& options = {});

}  // namespace factoradic::reference
