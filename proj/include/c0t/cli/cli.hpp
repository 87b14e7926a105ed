#pragma once

// Entry point of the c0trans command-line tool, with injectable streams so
// it can be driven from tests.
//
// Exit status: 0 when a verdict was computed (negative verdicts included),
// 1 for malformed input, schema violations, dimension gates and exhausted
// retries, 2 for internal inconsistencies.

#include <iosfwd>

namespace c0t::cli {

inline constexpr int kExitVerdict = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitInternal = 2;

/// Environment variable holding the default retry budget.
inline constexpr const char* kRetryBudgetEnv = "C0TRANS_RETRY_BUDGET";

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace c0t::cli
