#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ccsg::cli {

inline constexpr const char* kToolName = "ccsg";
inline constexpr const char* kToolVersion = "0.1.0";

// Exit codes, stable for scripting:
//   0 success            4 enumeration truncated (pass --allow-truncated)
//   2 input parse error  5 subclass instance beat the 2-approximation bound
//   3 internal invariant breach
//   6 instance too large for the oracle
//   7 generation budget exhausted
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitInternal = 3;
inline constexpr int kExitTruncated = 4;
inline constexpr int kExitRatioViolated = 5;
inline constexpr int kExitTooLarge = 6;
inline constexpr int kExitGenerationExhausted = 7;

int run(int argc, const char* const* argv);
int run(const std::vector<std::string>& args);  // args without the program name

struct BenchRow {
    int n = 0;
    int m = 0;
    double milliseconds = 0.0;
};

struct BenchReport {
    std::vector<BenchRow> rows;
    double fitted_exponent = 0.0;  // log-log slope over the measured sizes
};

/// Times run_cc on random sparse instances; density is the expected average
/// degree. Informational only, never fails.
BenchReport run_bench(const std::vector<int>& sizes, double density, double p_neg,
                      std::uint64_t seed);

}  // namespace ccsg::cli
