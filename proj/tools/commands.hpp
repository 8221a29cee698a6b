#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace qfc::cli {

// Stable exit codes: 0 pass, 1 verify failure, 2 precondition violated,
// 3 file parse error, 4 function DSL error, 5 slice violation.
enum ExitCode {
  kOk = 0,
  kVerifyFailed = 1,
  kPrecondition = 2,
  kParseError = 3,
  kDslError = 4,
  kSliceViolation = 5,
};

struct JobConfig {
  std::array<double, 4> frame_m{0.0, 1.0, 0.0, 0.0};
  std::array<double, 4> frame_n{0.0, 0.0, 1.0, 0.0};
  double tol = 1e-9;
  std::uint64_t seed = 42;
  std::string input;
  std::string function_dsl;
  std::string out;
  std::string report;
  std::string suite = "all";
};

int run_spectrum(const JobConfig& cfg);
int run_apply(const JobConfig& cfg);
int run_measure(const JobConfig& cfg);
int run_verify(const JobConfig& cfg);

}  // namespace qfc::cli
