#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sphere_dubins/path_family.hpp"
#include "sphere_dubins/query_io.hpp"

namespace sphere_dubins {

enum ExitCode : int {
  kExitOk = 0,
  kExitMalformed = 1,
  kExitNoCandidate = 2,
  kExitInvalid = 3,
  kExitVerifyFailed = 4,
};

struct PlanOptions
{
  std::optional<std::string> input;   ///< read stdin when empty
  std::optional<std::string> output;  ///< write stdout when empty
  QueryOverrides overrides;
};

struct VerifyOptions
{
  std::uint64_t seed = 1;
  int trials = 100;
  std::vector<double> radii;  ///< empty selects the default set
  std::optional<double> residual_tol;
  std::optional<std::string> output;
};

/// Radii swept by `verify` when none are given: 0.2, 0.5, 1/sqrt(2), 0.8.
std::vector<double> default_verify_radii();

/// Seed of one `verify` trial, reproducible from the printed triple.
std::uint64_t trial_seed(std::uint64_t base, PathFamily family, std::size_t radius_index, int trial);

/// The commands write their payload to the output target and diagnostics to @p err.
int cmd_plan(const PlanOptions& options, std::istream& in, std::ostream& out, std::ostream& err);
int cmd_sample(const PlanOptions& options, std::istream& in, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);

}  // namespace sphere_dubins
