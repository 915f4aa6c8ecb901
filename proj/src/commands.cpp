#include "sphere_dubins/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <numbers>
#include <sstream>

#include "sphere_dubins/oracle.hpp"
#include "sphere_dubins/planner.hpp"

namespace sphere_dubins {

namespace {

bool read_input(const std::optional<std::string>& path, std::istream& in, std::string& text, std::ostream& err)
{
  if (!path) {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    return true;
  }
  std::ifstream file(*path, std::ios::binary);
  if (!file) {
    err << "error: cannot open input file '" << *path << "'\n";
    return false;
  }
  text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  return true;
}

bool write_output(const std::optional<std::string>& path, const std::string& payload, std::ostream& out,
                  std::ostream& err)
{
  if (!path) {
    out << payload;
    out.flush();
    return true;
  }
  std::ofstream file(*path, std::ios::binary | std::ios::trunc);
  if (!file || !(file << payload)) {
    err << "error: cannot write output file '" << *path << "'\n";
    return false;
  }
  return true;
}

// Parses the query, reporting errors with the exit code they map to.
std::optional<Query> load_query(const PlanOptions& options, std::istream& in, std::ostream& err, int& status)
{
  std::string text;
  if (!read_input(options.input, in, text, err)) {
    status = kExitMalformed;
    return std::nullopt;
  }
  try {
    return parse_query(text, options.overrides);
  } catch (const MalformedInput& e) {
    err << "error: malformed query: " << e.what() << '\n';
    status = kExitMalformed;
  } catch (const InvalidValue& e) {
    err << "error: invalid query: " << e.what() << '\n';
    status = kExitInvalid;
  }
  return std::nullopt;
}

std::string format_fixed(const char* fmt, double value)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, value);
  return buf;
}

}  // namespace

std::vector<double> default_verify_radii()
{
  return {0.2, 0.5, 1.0 / std::numbers::sqrt2, 0.8};
}

std::uint64_t trial_seed(std::uint64_t base, PathFamily family, std::size_t radius_index, int trial)
{
  SplitMix64 mix(base ^ (static_cast<std::uint64_t>(radius_index) << 40) ^
                 (static_cast<std::uint64_t>(family) << 32) ^ static_cast<std::uint64_t>(trial));
  return mix.next();
}

int cmd_plan(const PlanOptions& options, std::istream& in, std::ostream& out, std::ostream& err)
{
  int status = kExitOk;
  const std::optional<Query> query = load_query(options, in, err, status);
  if (!query) {
    return status;
  }
  const PlanReport<double> report =
      plan(query->initial, query->final_config, TurningRadius<double>(query->r), query->tolerances);
  if (!write_output(options.output, format_report(report, *query), out, err)) {
    return kExitMalformed;
  }
  if (!report.best) {
    err << "no verified candidate within residual_tol " << format_double(query->tolerances.residual_tol) << '\n';
    return kExitNoCandidate;
  }
  return kExitOk;
}

int cmd_sample(const PlanOptions& options, std::istream& in, std::ostream& out, std::ostream& err)
{
  int status = kExitOk;
  const std::optional<Query> query = load_query(options, in, err, status);
  if (!query) {
    return status;
  }
  const PlanReport<double> report =
      plan(query->initial, query->final_config, TurningRadius<double>(query->r), query->tolerances);
  if (!report.best) {
    err << "no verified candidate within residual_tol " << format_double(query->tolerances.residual_tol) << '\n';
    return kExitNoCandidate;
  }
  const auto rows = sample_rows(*report.best, query->initial, query->samples_per_segment);
  if (!write_output(options.output, format_samples_csv(rows), out, err)) {
    return kExitMalformed;
  }
  return kExitOk;
}

int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err)
{
  if (options.trials < 1) {
    err << "error: --trials must be at least 1\n";
    return kExitInvalid;
  }
  SolverTolerances<double> tol;
  if (options.residual_tol) {
    tol.residual_tol = *options.residual_tol;
  }
  try {
    tol.validate();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  const std::vector<double> radii = options.radii.empty() ? default_verify_radii() : options.radii;
  for (double r : radii) {
    if (!(r > 0.0 && r < 1.0)) {
      err << "error: turning radius must lie in (0, 1), got " << format_double(r) << '\n';
      return kExitInvalid;
    }
  }

  std::ostringstream report;
  std::ostringstream failures;
  report << "version: " << kVersion << '\n';
  report << "seed " << options.seed << ", trials " << options.trials << ", residual_tol "
         << format_double(tol.residual_tol) << '\n';
  bool all_ok = true;
  for (std::size_t ri = 0; ri < radii.size(); ++ri) {
    const double r = radii[ri];
    const TurningRadius<double> radius(r);
    for (PathFamily family : kAllFamilies) {
      int successes = 0;
      double max_residual = 0.0;
      for (int trial = 0; trial < options.trials; ++trial) {
        const std::uint64_t seed = trial_seed(options.seed, family, ri, trial);
        const auto instance = random_instance(family, r, seed);
        const PlanReport<double> plan_report = plan_target(instance.second, radius, tol);
        std::optional<double> best_residual;
        for (const PathSolution<double>& c : plan_report.all_candidates) {
          if (c.family == family && (!best_residual || c.residual < *best_residual)) {
            best_residual = c.residual;
          }
        }
        if (best_residual) {
          ++successes;
          max_residual = std::max(max_residual, *best_residual);
        } else {
          all_ok = false;
          failures << "FAIL family=" << family_name(family) << " r=" << format_double(r) << " seed=" << seed << '\n';
        }
      }
      report << family_name(family) << " r=" << format_fixed("%.6f", r) << " success " << successes << '/'
             << options.trials << " max_residual " << format_fixed("%.3e", max_residual) << '\n';
    }
  }
  report << failures.str();
  report << (all_ok ? "result: PASS\n" : "result: FAIL\n");
  if (!write_output(options.output, report.str(), out, err)) {
    return kExitMalformed;
  }
  if (!all_ok) {
    err << failures.str();
    return kExitVerifyFailed;
  }
  return kExitOk;
}

}  // namespace sphere_dubins
