#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sphere_dubins/planner.hpp"
#include "sphere_dubins/so3.hpp"

namespace sphere_dubins {

inline constexpr const char* kVersion = "sphere_dubins 1.0.0";

/// Input that is not well-formed JSON or has the wrong structure (exit 1).
class MalformedInput : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Well-formed input whose values violate a domain invariant (exit 3).
class InvalidValue : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

struct Query
{
  Configuration<double> initial = Configuration<double>::Identity();
  Configuration<double> final_config = Configuration<double>::Identity();
  double r = 0.0;
  SolverTolerances<double> tolerances;
  int samples_per_segment = 50;
};

/// Overrides that command-line flags apply on top of the document.
struct QueryOverrides
{
  std::optional<double> r;
  std::optional<int> samples_per_segment;
  std::optional<double> residual_tol;
};

/// Matrices farther than this from SO(3) are rejected instead of repaired.
inline constexpr double kRepairLimit = 1e-6;

/**
 * @brief Bring a parsed matrix onto SO(3).
 *
 * Matrices already within 1e-10 are returned as is, matrices within
 * kRepairLimit are projected to the nearest rotation, anything else throws
 * InvalidValue naming @p field.
 */
Matrix3<double> validate_rotation(const Matrix3<double>& m, const std::string& field);

/// Parse and validate a query document; throws MalformedInput or InvalidValue.
Query parse_query(const std::string& text, const QueryOverrides& overrides = {});

/// Pretty-printed JSON report, numbers with 17 significant digits.
std::string format_report(const PlanReport<double>& report, const Query& query);

struct SampleRow
{
  int segment_index = 0;
  double s = 0.0;
  Vector3<double> position = Vector3<double>::Zero();
};

/**
 * @brief Positions along @p solution, points_per_segment per segment.
 *
 * Junction rows belong to the earlier segment. A zero-length solution yields
 * one row at the initial position.
 */
std::vector<SampleRow> sample_rows(const PathSolution<double>& solution, const Configuration<double>& initial,
                                   int points_per_segment);

/// CSV with header `segment_index,s,x,y,z`.
std::string format_samples_csv(const std::vector<SampleRow>& rows);

/// printf "%.17g"; round-trips every finite double.
std::string format_double(double value);

}  // namespace sphere_dubins
