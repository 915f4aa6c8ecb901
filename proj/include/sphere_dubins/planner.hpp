#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sphere_dubins/family_solvers.hpp"
#include "sphere_dubins/path_family.hpp"
#include "sphere_dubins/segments.hpp"
#include "sphere_dubins/so3.hpp"

namespace sphere_dubins {

template <typename Scalar>
struct PathSolution
{
  PathFamily family = PathFamily::LGL;
  AngleTriple<Scalar> angles;
  Scalar r = Scalar(0);
  Scalar length = Scalar(0);
  Scalar residual = Scalar(0);
};

template <typename Scalar>
struct PlanReport
{
  std::optional<PathSolution<Scalar>> best;
  std::vector<PathSolution<Scalar>> all_candidates;  ///< ascending by (length, family, angles)
  TargetMatrix<Scalar> alpha = TargetMatrix<Scalar>::Identity();
  Scalar r = Scalar(0);
  SolverTolerances<Scalar> tolerances;
};

/// Frobenius distance between the forward-composed path and @p alpha.
template <typename Scalar>
Scalar verify_candidate(PathFamily family, const AngleTriple<Scalar>& angles, Scalar r, const TargetMatrix<Scalar>& alpha)
{
  return rotation_distance(compose_path(family, angles, r), alpha);
}

namespace detail {

template <typename Scalar>
Vector3<Scalar> segment_axis(SegmentKind kind, Scalar r)
{
  switch (kind) {
    case SegmentKind::LeftTurn: return axial_left(r);
    case SegmentKind::RightTurn: return axial_right(r);
    case SegmentKind::GreatCircle: break;
  }
  return Vector3<Scalar>::UnitZ();
}

/// Closed-form candidates further than this from alpha are not refined.
inline constexpr double kRefineWindow = 5e-2;
inline constexpr int kRefineIterations = 8;
inline constexpr int kSplitScanSteps = 12;

}  // namespace detail

/**
 * @brief Gauss-Newton polish of a candidate against the full matrix equation.
 *
 * The scalar projections used by the solvers lose precision when the middle
 * angle approaches 0, pi or 2*pi. A few least-squares steps on the nine
 * residual entries recover full precision there. LRpiL / RLpiR keep phi2 = pi.
 * Returns the best iterate seen, so the residual never increases.
 */
template <typename Scalar>
AngleTriple<Scalar> refine_candidate(PathFamily family, const AngleTriple<Scalar>& angles, Scalar r,
                                     const TargetMatrix<Scalar>& alpha, int iterations = detail::kRefineIterations)
{
  const std::vector<SegmentSlot> word = segment_word(family);
  const bool fixed_middle = family == PathFamily::LRpiL || family == PathFamily::RLpiR;

  AngleTriple<Scalar> best = angles;
  Scalar best_residual = verify_candidate(family, angles, r, alpha);
  AngleTriple<Scalar> current = angles;
  for (int it = 0; it < iterations && best_residual > Scalar(0); ++it) {
    std::vector<Matrix3<Scalar>> seg;
    for (const SegmentSlot& slot : word) {
      seg.push_back(segment_rotation(slot.kind, r, slot_angle(current, slot.angle_index)));
    }
    // prefix[i] = seg[0] ... seg[i-1]; suffix[i] = seg[i+1] ... seg[n-1].
    const std::size_t n = seg.size();
    std::vector<Matrix3<Scalar>> prefix(n + 1, Matrix3<Scalar>::Identity());
    std::vector<Matrix3<Scalar>> suffix(n + 1, Matrix3<Scalar>::Identity());
    for (std::size_t i = 0; i < n; ++i) {
      prefix[i + 1] = prefix[i] * seg[i];
    }
    for (std::size_t i = n; i-- > 0;) {
      suffix[i] = seg[i] * suffix[i + 1];
    }

    Eigen::Matrix<Scalar, 9, 3> jac = Eigen::Matrix<Scalar, 9, 3>::Zero();
    for (std::size_t i = 0; i < n; ++i) {
      if (fixed_middle && word[i].angle_index == 1) {
        continue;
      }
      const Matrix3<Scalar> d = prefix[i + 1] * skew(detail::segment_axis(word[i].kind, r)) * suffix[i + 1];
      jac.col(word[i].angle_index) += Eigen::Map<const Eigen::Matrix<Scalar, 9, 1>>(d.data());
    }
    const Matrix3<Scalar> diff = prefix[n] - alpha;
    const Eigen::Matrix<Scalar, 9, 1> res = Eigen::Map<const Eigen::Matrix<Scalar, 9, 1>>(diff.data());

    Eigen::JacobiSVD<Eigen::Matrix<Scalar, 9, 3>> svd(jac, Eigen::ComputeFullU | Eigen::ComputeFullV);
    svd.setThreshold(Scalar(1e-10));
    const Eigen::Matrix<Scalar, 3, 1> step = svd.solve(res);
    current = {normalize_angle(current.phi1 - step(0)), current.phi2 - step(1), normalize_angle(current.phi3 - step(2))};
    if (!fixed_middle) {
      current.phi2 = normalize_angle(current.phi2);
    }
    const Scalar residual = verify_candidate(family, current, r, alpha);
    if (!(residual < best_residual)) {
      break;
    }
    best = current;
    best_residual = residual;
  }
  return best;
}

/**
 * @brief refine_candidate with restarts for flat directions.
 *
 * Where the residual is flat in phi2 (phi2 near pi at the boundary radii)
 * the Gauss-Newton step cannot move phi2. The displacement there is of order
 * sqrt(residual), so phi2 is restarted on either side by that amount. Near a
 * special case only phi1 + phi3 is well determined by the seed, so as a last
 * resort the split between phi1 and phi3 is scanned as well.
 */
template <typename Scalar>
AngleTriple<Scalar> polish_candidate(PathFamily family, const AngleTriple<Scalar>& angles, Scalar r,
                                     const TargetMatrix<Scalar>& alpha, Scalar residual_tol)
{
  AngleTriple<Scalar> best = refine_candidate(family, angles, r, alpha);
  Scalar best_residual = verify_candidate(family, best, r, alpha);
  if (best_residual <= residual_tol || family == PathFamily::LRpiL || family == PathFamily::RLpiR) {
    return best;
  }
  const auto try_start = [&](const AngleTriple<Scalar>& start) {
    const AngleTriple<Scalar> candidate = refine_candidate(family, start, r, alpha);
    const Scalar residual = verify_candidate(family, candidate, r, alpha);
    if (residual < best_residual) {
      best = candidate;
      best_residual = residual;
    }
    return best_residual <= residual_tol;
  };

  const AngleTriple<Scalar> anchor = best;
  const Scalar offset = std::sqrt(best_residual);
  for (Scalar sign : {Scalar(1), Scalar(-1)}) {
    if (try_start({anchor.phi1, normalize_angle(anchor.phi2 + sign * offset), anchor.phi3})) {
      return best;
    }
  }
  const Scalar sum = anchor.phi1 + anchor.phi3;
  for (int k = 0; k < detail::kSplitScanSteps; ++k) {
    const Scalar share = two_pi<Scalar>() * Scalar(k) / Scalar(detail::kSplitScanSteps);
    for (Scalar sign : {Scalar(1), Scalar(-1)}) {
      if (try_start({normalize_angle(sum - share), normalize_angle(anchor.phi2 + sign * offset), share})) {
        return best;
      }
    }
  }
  return best;
}

/// Total order used for reports: length, then family order, then angles.
template <typename Scalar>
bool solution_less(const PathSolution<Scalar>& a, const PathSolution<Scalar>& b)
{
  if (a.length != b.length) {
    return a.length < b.length;
  }
  if (a.family != b.family) {
    return static_cast<int>(a.family) < static_cast<int>(b.family);
  }
  return a.angles < b.angles;
}

/**
 * @brief Run all twelve solvers against a net rotation and keep verified candidates.
 *
 * Families are never pruned by r. An empty candidate list is a valid
 * outcome; callers may retry with a looser residual tolerance.
 */
template <typename Scalar>
PlanReport<Scalar> plan_target(const TargetMatrix<Scalar>& alpha, const TurningRadius<Scalar>& radius,
                               const SolverTolerances<Scalar>& tol = {})
{
  tol.validate();
  PlanReport<Scalar> report;
  report.alpha = alpha;
  report.r = radius.value();
  report.tolerances = tol;

  for (PathFamily family : kAllFamilies) {
    for (const AngleTriple<Scalar>& angles : solve_family(family, alpha, radius, tol)) {
      AngleTriple<Scalar> kept = angles;
      Scalar residual = verify_candidate(family, kept, radius.value(), alpha);
      if (residual > tol.residual_tol && residual <= Scalar(detail::kRefineWindow)) {
        kept = polish_candidate(family, kept, radius.value(), alpha, tol.residual_tol);
        residual = verify_candidate(family, kept, radius.value(), alpha);
      }
      if (!(residual <= tol.residual_tol)) {
        continue;
      }
      report.all_candidates.push_back(
          {family, kept, radius.value(), path_length(family, kept, radius.value()), residual});
    }
  }
  std::sort(report.all_candidates.begin(), report.all_candidates.end(), solution_less<Scalar>);
  if (!report.all_candidates.empty()) {
    report.best = report.all_candidates.front();
  }
  return report;
}

template <typename Scalar>
PlanReport<Scalar> plan(const Configuration<Scalar>& initial, const Configuration<Scalar>& final_config,
                        const TurningRadius<Scalar>& radius, const SolverTolerances<Scalar>& tol = {})
{
  return plan_target(relative_target(initial, final_config), radius, tol);
}

/**
 * @brief Configurations along a solution, points_per_segment per segment.
 *
 * Junctions between consecutive segments appear once, so the list has
 * segments * n - (segments - 1) entries.
 */
template <typename Scalar>
std::vector<Configuration<Scalar>> sample_path(const PathSolution<Scalar>& solution, const Configuration<Scalar>& initial,
                                               int points_per_segment)
{
  if (points_per_segment < 2) {
    throw std::invalid_argument("sample_path: need at least 2 points per segment");
  }
  std::vector<Configuration<Scalar>> out;
  Configuration<Scalar> start = initial;
  for (const SegmentSlot& slot : segment_word(solution.family)) {
    const Scalar phi = slot_angle(solution.angles, slot.angle_index);
    auto samples = sample_segment(start, slot.kind, solution.r, phi, points_per_segment);
    out.insert(out.end(), out.empty() ? samples.begin() : samples.begin() + 1, samples.end());
    start = out.back();
  }
  return out;
}

}  // namespace sphere_dubins
