#pragma once

/**
 * @file trig_roots.hpp
 * @brief Scalar root finders shared by the family solvers.
 */

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "sphere_dubins/segments.hpp"

namespace sphere_dubins {

/**
 * @brief Clamp a cosine-like value into [-1, 1].
 *
 * Returns false when |x| exceeds 1 by more than @p clamp_eps; otherwise
 * stores the clamped value in @p x.
 */
template <typename Scalar>
bool clamp_unit(Scalar& x, Scalar clamp_eps)
{
  if (!std::isfinite(static_cast<double>(x)) || std::abs(x) > Scalar(1) + clamp_eps) {
    return false;
  }
  x = std::clamp(x, Scalar(-1), Scalar(1));
  return true;
}

/// Sorted, de-duplicated angles in [0, 2*pi).
template <typename Scalar>
void sort_unique_angles(std::vector<Scalar>& angles)
{
  std::sort(angles.begin(), angles.end());
  angles.erase(std::unique(angles.begin(), angles.end()), angles.end());
}

/// Both angles in [0, 2*pi) whose cosine is @p cos_value: acos(x) and 2*pi - acos(x).
template <typename Scalar>
std::vector<Scalar> acos_branches(Scalar cos_value, Scalar clamp_eps)
{
  std::vector<Scalar> out;
  if (!clamp_unit(cos_value, clamp_eps)) {
    return out;
  }
  const Scalar a = std::acos(cos_value);
  out.push_back(normalize_angle(a));
  out.push_back(normalize_angle(two_pi<Scalar>() - a));
  sort_unique_angles(out);
  return out;
}

/**
 * @brief All phi in [0, 2*pi) with a*cos(phi) + b*sin(phi) = c.
 *
 * phi = atan2(b, a) +/- acos(c / hypot(a, b)). Empty when a = b = 0 (the
 * caller routes such cases to a special-case branch) or when the ratio
 * overshoots 1 by more than @p clamp_eps.
 */
template <typename Scalar>
std::vector<Scalar> solve_trig_linear(Scalar a, Scalar b, Scalar c, Scalar clamp_eps = Scalar(1e-10))
{
  std::vector<Scalar> out;
  const Scalar norm = std::hypot(a, b);
  if (!(norm > Scalar(0))) {
    return out;
  }
  Scalar ratio = c / norm;
  if (!clamp_unit(ratio, clamp_eps)) {
    return out;
  }
  const Scalar offset = std::atan2(b, a);
  const Scalar spread = std::acos(ratio);
  out.push_back(normalize_angle(offset + spread));
  out.push_back(normalize_angle(offset - spread));
  sort_unique_angles(out);
  return out;
}

/**
 * @brief Real roots of a*x^2 + b*x + c = 0 (a != 0 or b != 0).
 *
 * A discriminant in [-clamp_eps, 0) is treated as a double root; below that
 * the equation has no real roots. Uses the cancellation-free form.
 */
template <typename Scalar>
std::vector<Scalar> quadratic_real_roots(Scalar a, Scalar b, Scalar c, Scalar clamp_eps = Scalar(1e-10))
{
  std::vector<Scalar> out;
  if (a == Scalar(0)) {
    if (b != Scalar(0)) {
      out.push_back(-c / b);
    }
    return out;
  }
  Scalar disc = b * b - Scalar(4) * a * c;
  if (disc < -clamp_eps) {
    return out;
  }
  disc = std::max(disc, Scalar(0));
  const Scalar sq = std::sqrt(disc);
  const Scalar q = Scalar(-0.5) * (b + std::copysign(sq, b));
  if (q == Scalar(0)) {
    out.push_back(Scalar(0));
    return out;
  }
  out.push_back(q / a);
  out.push_back(c / q);
  std::sort(out.begin(), out.end());
  return out;
}

/**
 * @brief Real roots of a*x^3 + b*x^2 + c*x + d = 0.
 *
 * Trigonometric method when three real roots exist, Cardano otherwise,
 * followed by a single Newton step per root on the monic cubic. Falls back
 * to the quadratic when a = 0.
 */
template <typename Scalar>
std::vector<Scalar> cubic_real_roots(Scalar a, Scalar b, Scalar c, Scalar d, Scalar clamp_eps = Scalar(1e-10))
{
  if (a == Scalar(0)) {
    return quadratic_real_roots(b, c, d, clamp_eps);
  }
  const Scalar p2 = b / a;
  const Scalar p1 = c / a;
  const Scalar p0 = d / a;

  // x = t - p2/3 gives the depressed cubic t^3 - 3q t + 2r = 0.
  const Scalar q = (p2 * p2 - Scalar(3) * p1) / Scalar(9);
  const Scalar r = (Scalar(2) * p2 * p2 * p2 - Scalar(9) * p2 * p1 + Scalar(27) * p0) / Scalar(54);
  const Scalar q3 = q * q * q;
  const Scalar shift = p2 / Scalar(3);

  std::vector<Scalar> out;
  if (r * r < q3) {
    const Scalar theta = std::acos(std::clamp(r / std::sqrt(q3), Scalar(-1), Scalar(1)));
    const Scalar m = Scalar(-2) * std::sqrt(q);
    out.push_back(m * std::cos(theta / Scalar(3)) - shift);
    out.push_back(m * std::cos((theta + two_pi<Scalar>()) / Scalar(3)) - shift);
    out.push_back(m * std::cos((theta - two_pi<Scalar>()) / Scalar(3)) - shift);
  } else {
    const Scalar big = -std::copysign(std::cbrt(std::abs(r) + std::sqrt(r * r - q3)), r);
    const Scalar small = big == Scalar(0) ? Scalar(0) : q / big;
    out.push_back(big + small - shift);
    // A (near) double root sits at the real part of the complex pair.
    const Scalar imag = std::sqrt(Scalar(3)) / Scalar(2) * std::abs(big - small);
    if (imag <= std::sqrt(clamp_eps) * std::max(Scalar(1), std::abs(big))) {
      out.push_back(Scalar(-0.5) * (big + small) - shift);
    }
  }

  const auto monic = [&](Scalar x) { return ((x + p2) * x + p1) * x + p0; };
  for (Scalar& x : out) {
    const Scalar df = (Scalar(3) * x + Scalar(2) * p2) * x + p1;
    if (df == Scalar(0)) {
      continue;
    }
    const Scalar polished = x - monic(x) / df;
    if (std::abs(monic(polished)) <= std::abs(monic(x))) {
      x = polished;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sphere_dubins
