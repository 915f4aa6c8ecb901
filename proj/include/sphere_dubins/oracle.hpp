#pragma once

/**
 * @file oracle.hpp
 * @brief Independent ground truth for tests and the `verify` command.
 *
 * integrate_segment integrates the Sabban frame ODE numerically and never
 * touches the closed-form segment matrices, so it can check them.
 */

#include <cstdint>
#include <numbers>
#include <utility>

#include "sphere_dubins/path_family.hpp"
#include "sphere_dubins/segments.hpp"
#include "sphere_dubins/so3.hpp"

namespace sphere_dubins {

/// splitmix64; reproducible across platforms and implementations.
class SplitMix64
{
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next()
  {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  /// Uniform in the open interval (lo, hi).
  double uniform_open(double lo, double hi)
  {
    double u = unit();
    while (u == 0.0) {
      u = unit();
    }
    return lo + (hi - lo) * u;
  }

private:
  std::uint64_t state_;
};

template <typename Scalar>
struct OdeSpec
{
  Scalar u_g = Scalar(0);         ///< geodesic curvature: 0 or +/- U_max
  Scalar arc_length = Scalar(0);
  int steps = 10000;
};

/// Omega of the Sabban frame ODE (X' T' N') = (X T N) Omega.
template <typename Scalar>
Matrix3<Scalar> sabban_generator(Scalar u_g)
{
  Matrix3<Scalar> omega;
  omega << Scalar(0), Scalar(-1), Scalar(0),
           Scalar(1), Scalar(0), -u_g,
           Scalar(0), u_g, Scalar(0);
  return omega;
}

/**
 * @brief Fixed-step RK4 of R' = R * Omega from the identity.
 *
 * The state is projected back onto SO(3) every 100 steps.
 */
template <typename Scalar>
Matrix3<Scalar> integrate_segment(const OdeSpec<Scalar>& spec)
{
  const Matrix3<Scalar> omega = sabban_generator(spec.u_g);
  Matrix3<Scalar> state = Matrix3<Scalar>::Identity();
  if (spec.steps <= 0 || spec.arc_length == Scalar(0)) {
    return state;
  }
  const Scalar h = spec.arc_length / Scalar(spec.steps);
  for (int i = 1; i <= spec.steps; ++i) {
    const Matrix3<Scalar> k1 = state * omega;
    const Matrix3<Scalar> k2 = (state + Scalar(0.5) * h * k1) * omega;
    const Matrix3<Scalar> k3 = (state + Scalar(0.5) * h * k2) * omega;
    const Matrix3<Scalar> k4 = (state + h * k3) * omega;
    state += h / Scalar(6) * (k1 + Scalar(2) * k2 + Scalar(2) * k3 + k4);
    if (i % 100 == 0) {
      state = project_to_rotation(state);
    }
  }
  return project_to_rotation(state);
}

/// ODE setup reproducing a segment of @p kind sweeping @p phi at radius @p r.
template <typename Scalar>
OdeSpec<Scalar> segment_ode(SegmentKind kind, Scalar r, Scalar phi, int steps = 10000)
{
  return {segment_curvature(kind, r), segment_length(kind, r, phi), steps};
}

/**
 * @brief Seeded random path of @p family and its forward-composed target.
 *
 * Outer angles are uniform on [0, 2*pi); the G middle angle likewise;
 * interior turn angles are uniform on (pi, 2*pi); LRpiL / RLpiR use pi.
 */
inline std::pair<AngleTriple<double>, TargetMatrix<double>> random_instance(PathFamily family, double r,
                                                                            std::uint64_t seed)
{
  const double pi = std::numbers::pi;
  SplitMix64 rng(seed);
  AngleTriple<double> angles;
  angles.phi1 = rng.uniform(0.0, 2.0 * pi);
  switch (family) {
    case PathFamily::LGL:
    case PathFamily::RGR:
    case PathFamily::LGR:
    case PathFamily::RGL: angles.phi2 = rng.uniform(0.0, 2.0 * pi); break;
    case PathFamily::LRpiL:
    case PathFamily::RLpiR: angles.phi2 = pi; break;
    default: angles.phi2 = rng.uniform_open(pi, 2.0 * pi); break;
  }
  angles.phi3 = rng.uniform(0.0, 2.0 * pi);
  return {angles, compose_path(family, angles, r)};
}

/// Haar-uniform random rotation from a seeded unit quaternion.
inline Matrix3<double> random_rotation(SplitMix64& rng)
{
  const double pi = std::numbers::pi;
  const double u1 = rng.unit();
  const double u2 = rng.uniform(0.0, 2.0 * pi);
  const double u3 = rng.uniform(0.0, 2.0 * pi);
  const double a = std::sqrt(1.0 - u1);
  const double b = std::sqrt(u1);
  const double w = a * std::sin(u2);
  const double x = a * std::cos(u2);
  const double y = b * std::sin(u3);
  const double z = b * std::cos(u3);
  Matrix3<double> m;
  m << 1 - 2 * (y * y + z * z), 2 * (x * y - z * w), 2 * (x * z + y * w),
       2 * (x * y + z * w), 1 - 2 * (x * x + z * z), 2 * (y * z - x * w),
       2 * (x * z - y * w), 2 * (y * z + x * w), 1 - 2 * (x * x + y * y);
  return m;
}

}  // namespace sphere_dubins
