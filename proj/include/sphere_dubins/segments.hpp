#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "sphere_dubins/so3.hpp"

namespace sphere_dubins {

enum class SegmentKind { GreatCircle, LeftTurn, RightTurn };

inline char segment_letter(SegmentKind kind)
{
  switch (kind) {
    case SegmentKind::GreatCircle: return 'G';
    case SegmentKind::LeftTurn: return 'L';
    case SegmentKind::RightTurn: return 'R';
  }
  return '?';
}

/**
 * @brief Turning radius of the vehicle on the unit sphere, strictly in (0, 1).
 *
 * Values within ~1e-6 of either end are accepted but ill-conditioned: the
 * solvers divide by sqrt(1 - r^2) and by powers of r.
 */
template <typename Scalar>
class TurningRadius
{
public:
  explicit TurningRadius(Scalar r) : value_(r)
  {
    if (!(r > Scalar(0) && r < Scalar(1))) {
      throw std::domain_error("turning radius must lie strictly inside (0, 1), got " +
                              std::to_string(static_cast<double>(r)));
    }
  }

  Scalar value() const { return value_; }
  operator Scalar() const { return value_; }

private:
  Scalar value_;
};

template <typename Scalar>
TurningRadius(Scalar) -> TurningRadius<Scalar>;

template <typename Scalar>
constexpr Scalar two_pi()
{
  return Scalar(2) * std::numbers::pi_v<Scalar>;
}

/// True modulus into [0, 2*pi); never negative and never exactly 2*pi.
template <typename Scalar>
Scalar normalize_angle(Scalar phi)
{
  const Scalar period = two_pi<Scalar>();
  Scalar out = std::fmod(phi, period);
  if (out < Scalar(0)) {
    out += period;
  }
  if (out >= period) {
    out = Scalar(0);
  }
  return out;
}

template <typename Scalar>
Matrix3<Scalar> rot_g(Scalar phi)
{
  const Scalar c = std::cos(phi);
  const Scalar s = std::sin(phi);
  Matrix3<Scalar> m;
  m << c, -s, Scalar(0),
       s, c, Scalar(0),
       Scalar(0), Scalar(0), Scalar(1);
  return m;
}

template <typename Scalar>
Matrix3<Scalar> rot_l(Scalar r, Scalar phi)
{
  const Scalar c = std::cos(phi);
  const Scalar s = std::sin(phi);
  const Scalar q = std::sqrt(Scalar(1) - r * r);
  const Scalar one_c = Scalar(1) - c;
  Matrix3<Scalar> m;
  m << Scalar(1) - one_c * r * r, -r * s, one_c * r * q,
       r * s, c, -s * q,
       one_c * r * q, s * q, c + one_c * r * r;
  return m;
}

template <typename Scalar>
Matrix3<Scalar> rot_r(Scalar r, Scalar phi)
{
  const Scalar c = std::cos(phi);
  const Scalar s = std::sin(phi);
  const Scalar q = std::sqrt(Scalar(1) - r * r);
  const Scalar one_c = Scalar(1) - c;
  Matrix3<Scalar> m;
  m << Scalar(1) - one_c * r * r, -r * s, -one_c * r * q,
       r * s, c, s * q,
       -one_c * r * q, -s * q, c + one_c * r * r;
  return m;
}

/// Axis of R_L(r, .): (sqrt(1 - r^2), 0, r).
template <typename Scalar>
Vector3<Scalar> axial_left(Scalar r)
{
  return Vector3<Scalar>(std::sqrt(Scalar(1) - r * r), Scalar(0), r);
}

/// Axis of R_R(r, .): (-sqrt(1 - r^2), 0, r).
template <typename Scalar>
Vector3<Scalar> axial_right(Scalar r)
{
  return Vector3<Scalar>(-std::sqrt(Scalar(1) - r * r), Scalar(0), r);
}

template <typename Scalar>
Matrix3<Scalar> segment_rotation(SegmentKind kind, Scalar r, Scalar phi)
{
  switch (kind) {
    case SegmentKind::GreatCircle: return rot_g(phi);
    case SegmentKind::LeftTurn: return rot_l(r, phi);
    case SegmentKind::RightTurn: return rot_r(r, phi);
  }
  throw std::logic_error("segment_rotation: unknown segment kind");
}

/// Arc length: phi on a great circle, r * phi on a tight turn.
template <typename Scalar>
Scalar segment_length(SegmentKind kind, Scalar r, Scalar phi)
{
  return kind == SegmentKind::GreatCircle ? phi : r * phi;
}

/// Geodesic curvature control of a segment; U_max = sqrt(1 - r^2) / r.
template <typename Scalar>
Scalar segment_curvature(SegmentKind kind, Scalar r)
{
  const Scalar u_max = std::sqrt(Scalar(1) - r * r) / r;
  switch (kind) {
    case SegmentKind::GreatCircle: return Scalar(0);
    case SegmentKind::LeftTurn: return u_max;
    case SegmentKind::RightTurn: return -u_max;
  }
  return Scalar(0);
}

/// n configurations start * R_seg(phi * k / (n - 1)), k = 0 .. n-1.
template <typename Scalar>
std::vector<Configuration<Scalar>> sample_segment(const Configuration<Scalar>& start, SegmentKind kind, Scalar r,
                                                  Scalar phi, int n)
{
  if (n < 2) {
    throw std::invalid_argument("sample_segment: need at least 2 samples");
  }
  std::vector<Configuration<Scalar>> out;
  out.reserve(static_cast<std::size_t>(n));
  out.push_back(start);
  for (int k = 1; k < n; ++k) {
    const Scalar t = phi * Scalar(k) / Scalar(n - 1);
    out.push_back(start * segment_rotation(kind, r, t));
  }
  return out;
}

}  // namespace sphere_dubins
