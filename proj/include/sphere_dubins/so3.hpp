#pragma once

/**
 * @file so3.hpp
 * @brief Rotation-matrix arithmetic used by the spherical Dubins planner.
 *
 * A vehicle configuration on the unit sphere is a proper orthogonal 3x3
 * matrix whose columns are the position X, the tangent T and the
 * tangent-normal N (the Sabban frame). Segments act on configurations by
 * right multiplication, so every quantity in the planner is a Matrix3.
 */

#include <cmath>
#include <stdexcept>

#include <Eigen/Core>
#include <Eigen/LU>
#include <Eigen/SVD>

namespace sphere_dubins {

template <typename Scalar>
using Matrix3 = Eigen::Matrix<Scalar, 3, 3>;

template <typename Scalar>
using Vector3 = Eigen::Matrix<Scalar, 3, 1>;

/// Columns (X, T, N) of the Sabban frame.
template <typename Scalar>
using Configuration = Matrix3<Scalar>;

/// Net rotation initial^T * final; the matrix every family solver equates against.
template <typename Scalar>
using TargetMatrix = Matrix3<Scalar>;

/// Frobenius threshold under which two rotations are treated as equal.
inline constexpr double kRotationEqualTol = 1e-9;

template <typename Derived>
bool is_rotation(const Eigen::MatrixBase<Derived>& m, typename Derived::Scalar tol = typename Derived::Scalar(1e-10))
{
  using Scalar = typename Derived::Scalar;
  if (m.rows() != 3 || m.cols() != 3 || !m.allFinite()) {
    return false;
  }
  const Scalar ortho = (m.transpose() * m - Matrix3<Scalar>::Identity()).norm();
  const Scalar det = m.determinant();
  return ortho <= tol && std::abs(det - Scalar(1)) <= tol;
}

/// R_after = R_before * R_seg.
template <typename Scalar>
Matrix3<Scalar> compose(const Matrix3<Scalar>& a, const Matrix3<Scalar>& b)
{
  return a * b;
}

/// Transpose is the inverse for rotations; no general inversion is performed.
template <typename Scalar>
TargetMatrix<Scalar> relative_target(const Configuration<Scalar>& initial, const Configuration<Scalar>& final_config)
{
  return initial.transpose() * final_config;
}

/**
 * @brief Reflect a target about the XY plane.
 *
 * Equivalent to diag(1,1,-1) * t * diag(1,1,-1): negates entries (1,3),
 * (2,3), (3,1) and (3,2). Conjugation by this reflection maps R_L(r, phi)
 * onto R_R(r, phi) and leaves R_G(phi) unchanged.
 */
template <typename Scalar>
TargetMatrix<Scalar> reflect_xy(const TargetMatrix<Scalar>& t)
{
  TargetMatrix<Scalar> out = t;
  out(0, 2) = -out(0, 2);
  out(1, 2) = -out(1, 2);
  out(2, 0) = -out(2, 0);
  out(2, 1) = -out(2, 1);
  return out;
}

/**
 * @brief Target fed to the LRL solver when solving an RLR path.
 *
 * The initial configuration becomes t with its T and N columns negated and
 * the final configuration becomes diag(1,-1,-1); the returned target is
 * initial^T * final. For t = R_R(a) R_L(b) R_R(c) the result is
 * R_L(c) R_R(b) R_L(a).
 */
template <typename Scalar>
TargetMatrix<Scalar> rlr_swap_transform(const TargetMatrix<Scalar>& t)
{
  Matrix3<Scalar> initial = t;
  initial.col(1) = -initial.col(1);
  initial.col(2) = -initial.col(2);
  const Matrix3<Scalar> final_config = Vector3<Scalar>(1, -1, -1).asDiagonal();
  return initial.transpose() * final_config;
}

template <typename Scalar>
Matrix3<Scalar> skew(const Vector3<Scalar>& v)
{
  Matrix3<Scalar> s;
  s << Scalar(0), -v.z(), v.y(),
       v.z(), Scalar(0), -v.x(),
       -v.y(), v.x(), Scalar(0);
  return s;
}

/// Euler-Rodrigues: exp(angle * [axis]_x). Throws on a non-unit axis.
template <typename Scalar>
Matrix3<Scalar> axis_angle_rotation(const Vector3<Scalar>& axis, Scalar angle)
{
  using std::abs;
  using std::cos;
  using std::sin;
  if (!(abs(axis.norm() - Scalar(1)) <= Scalar(1e-10))) {
    throw std::invalid_argument("axis_angle_rotation: axis must have unit norm");
  }
  if (!std::isfinite(static_cast<double>(angle))) {
    throw std::invalid_argument("axis_angle_rotation: angle must be finite");
  }
  const Scalar c = cos(angle);
  const Scalar s = sin(angle);
  return c * Matrix3<Scalar>::Identity() + s * skew(axis) + (Scalar(1) - c) * axis * axis.transpose();
}

/// Frobenius distance ||a - b||_F.
template <typename Scalar>
Scalar rotation_distance(const Matrix3<Scalar>& a, const Matrix3<Scalar>& b)
{
  return (a - b).norm();
}

/// Nearest rotation in the Frobenius sense (polar factor via SVD).
template <typename Scalar>
Matrix3<Scalar> project_to_rotation(const Matrix3<Scalar>& m)
{
  Eigen::JacobiSVD<Matrix3<Scalar>> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Matrix3<Scalar> u = svd.matrixU();
  const Matrix3<Scalar> v = svd.matrixV();
  if ((u * v.transpose()).determinant() < Scalar(0)) {
    u.col(2) = -u.col(2);
  }
  return u * v.transpose();
}

}  // namespace sphere_dubins
