#pragma once

/**
 * @file family_solvers.hpp
 * @brief Closed-form arc-angle solvers for the twelve path families.
 *
 * Every solver reduces the matrix equation
 *
 *     segment_1(phi1) * ... * segment_k(phi3) = alpha
 *
 * to scalar equations by pre- and post-multiplying with the turn axes u_L
 * and u_R, which are fixed by the first or last turn. The middle angle
 * comes from a polynomial in cos(phi2); the outer angles then come from
 * A cos(phi) + B sin(phi) = C. These projections are necessary but not
 * sufficient, so solvers over-emit and the planner verifies every triple
 * by forward composition.
 *
 * The R-leading families are built from their L-leading mirror images by
 * reflecting the target about the XY plane (RLR uses the swap transform).
 */

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "sphere_dubins/path_family.hpp"
#include "sphere_dubins/segments.hpp"
#include "sphere_dubins/so3.hpp"
#include "sphere_dubins/trig_roots.hpp"

namespace sphere_dubins {

template <typename Scalar>
using TripleList = std::vector<AngleTriple<Scalar>>;

namespace detail {

/// Entry alpha_ij with one-based indices, matching the closed forms.
template <typename Scalar>
struct TargetEntries
{
  explicit TargetEntries(const TargetMatrix<Scalar>& m)
      : a11(m(0, 0)), a12(m(0, 1)), a13(m(0, 2)),
        a21(m(1, 0)), a22(m(1, 1)), a23(m(1, 2)),
        a31(m(2, 0)), a32(m(2, 1)), a33(m(2, 2))
  {
  }
  Scalar a11, a12, a13, a21, a22, a23, a31, a32, a33;
};

template <typename Scalar>
struct RadiusTerms
{
  explicit RadiusTerms(Scalar radius) : r(radius), r2(radius * radius), q(std::sqrt(Scalar(1) - radius * radius)) {}
  Scalar r;
  Scalar r2;
  Scalar q;  ///< sqrt(1 - r^2)
};

template <typename Scalar>
void append_products(TripleList<Scalar>& out, const std::vector<Scalar>& first, Scalar middle,
                     const std::vector<Scalar>& last)
{
  for (Scalar p1 : first) {
    for (Scalar p3 : last) {
      out.push_back({p1, middle, p3});
    }
  }
}

/// Representatives of acos(c) lying in (pi, 2*pi), with degenerate_eps slack at pi.
template <typename Scalar>
std::vector<Scalar> middle_angles_upper(Scalar cos_value, const SolverTolerances<Scalar>& tol)
{
  std::vector<Scalar> out;
  for (Scalar phi : acos_branches(cos_value, tol.clamp_eps)) {
    if (phi > std::numbers::pi_v<Scalar> - tol.degenerate_eps) {
      out.push_back(phi);
    }
  }
  return out;
}

/// Solve a 2x2 system [m00 m01; m10 m11] x = (b0, b1) by Cramer's rule.
template <typename Scalar>
bool solve_2x2(Scalar m00, Scalar m01, Scalar m10, Scalar m11, Scalar b0, Scalar b1, Scalar& x0, Scalar& x1)
{
  const Scalar det = m00 * m11 - m01 * m10;
  if (det == Scalar(0)) {
    return false;
  }
  x0 = (b0 * m11 - m01 * b1) / det;
  x1 = (m00 * b1 - m10 * b0) / det;
  return true;
}

// Roots this close to a special cosine yield the special triple. Near the
// special value it is the only usable seed, so (cos, sin) only has to be
// roughly unit length; the planner's residual check decides acceptance.
inline constexpr double kSpecialSeedBand = 1e-6;
inline constexpr double kUnitCircleTol = 1e-2;

template <typename Scalar>
bool near_special(Scalar cos_root, Scalar special_cos, const SolverTolerances<Scalar>& tol)
{
  return std::abs(cos_root - special_cos) <= std::max(tol.degenerate_eps, Scalar(kSpecialSeedBand));
}

}  // namespace detail

/**
 * @brief LGL: R_L(phi1) R_G(phi2) R_L(phi3) = alpha.
 *
 * u_L^T (.) u_L isolates phi2; u_R^T (.) u_L and u_L^T (.) u_R give phi1 and
 * phi3. When phi2 = 0 the path collapses to a single L turn and the triple
 * (atan2(a21, r a22), 0, 0) is emitted.
 */
template <typename Scalar>
TripleList<Scalar> solve_lgl(const TargetMatrix<Scalar>& alpha, const TurningRadius<Scalar>& radius,
                             const SolverTolerances<Scalar>& tol = {})
{
  const detail::TargetEntries<Scalar> a(alpha);
  const detail::RadiusTerms<Scalar> g(radius.value());
  const Scalar r = g.r;

  const Scalar cos2 = (a.a11 + r * g.q * (a.a13 + a.a31) + g.r2 * (a.a33 - a.a11 - Scalar(1))) / (Scalar(1) - g.r2);
  const Scalar k1 = (a.a33 - a.a11) * r - a.a13 * g.r2 / g.q + a.a31 * g.q;
  const Scalar k3 = (a.a33 - a.a11) * r + a.a13 * g.q - a.a31 * g.r2 / g.q;

  TripleList<Scalar> out;
  for (Scalar phi2 : acos_branches(cos2, tol.clamp_eps)) {
    const Scalar A = r * (Scalar(1) - std::cos(phi2));
    const Scalar B = std::sin(phi2);
    detail::append_products(out, solve_trig_linear(A, B, k1, tol.clamp_eps), phi2,
                            solve_trig_linear(A, B, k3, tol.clamp_eps));
  }
  if (std::abs(cos2 - Scalar(1)) <= tol.degenerate_eps) {
    out.push_back({normalize_angle(std::atan2(a.a21, r * a.a22)), Scalar(0), Scalar(0)});
  }
  return out;
}

/// RGR: R_R(phi1) R_G(phi2) R_R(phi3) = alpha, with u_L and u_R exchanged relative to LGL.
template <typename Scalar>
TripleList<Scalar> solve_rgr(const TargetMatrix<Scalar>& alpha, const TurningRadius<Scalar>& radius,
                             const SolverTolerances<Scalar>& tol = {})
{
  const detail::TargetEntries<Scalar> a(alpha);
  const detail::RadiusTerms<Scalar> g(radius.value());
  const Scalar r = g.r;

  const Scalar cos2 = (a.a11 - r * g.q * (a.a13 + a.a31) + g.r2 * (a.a33 - a.a11 - Scalar(1))) / (Scalar(1) - g.r2);
  const Scalar k1 = (a.a33 - a.a11) * r + a.a13 * g.r2 / g.q - a.a31 * g.q;
  const Scalar k3 = (a.a33 - a.a11) * r - a.a13 * g.q + a.a31 * g.r2 / g.q;

  TripleList<Scalar> out;
  for (Scalar phi2 : acos_branches(cos2, tol.clamp_eps)) {
    const Scalar A = r * (Scalar(1) - std::cos(phi2));
    const Scalar B = std::sin(phi2);
    detail::append_products(out, solve_trig_linear(A, B, k1, tol.clamp_eps), phi2,
                            solve_trig_linear(A, B, k3, tol.clamp_eps));
  }
  if (std::abs(cos2 - Scalar(1)) <= tol.degenerate_eps) {
    out.push_back({normalize_angle(std::atan2(a.a21, r * a.a22)), Scalar(0), Scalar(0)});
  }
  return out;
}

/**
 * @brief LGR: R_L(phi1) R_G(phi2) R_R(phi3) = alpha.
 *
 * At phi2 = pi both outer-angle equations vanish identically; the net matrix
 * then depends only on phi1 + phi3, which is read off entries (2,1) and
 * (2,2) with phi3 fixed to 0.
 */
template <typename Scalar>
TripleList<Scalar> solve_lgr(const TargetMatrix<Scalar>& alpha, const TurningRadius<Scalar>& radius,
                             const SolverTolerances<Scalar>& tol = {})
{
  const detail::TargetEntries<Scalar> a(alpha);
  const detail::RadiusTerms<Scalar> g(radius.value());
  const Scalar r = g.r;
  const Scalar rq = r * g.q;

  const Scalar cos2 =
      ((Scalar(1) - g.r2) * a.a11 + rq * (a.a31 - a.a13) + g.r2 * (Scalar(1) - a.a33)) / (Scalar(1) - g.r2);
  const Scalar k1 = rq * a.a11 - (Scalar(1) - g.r2) * a.a31 - g.r2 * a.a13 + rq * a.a33;
  const Scalar k3 = rq * a.a11 + g.r2 * a.a31 + (Scalar(1) - g.r2) * a.a13 + rq * a.a33;

  TripleList<Scalar> out;
  for (Scalar phi2 : acos_branches(cos2, tol.clamp_eps)) {
    const Scalar A = rq * (Scalar(1) + std::cos(phi2));
    const Scalar B = -g.q * std::sin(phi2);
    detail::append_products(out, solve_trig_linear(A, B, k1, tol.clamp_eps), phi2,
                            solve_trig_linear(A, B, k3, tol.clamp_eps));
  }
  if (std::abs(cos2 + Scalar(1)) <= tol.degenerate_eps) {
    // Net matrix: (2,1) = -r sin(phi1 + phi3), (2,2) = -cos(phi1 + phi3).
    const Scalar sum = std::atan2(-a.a21 / r, -a.a22);
    out.push_back({normalize_angle(sum), std::numbers::pi_v<Scalar>, Scalar(0)});
  }
  return out;
}

template <typename Scalar>
TripleList<Scalar> solve_rgl(const TargetMatrix<Scalar>& alpha, const TurningRadius<Scalar>& radius,
                             const SolverTolerances<Scalar>& tol = {})
{
  return solve_lgr(reflect_xy(alpha), radius, tol);
}

/**
 * @brief LRL: R_L(phi1) R_R(phi2) R_L(phi3) = alpha with phi2 in (pi, 2*pi).
 */
template <typename Scalar>
TripleList<Scalar> solve_lrl(const TargetMatrix<Scalar>& alpha, const TurningRadius<Scalar>& radius,
                             const SolverTolerances<Scalar>& tol = {})
{
  const detail::TargetEntries<Scalar> a(alpha);
  const detail::RadiusTerms<Scalar> g(radius.value());
  const Scalar r2 = g.r2;
  const Scalar r4 = r2 * r2;
  const Scalar r6 = r4 * r2;
  const Scalar rq = g.r * g.q;
  const Scalar scale = Scalar(4) * r2 * (Scalar(1) - r2);
  const Scalar edge = Scalar(1) - Scalar(2) * r2;

  const Scalar cos2 = ((Scalar(1) - r2) * a.a11 + rq * (a.a13 + a.a31) + r2 * a.a33 - edge * edge) / scale;
  const Scalar lhs1 = (r2 - Scalar(1)) * a.a11 + rq * (a.a31 - a.a13) + r2 * a.a33;
  const Scalar lhs3 = (r2 - Scalar(1)) * a.a11 + rq * (a.a13 - a.a31) + r2 * a.a33;

  TripleList<Scalar> out;
  for (Scalar phi2 : detail::middle_angles_upper(cos2, tol)) {
    const Scalar c2 = std::cos(phi2);
    const Scalar A = (Scalar(2) * r2 - Scalar(1)) * (Scalar(1) - c2);
    const Scalar B = std::sin(phi2);
    const Scalar base = Scalar(8) * r6 - Scalar(12) * r4 + Scalar(6) * r2 - Scalar(1) -
                        Scalar(4) * (Scalar(2) * r6 - Scalar(3) * r4 + r2) * c2;
    detail::append_products(out, solve_trig_linear(A, B, (lhs1 - base) / scale, tol.clamp_eps), phi2,
                            solve_trig_linear(A, B, (lhs3 - base) / scale, tol.clamp_eps));
  }
  return out;
}

/// RLR via the swap transform; LRL angles come back in reverse segment order.
template <typename Scalar>
TripleList<Scalar> solve_rlr(const TargetMatrix<Scalar>& alpha, const TurningRadius<Scalar>& radius,
                             const SolverTolerances<Scalar>& tol = {})
{
  TripleList<Scalar> out = solve_lrl(rlr_swap_transform(alpha), radius, tol);
  for (AngleTriple<Scalar>& t : out) {
    std::swap(t.phi1, t.phi3);
  }
  return out;
}

/**
 * @brief LRpiL: R_L(phi1) R_R(pi) R_L(phi3) = alpha.
 *
 * For r = 1/sqrt(2) the net matrix depends only on phi1 - phi3; the
 * difference is recovered by atan2 and the non-positive side is zeroed.
 */
template <typename Scalar>
TripleList<Scalar> solve_lr_pi_l(const TargetMatrix<Scalar>& alpha, const TurningRadius<Scalar>& radius,
                                 const SolverTolerances<Scalar>& tol = {})
{
  const detail::TargetEntries<Scalar> a(alpha);
  const detail::RadiusTerms<Scalar> g(radius.value());
  const Scalar pi = std::numbers::pi_v<Scalar>;
  const Scalar r2 = g.r2;
  const Scalar rq = g.r * g.q;

  TripleList<Scalar> out;
  if (std::abs(g.r - (Scalar(1) / std::numbers::sqrt2_v<Scalar>)) > tol.degenerate_eps) {
    const Scalar edge = Scalar(1) - Scalar(2) * r2;
    const Scalar denom = Scalar(8) * (r2 - Scalar(1)) * r2;
    const Scalar poly = Scalar(1) - Scalar(8) * r2 + Scalar(8) * r2 * r2;
    const Scalar k1 = a.a11 * (r2 - Scalar(1)) + rq * (a.a31 - a.a13) + r2 * a.a33;
    const Scalar k3 = a.a11 * (r2 - Scalar(1)) + rq * (a.a13 - a.a31) + r2 * a.a33;
    const Scalar cos1 = (poly + k1 / edge) / denom;
    const Scalar cos3 = (poly + k3 / edge) / denom;
    detail::append_products(out, acos_branches(cos1, tol.clamp_eps), pi, acos_branches(cos3, tol.clamp_eps));
  } else {
    const Scalar diff = std::atan2(std::numbers::sqrt2_v<Scalar> * a.a21, -a.a22);
    if (diff < Scalar(0)) {
      out.push_back({Scalar(0), pi, normalize_angle(-diff)});
    } else {
      out.push_back({diff, pi, Scalar(0)});
    }
  }
  return out;
}

template <typename Scalar>
TripleList<Scalar> solve_rl_pi_r(const TargetMatrix<Scalar>& alpha, const TurningRadius<Scalar>& radius,
                                 const SolverTolerances<Scalar>& tol = {})
{
  return solve_lr_pi_l(reflect_xy(alpha), radius, tol);
}

/**
 * @brief LRLR: R_L(phi1) R_R(phi2) R_L(phi2) R_R(phi3) = alpha, phi2 in (pi, 2*pi).
 *
 * u_L^T (.) u_R yields a quadratic in cos(phi2). When
 * cos(phi2) = 1 - 1/(2 r^2) the outer-angle equations lose phi1 and phi3
 * individually; phi3 is fixed to 0 and phi1 solved from entries (1,2) and
 * (2,2) of the reduced net matrix.
 */
template <typename Scalar>
TripleList<Scalar> solve_lrlr(const TargetMatrix<Scalar>& alpha, const TurningRadius<Scalar>& radius,
                              const SolverTolerances<Scalar>& tol = {})
{
  const detail::TargetEntries<Scalar> a(alpha);
  const detail::RadiusTerms<Scalar> g(radius.value());
  const Scalar r = g.r;
  const Scalar r2 = g.r2;
  const Scalar r4 = r2 * r2;
  const Scalar r6 = r4 * r2;
  const Scalar rq = r * g.q;

  const Scalar rhs_mid = a.a11 * (r2 - Scalar(1)) + rq * (a.a13 - a.a31) + r2 * a.a33;    // u_L^T alpha u_R
  const Scalar rhs_first = (Scalar(1) - r2) * a.a11 - rq * (a.a13 + a.a31) + r2 * a.a33;  // u_R^T alpha u_R
  const Scalar rhs_last = (Scalar(1) - r2) * a.a11 + rq * (a.a13 + a.a31) + r2 * a.a33;   // u_L^T alpha u_L

  const Scalar qa = Scalar(8) * r4 * (r2 - Scalar(1));
  const Scalar qb = Scalar(-8) * (r2 - Scalar(3) * r4 + Scalar(2) * r6);
  const Scalar qc = Scalar(-1) + Scalar(10) * r2 - Scalar(16) * r4 + Scalar(8) * r6 - rhs_mid;

  const Scalar special_cos = Scalar(1) - Scalar(1) / (Scalar(2) * r2);
  const Scalar scale = Scalar(4) * r2 * (Scalar(1) - r2);

  TripleList<Scalar> out;
  bool special_done = false;
  for (Scalar cos_root : quadratic_real_roots(qa, qb, qc, tol.clamp_eps)) {
    for (Scalar phi2 : detail::middle_angles_upper(cos_root, tol)) {
      const Scalar c2 = std::cos(phi2);
      const Scalar s2 = std::sin(phi2);
      const Scalar k = Scalar(2) * r2 * c2 - Scalar(2) * r2 + Scalar(1);
      const Scalar A = scale * k * ((Scalar(2) * r2 - Scalar(1)) * c2 - Scalar(2) * r2 + Scalar(2));
      const Scalar B = -scale * k * s2;
      const Scalar C = (Scalar(2) * r2 - Scalar(1)) *
                       (Scalar(12) * r6 - Scalar(20) * r4 + Scalar(10) * r2 +
                        Scalar(4) * (r2 - Scalar(1)) * r4 * std::cos(Scalar(2) * phi2) -
                        Scalar(8) * (Scalar(2) * r6 - Scalar(3) * r4 + r2) * c2 - Scalar(1));
      detail::append_products(out, solve_trig_linear(A, B, rhs_first - C, tol.clamp_eps), phi2,
                              solve_trig_linear(A, B, rhs_last - C, tol.clamp_eps));
    }

    if (!special_done && r >= Scalar(0.5) - tol.degenerate_eps && detail::near_special(cos_root, special_cos, tol)) {
      special_done = true;
      const Scalar w = std::sqrt(std::max(Scalar(4) * r2 - Scalar(1), Scalar(0)));
      const Scalar v = Scalar(2) * r2 - Scalar(1);
      Scalar c1 = 0;
      Scalar s1 = 0;
      if (detail::solve_2x2(w / (Scalar(2) * r), v / (Scalar(2) * r), -v / (Scalar(2) * r2), w / (Scalar(2) * r2),
                            a.a12, a.a22, c1, s1) &&
          std::abs(c1 * c1 + s1 * s1 - Scalar(1)) <= Scalar(detail::kUnitCircleTol)) {
        const Scalar exact_phi2 = two_pi<Scalar>() - std::acos(std::max(special_cos, Scalar(-1)));
        out.push_back({normalize_angle(std::atan2(s1, c1)), exact_phi2, Scalar(0)});
      }
    }
  }
  return out;
}

template <typename Scalar>
TripleList<Scalar> solve_rlrl(const TargetMatrix<Scalar>& alpha, const TurningRadius<Scalar>& radius,
                              const SolverTolerances<Scalar>& tol = {})
{
  return solve_lrlr(reflect_xy(alpha), radius, tol);
}

/**
 * @brief LRLRL: R_L(phi1) R_R(phi2) R_L(phi2) R_R(phi2) R_L(phi3) = alpha.
 *
 * u_L^T (.) u_L yields a cubic in cos(phi2). The outer-angle coefficients
 * vanish together when cos(phi2) = 1 - 1/r^2; there the net matrix depends
 * on phi1 + phi3 only and phi3 is fixed to 0.
 */
template <typename Scalar>
TripleList<Scalar> solve_lrlrl(const TargetMatrix<Scalar>& alpha, const TurningRadius<Scalar>& radius,
                               const SolverTolerances<Scalar>& tol = {})
{
  const detail::TargetEntries<Scalar> a(alpha);
  const detail::RadiusTerms<Scalar> g(radius.value());
  const Scalar r = g.r;
  const Scalar r2 = g.r2;
  const Scalar r4 = r2 * r2;
  const Scalar r6 = r4 * r2;
  const Scalar r8 = r4 * r4;
  const Scalar rq = r * g.q;
  const Scalar one_r2 = Scalar(1) - r2;

  const Scalar rhs_mid = one_r2 * a.a11 + rq * (a.a13 + a.a31) + r2 * a.a33;            // u_L^T alpha u_L
  const Scalar rhs_first = (r2 - Scalar(1)) * a.a11 + rq * (a.a31 - a.a13) + r2 * a.a33;  // u_R^T alpha u_L
  const Scalar rhs_last = (r2 - Scalar(1)) * a.a11 + rq * (a.a13 - a.a31) + r2 * a.a33;   // u_L^T alpha u_R

  const Scalar c3 = Scalar(16) * r6 * one_r2;
  const Scalar c2 = Scalar(16) * r4 * (Scalar(2) - Scalar(5) * r2 + Scalar(3) * r4);
  const Scalar c1 = Scalar(-16) * r2 * one_r2 * one_r2 * (Scalar(3) * r2 - Scalar(1));
  const Scalar c0 = Scalar(16) * r8 - Scalar(48) * r6 + Scalar(48) * r4 - Scalar(16) * r2 + Scalar(1) - rhs_mid;

  const Scalar special_cos = Scalar(1) - Scalar(1) / r2;

  TripleList<Scalar> out;
  bool special_done = false;
  for (Scalar cos_root : cubic_real_roots(c3, c2, c1, c0, tol.clamp_eps)) {
    for (Scalar phi2 : detail::middle_angles_upper(cos_root, tol)) {
      const Scalar cp = std::cos(phi2);
      const Scalar sp = std::sin(phi2);
      const Scalar cos2p = std::cos(Scalar(2) * phi2);
      const Scalar cos3p = std::cos(Scalar(3) * phi2);
      const Scalar half = std::sin(phi2 / Scalar(2));
      const Scalar A = Scalar(16) * r2 * (r2 - Scalar(1)) * half * half *
                       (Scalar(-6) * r6 + Scalar(11) * r4 - Scalar(7) * r2 + (r4 - Scalar(2) * r6) * cos2p +
                        (Scalar(8) * r4 - Scalar(12) * r2 + Scalar(3)) * r2 * cp + Scalar(1));
      const Scalar B = Scalar(8) * r2 * one_r2 * sp *
                       (r4 * cos2p + Scalar(3) * r4 - Scalar(3) * r2 + (Scalar(3) * r2 - Scalar(4) * r4) * cp + Scalar(1));
      const Scalar C =
          (Scalar(1) - Scalar(2) * r2) *
          (Scalar(4) * r8 * cos3p - Scalar(40) * r8 - Scalar(4) * r6 * cos3p + Scalar(88) * r6 - Scalar(64) * r4 +
           Scalar(16) * r2 - Scalar(8) * (Scalar(3) * r4 - Scalar(5) * r2 + Scalar(2)) * r4 * cos2p +
           Scalar(4) * (Scalar(15) * r6 - Scalar(31) * r4 + Scalar(20) * r2 - Scalar(4)) * r2 * cp - Scalar(1));
      detail::append_products(out, solve_trig_linear(A, B, rhs_first - C, tol.clamp_eps), phi2,
                              solve_trig_linear(A, B, rhs_last - C, tol.clamp_eps));
    }

    if (!special_done && r >= (Scalar(1) / std::numbers::sqrt2_v<Scalar>) - tol.degenerate_eps && detail::near_special(cos_root, special_cos, tol)) {
      special_done = true;
      const Scalar w = std::sqrt(std::max(Scalar(2) * r2 - Scalar(1), Scalar(0)));
      Scalar cs = 0;
      Scalar ss = 0;
      if (detail::solve_2x2(w, r2 - Scalar(1), r2 - Scalar(1), -w, -r * a.a12, r2 * a.a22, cs, ss) &&
          std::abs(cs * cs + ss * ss - Scalar(1)) <= Scalar(detail::kUnitCircleTol)) {
        const Scalar exact_phi2 = two_pi<Scalar>() - std::acos(std::max(special_cos, Scalar(-1)));
        out.push_back({normalize_angle(std::atan2(ss, cs)), exact_phi2, Scalar(0)});
      }
    }
  }
  return out;
}

template <typename Scalar>
TripleList<Scalar> solve_rlrlr(const TargetMatrix<Scalar>& alpha, const TurningRadius<Scalar>& radius,
                               const SolverTolerances<Scalar>& tol = {})
{
  return solve_lrlrl(reflect_xy(alpha), radius, tol);
}

/// Dispatch to the solver of @p family.
template <typename Scalar>
TripleList<Scalar> solve_family(PathFamily family, const TargetMatrix<Scalar>& alpha,
                                const TurningRadius<Scalar>& radius, const SolverTolerances<Scalar>& tol = {})
{
  switch (family) {
    case PathFamily::LGL: return solve_lgl(alpha, radius, tol);
    case PathFamily::RGR: return solve_rgr(alpha, radius, tol);
    case PathFamily::LGR: return solve_lgr(alpha, radius, tol);
    case PathFamily::RGL: return solve_rgl(alpha, radius, tol);
    case PathFamily::LRL: return solve_lrl(alpha, radius, tol);
    case PathFamily::RLR: return solve_rlr(alpha, radius, tol);
    case PathFamily::LRpiL: return solve_lr_pi_l(alpha, radius, tol);
    case PathFamily::RLpiR: return solve_rl_pi_r(alpha, radius, tol);
    case PathFamily::LRLR: return solve_lrlr(alpha, radius, tol);
    case PathFamily::RLRL: return solve_rlrl(alpha, radius, tol);
    case PathFamily::LRLRL: return solve_lrlrl(alpha, radius, tol);
    case PathFamily::RLRLR: return solve_rlrlr(alpha, radius, tol);
  }
  return {};
}

/**
 * @brief Upper bound on a solver's pre-verification output.
 *
 * Middle-angle roots times two outer-angle roots each, plus at most one
 * special-case triple when a degenerate branch fires alongside.
 */
inline std::size_t max_candidates(PathFamily family)
{
  switch (family) {
    case PathFamily::LGL:
    case PathFamily::RGR:
    case PathFamily::LGR:
    case PathFamily::RGL: return 2 * 2 * 2 + 1;
    case PathFamily::LRL:
    case PathFamily::RLR: return 1 * 2 * 2;
    case PathFamily::LRpiL:
    case PathFamily::RLpiR: return 2 * 2;
    case PathFamily::LRLR:
    case PathFamily::RLRL: return 2 * 2 * 2 + 1;
    case PathFamily::LRLRL:
    case PathFamily::RLRLR: return 3 * 2 * 2 + 1;
  }
  return 0;
}

}  // namespace sphere_dubins
