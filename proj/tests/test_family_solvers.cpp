#include <cmath>

#include <gtest/gtest.h>

#include "sphere_dubins/family_solvers.hpp"
#include "sphere_dubins/oracle.hpp"
#include "test_support.hpp"

using namespace sphere_dubins;
using sphere_dubins::testing::best_residual;
using sphere_dubins::testing::contains_angles;
using sphere_dubins::testing::diag;
using sphere_dubins::testing::kPi;
using sphere_dubins::testing::planned_residual;

namespace {

const Matrix3<double> kIdentity = Matrix3<double>::Identity();

/// Upper representative of acos(c), i.e. the one in (pi, 2 pi).
double upper_acos(double c) { return 2 * kPi - std::acos(c); }

}  // namespace

TEST(FamilyNames, RoundTripAndMirror)
{
  for (PathFamily f : kAllFamilies) {
    EXPECT_EQ(parse_family(family_name(f)), f);
    EXPECT_EQ(mirror_family(mirror_family(f)), f);
    EXPECT_NE(mirror_family(f), f);
  }
  EXPECT_EQ(mirror_family(PathFamily::LRpiL), PathFamily::RLpiR);
  EXPECT_FALSE(parse_family("LLL").has_value());
}

TEST(SolveLGL, IdentityHasZeroPath)
{
  EXPECT_TRUE(contains_angles(solve_lgl(kIdentity, TurningRadius(0.5)), {0, 0, 0}));
}

TEST(SolveLGL, SingleTurnDegeneratesToZeroMiddle)
{
  const double r = 0.5;
  const Matrix3<double> alpha = rot_l(r, 1.2);
  const auto got = solve_lgl(alpha, TurningRadius(r));
  EXPECT_TRUE(contains_angles(got, {1.2, 0, 0}));
  EXPECT_LE(best_residual(PathFamily::LGL, got, r, alpha), 1e-12);
}

TEST(SolveLGL, GeneralInstance)
{
  const double r = 0.5;
  const Matrix3<double> alpha = rot_l(r, 0.7) * rot_g(1.1) * rot_l(r, 2.0);
  const auto got = solve_lgl(alpha, TurningRadius(r));
  EXPECT_TRUE(contains_angles(got, {0.7, 1.1, 2.0}));
  EXPECT_LE(planned_residual(PathFamily::LGL, alpha, r), 1e-9);
}

TEST(SolveRGR, IdentityHasZeroPath)
{
  EXPECT_TRUE(contains_angles(solve_rgr(kIdentity, TurningRadius(0.5)), {0, 0, 0}));
}

TEST(SolveRGR, GeneralInstance)
{
  const double r = 0.5;
  const Matrix3<double> alpha = rot_r(r, 0.9) * rot_g(0.4) * rot_r(r, 1.7);
  EXPECT_TRUE(contains_angles(solve_rgr(alpha, TurningRadius(r)), {0.9, 0.4, 1.7}));
}

TEST(SolveRGR, MatchesLglOnReflectedTarget)
{
  SplitMix64 rng(51);
  for (int i = 0; i < 50; ++i) {
    const double r = rng.uniform(0.1, 0.9);
    const Matrix3<double> alpha = random_rotation(rng);
    const auto a = solve_rgr(alpha, TurningRadius(r));
    const auto b = solve_lgl(reflect_xy(alpha), TurningRadius(r));
    ASSERT_EQ(a.size(), b.size());
    for (const auto& t : b) {
      EXPECT_TRUE(contains_angles(a, t, 1e-10));
    }
  }
}

TEST(SolveLGR, IdentityHasZeroPath)
{
  EXPECT_TRUE(contains_angles(solve_lgr(kIdentity, TurningRadius(0.5)), {0, 0, 0}));
}

TEST(SolveLGR, HalfTurnMiddleSpecialCase)
{
  const double r = 0.5;
  const Matrix3<double> alpha = rot_l(r, 1.0) * rot_g(kPi);
  const auto got = solve_lgr(alpha, TurningRadius(r));
  EXPECT_TRUE(contains_angles(got, {1.0, kPi, 0.0}));
  EXPECT_LE(best_residual(PathFamily::LGR, got, r, alpha), 1e-12);
}

TEST(SolveLGR, GeneralInstance)
{
  const double r = 0.4;
  const Matrix3<double> alpha = rot_l(r, 0.6) * rot_g(2.0) * rot_r(r, 1.1);
  EXPECT_TRUE(contains_angles(solve_lgr(alpha, TurningRadius(r)), {0.6, 2.0, 1.1}));
}

TEST(SolveRGL, IdentityHasZeroPath)
{
  EXPECT_TRUE(contains_angles(solve_rgl(kIdentity, TurningRadius(0.5)), {0, 0, 0}));
}

TEST(SolveRGL, GeneralInstance)
{
  const double r = 0.5;
  const Matrix3<double> alpha = rot_r(r, 0.8) * rot_g(1.5) * rot_l(r, 2.2);
  EXPECT_TRUE(contains_angles(solve_rgl(alpha, TurningRadius(r)), {0.8, 1.5, 2.2}));
}

TEST(SolveRGL, ReflectionInvolution)
{
  SplitMix64 rng(52);
  const Matrix3<double> alpha = random_rotation(rng);
  EXPECT_EQ(solve_rgl(reflect_xy(alpha), TurningRadius(0.3)), solve_lgr(alpha, TurningRadius(0.3)));
}

TEST(SolveLRL, GeneralInstance)
{
  const double r = 0.5;
  const Matrix3<double> alpha = rot_l(r, 1.0) * rot_r(r, 4.5) * rot_l(r, 2.0);
  EXPECT_TRUE(contains_angles(solve_lrl(alpha, TurningRadius(r)), {1.0, 4.5, 2.0}));
}

TEST(SolveLRL, UnreachableMiddleAngleGivesNothing)
{
  // u_L^T alpha u_L = -1 asks for cos(phi2) = -12 at r = 0.2.
  EXPECT_TRUE(solve_lrl(diag(-1, 1, -1), TurningRadius(0.2)).empty());
}

TEST(SolveLRL, SymmetricInstance)
{
  const double r = 0.3;
  const Matrix3<double> alpha = rot_l(r, 0.5) * rot_r(r, 3.8) * rot_l(r, 0.5);
  EXPECT_TRUE(contains_angles(solve_lrl(alpha, TurningRadius(r)), {0.5, 3.8, 0.5}));
}

TEST(SolveLRL, MiddleAngleInUpperHalf)
{
  SplitMix64 rng(53);
  for (int i = 0; i < 100; ++i) {
    for (const auto& t : solve_lrl(random_rotation(rng), TurningRadius(0.6))) {
      EXPECT_GT(t.phi2, kPi - 1e-9);
    }
  }
}

TEST(SolveRLR, GeneralInstance)
{
  const double r = 0.5;
  const Matrix3<double> alpha = rot_r(r, 1.5) * rot_l(r, 4.0) * rot_r(r, 1.0);
  EXPECT_TRUE(contains_angles(solve_rlr(alpha, TurningRadius(r)), {1.5, 4.0, 1.0}));
}

TEST(SolveRLR, IdentityYieldsNoVerifiedCandidate)
{
  const double r = 0.5;
  EXPECT_GT(best_residual(PathFamily::RLR, solve_rlr(kIdentity, TurningRadius(r)), r, kIdentity), 1e-9);
}

TEST(SolveRLR, SymmetricInstance)
{
  const double r = 0.35;
  const Matrix3<double> alpha = rot_r(r, 2.2) * rot_l(r, 5.0) * rot_r(r, 2.2);
  EXPECT_TRUE(contains_angles(solve_rlr(alpha, TurningRadius(r)), {2.2, 5.0, 2.2}));
}

TEST(SolveLRpiL, GeneralInstance)
{
  const double r = 0.6;
  const Matrix3<double> alpha = rot_l(r, 1.1) * rot_r(r, kPi) * rot_l(r, 0.4);
  EXPECT_TRUE(contains_angles(solve_lr_pi_l(alpha, TurningRadius(r)), {1.1, kPi, 0.4}));
}

TEST(SolveLRpiL, InverseSqrtTwoRadius)
{
  const double r = 1 / std::sqrt(2.0);
  const Matrix3<double> alpha = rot_l(r, 0.8) * rot_r(r, kPi) * rot_l(r, 0.0);
  EXPECT_NEAR(alpha(1, 0), std::sin(0.8) / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(alpha(1, 1), -std::cos(0.8), 1e-15);
  const auto got = solve_lr_pi_l(alpha, TurningRadius(r));
  ASSERT_EQ(got.size(), 1u);
  EXPECT_TRUE(contains_angles(got, {0.8, kPi, 0.0}, 1e-12));
}

TEST(SolveLRpiL, NegativeDifferenceMovesToLastAngle)
{
  const double r = 1 / std::sqrt(2.0);
  const Matrix3<double> alpha = rot_r(r, kPi) * rot_l(r, 0.9);
  const auto got = solve_lr_pi_l(alpha, TurningRadius(r));
  ASSERT_EQ(got.size(), 1u);
  EXPECT_EQ(got[0].phi1, 0.0);
  EXPECT_LE(verify_candidate(PathFamily::LRpiL, got[0], r, alpha), 1e-12);
}

TEST(SolveLRpiL, BareHalfTurn)
{
  EXPECT_TRUE(contains_angles(solve_lr_pi_l(rot_r(0.6, kPi), TurningRadius(0.6)), {0, kPi, 0}));
}

TEST(SolveRLpiR, GeneralInstance)
{
  const double r = 0.6;
  const Matrix3<double> alpha = rot_r(r, 1.1) * rot_l(r, kPi) * rot_r(r, 0.4);
  EXPECT_TRUE(contains_angles(solve_rl_pi_r(alpha, TurningRadius(r)), {1.1, kPi, 0.4}));
}

TEST(SolveRLpiR, InverseSqrtTwoRadius)
{
  const double r = 1 / std::sqrt(2.0);
  const Matrix3<double> alpha = rot_r(r, 2.1) * rot_l(r, kPi);
  const auto got = solve_rl_pi_r(alpha, TurningRadius(r));
  EXPECT_TRUE(contains_angles(got, {2.1, kPi, 0.0}, 1e-12));
}

TEST(SolveLRLR, GeneralInstance)
{
  const double r = 0.5;
  const Matrix3<double> alpha = rot_l(r, 0.9) * rot_r(r, 4.2) * rot_l(r, 4.2) * rot_r(r, 1.3);
  EXPECT_TRUE(contains_angles(solve_lrlr(alpha, TurningRadius(r)), {0.9, 4.2, 1.3}));
}

TEST(SolveLRLR, SpecialMiddleCosine)
{
  const double r = 0.8;
  const double phi2 = upper_acos(1 - 1 / (2 * r * r));
  const Matrix3<double> alpha = rot_l(r, 1.0) * rot_r(r, phi2) * rot_l(r, phi2) * rot_r(r, 0.0);
  const auto got = solve_lrlr(alpha, TurningRadius(r));
  EXPECT_TRUE(contains_angles(got, {1.0, phi2, 0.0}));
  EXPECT_LE(best_residual(PathFamily::LRLR, got, r, alpha), 1e-9);
}

TEST(SolveLRLR, NoRootInRangeGivesNothing)
{
  EXPECT_TRUE(solve_lrlr(diag(-1, 1, -1), TurningRadius(0.2)).empty());
}

TEST(SolveRLRL, GeneralInstance)
{
  const double r = 0.5;
  const Matrix3<double> alpha = rot_r(r, 0.9) * rot_l(r, 4.2) * rot_r(r, 4.2) * rot_l(r, 1.3);
  EXPECT_TRUE(contains_angles(solve_rlrl(alpha, TurningRadius(r)), {0.9, 4.2, 1.3}));
}

TEST(SolveRLRL, ReflectionConsistency)
{
  SplitMix64 rng(54);
  const Matrix3<double> alpha = random_rotation(rng);
  EXPECT_EQ(solve_rlrl(alpha, TurningRadius(0.7)), solve_lrlr(reflect_xy(alpha), TurningRadius(0.7)));
}

TEST(SolveRLRL, MirroredSpecialCase)
{
  const double r = 0.8;
  const double phi2 = upper_acos(1 - 1 / (2 * r * r));
  const Matrix3<double> alpha = rot_r(r, 2.5) * rot_l(r, phi2) * rot_r(r, phi2) * rot_l(r, 0.0);
  EXPECT_TRUE(contains_angles(solve_rlrl(alpha, TurningRadius(r)), {2.5, phi2, 0.0}));
}

TEST(SolveLRLRL, GeneralInstance)
{
  const double r = 0.5;
  const Matrix3<double> alpha = rot_l(r, 0.7) * rot_r(r, 4.0) * rot_l(r, 4.0) * rot_r(r, 4.0) * rot_l(r, 1.6);
  EXPECT_TRUE(contains_angles(solve_lrlrl(alpha, TurningRadius(r)), {0.7, 4.0, 1.6}));
}

TEST(SolveLRLRL, SpecialMiddleCosine)
{
  const double r = 0.8;
  const double phi2 = upper_acos(1 - 1 / (r * r));
  const Matrix3<double> alpha = rot_l(r, 1.2) * rot_r(r, phi2) * rot_l(r, phi2) * rot_r(r, phi2) * rot_l(r, 0.0);
  const auto got = solve_lrlrl(alpha, TurningRadius(r));
  EXPECT_TRUE(contains_angles(got, {1.2, phi2, 0.0}));
  EXPECT_LE(best_residual(PathFamily::LRLRL, got, r, alpha), 1e-9);
}

TEST(SolveLRLRL, NoRootInRangeGivesNothing)
{
  EXPECT_TRUE(solve_lrlrl(diag(-1, 1, -1), TurningRadius(0.2)).empty());
}

TEST(SolveRLRLR, MirroredGeneralInstance)
{
  const double r = 0.5;
  const Matrix3<double> alpha = rot_r(r, 0.7) * rot_l(r, 4.0) * rot_r(r, 4.0) * rot_l(r, 4.0) * rot_r(r, 1.6);
  EXPECT_TRUE(contains_angles(solve_rlrlr(alpha, TurningRadius(r)), {0.7, 4.0, 1.6}));
}

TEST(SolveRLRLR, ReflectionConsistency)
{
  SplitMix64 rng(55);
  const Matrix3<double> alpha = random_rotation(rng);
  EXPECT_EQ(solve_rlrlr(alpha, TurningRadius(0.75)), solve_lrlrl(reflect_xy(alpha), TurningRadius(0.75)));
}

TEST(SolveRLRLR, MirroredSpecialCase)
{
  const double r = 0.8;
  const double phi2 = upper_acos(1 - 1 / (r * r));
  const Matrix3<double> alpha = rot_r(r, 1.2) * rot_l(r, phi2) * rot_r(r, phi2) * rot_l(r, phi2) * rot_r(r, 0.0);
  EXPECT_TRUE(contains_angles(solve_rlrlr(alpha, TurningRadius(r)), {1.2, phi2, 0.0}));
}

TEST(Properties, MultiplicityBoundsOnRandomTargets)
{
  SplitMix64 rng(56);
  for (int i = 0; i < 300; ++i) {
    const double r = rng.uniform(0.05, 0.95);
    const Matrix3<double> alpha = random_rotation(rng);
    for (PathFamily f : kAllFamilies) {
      EXPECT_LE(solve_family(f, alpha, TurningRadius(r)).size(), max_candidates(f)) << family_name(f);
    }
  }
}

TEST(Properties, OuterAnglesComeInAcosPairs)
{
  // Every phi1 in the output has the partner offset +/- acos about atan2(B, A),
  // so a generic instance yields two distinct first angles per middle angle.
  const double r = 0.5;
  const Matrix3<double> alpha = rot_l(r, 0.7) * rot_g(1.1) * rot_l(r, 2.0);
  const auto got = solve_lgl(alpha, TurningRadius(r));
  ASSERT_EQ(got.size(), 8u);
  for (const auto& t : got) {
    int partners = 0;
    for (const auto& u : got) {
      partners += (u.phi2 == t.phi2 && u.phi3 == t.phi3 && u.phi1 != t.phi1) ? 1 : 0;
    }
    EXPECT_EQ(partners, 1);
  }
}

TEST(Properties, AnglesNormalized)
{
  SplitMix64 rng(57);
  for (int i = 0; i < 100; ++i) {
    const double r = rng.uniform(0.05, 0.95);
    const Matrix3<double> alpha = random_rotation(rng);
    for (PathFamily f : kAllFamilies) {
      for (const auto& t : solve_family(f, alpha, TurningRadius(r))) {
        for (double phi : {t.phi1, t.phi2, t.phi3}) {
          EXPECT_GE(phi, 0.0);
          EXPECT_LT(phi, 2 * kPi);
        }
      }
    }
  }
}

TEST(Properties, CompletenessOnRandomInstances)
{
  for (double r : {0.3, 0.6, 0.9}) {
    for (PathFamily f : kAllFamilies) {
      for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto [angles, alpha] = random_instance(f, r, 5000 + seed);
        const auto got = solve_family(f, alpha, TurningRadius(r));
        const bool generating = contains_angles(got, angles, 1e-8);
        const bool alternative = planned_residual(f, alpha, r) <= 1e-9;
        EXPECT_TRUE(generating || alternative) << family_name(f) << " r=" << r << " seed=" << seed;
      }
    }
  }
}
