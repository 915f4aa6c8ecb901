#include <cmath>

#include <gtest/gtest.h>

#include "sphere_dubins/oracle.hpp"
#include "sphere_dubins/segments.hpp"
#include "test_support.hpp"

using namespace sphere_dubins;
using sphere_dubins::testing::diag;
using sphere_dubins::testing::kPi;

TEST(RotG, ZeroIsIdentity)
{
  EXPECT_EQ(rot_g(0.0), (Matrix3<double>::Identity()));
}

TEST(RotG, HalfTurn)
{
  EXPECT_LE(rotation_distance(rot_g(kPi), diag(-1, -1, 1)), 1e-15);
}

TEST(RotG, QuarterTurn)
{
  Matrix3<double> want;
  want << 0, -1, 0, 1, 0, 0, 0, 0, 1;
  EXPECT_LE(rotation_distance(rot_g(kPi / 2), want), 1e-15);
}

TEST(RotL, ZeroIsIdentity)
{
  for (double r : {0.1, 0.5, 0.9}) {
    EXPECT_LE(rotation_distance(rot_l(r, 0.0), Matrix3<double>::Identity().eval()), 0.0);
  }
}

TEST(RotL, HalfTurnEntries)
{
  const Matrix3<double> m = rot_l(0.5, kPi);
  EXPECT_NEAR(m(0, 0), 0.5, 1e-15);
  EXPECT_NEAR(m(1, 1), -1.0, 1e-15);
}

TEST(RotL, FixesLeftAxis)
{
  SplitMix64 rng(31);
  const Vector3<double> u = axial_left(0.6);
  for (int i = 0; i < 50; ++i) {
    const double phi = rng.uniform(0, 2 * kPi);
    EXPECT_LE((rot_l(0.6, phi) * u - u).norm(), 1e-12);
  }
}

TEST(RotR, ZeroIsIdentity)
{
  EXPECT_LE(rotation_distance(rot_r(0.3, 0.0), Matrix3<double>::Identity().eval()), 0.0);
}

TEST(RotR, IsReflectedLeftTurn)
{
  SplitMix64 rng(32);
  for (int i = 0; i < 50; ++i) {
    const double r = rng.uniform_open(0, 1);
    const double phi = rng.uniform(0, 2 * kPi);
    EXPECT_LE(rotation_distance(rot_r(r, phi), reflect_xy(rot_l(r, phi))), 1e-12);
  }
}

TEST(RotR, FixesRightAxis)
{
  SplitMix64 rng(33);
  const Vector3<double> u = axial_right(0.6);
  for (int i = 0; i < 50; ++i) {
    const double phi = rng.uniform(0, 2 * kPi);
    EXPECT_LE((rot_r(0.6, phi) * u - u).norm(), 1e-12);
  }
}

TEST(AxialVectors, ValuesAtPointSix)
{
  EXPECT_LE((axial_left(0.6) - Vector3<double>(0.8, 0, 0.6)).norm(), 1e-15);
  EXPECT_LE((axial_right(0.6) - Vector3<double>(-0.8, 0, 0.6)).norm(), 1e-15);
}

TEST(AxialVectors, UnitNormAndDotProduct)
{
  const double r_vals[] = {0.3, 0.5, 1 / std::sqrt(2.0)};
  const double dots[] = {-0.82, -0.5, 0.0};
  for (int i = 0; i < 3; ++i) {
    EXPECT_NEAR(axial_left(r_vals[i]).norm(), 1.0, 1e-14);
    EXPECT_NEAR(axial_right(r_vals[i]).norm(), 1.0, 1e-14);
    EXPECT_NEAR(axial_left(r_vals[i]).dot(axial_right(r_vals[i])), dots[i], 1e-14);
  }
}

TEST(SegmentLength, ArcLengths)
{
  EXPECT_DOUBLE_EQ(segment_length(SegmentKind::GreatCircle, 0.3, 1.3), 1.3);
  EXPECT_DOUBLE_EQ(segment_length(SegmentKind::LeftTurn, 0.5, 2.0), 1.0);
  EXPECT_DOUBLE_EQ(segment_length(SegmentKind::RightTurn, 0.7, 0.0), 0.0);
}

TEST(SampleSegment, TwoSamplesOfNothing)
{
  const auto s = sample_segment(Matrix3<double>::Identity().eval(), SegmentKind::GreatCircle, 0.5, 0.0, 2);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0], (Matrix3<double>::Identity()));
  EXPECT_EQ(s[1], (Matrix3<double>::Identity()));
}

TEST(SampleSegment, EndpointsMatchComposition)
{
  SplitMix64 rng(34);
  const Matrix3<double> start = random_rotation(rng);
  const auto s = sample_segment(start, SegmentKind::LeftTurn, 0.4, 2.5, 17);
  ASSERT_EQ(s.size(), 17u);
  EXPECT_EQ(s.front(), start);
  EXPECT_LE(rotation_distance(s.back(), compose(start, rot_l(0.4, 2.5))), 1e-12);
  for (const auto& c : s) {
    EXPECT_NEAR(c.col(0).norm(), 1.0, 1e-12);
  }
}

TEST(SampleSegment, RejectsTooFewSamples)
{
  EXPECT_THROW(sample_segment(Matrix3<double>::Identity().eval(), SegmentKind::RightTurn, 0.5, 1.0, 1),
               std::invalid_argument);
}

TEST(TurningRadius, RejectsBoundaryAndOutside)
{
  for (double r : {0.0, 1.0, -0.2, 1.5, double(NAN)}) {
    EXPECT_THROW(TurningRadius<double>{r}, std::domain_error) << r;
  }
  EXPECT_DOUBLE_EQ(TurningRadius(0.25).value(), 0.25);
  EXPECT_NO_THROW(TurningRadius(1e-7));
  EXPECT_NO_THROW(TurningRadius(1 - 1e-7));
}

TEST(NormalizeAngle, TrueModulus)
{
  EXPECT_DOUBLE_EQ(normalize_angle(-0.5), 2 * kPi - 0.5);
  EXPECT_DOUBLE_EQ(normalize_angle(2 * kPi + 0.25), 0.25);
  EXPECT_EQ(normalize_angle(2 * kPi), 0.0);
  EXPECT_GE(normalize_angle(-1e-18), 0.0);
  EXPECT_LT(normalize_angle(-1e-18), 2 * kPi);
}

TEST(Properties, OneParameterSubgroup)
{
  SplitMix64 rng(35);
  for (int i = 0; i < 100; ++i) {
    const double r = rng.uniform(0.05, 0.95);
    const double a = rng.uniform(0, 2 * kPi);
    const double b = rng.uniform(0, 2 * kPi);
    const double sum = normalize_angle(a + b);
    EXPECT_LE(rotation_distance((rot_g(a) * rot_g(b)).eval(), rot_g(sum)), 1e-11);
    EXPECT_LE(rotation_distance((rot_l(r, a) * rot_l(r, b)).eval(), rot_l(r, sum)), 1e-11);
    EXPECT_LE(rotation_distance((rot_r(r, a) * rot_r(r, b)).eval(), rot_r(r, sum)), 1e-11);
  }
}

TEST(Properties, SegmentsMatchSabbanOde)
{
  SplitMix64 rng(36);
  for (SegmentKind kind : {SegmentKind::GreatCircle, SegmentKind::LeftTurn, SegmentKind::RightTurn}) {
    for (int i = 0; i < 3; ++i) {
      const double r = rng.uniform(0.05, 0.95);
      const double phi = rng.uniform(0, 2 * kPi);
      const Matrix3<double> ode = integrate_segment(segment_ode(kind, r, phi));
      EXPECT_LE(rotation_distance(segment_rotation(kind, r, phi), ode), 1e-8)
          << segment_letter(kind) << " r=" << r << " phi=" << phi;
    }
  }
}

TEST(Properties, CurvatureSigns)
{
  const double r = 0.6;
  EXPECT_EQ(segment_curvature(SegmentKind::GreatCircle, r), 0.0);
  EXPECT_NEAR(segment_curvature(SegmentKind::LeftTurn, r), 0.8 / 0.6, 1e-15);
  EXPECT_NEAR(segment_curvature(SegmentKind::RightTurn, r), -0.8 / 0.6, 1e-15);
}
