#include "vgauss/boxmuller.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "test_support.hpp"
#include "vgauss/statcheck.hpp"

namespace vgauss {
namespace {

using Variant = BoxMullerGen::Variant;
using testing::scripted;

std::vector<double> draw(NormalGenerator& g, std::size_t n) {
  std::vector<double> v(n);
  g.fill(v);
  return v;
}

// (1 - e^-2, 0.75): radius sqrt(-2 ln e^-2) = 2, angle 2 pi 0.75 - pi = pi/2.
const double kUFor2 = -std::expm1(-2.0);

TEST(BoxMullerB1, ScriptedPairMatchesClosedForm) {
  BoxMullerGen g(Variant::B1, scripted({kUFor2, 0.75}));
  const auto out = draw(g, 2);
  EXPECT_NEAR(out[0], 2.0, 1e-14);
  EXPECT_NEAR(out[1], 0.0, 1e-14);
}

TEST(BoxMullerB1, ScriptedPairAgainstLongDoubleOracle) {
  const std::vector<double> in{0.3, 0.1, 0.91, 0.6, 0.0, 0.25};
  BoxMullerGen g(Variant::B1, scripted(in), {1.5, 2.0});
  const auto out = draw(g, 6);
  for (std::size_t j = 0; j < 3; ++j) {
    const long double r = std::sqrt(-2.0L * std::log1p(-static_cast<long double>(in[2 * j])));
    const long double a = 2.0L * std::numbers::pi_v<long double> * in[2 * j + 1] - std::numbers::pi_v<long double>;
    EXPECT_NEAR(out[2 * j], static_cast<double>(1.5L + 2.0L * r * std::sin(a)), 1e-13) << j;
    EXPECT_NEAR(out[2 * j + 1], static_cast<double>(1.5L + 2.0L * r * std::cos(a)), 1e-13) << j;
  }
}

TEST(BoxMullerB2, ScriptedPairWithinFastSinCosError) {
  BoxMullerGen g(Variant::B2, scripted({kUFor2, 0.75}));
  const auto out = draw(g, 2);
  EXPECT_NEAR(out[0], 2.0, 4e-10);
  EXPECT_NEAR(out[1], 0.0, 4e-10);
}

TEST(BoxMullerB2, TracksB1Closely) {
  BoxMullerGen b1(Variant::B1, 99), b2(Variant::B2, 99);
  const auto x = draw(b1, 200000);
  const auto y = draw(b2, 200000);
  for (std::size_t i = 0; i < x.size(); ++i) {
    // Error scales with the radius, which stays below 10 for these draws.
    ASSERT_NEAR(x[i], y[i], 1e-9 * std::max(1.0, std::abs(x[i]))) << i;
  }
}

TEST(BoxMullerB3, ZeroRadius) {
  BoxMullerGen g(Variant::B3, scripted({0.0, 0.0, 0.37}), {3.0, 1.0});
  const auto out = draw(g, 2);
  EXPECT_EQ(out[0], 3.0);
  EXPECT_EQ(out[1], 3.0);
}

TEST(BoxMullerB3, PolynomialRangeFixture) {
  // max^2 = 1 - e^-2 < 8/9, so r comes from h: sqrt(2) * sqrt(2) = 2 on the sine output.
  BoxMullerGen g(Variant::B3, scripted({std::sqrt(kUFor2), 0.0, 0.75}));
  const auto out = draw(g, 2);
  EXPECT_NEAR(out[0], 0.0, 1e-9);
  EXPECT_NEAR(out[1], 2.0, 1e-9);
}

TEST(BoxMullerB3, MaxIsOrderIndependent) {
  BoxMullerGen a(Variant::B3, scripted({0.8, 0.2, 0.1}));
  BoxMullerGen b(Variant::B3, scripted({0.2, 0.8, 0.1}));
  EXPECT_EQ(draw(a, 2), draw(b, 2));
}

TEST(BoxMullerB3, TailFixture) {
  // max^2 = 1 - e^-4 > 8/9 takes the gathered log path: r sqrt(2) = 2 sqrt(2).
  const double m = std::sqrt(-std::expm1(-4.0));
  BoxMullerGen g(Variant::B3, scripted({0.1, m, 0.75}));
  const auto out = draw(g, 2);
  EXPECT_NEAR(out[0], 0.0, 1e-9);
  EXPECT_NEAR(out[1], 2.0 * std::numbers::sqrt2, 1e-12 + 4e-10 * 2.0 * std::numbers::sqrt2);
}

TEST(BoxMullerB3, ScriptedBlockAgainstOracle) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  std::vector<double> in(3 * 500);
  for (double& x : in) x = dist(rng);
  BoxMullerGen g(Variant::B3, scripted(in), {-1.0, 0.5});
  const auto out = draw(g, 1000);
  for (std::size_t j = 0; j < 500; ++j) {
    const long double m = std::max(in[3 * j], in[3 * j + 1]);
    const long double r = std::sqrt(-2.0L * std::log1p(-m * m));
    const long double a = 2.0L * std::numbers::pi_v<long double> * in[3 * j + 2] - std::numbers::pi_v<long double>;
    const double tol = 1e-9 * (1.0 + static_cast<double>(r));
    EXPECT_NEAR(out[2 * j], static_cast<double>(-1.0L + 0.5L * r * std::cos(a)), tol) << j;
    EXPECT_NEAR(out[2 * j + 1], static_cast<double>(-1.0L + 0.5L * r * std::sin(a)), tol) << j;
  }
}

TEST(BoxMuller, ZeroSigmaGivesConstantMean) {
  for (Variant v : {Variant::B1, Variant::B2, Variant::B3}) {
    BoxMullerGen g(v, 5, {2.5, 0.0});
    for (double x : draw(g, 9999)) ASSERT_EQ(x, 2.5);
  }
}

TEST(BoxMuller, RejectsInvalidParams) {
  EXPECT_THROW(BoxMullerGen(Variant::B1, 1, {0.0, -1.0}), std::invalid_argument);
  EXPECT_THROW(BoxMullerGen(Variant::B1, 1, {NAN, 1.0}), std::invalid_argument);
  EXPECT_THROW(BoxMullerGen(Variant::B1, 1, {0.0, INFINITY}), std::invalid_argument);
}

class BoxMullerStats : public ::testing::TestWithParam<Variant> {};

TEST_P(BoxMullerStats, MomentsOfMillionDeviates) {
  const NormalParams p{0.25, 3.0};
  BoxMullerGen g(GetParam(), 2718, p);
  const auto x = draw(g, 1000000);
  const auto gate = moment_gate(moments(x), p);
  EXPECT_TRUE(gate.mean_ok);
  EXPECT_TRUE(gate.variance_ok);
  EXPECT_TRUE(ad_normal(x, p, 0.01).pass);
}

TEST_P(BoxMullerStats, DrawsPerDeviate) {
  BoxMullerGen g(GetParam(), 1);
  draw(g, 1000000);
  const double expect = GetParam() == Variant::B3 ? 1.5e6 : 1e6;
  EXPECT_EQ(static_cast<double>(g.uniforms_consumed()), expect);
}

TEST_P(BoxMullerStats, SingleCallsMatchOneBulkCall) {
  BoxMullerGen a(GetParam(), 11), b(GetParam(), 11);
  const auto bulk = draw(a, 20001);
  std::vector<double> single;
  for (int i = 0; i < 20001; ++i) single.push_back(draw(b, 1)[0]);
  EXPECT_EQ(single, bulk);
}

TEST_P(BoxMullerStats, RandomPartitionsMatchBulk) {
  std::mt19937_64 rng(4);
  BoxMullerGen a(GetParam(), 12), b(GetParam(), 12);
  const auto bulk = draw(a, 30000);
  std::vector<double> got;
  while (got.size() < bulk.size()) {
    const auto part = draw(b, std::min<std::size_t>(bulk.size() - got.size(), rng() % 9000));
    got.insert(got.end(), part.begin(), part.end());
  }
  EXPECT_EQ(got, bulk);
}

TEST_P(BoxMullerStats, SpareSlotHoldsSecondOfPair) {
  BoxMullerGen a(GetParam(), 3), b(GetParam(), 3);
  const auto pair = draw(a, 2);
  EXPECT_FALSE(a.has_spare());
  EXPECT_EQ(draw(b, 1)[0], pair[0]);
  EXPECT_TRUE(b.has_spare());
  const auto consumed = b.uniforms_consumed();
  EXPECT_EQ(draw(b, 1)[0], pair[1]);
  EXPECT_FALSE(b.has_spare());
  EXPECT_EQ(b.uniforms_consumed(), consumed);
}

TEST_P(BoxMullerStats, SameSeedSameOutput) {
  BoxMullerGen a(GetParam(), 8), b(GetParam(), 8);
  EXPECT_EQ(draw(a, 5000), draw(b, 5000));
}

TEST_P(BoxMullerStats, EmptyFillIsNoOp) {
  BoxMullerGen a(GetParam(), 8), b(GetParam(), 8);
  draw(a, 1);
  draw(b, 1);
  std::vector<double> none;
  a.fill(none);
  EXPECT_TRUE(a.has_spare());
  EXPECT_EQ(draw(a, 100), draw(b, 100));
}

INSTANTIATE_TEST_SUITE_P(Variants, BoxMullerStats, ::testing::Values(Variant::B1, Variant::B2, Variant::B3),
                         [](const auto& info) {
                           switch (info.param) {
                             case Variant::B1: return std::string("B1");
                             case Variant::B2: return std::string("B2");
                             default: return std::string("B3");
                           }
                         });

TEST(BoxMuller, MethodTags) {
  EXPECT_EQ(BoxMullerGen(Variant::B1, 1).method(), Method::B1);
  EXPECT_EQ(BoxMullerGen(Variant::B2, 1).method(), Method::B2);
  EXPECT_EQ(BoxMullerGen(Variant::B3, 1).method(), Method::B3);
  EXPECT_EQ(make_generator(Method::B3, 1)->method(), Method::B3);
}

}  // namespace
}  // namespace vgauss
