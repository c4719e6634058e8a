#include "vgauss/fastfuncs.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "test_support.hpp"
#include "vgauss/statcheck.hpp"

namespace vgauss {
namespace {

using testing::g_oracle;
using testing::mobius_inverse_oracle;

constexpr double kEps = std::numeric_limits<double>::epsilon();

std::pair<double, double> sincos16_at(double v) {
  double s = 0, c = 0;
  sincos16_batch(std::span(&v, 1), std::span(&s, 1), std::span(&c, 1));
  return {s, c};
}

TEST(SinCos16, KnownAngles) {
  auto [s0, c0] = sincos16_at(0.5);
  EXPECT_NEAR(s0, 0.0, 1e-10);
  EXPECT_NEAR(c0, 1.0, 1e-10);
  auto [s1, c1] = sincos16_at(0.75);
  EXPECT_NEAR(s1, 1.0, 1e-10);
  EXPECT_NEAR(c1, 0.0, 1e-10);
  auto [s2, c2] = sincos16_at(0.0);
  EXPECT_NEAR(s2, 0.0, 1e-10);
  EXPECT_NEAR(c2, -1.0, 1e-10);
}

TEST(SinCos16, PythagoreanIdentityOnRandomInputs) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  std::vector<double> v(100000), s(v.size()), c(v.size());
  for (double& x : v) x = dist(rng);
  sincos16_batch(v, s, c);
  for (std::size_t i = 0; i < v.size(); ++i) {
    ASSERT_LT(std::abs(s[i] * s[i] + c[i] * c[i] - 1.0), 4e-10) << "v=" << v[i];
  }
}

TEST(SinCos16, GridAgainstLongDoubleOracle) {
  constexpr std::size_t n = 1000000;
  std::vector<double> v(n), s(n), c(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<double>(i) / n;
  sincos16_batch(v, s, c);
  long double worst = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const long double a = 2.0L * std::numbers::pi_v<long double> * v[i] - std::numbers::pi_v<long double>;
    worst = std::max({worst, std::abs(s[i] - std::sin(a)), std::abs(c[i] - std::cos(a))});
  }
  EXPECT_LT(worst, 1e-10L);
}

TEST(Mobius, Endpoints) {
  EXPECT_EQ(mobius_map(0.0, 1.0), -1.0);
  EXPECT_NEAR(mobius_map(8.0 / 9.0, 1.0), 1.0, 4 * kEps);
  for (double rho : {0.5, 1.0, 2.0, 3.7}) {
    EXPECT_NEAR(mobius_map(0.0, rho), -1.0, 4 * kEps) << rho;
    EXPECT_NEAR(mobius_map(tau_for_rho(rho), rho), 1.0, 8 * kEps) << rho;
  }
}

TEST(Mobius, InteriorPoint) {
  // (6*4/9 - 4)/(4 - 3*4/9) = (-4/3)/(8/3).
  EXPECT_NEAR(mobius_map(4.0 / 9.0, 1.0), -0.5, 2 * kEps);
}

TEST(Mobius, TauFormula) {
  EXPECT_NEAR(tau_for_rho(1.0), 8.0 / 9.0, kEps);
  EXPECT_DOUBLE_EQ(tau_for_rho(2.0), 1.0 - 0.25);
}

TEST(Mobius, InverseRoundTripAndMonotone) {
  double prev = -2;
  for (int i = 0; i <= 1000; ++i) {
    const double u = tau_for_rho(1.0) * i / 1000.0;
    const double v = mobius_map(u, 1.0);
    EXPECT_GT(v, prev);
    prev = v;
    EXPECT_NEAR(mobius_inverse(v, 1.0), u, 8 * kEps);
    EXPECT_NEAR(static_cast<double>(mobius_inverse_oracle(v)), u, 8 * kEps);
  }
}

TEST(EvalH, KnownPoints) {
  const auto& h = default_h_approx();
  EXPECT_NEAR(eval_h(h, -1.0), 1.0, 2e-11);
  // g(1/2) = sqrt(2 ln 2)
  EXPECT_NEAR(eval_h(h, mobius_map(0.5, 1.0)), static_cast<double>(g_oracle(0.5L)), 2e-11);
  EXPECT_NEAR(eval_h(h, mobius_map(0.5, 1.0)), 1.1774100225154747, 2e-11);
  const long double g_tau = std::sqrt(std::log(9.0L) * 9.0L / 8.0L);
  EXPECT_NEAR(eval_h(h, 1.0), static_cast<double>(g_tau), 2e-11);
}

TEST(EvalH, BatchMatchesScalar) {
  const auto& h = default_h_approx();
  std::vector<double> v(1500), out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = -1.0 + 2.0 * i / (v.size() - 1.0);
  eval_h(h, v, out);
  for (std::size_t i = 0; i < v.size(); ++i) EXPECT_EQ(out[i], eval_h(h, v[i]));
}

TEST(EvalH, MonomialHornerOracle) {
  // Plain ascending-power evaluation in long double.
  const auto& h = default_h_approx();
  for (double v : {-1.0, -0.3, 0.0, 0.41, 0.999}) {
    long double acc = 0;
    for (int k = h.degree(); k >= 0; --k) acc = acc * v + h.coeffs[static_cast<std::size_t>(k)];
    EXPECT_NEAR(eval_h(h, v), static_cast<double>(acc), 1e-15);
  }
}

TEST(GFast, ZeroIsOne) {
  double u = 0.0, g = 0;
  g_fast(std::span(&u, 1), std::span(&g, 1));
  EXPECT_NEAR(g, 1.0, 2e-11);
}

TEST(GFast, TailUsesReferencePath) {
  double u = 0.999, g = 0;
  g_fast(std::span(&u, 1), std::span(&g, 1));
  EXPECT_EQ(g, std::sqrt(-std::log1p(-0.999) / 0.999));
  EXPECT_NEAR(g, static_cast<double>(g_oracle(0.999L)), 1e-15);
}

TEST(GFast, DenseGridAgainstOracle) {
  constexpr std::size_t n = 1000000;
  std::vector<double> u(n), g(n);
  for (std::size_t i = 0; i < n; ++i) u[i] = (1.0 - 1e-6) * static_cast<double>(i) / (n - 1);
  g_fast(u, g);
  long double worst = 0;
  for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(g[i] - g_oracle(u[i])));
  EXPECT_LT(worst, 1e-10L);
}

TEST(GFast, CompositeSquareRootIdentity) {
  // sqrt(u) h(v(u)) reproduces sqrt(-ln(1-u)) on [0, 8/9].
  constexpr std::size_t n = 1000000;
  const auto& h = default_h_approx();
  long double worst = 0;
  std::vector<double> v(n), hv(n), u(n);
  for (std::size_t i = 0; i < n; ++i) {
    u[i] = (8.0 / 9.0) * static_cast<double>(i) / (n - 1);
    v[i] = mobius_map(u[i], 1.0);
  }
  eval_h(h, v, hv);
  for (std::size_t i = 0; i < n; ++i) {
    const long double f = std::sqrt(-std::log1p(-static_cast<long double>(u[i])));
    worst = std::max(worst, std::abs(std::sqrt(static_cast<long double>(u[i])) * hv[i] - f));
  }
  EXPECT_LT(worst, 1e-10L);
}

TEST(FitH, Degree15MeetsTarget) {
  const HApprox h = fit_h_coeffs(1.0, 15);
  EXPECT_EQ(h.degree(), 15);
  EXPECT_LT(h.certified_error, 2e-11);
  EXPECT_DOUBLE_EQ(h.tau, 8.0 / 9.0);

  // Independent check of the certificate on a finer grid.
  long double worst = 0;
  for (int i = 0; i <= 400000; ++i) {
    const double v = -1.0 + 2.0 * i / 400000.0;
    worst = std::max(worst, std::abs(eval_h(h, v) - g_oracle(mobius_inverse_oracle(v))));
  }
  EXPECT_LT(worst, 2e-11L);
}

TEST(FitH, Degree29AlsoMeetsTarget) {
  EXPECT_LT(fit_h_coeffs(1.0, 29).certified_error, 2e-11);
}

TEST(FitH, Degree3FallsFarShort) {
  const HApprox h = fit_h_coeffs(1.0, 3);
  EXPECT_GT(h.certified_error, 1e-6);
}

TEST(FitH, OtherRhoIsUsable) {
  const HApprox h = fit_h_coeffs(2.0, 15);
  EXPECT_DOUBLE_EQ(h.tau, 0.75);
  EXPECT_LT(h.certified_error, 1e-9);
}

TEST(FitH, RejectsBadArguments) {
  EXPECT_THROW((void)fit_h_coeffs(0.0, 15), std::invalid_argument);
  EXPECT_THROW((void)fit_h_coeffs(-1.0, 15), std::invalid_argument);
  EXPECT_THROW((void)fit_h_coeffs(1.0, 0), std::invalid_argument);
}

TEST(FitH, RefitIsBitReproducible) {
  const HApprox a = fit_h_coeffs(1.0, 15);
  const HApprox b = fit_h_coeffs(1.0, 15);
  EXPECT_EQ(a.coeffs, b.coeffs);
  EXPECT_EQ(a.certified_error, b.certified_error);
}

TEST(FitH, EmbeddedCoefficientsMatchRefit) {
  const HApprox fit = fit_h_coeffs(1.0, 15);
  const HApprox& emb = default_h_approx();
  ASSERT_EQ(emb.coeffs.size(), fit.coeffs.size());
  for (std::size_t i = 0; i < fit.coeffs.size(); ++i) EXPECT_EQ(emb.coeffs[i], fit.coeffs[i]) << "h" << i;
  EXPECT_EQ(emb.rho, 1.0);
  EXPECT_LT(emb.certified_error, 2e-11);
}

TEST(FitSinCos, LeadingTermsAndCertificate) {
  const SinCos16Coeffs k = fit_sincos_coeffs();
  EXPECT_NEAR(k.s1, 1.0, 1e-6);
  EXPECT_NEAR(k.c0, 1.0, 1e-6);
  EXPECT_NEAR(k.s3, -1.0 / 6.0, 1e-6);
  EXPECT_NEAR(k.c2, -0.5, 1e-6);
  EXPECT_LT(k.certified_error, 1e-10);
}

TEST(FitSinCos, EmbeddedCoefficientsMatchRefit) {
  const SinCos16Coeffs fit = fit_sincos_coeffs();
  const SinCos16Coeffs& emb = default_sincos_coeffs();
  EXPECT_EQ(emb.s1, fit.s1);
  EXPECT_EQ(emb.s3, fit.s3);
  EXPECT_EQ(emb.s5, fit.s5);
  EXPECT_EQ(emb.s7, fit.s7);
  EXPECT_EQ(emb.c0, fit.c0);
  EXPECT_EQ(emb.c2, fit.c2);
  EXPECT_EQ(emb.c4, fit.c4);
  EXPECT_EQ(emb.c6, fit.c6);
}

TEST(EmitSource, ContainsHexfloatTables) {
  const std::string s = emit_coeffs_source(default_sincos_coeffs(), default_h_approx());
  EXPECT_NE(s.find("kEmbeddedH[16]"), std::string::npos);
  EXPECT_NE(s.find("kEmbeddedSin[4]"), std::string::npos);
  EXPECT_NE(s.find("0x1."), std::string::npos);
}

TEST(ApproxErrorGrid, AllFastFunctionsWithinBounds) {
  EXPECT_LT(approx_error_grid(FastFunction::sincos16, 1000000), 1e-10);
  EXPECT_LT(approx_error_grid(FastFunction::g_fast, 1000000), 1e-10);
  EXPECT_LT(approx_error_grid(FastFunction::eval_h, 1000000), 2e-11);
  EXPECT_THROW((void)approx_error_grid(FastFunction::sincos16, 1000), std::invalid_argument);
}

}  // namespace
}  // namespace vgauss
