#include "vgauss/fastfuncs.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <numbers>

namespace vgauss {

namespace {

#include "embedded_coeffs.inc"

constexpr std::size_t kFitGridPoints = 200001;
constexpr std::size_t kBlock = 512;

// Chebyshev coefficients of f on [-1,1] by interpolation at the n first-kind
// nodes, truncated to `degree`. Sums run in long double.
std::vector<long double> chebyshev_fit(const std::function<long double(long double)>& f, std::size_t n,
                                       int degree) {
  const long double pi = std::numbers::pi_v<long double>;
  std::vector<long double> fx(n);
  for (std::size_t j = 0; j < n; ++j) {
    fx[j] = f(std::cos(pi * (static_cast<long double>(j) + 0.5L) / static_cast<long double>(n)));
  }
  std::vector<long double> c(static_cast<std::size_t>(degree) + 1);
  for (int k = 0; k <= degree; ++k) {
    long double acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
      acc += fx[j] * std::cos(pi * k * (static_cast<long double>(j) + 0.5L) / static_cast<long double>(n));
    }
    c[static_cast<std::size_t>(k)] = 2.0L * acc / static_cast<long double>(n);
  }
  c[0] /= 2;
  return c;
}

// Monomial coefficients of sum_k c[k] T_k(x).
std::vector<long double> chebyshev_to_monomial(const std::vector<long double>& c) {
  const std::size_t n = c.size();
  std::vector<long double> out(n, 0.0L);
  std::vector<long double> prev(n, 0.0L), cur(n, 0.0L), next(n, 0.0L);
  prev[0] = 1;  // T_0
  out[0] += c[0];
  if (n == 1) return out;
  cur[1] = 1;  // T_1
  out[1] += c[1];
  for (std::size_t k = 2; k < n; ++k) {
    std::fill(next.begin(), next.end(), 0.0L);
    for (std::size_t i = 0; i + 1 < n; ++i) next[i + 1] += 2 * cur[i];
    for (std::size_t i = 0; i < n; ++i) next[i] -= prev[i];
    for (std::size_t i = 0; i < n; ++i) out[i] += c[k] * next[i];
    std::swap(prev, cur);
    std::swap(cur, next);
  }
  return out;
}

inline double sin_poly(const SinCos16Coeffs& k, double y) noexcept {
  const double y2 = y * y;
  return y * (k.s1 + y2 * (k.s3 + y2 * (k.s5 + y2 * k.s7)));
}

inline double cos_poly(const SinCos16Coeffs& k, double y) noexcept {
  const double y2 = y * y;
  return k.c0 + y2 * (k.c2 + y2 * (k.c4 + y2 * k.c6));
}

SinCos16Coeffs make_embedded_sincos() {
  SinCos16Coeffs k;
  k.s1 = kEmbeddedSin[0];
  k.s3 = kEmbeddedSin[1];
  k.s5 = kEmbeddedSin[2];
  k.s7 = kEmbeddedSin[3];
  k.c0 = kEmbeddedCos[0];
  k.c2 = kEmbeddedCos[1];
  k.c4 = kEmbeddedCos[2];
  k.c6 = kEmbeddedCos[3];
  k.certified_error = kEmbeddedSinCosError;
  return k;
}

HApprox make_embedded_h() {
  HApprox h;
  h.coeffs.assign(std::begin(kEmbeddedH), std::end(kEmbeddedH));
  h.rho = kEmbeddedRho;
  h.tau = tau_for_rho(kEmbeddedRho);
  h.certified_error = kEmbeddedHError;
  return h;
}

}  // namespace

double tau_for_rho(double rho) noexcept {
  const double q = rho / (rho + 2.0);
  return 1.0 - q * q;
}

double mobius_map(double u, double rho) noexcept {
  const double a = rho + 1.0;
  const double b = rho + 2.0;
  return a * (b * u - 2.0) / (2.0 * a - b * u);
}

double mobius_inverse(double v, double rho) noexcept {
  const double a = rho + 1.0;
  const double b = rho + 2.0;
  return 2.0 * a * (1.0 + v) / (b * (a + v));
}

double g_reference(double u) noexcept {
  if (u == 0.0) return 1.0;
  return std::sqrt(-std::log1p(-u) / u);
}

const SinCos16Coeffs& default_sincos_coeffs() noexcept {
  static const SinCos16Coeffs k = make_embedded_sincos();
  return k;
}

const HApprox& default_h_approx() noexcept {
  static const HApprox h = make_embedded_h();
  return h;
}

void sincos16_batch(const SinCos16Coeffs& k, std::span<const double> v, std::span<double> sin_out,
                    std::span<double> cos_out) {
  constexpr double kScale = std::numbers::pi / 8.0;  // (2 pi v - pi) / 16 = (v - 1/2) pi / 8
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double y = (v[i] - 0.5) * kScale;
    double s = sin_poly(k, y);
    double c = cos_poly(k, y);
    for (int d = 0; d < 4; ++d) {
      const double s2 = 2.0 * s * c;
      c = 1.0 - 2.0 * s * s;
      s = s2;
    }
    sin_out[i] = s;
    cos_out[i] = c;
  }
}

void sincos16_batch(std::span<const double> v, std::span<double> sin_out, std::span<double> cos_out) {
  sincos16_batch(default_sincos_coeffs(), v, sin_out, cos_out);
}

void eval_h(const HApprox& h, std::span<const double> v, std::span<double> out) {
  const auto& c = h.coeffs;
  const std::size_t m = c.size();
  // Highest even and odd indices.
  const std::size_t top_even = (m - 1) % 2 == 0 ? m - 1 : m - 2;
  const std::size_t top_odd = m < 2 ? 0 : ((m - 1) % 2 == 1 ? m - 1 : m - 2);

  std::array<double, kBlock> v2{}, even{}, odd{};
  for (std::size_t base = 0; base < v.size(); base += kBlock) {
    const std::size_t len = std::min(kBlock, v.size() - base);
    for (std::size_t i = 0; i < len; ++i) {
      v2[i] = v[base + i] * v[base + i];
      even[i] = c[top_even];
      odd[i] = m < 2 ? 0.0 : c[top_odd];
    }
    for (std::size_t k = top_even; k >= 2; k -= 2) {
      const double ck = c[k - 2];
      for (std::size_t i = 0; i < len; ++i) even[i] = even[i] * v2[i] + ck;
    }
    for (std::size_t k = top_odd; k >= 3; k -= 2) {
      const double ck = c[k - 2];
      for (std::size_t i = 0; i < len; ++i) odd[i] = odd[i] * v2[i] + ck;
    }
    for (std::size_t i = 0; i < len; ++i) out[base + i] = even[i] + v[base + i] * odd[i];
  }
}

double eval_h(const HApprox& h, double v) noexcept {
  double out = 0;
  eval_h(h, std::span(&v, 1), std::span(&out, 1));
  return out;
}

void g_fast(const HApprox& h, std::span<const double> u, std::span<double> out) {
  std::vector<double> v(u.size());
  std::vector<std::uint32_t> tail;
  for (std::size_t i = 0; i < u.size(); ++i) {
    v[i] = mobius_map(u[i], h.rho);
    if (u[i] > h.tau) tail.push_back(static_cast<std::uint32_t>(i));
  }
  eval_h(h, v, out);

  std::vector<double> packed(tail.size());
  for (std::size_t j = 0; j < tail.size(); ++j) packed[j] = u[tail[j]];
  for (double& x : packed) x = std::sqrt(-std::log1p(-x) / x);
  for (std::size_t j = 0; j < tail.size(); ++j) out[tail[j]] = packed[j];
}

void g_fast(std::span<const double> u, std::span<double> out) { g_fast(default_h_approx(), u, out); }

double sincos16_grid_error(const SinCos16Coeffs& k, std::size_t n_points) {
  constexpr std::size_t kChunk = 4096;
  std::vector<double> v(kChunk), s(kChunk), c(kChunk);
  double worst = 0;
  for (std::size_t base = 0; base < n_points; base += kChunk) {
    const std::size_t len = std::min(kChunk, n_points - base);
    for (std::size_t i = 0; i < len; ++i) v[i] = static_cast<double>(base + i) / static_cast<double>(n_points);
    sincos16_batch(k, std::span(v).first(len), std::span(s).first(len), std::span(c).first(len));
    for (std::size_t i = 0; i < len; ++i) {
      const double angle = 2.0 * std::numbers::pi * v[i] - std::numbers::pi;
      worst = std::max({worst, std::abs(s[i] - std::sin(angle)), std::abs(c[i] - std::cos(angle))});
    }
  }
  return worst;
}

double h_grid_error(const HApprox& h, std::size_t n_points) {
  std::vector<double> v(n_points), hv(n_points);
  for (std::size_t i = 0; i < n_points; ++i) {
    v[i] = -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(n_points - 1);
  }
  eval_h(h, v, hv);
  double worst = 0;
  for (std::size_t i = 0; i < n_points; ++i) {
    worst = std::max(worst, std::abs(hv[i] - g_reference(mobius_inverse(v[i], h.rho))));
  }
  return worst;
}

HApprox fit_h_coeffs(double rho, int degree) {
  if (!(rho > 0.0)) throw std::invalid_argument("fit_h_coeffs: rho must be positive");
  if (degree < 1) throw std::invalid_argument("fit_h_coeffs: degree must be at least 1");

  const std::size_t nodes = std::max<std::size_t>(64, 4 * (static_cast<std::size_t>(degree) + 1));
  const long double a = static_cast<long double>(rho) + 1.0L;
  const long double b = static_cast<long double>(rho) + 2.0L;
  auto target = [a, b](long double v) -> long double {
    const long double u = 2.0L * a * (1.0L + v) / (b * (a + v));
    if (u == 0.0L) return 1.0L;
    return std::sqrt(-std::log1p(-u) / u);
  };
  const auto mono = chebyshev_to_monomial(chebyshev_fit(target, nodes, degree));

  HApprox h;
  h.rho = rho;
  h.tau = tau_for_rho(rho);
  h.coeffs.assign(mono.size(), 0.0);
  std::transform(mono.begin(), mono.end(), h.coeffs.begin(), [](long double x) { return static_cast<double>(x); });
  h.certified_error = h_grid_error(h, kFitGridPoints);

  if (rho == 1.0 && degree == 15 && !(h.certified_error < kHErrorTarget)) {
    throw FitError("fit_h_coeffs: degree-15 fit misses the 2e-11 target (error " +
                   std::to_string(h.certified_error) + ")");
  }
  return h;
}

SinCos16Coeffs fit_sincos_coeffs() {
  const long double a = std::numbers::pi_v<long double> / 16.0L;
  auto odd_part = [](std::vector<long double> c) {
    for (std::size_t k = 0; k < c.size(); k += 2) c[k] = 0;
    return c;
  };
  auto even_part = [](std::vector<long double> c) {
    for (std::size_t k = 1; k < c.size(); k += 2) c[k] = 0;
    return c;
  };
  const auto ms = chebyshev_to_monomial(
      odd_part(chebyshev_fit([a](long double t) { return std::sin(a * t); }, 64, 7)));
  const auto mc = chebyshev_to_monomial(
      even_part(chebyshev_fit([a](long double t) { return std::cos(a * t); }, 64, 6)));

  // p(t) = sum m_k t^k with t = y / a, so the y-coefficient is m_k / a^k.
  auto scaled = [a](long double m, int k) { return static_cast<double>(m / std::pow(a, k)); };
  SinCos16Coeffs k;
  k.s1 = scaled(ms[1], 1);
  k.s3 = scaled(ms[3], 3);
  k.s5 = scaled(ms[5], 5);
  k.s7 = scaled(ms[7], 7);
  k.c0 = scaled(mc[0], 0);
  k.c2 = scaled(mc[2], 2);
  k.c4 = scaled(mc[4], 4);
  k.c6 = scaled(mc[6], 6);
  k.certified_error = sincos16_grid_error(k, kFitGridPoints);
  if (!(k.certified_error < kSinCosErrorTarget)) {
    throw FitError("fit_sincos_coeffs: end-to-end error " + std::to_string(k.certified_error) +
                   " exceeds 1e-10");
  }
  return k;
}

std::string emit_coeffs_source(const SinCos16Coeffs& sc, const HApprox& h) {
  std::string s;
  char buf[96];
  auto put = [&](double x, bool last) {
    std::snprintf(buf, sizeof buf, "    %a,  // %.17g\n", x, x);
    std::string line(buf);
    if (last) line.erase(line.find(','), 1);
    s += line;
  };
  auto put_scalar = [&](const char* name, double x) {
    std::snprintf(buf, sizeof buf, "constexpr double %s = %a;  // %.17g\n", name, x, x);
    s += buf;
  };

  s += "// Generated by `vgauss fit-coeffs --emit-source`; regenerate rather than edit.\n";
  s += "constexpr double kEmbeddedSin[4] = {\n";
  put(sc.s1, false);
  put(sc.s3, false);
  put(sc.s5, false);
  put(sc.s7, true);
  s += "};\nconstexpr double kEmbeddedCos[4] = {\n";
  put(sc.c0, false);
  put(sc.c2, false);
  put(sc.c4, false);
  put(sc.c6, true);
  s += "};\n";
  put_scalar("kEmbeddedSinCosError", sc.certified_error);
  put_scalar("kEmbeddedRho", h.rho);
  std::snprintf(buf, sizeof buf, "constexpr double kEmbeddedH[%zu] = {\n", h.coeffs.size());
  s += buf;
  for (std::size_t i = 0; i < h.coeffs.size(); ++i) put(h.coeffs[i], i + 1 == h.coeffs.size());
  s += "};\n";
  put_scalar("kEmbeddedHError", h.certified_error);
  return s;
}

}  // namespace vgauss
