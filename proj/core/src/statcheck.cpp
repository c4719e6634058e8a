#include "vgauss/statcheck.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "vgauss/fastfuncs.hpp"
#include "vgauss/polar.hpp"
#include "vgauss/ratio.hpp"

namespace vgauss {

SampleStats moments(std::span<const double> samples) {
  if (samples.size() < 2) throw std::invalid_argument("moments: need at least 2 samples");
  // Terriberry's single-pass update of the central sums M2..M4.
  double mean = 0, m2 = 0, m3 = 0, m4 = 0;
  double lo = samples[0], hi = samples[0];
  double n = 0;
  for (double x : samples) {
    const double n1 = n;
    n += 1;
    const double delta = x - mean;
    const double dn = delta / n;
    const double dn2 = dn * dn;
    const double term1 = delta * dn * n1;
    mean += dn;
    m4 += term1 * dn2 * (n * n - 3 * n + 3) + 6 * dn2 * m2 - 4 * dn * m3;
    m3 += term1 * dn * (n - 2) - 3 * dn * m2;
    m2 += term1;
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  SampleStats st;
  st.n = samples.size();
  st.mean = mean;
  st.variance = m2 / (n - 1);
  if (m2 > 0) {
    st.skewness = std::sqrt(n) * m3 / std::pow(m2, 1.5);
    st.excess_kurtosis = n * m4 / (m2 * m2) - 3.0;
  }
  st.min = lo;
  st.max = hi;
  return st;
}

GofResult ks_uniform(std::span<const double> samples, double alpha) {
  if (samples.size() < 100) throw std::invalid_argument("ks_uniform: need at least 100 samples");
  if (!(alpha > 0 && alpha < 1)) throw std::invalid_argument("ks_uniform: alpha must be in (0,1)");
  std::vector<double> x(samples.begin(), samples.end());
  for (double v : x) {
    if (!(v >= 0.0 && v < 1.0)) throw std::domain_error("ks_uniform: sample outside [0,1)");
  }
  std::sort(x.begin(), x.end());
  const double n = static_cast<double>(x.size());
  double d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double fi = static_cast<double>(i);
    d = std::max({d, (fi + 1) / n - x[i], x[i] - fi / n});
  }
  GofResult r;
  r.statistic = d;
  r.alpha = alpha;
  r.critical_value = std::sqrt(-std::log(alpha / 2) / 2) / std::sqrt(n);
  r.pass = r.statistic < r.critical_value;
  return r;
}

GofResult ad_normal(std::span<const double> samples, NormalParams params, double alpha) {
  if (samples.size() < 100) throw std::invalid_argument("ad_normal: need at least 100 samples");
  if (!(params.sigma > 0)) throw std::invalid_argument("ad_normal: sigma must be positive");
  struct Crit {
    double alpha, value;
  };
  static constexpr Crit kTable[] = {{0.10, 1.933}, {0.05, 2.492}, {0.025, 3.070}, {0.01, 3.857}};
  const auto it = std::find_if(std::begin(kTable), std::end(kTable),
                               [alpha](const Crit& c) { return std::abs(c.alpha - alpha) < 1e-12; });
  if (it == std::end(kTable)) throw std::invalid_argument("ad_normal: unsupported alpha");

  std::vector<double> z(samples.begin(), samples.end());
  for (double& v : z) v = (v - params.mu) / params.sigma;
  std::sort(z.begin(), z.end());

  // ln F(z) and ln(1 - F(z)) via erfc to keep tail precision.
  static constexpr double kFloor = -745.0;
  auto log_cdf = [](double t) { return std::max(kFloor, std::log(0.5 * std::erfc(-t / std::numbers::sqrt2))); };
  auto log_sf = [](double t) { return std::max(kFloor, std::log(0.5 * std::erfc(t / std::numbers::sqrt2))); };

  const std::size_t n = z.size();
  double sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sum += static_cast<double>(2 * i + 1) * (log_cdf(z[i]) + log_sf(z[n - 1 - i]));
  }
  GofResult r;
  r.statistic = -static_cast<double>(n) - sum / static_cast<double>(n);
  r.alpha = alpha;
  r.critical_value = it->value;
  r.pass = r.statistic < r.critical_value;
  return r;
}

double approx_error_grid(FastFunction f, std::size_t n_points) {
  if (n_points < 100000) throw std::invalid_argument("approx_error_grid: need at least 1e5 points");
  switch (f) {
    case FastFunction::sincos16: return sincos16_grid_error(default_sincos_coeffs(), n_points);
    case FastFunction::eval_h: return h_grid_error(default_h_approx(), n_points);
    case FastFunction::g_fast: {
      const double hi = 1.0 - 1e-6;
      std::vector<double> u(n_points), g(n_points);
      for (std::size_t i = 0; i < n_points; ++i) {
        u[i] = hi * static_cast<double>(i) / static_cast<double>(n_points - 1);
      }
      g_fast(u, g);
      double worst = 0;
      for (std::size_t i = 0; i < n_points; ++i) worst = std::max(worst, std::abs(g[i] - g_reference(u[i])));
      return worst;
    }
  }
  return INFINITY;
}

double composite_b3_error(std::size_t n_points) {
  const HApprox& h = default_h_approx();
  std::vector<double> u(n_points), v(n_points), hv(n_points);
  for (std::size_t i = 0; i < n_points; ++i) {
    u[i] = h.tau * static_cast<double>(i) / static_cast<double>(n_points - 1);
    v[i] = mobius_map(u[i], h.rho);
  }
  eval_h(h, v, hv);
  double worst = 0;
  for (std::size_t i = 0; i < n_points; ++i) {
    const double f = std::sqrt(-std::log1p(-u[i]));
    worst = std::max(worst, std::abs(std::sqrt(u[i]) * hv[i] - f));
  }
  return worst;
}

GofResult max_square_ks(std::uint64_t seed, std::size_t n, double alpha) {
  UniformStream s(seed);
  std::vector<double> d(2 * n), u(n);
  s.fill(d);
  for (std::size_t i = 0; i < n; ++i) {
    const double m = std::max(d[2 * i], d[2 * i + 1]);
    u[i] = m * m;
  }
  return ks_uniform(u, alpha);
}

double polar_acceptance_fraction(std::uint64_t seed, std::size_t m) {
  UniformStream s(seed);
  PolarCandidates c;
  polar_candidates(s, m, c);
  return static_cast<double>(c.accepted) / static_cast<double>(m);
}

double ratio_uniforms_per_deviate(std::uint64_t seed, std::size_t n) {
  RatioGen g(seed);
  std::vector<double> out(n);
  g.fill(out);
  return static_cast<double>(g.uniforms_consumed()) / static_cast<double>(n);
}

PretestAudit audit_ratio_pretest(std::uint64_t seed, std::size_t m) {
  UniformStream s(seed);
  std::vector<double> raw(2 * m), u(m), v(m);
  s.fill(raw);
  for (std::size_t i = 0; i < m; ++i) {
    u[i] = raw[2 * i];
    v[i] = raw[2 * i + 1];
  }
  std::vector<PretestClass> cls(m);
  ratio_pretest(u, v, cls);
  PretestAudit a;
  a.candidates = m;
  for (std::size_t i = 0; i < m; ++i) {
    if (cls[i] == PretestClass::borderline) {
      ++a.borderline;
      continue;
    }
    const bool exact = ratio_exact_accept(u[i], v[i]);
    if ((cls[i] == PretestClass::accept) != exact) ++a.violations;
  }
  return a;
}

double max_serial_correlation(std::span<const double> samples, std::size_t max_lag) {
  const std::size_t n = samples.size();
  if (n <= max_lag + 1) throw std::invalid_argument("max_serial_correlation: too few samples");
  double mean = 0;
  for (double x : samples) mean += x;
  mean /= static_cast<double>(n);
  std::vector<double> c(n);
  double var = 0;
  for (std::size_t i = 0; i < n; ++i) {
    c[i] = samples[i] - mean;
    var += c[i] * c[i];
  }
  double worst = 0;
  for (std::size_t lag = 1; lag <= max_lag; ++lag) {
    double acc = 0;
    for (std::size_t i = 0; i + lag < n; ++i) acc += c[i] * c[i + lag];
    worst = std::max(worst, std::abs(acc / var));
  }
  return worst;
}

MomentGate moment_gate(const SampleStats& st, NormalParams p) {
  const double n = static_cast<double>(st.n);
  MomentGate g;
  g.mean_ok = std::abs(st.mean - p.mu) < 4.0 * p.sigma / std::sqrt(n);
  g.variance_ok = std::abs(st.variance - p.sigma * p.sigma) < 4.0 * p.sigma * p.sigma * std::sqrt(2.0 / n);
  return g;
}

bool SelftestReport::all_pass() const noexcept {
  return std::all_of(gates.begin(), gates.end(), [](const GateOutcome& g) { return g.pass; });
}

namespace {

std::string fmt(const char* f, double a, double b = 0) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

}  // namespace

SelftestReport run_selftest(std::size_t n, std::span<const std::uint64_t> seeds) {
  if (n < 1000) throw std::invalid_argument("run_selftest: n must be at least 1000");
  if (seeds.empty()) throw std::invalid_argument("run_selftest: need at least one seed");
  SelftestReport rep;
  auto add = [&](std::string name, std::string detail, bool pass) {
    rep.gates.push_back({std::move(name), std::move(detail), pass});
  };
  const std::size_t grid = std::max<std::size_t>(n, 100000);

  {
    const double e = approx_error_grid(FastFunction::sincos16, grid);
    add("sincos16 grid error", fmt("%.3e < 1e-10", e), e < 1e-10);
  }
  {
    const double e = approx_error_grid(FastFunction::eval_h, grid);
    add("h(v) grid error", fmt("%.3e < 2e-11", e), e < 2e-11);
  }
  {
    const double e = approx_error_grid(FastFunction::g_fast, grid);
    add("g_fast grid error", fmt("%.3e < 1e-10", e), e < 1e-10);
  }
  {
    const double e = composite_b3_error(grid);
    add("sqrt(u) h(v(u)) identity", fmt("%.3e < 1e-10", e), e < 1e-10);
  }
  {
    UniformStream s(seeds[0]);
    std::vector<double> u(n);
    s.fill(u);
    const auto ks = ks_uniform(u);
    add("uniform stream KS", fmt("D=%.5f < %.5f", ks.statistic, ks.critical_value), ks.pass);
    const double bound = 4.0 / std::sqrt(static_cast<double>(n));
    const double rho = max_serial_correlation(u, 100);
    add("uniform serial correlation lag 1..100", fmt("%.5f < %.5f", rho, bound), rho < bound);
  }
  {
    const auto ks = max_square_ks(seeds[0], n);
    add("max(u1,u2)^2 uniformity KS", fmt("D=%.5f < %.5f", ks.statistic, ks.critical_value), ks.pass);
  }
  {
    const double p = std::numbers::pi / 4.0;
    const double f = polar_acceptance_fraction(seeds[0], n);
    const double tol = 4.0 * std::sqrt(p * (1 - p) / static_cast<double>(n));
    add("polar acceptance pi/4", fmt("%.5f within %.5f", f, tol), std::abs(f - p) < tol);
  }
  {
    const double target = 8.0 / std::sqrt(std::numbers::pi * std::numbers::e);
    const double c = ratio_uniforms_per_deviate(seeds[0], n);
    add("ratio uniforms per deviate 8/sqrt(pi e)", fmt("%.4f vs %.4f (2%%)", c, target),
        std::abs(c / target - 1.0) < 0.02);
  }
  {
    const auto a = audit_ratio_pretest(seeds[0], n);
    const double frac = static_cast<double>(a.borderline) / static_cast<double>(a.candidates);
    add("ratio pretest soundness", fmt("%.0f violations, borderline %.4f", static_cast<double>(a.violations), frac),
        a.violations == 0 && frac < 0.05);
  }

  const NormalParams kParams[] = {{0.0, 1.0}, {3.0, 2.0}};
  const std::size_t need = seeds.size() == 1 ? 1 : seeds.size() - 1;  // 2-of-3
  std::vector<double> out(n);
  for (Method m : kAllMethods) {
    for (const auto& p : kParams) {
      std::size_t mean_ok = 0, var_ok = 0, ad_ok = 0;
      double worst_ad = 0;
      for (std::uint64_t seed : seeds) {
        auto gen = make_generator(m, seed, p);
        gen->fill(out);
        const auto g = moment_gate(moments(out), p);
        const auto ad = ad_normal(out, p);
        mean_ok += g.mean_ok;
        var_ok += g.variance_ok;
        ad_ok += ad.pass;
        worst_ad = std::max(worst_ad, ad.statistic);
      }
      const std::string tag =
          std::string(method_name(m)) + fmt(" mu=%g sigma=%g", p.mu, p.sigma);
      const std::string counts = " (" + std::to_string(mean_ok) + "/" + std::to_string(var_ok) + "/" +
                                 std::to_string(ad_ok) + " of " + std::to_string(seeds.size()) + ")";
      add(tag + " mean/var/AD", fmt("max A2=%.3f", worst_ad) + counts,
          mean_ok >= need && var_ok >= need && ad_ok >= need);
    }
  }
  return rep;
}

void print_selftest(std::ostream& os, const SelftestReport& r) {
  std::size_t width = 4;
  for (const auto& g : r.gates) width = std::max(width, g.name.size());
  for (const auto& g : r.gates) {
    os << (g.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width)) << g.name << "  "
       << g.detail << '\n';
  }
  os << (r.all_pass() ? "all gates passed" : "GATE FAILURE") << '\n';
}

}  // namespace vgauss
