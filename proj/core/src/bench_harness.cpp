#include "vgauss/bench_harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

namespace vgauss {

namespace {

constexpr std::array<Component, 3> kComponents{Component::ln, Component::sqrt, Component::sincos};

// Median ns per deviate over `repeats` fills, after one warm-up fill.
double time_fill(Method m, std::size_t n, std::size_t repeats, std::uint64_t seed, const MathKernels& k,
                 std::vector<double>& buf) {
  auto gen = make_generator(m, seed);
  gen->set_kernels(k);
  gen->fill(buf);
  std::vector<double> ns;
  ns.reserve(repeats);
  for (std::size_t r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    gen->fill(buf);
    const auto t1 = std::chrono::steady_clock::now();
    ns.push_back(std::chrono::duration<double, std::nano>(t1 - t0).count() / static_cast<double>(n));
  }
  std::nth_element(ns.begin(), ns.begin() + static_cast<std::ptrdiff_t>(ns.size() / 2), ns.end());
  return ns[ns.size() / 2];
}

}  // namespace

double BenchReport::breakdown_sum() const noexcept {
  double s = 0;
  for (double x : breakdown) s += x;
  return s;
}

bool uses_component(Method m, Component c) noexcept {
  switch (c) {
    case Component::ln: return true;
    case Component::sqrt: return m != Method::R1;
    case Component::sincos: return m == Method::B1 || m == Method::B2 || m == Method::B3;
  }
  return false;
}

BenchReport bench_method(Method m, std::size_t n, std::size_t repeats, std::uint64_t seed) {
  if (n < 1000000) throw std::invalid_argument("bench_method: n must be at least 1e6");
  if (repeats < 3) throw std::invalid_argument("bench_method: repeats must be at least 3");

  std::vector<double> buf(n);
  BenchReport rep;
  rep.method = m;
  rep.n_samples = n;
  {
    auto gen = make_generator(m, seed);
    gen->fill(buf);
    rep.uniforms_per_deviate = static_cast<double>(gen->uniforms_consumed()) / static_cast<double>(n);
  }

  const MathKernels& base = standard_kernels();
  rep.ns_per_deviate = time_fill(m, n, repeats, seed, base, buf);
  double attributed = 0;
  for (std::size_t i = 0; i < kComponents.size(); ++i) {
    if (!uses_component(m, kComponents[i])) continue;
    const MathKernels sub = substitute(base, kComponents[i]);
    const double t = time_fill(m, n, repeats, seed, sub, buf);
    rep.breakdown[i] = std::max(0.0, rep.ns_per_deviate - t);
    attributed += rep.breakdown[i];
  }
  rep.breakdown[3] = std::max(0.0, rep.ns_per_deviate - attributed);
  return rep;
}

std::vector<BenchReport> bench_all(std::size_t n, std::size_t repeats, std::uint64_t seed) {
  std::vector<BenchReport> out;
  for (Method m : kAllMethods) out.push_back(bench_method(m, n, repeats, seed));
  return out;
}

std::array<double, 5> historical_vp2200_cycles(Method m) noexcept {
  switch (m) {
    case Method::B1: return {13.1, 8.8, 13.8, 5.9, 41.6};
    case Method::B2: return {13.1, 8.8, 6.6, 5.6, 34.1};
    case Method::B3: return {7.1, 1.0, 6.6, 11.6, 26.3};
    case Method::P1: return {13.1, 8.8, 0.0, 11.9, 33.8};
    case Method::P2: return {7.1, 1.0, 0.0, 13.8, 21.9};
    case Method::R1: return {0.3, 0.0, 0.0, 35.1, 35.4};
  }
  return {};
}

void print_bench(std::ostream& os, std::span<const BenchReport> reports, BenchFormat fmt) {
  char buf[64];
  if (fmt == BenchFormat::csv) {
    os << "method,ln_ns,sqrt_ns,sincos_ns,other_ns,total_ns,uniforms_per_deviate,n\n";
    for (const auto& r : reports) {
      os << method_name(r.method);
      for (double x : r.breakdown) {
        std::snprintf(buf, sizeof buf, ",%.4f", x);
        os << buf;
      }
      std::snprintf(buf, sizeof buf, ",%.4f,%.6f,%zu\n", r.ns_per_deviate, r.uniforms_per_deviate, r.n_samples);
      os << buf;
    }
    return;
  }

  auto header = [&](const char* title) {
    std::snprintf(buf, sizeof buf, "%-14s", title);
    os << buf;
    for (const auto& r : reports) {
      std::snprintf(buf, sizeof buf, "%10s", std::string(method_name(r.method)).c_str());
      os << buf;
    }
    os << '\n';
  };
  auto row = [&](std::string_view label, auto&& value, const char* f) {
    std::snprintf(buf, sizeof buf, "%-14s", std::string(label).c_str());
    os << buf;
    for (const auto& r : reports) {
      std::snprintf(buf, sizeof buf, f, value(r));
      os << buf;
    }
    os << '\n';
  };

  os << "Nanoseconds per normal deviate on this host\n";
  header("component");
  for (std::size_t i = 0; i < kComponentLabels.size(); ++i) {
    row(kComponentLabels[i], [i](const BenchReport& r) { return r.breakdown[i]; }, "%10.2f");
  }
  row("total", [](const BenchReport& r) { return r.ns_per_deviate; }, "%10.2f");
  row("uniforms/dev", [](const BenchReport& r) { return r.uniforms_per_deviate; }, "%10.4f");

  os << "\nHistorical reference: VP2200/10 cycles per deviate (3.2 ns cycle), not measured here\n";
  header("component");
  static constexpr std::array<std::string_view, 5> kRows{"ln", "sqrt", "sin/cos", "other", "total"};
  for (std::size_t i = 0; i < kRows.size(); ++i) {
    row(kRows[i], [i](const BenchReport& r) { return historical_vp2200_cycles(r.method)[i]; }, "%10.1f");
  }

  const auto find = [&](Method m) -> const BenchReport* {
    for (const auto& r : reports) {
      if (r.method == m) return &r;
    }
    return nullptr;
  };
  const BenchReport* r1 = find(Method::R1);
  const BenchReport* p2 = find(Method::P2);
  if (r1 != nullptr && p2 != nullptr && p2->ns_per_deviate > 0) {
    std::snprintf(buf, sizeof buf, "%.2f", r1->ns_per_deviate / p2->ns_per_deviate);
    os << "\nR1/P2 time ratio: " << buf << " on this host (historical VP2200/10: 35.4/21.9 = 1.62)\n";
  }
}

}  // namespace vgauss
