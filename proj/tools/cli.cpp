#include "cli.hpp"

#include <bit>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "vgauss/fastfuncs.hpp"
#include "vgauss/statcheck.hpp"

namespace vgauss::cli {

namespace {

constexpr std::size_t kChunk = 1 << 16;

void write_text(std::ostream& os, std::span<const double> xs) {
  char buf[40];
  for (double x : xs) {
    const int len = std::snprintf(buf, sizeof buf, "%.17g\n", x);
    os.write(buf, len);
  }
}

void write_raw64(std::ostream& os, std::span<const double> xs) {
  char buf[8];
  for (double x : xs) {
    auto bits = std::bit_cast<std::uint64_t>(x);
    for (int i = 0; i < 8; ++i) buf[i] = static_cast<char>((bits >> (8 * i)) & 0xFF);
    os.write(buf, 8);
  }
}

std::map<std::string, Method> method_map() {
  std::map<std::string, Method> m;
  for (Method x : kAllMethods) m.emplace(std::string(method_name(x)), x);
  return m;
}

}  // namespace

int run_generate(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* os = &out;
  if (!cfg.output.empty() && cfg.output != "-") {
    file.open(cfg.output, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "generate: cannot open output '" << cfg.output << "'\n";
      return kExitIo;
    }
    os = &file;
  }

  auto gen = make_generator(cfg.method, cfg.seed, {cfg.mu, cfg.sigma});
  std::vector<double> buf(std::min(cfg.n, kChunk));
  for (std::size_t done = 0; done < cfg.n;) {
    const std::size_t len = std::min(kChunk, cfg.n - done);
    auto chunk = std::span(buf).first(len);
    gen->fill(chunk);
    if (cfg.format == OutputFormat::text) {
      write_text(*os, chunk);
    } else {
      write_raw64(*os, chunk);
    }
    done += len;
  }
  os->flush();
  if (!*os) {
    err << "generate: write failed\n";
    return kExitIo;
  }
  return kExitOk;
}

int run_selftest(const CliConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
  const auto rep = vgauss::run_selftest(cfg.n);
  print_selftest(out, rep);
  return rep.all_pass() ? kExitOk : kExitGate;
}

int run_bench(const CliConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
  std::vector<BenchReport> reports;
  if (cfg.bench_method) {
    reports.push_back(bench_method(*cfg.bench_method, cfg.n, cfg.repeats, cfg.seed));
  } else {
    reports = bench_all(cfg.n, cfg.repeats, cfg.seed);
  }
  print_bench(out, reports, cfg.bench_format);
  return kExitOk;
}

int run_fitcoeffs(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  HApprox h;
  SinCos16Coeffs sc;
  try {
    h = fit_h_coeffs(cfg.rho, cfg.degree);
    sc = fit_sincos_coeffs();
  } catch (const FitError& e) {
    err << "fit-coeffs: " << e.what() << '\n';
    return kExitGate;
  }

  char buf[96];
  std::snprintf(buf, sizeof buf, "h rho %.17g degree %d tau %.17g\n", h.rho, h.degree(), h.tau);
  out << buf;
  for (std::size_t i = 0; i < h.coeffs.size(); ++i) {
    std::snprintf(buf, sizeof buf, "h%zu %.17g\n", i, h.coeffs[i]);
    out << buf;
  }
  std::snprintf(buf, sizeof buf, "h certified_error %.6e bound %.1e %s\n", h.certified_error, kHErrorTarget,
                h.certified_error < kHErrorTarget ? "ok" : "exceeds");
  out << buf;

  out << "sincos16 degree 7\n";
  const std::pair<const char*, double> terms[] = {{"s1", sc.s1}, {"s3", sc.s3}, {"s5", sc.s5}, {"s7", sc.s7},
                                                  {"c0", sc.c0}, {"c2", sc.c2}, {"c4", sc.c4}, {"c6", sc.c6}};
  for (const auto& [name, v] : terms) {
    std::snprintf(buf, sizeof buf, "%s %.17g\n", name, v);
    out << buf;
  }
  std::snprintf(buf, sizeof buf, "sincos16 certified_error %.6e bound %.1e ok\n", sc.certified_error,
                kSinCosErrorTarget);
  out << buf;

  if (!cfg.emit_source.empty()) {
    std::ofstream f(cfg.emit_source, std::ios::trunc);
    if (!f) {
      err << "fit-coeffs: cannot open '" << cfg.emit_source << "'\n";
      return kExitIo;
    }
    f << emit_coeffs_source(sc, h);
    if (!f.flush()) return kExitIo;
  }
  return kExitOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  if (const char* env = std::getenv(kSeedEnv); env != nullptr && *env != '\0') {
    const char* end = env + std::strlen(env);
    const auto [p, ec] = std::from_chars(env, end, cfg.seed);
    if (ec != std::errc{} || p != end) {
      err << kSeedEnv << " is not an unsigned 64-bit integer\n";
      return kExitUsage;
    }
  }

  CLI::App app{"Batch normal random number generators (Box-Muller, Polar, Ratio)", "vgauss"};
  app.require_subcommand(1);
  const auto methods = method_map();

  auto* gen = app.add_subcommand("generate", "Write n normal deviates");
  gen->add_option("--method", cfg.method, "b1|b2|b3|p1|p2|r1")->transform(CLI::CheckedTransformer(methods));
  gen->add_option("--n", cfg.n, "Number of deviates")->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--mu", cfg.mu, "Mean");
  gen->add_option("--sigma", cfg.sigma, "Standard deviation (>= 0)")->check(CLI::NonNegativeNumber);
  gen->add_option("--seed", cfg.seed, "64-bit seed (default " + std::to_string(kDefaultSeed) + ")");
  gen->add_option("--format", cfg.format, "text|raw64")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, OutputFormat>{{"text", OutputFormat::text}, {"raw64", OutputFormat::raw64}}));
  gen->add_option("--output,-o", cfg.output, "Output file (default standard output)");

  auto* self = app.add_subcommand("selftest", "Run all statistical and accuracy gates");
  cfg.n = 1000000;
  self->add_option("--n", cfg.n, "Sample size per gate")->check(CLI::Range(std::size_t{1000}, std::size_t{1} << 32));

  auto* bench = app.add_subcommand("bench", "Time the generators and print the component breakdown");
  std::string bench_method_name = "all";
  std::map<std::string, std::string> bench_names{{"all", "all"}};
  for (const auto& [k, v] : methods) bench_names.emplace(k, k);
  bench->add_option("--method", bench_method_name, "b1|b2|b3|p1|p2|r1|all")
      ->transform(CLI::CheckedTransformer(bench_names));
  bench->add_option("--n", cfg.n, "Deviates per timed run (>= 1e6)")
      ->check(CLI::Range(std::size_t{1000000}, std::size_t{1} << 32));
  bench->add_option("--repeats", cfg.repeats, "Timed repeats (>= 3)")->check(CLI::Range(3, 1000));
  bench->add_option("--seed", cfg.seed, "64-bit seed");
  bench->add_option("--format", cfg.bench_format, "table|csv")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, BenchFormat>{{"table", BenchFormat::table}, {"csv", BenchFormat::csv}}));

  auto* fit = app.add_subcommand("fit-coeffs", "Fit and certify the polynomial coefficients");
  fit->add_option("--rho", cfg.rho, "Map parameter (> 0)")->check(CLI::PositiveNumber);
  fit->add_option("--degree", cfg.degree, "Degree of h(v)")->check(CLI::Range(1, 60));
  fit->add_option("--emit-source", cfg.emit_source, "Also write the embedded-coefficient source file");

  std::vector<const char*> argv{"vgauss"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (gen->parsed()) {
      cfg.subcommand = "generate";
      return run_generate(cfg, out, err);
    }
    if (self->parsed()) {
      cfg.subcommand = "selftest";
      return run_selftest(cfg, out, err);
    }
    if (bench->parsed()) {
      cfg.subcommand = "bench";
      if (bench_method_name != "all") cfg.bench_method = parse_method(bench_method_name);
      return run_bench(cfg, out, err);
    }
    cfg.subcommand = "fit-coeffs";
    return run_fitcoeffs(cfg, out, err);
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace vgauss::cli
