#ifndef VGAUSS_FASTFUNCS_HPP
#define VGAUSS_FASTFUNCS_HPP

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace vgauss {

/// Thrown when a fitted approximation fails its accuracy certification.
class FitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * Odd degree-7 sine and even degree-6 cosine polynomials on |y| <= pi/16.
 * sincos16_batch() evaluates them at y = (2 pi v - pi) / 16 and doubles the
 * angle four times.
 */
struct SinCos16Coeffs {
  double s1 = 0, s3 = 0, s5 = 0, s7 = 0;
  double c0 = 0, c2 = 0, c4 = 0, c6 = 0;
  /// Max end-to-end error of sincos16_batch() measured at fit time.
  double certified_error = 0;
};

/**
 * Polynomial h(v) ~ g(u(v)) on [-1,1], where g(u) = sqrt(-ln(1-u)/u) and
 * u(v) inverts the bilinear map taking [0, tau] onto [-1, 1]. The map places
 * the singularities of h at v = +-(rho+1).
 */
struct HApprox {
  std::vector<double> coeffs;  // h0..h_degree, ascending powers of v
  double rho = 1.0;
  double tau = 8.0 / 9.0;
  double certified_error = 0;

  [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
};

inline constexpr double kHErrorTarget = 2e-11;
inline constexpr double kSinCosErrorTarget = 1e-10;

/// tau = 1 - (rho/(rho+2))^2, the upper end of the polynomial range.
[[nodiscard]] double tau_for_rho(double rho) noexcept;

/// v = (rho+1)((rho+2)u - 2) / (2(rho+1) - (rho+2)u); maps [0, tau] onto [-1, 1].
[[nodiscard]] double mobius_map(double u, double rho) noexcept;

/// Inverse of mobius_map: u = 2(rho+1)(1+v) / ((rho+2)(rho+1+v)).
[[nodiscard]] double mobius_inverse(double v, double rho) noexcept;

/// sqrt(-ln(1-u)/u) with the u=0 limit 1, using the platform log1p.
[[nodiscard]] double g_reference(double u) noexcept;

/// Coefficients shipped with the library, produced by fit_sincos_coeffs().
[[nodiscard]] const SinCos16Coeffs& default_sincos_coeffs() noexcept;
/// Coefficients shipped with the library, produced by fit_h_coeffs(1, 15).
[[nodiscard]] const HApprox& default_h_approx() noexcept;

/// sin(2 pi v - pi) and cos(2 pi v - pi) for v in [0,1).
void sincos16_batch(const SinCos16Coeffs& k, std::span<const double> v, std::span<double> sin_out,
                    std::span<double> cos_out);
void sincos16_batch(std::span<const double> v, std::span<double> sin_out, std::span<double> cos_out);

/// Horner evaluation on the even/odd split: h(v) = E(v^2) + v O(v^2).
void eval_h(const HApprox& h, std::span<const double> v, std::span<double> out);
[[nodiscard]] double eval_h(const HApprox& h, double v) noexcept;

/**
 * g(u) for u in [0,1). Entries with u <= tau use h(mobius(u)); the rest are
 * gathered into a contiguous scratch array, evaluated with log1p/sqrt, and
 * scattered back.
 */
void g_fast(const HApprox& h, std::span<const double> u, std::span<double> out);
void g_fast(std::span<const double> u, std::span<double> out);

/**
 * Chebyshev interpolation of h at 4*(degree+1) nodes (at least 64), truncated
 * to `degree` and converted to monomial form. certified_error is the max
 * deviation from g(u(v)) over 200001 equispaced points of [-1,1].
 *
 * Throws std::invalid_argument on rho <= 0 or degree < 1, and FitError when the
 * (rho=1, degree=15) configuration misses kHErrorTarget.
 */
[[nodiscard]] HApprox fit_h_coeffs(double rho = 1.0, int degree = 15);

/// Chebyshev truncation of sin (odd, 4 terms) and cos (even, 4 terms) on
/// |y| <= pi/16; throws FitError if the end-to-end error reaches kSinCosErrorTarget.
[[nodiscard]] SinCos16Coeffs fit_sincos_coeffs();

/// End-to-end max error of sincos16_batch against std::sin/std::cos on an
/// n-point grid v = i/n.
[[nodiscard]] double sincos16_grid_error(const SinCos16Coeffs& k, std::size_t n_points);

/// Max |eval_h(v) - g(mobius_inverse(v))| over n equispaced points of [-1,1].
[[nodiscard]] double h_grid_error(const HApprox& h, std::size_t n_points);

/// C++ source text declaring the given coefficients, as stored in embedded_coeffs.inc.
[[nodiscard]] std::string emit_coeffs_source(const SinCos16Coeffs& sc, const HApprox& h);

}  // namespace vgauss

#endif  // VGAUSS_FASTFUNCS_HPP
