#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "raca/errors.hpp"
#include "raca/quadrature.hpp"

namespace raca {

struct EvaluationResult {
  double value = 0.0;
  double abs_error_bound = 0.0;
};

namespace detail {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kEps = std::numeric_limits<double>::epsilon();

// Angle folded into [0, pi/2] together with the sign picked up on the way.
struct FoldedAngle {
  double angle;
  double sign;
};

// Lobachevsky's function is odd and pi-periodic; fold into [0, pi/2].
inline FoldedAngle fold_angle(double theta) {
  double sign = 1.0;
  if (theta < 0.0) {
    theta = -theta;
    sign = -1.0;
  }
  double r = std::fmod(theta, kPi);
  if (r > 0.5 * kPi) {
    r = kPi - r;
    sign = -sign;
  }
  return {r, sign};
}

inline void require_finite(double theta) {
  if (!std::isfinite(theta))
    throw DomainError("lobachevsky: argument must be finite");
}

// zeta(s) for even s >= 4 by direct summation plus an Euler-Maclaurin tail.
inline double zeta_even(int s) {
  constexpr int n_max = 100;
  const double n = n_max;
  double tail = std::pow(n, 1 - s) / (s - 1) - 0.5 * std::pow(n, -s) +
                s * std::pow(n, -s - 1) / 12.0 -
                s * (s + 1.0) * (s + 2.0) * std::pow(n, -s - 3) / 720.0;
  double sum = tail;
  for (int k = n_max; k >= 1; --k) sum += std::pow(static_cast<double>(k), -s);
  return sum;
}

inline constexpr int kClausenTerms = 64;

// c_k = zeta(2k) / (k (2k+1) (2 pi)^{2k}), the Bernoulli-number coefficients of
//   Cl2(x) = x - x log x + sum_k c_k x^{2k+1}.
inline const std::array<double, kClausenTerms + 1>& clausen_coefficients() {
  static const auto table = [] {
    std::array<double, kClausenTerms + 1> c{};
    const double two_pi_sq = 4.0 * kPi * kPi;
    double scale = 1.0;
    for (int k = 1; k <= kClausenTerms; ++k) {
      scale *= two_pi_sq;
      const double zeta = (k == 1) ? kPi * kPi / 6.0 : zeta_even(2 * k);
      c[k] = zeta / (k * (2.0 * k + 1.0) * scale);
    }
    return c;
  }();
  return table;
}

// Clausen's Cl2 on [0, pi] by its power series. The tail after term K is
// bounded by the geometric majorant zeta(2K+2) x r^{K+1} / ((K+1)(2K+3)(1-r))
// with r = (x / 2pi)^2 <= 1/4, and zeta(2K+2) <= zeta(4) < 1.0824.
inline EvaluationResult clausen2_series(double x) {
  if (x == 0.0) return {0.0, 0.0};
  const auto& c = clausen_coefficients();
  const double r = (x / (2.0 * kPi)) * (x / (2.0 * kPi));
  const double x_sq = x * x;
  double power = x;
  double sum = 0.0;
  double tail = 0.0;
  int k = 1;
  for (; k <= kClausenTerms; ++k) {
    power *= x_sq;
    sum += c[k] * power;
    const double next = k + 1.0;
    tail = 1.0824 * x * std::pow(r, next) / (next * (2.0 * next + 1.0) * (1.0 - r));
    if (tail < 1e-18) break;
  }
  const double leading = x - x * std::log(x);
  const double value = leading + sum;
  const double rounding = 16.0 * kEps * (std::abs(leading) + std::abs(sum) + x);
  return {value, tail + rounding};
}

}  // namespace detail

/// Lobachevsky's function Λ(θ) = -∫₀^θ log|2 sin t| dt.
///
/// Canonical route: the argument is folded into [0, π/2] and evaluated as
/// Λ(θ) = Cl2(2θ)/2, where the Clausen series Σ sin(nx)/n² is resummed into its
/// Bernoulli power series around zero. The returned bound covers truncation
/// and accumulated rounding; it does not include the representation error of θ
/// itself, which grows with |θ| during folding.
inline EvaluationResult lobachevsky(double theta) {
  detail::require_finite(theta);
  const auto folded = detail::fold_angle(theta);
  const auto cl = detail::clausen2_series(2.0 * folded.angle);
  const double fold_error = detail::kEps * std::abs(theta);
  return {folded.sign * 0.5 * cl.value, 0.5 * cl.abs_error_bound + fold_error};
}

/// Independent evaluation of Λ(θ) by adaptive quadrature.
///
/// After folding, -log(2 sin t) is split as -log(2t) - log(sin t / t); the first
/// part integrates in closed form and the second is smooth on [0, π/2].
inline EvaluationResult lobachevsky_quadrature(double theta) {
  detail::require_finite(theta);
  const auto folded = detail::fold_angle(theta);
  const double a = folded.angle;
  if (a == 0.0) return {0.0, 0.0};
  const auto log_sinc = [](double t) {
    if (t < 1e-4) {
      const double t2 = t * t;
      return -t2 / 6.0 - t2 * t2 / 180.0;
    }
    return std::log(std::sin(t) / t);
  };
  const auto smooth = integrate_adaptive(log_sinc, 0.0, a, 1e-15);
  const double singular = a - a * std::log(2.0 * a);
  const double value = singular - smooth.value;
  const double rounding = 16.0 * detail::kEps * (std::abs(singular) + std::abs(smooth.value));
  return {folded.sign * value,
          smooth.abs_error + rounding + detail::kEps * std::abs(theta)};
}

/// Partial sum Σ_{n<terms} (-1)^n/(2n+1)², bounded by the first omitted term.
inline EvaluationResult catalan_partial_sum(int terms) {
  if (terms < 1) throw DomainError("catalan_partial_sum: need at least one term");
  double sum = 0.0;
  for (int n = terms - 1; n >= 0; --n) {
    const double d = 2.0 * n + 1.0;
    sum += ((n % 2 == 0) ? 1.0 : -1.0) / (d * d);
  }
  const double next = 2.0 * terms + 1.0;
  return {sum, 1.0 / (next * next) + terms * detail::kEps};
}

/// Catalan's constant G = Σ (-1)^n/(2n+1)².
///
/// Uses the Cohen-Rodriguez Villegas-Zagier acceleration. The terms
/// 1/(2n+1)² = ∫₀¹ x^{2n} (-log x) dx are moments of a positive measure of
/// total mass 1, so the truncation error is at most 2/(3+√8)^N.
inline EvaluationResult catalan_constant() {
  constexpr int n = 26;
  double d = std::pow(3.0 + std::sqrt(8.0), n);
  const double truncation = 2.0 / d;
  d = 0.5 * (d + 1.0 / d);
  double b = -1.0;
  double c = -d;
  double s = 0.0;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    const double a = 1.0 / ((2.0 * k + 1.0) * (2.0 * k + 1.0));
    s += c * a;
    b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1.0));
  }
  return {s / d, truncation + 64.0 * detail::kEps};
}

/// Volume of the regular ideal octahedron, 8Λ(π/4).
inline EvaluationResult v_oct() {
  const auto l = lobachevsky(detail::kPi / 4.0);
  return {8.0 * l.value, 8.0 * l.abs_error_bound};
}

/// Volume of the regular ideal tetrahedron, 3Λ(π/3).
inline EvaluationResult v_tet() {
  const auto l = lobachevsky(detail::kPi / 3.0);
  return {3.0 * l.value, 3.0 * l.abs_error_bound};
}

}  // namespace raca
