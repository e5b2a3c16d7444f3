#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>
#include <string_view>
#include <utility>

#include "raca/errors.hpp"
#include "raca/special_functions.hpp"

namespace raca {

/// A computed volume together with the closed form that produced it.
struct VolumeReport {
  double value = 0.0;
  std::string formula;
  double abs_error_bound = 0.0;
};

/// Lower/upper volume bounds. `lower_attained` marks the equality case.
struct BoundPair {
  double lower = 0.0;
  double upper = 0.0;
  bool lower_attained = false;
};

inline constexpr int kMaxFamilyIndex = 1'000'000;

namespace detail {

inline constexpr double kAngleSlack = 1e-12;

// Weighted sum of Λ evaluations with the matching error bound.
class LobachevskySum {
public:
  void add(double weight, double theta) {
    const auto r = lobachevsky(theta);
    value_ += weight * r.value;
    error_ += std::abs(weight) * r.abs_error_bound;
  }
  double value() const { return value_; }
  double error() const { return error_; }

private:
  double value_ = 0.0;
  double error_ = 0.0;
};

inline void require_family_index(int n, int floor, const char* what) {
  if (n < floor)
    throw DomainError(std::string(what) + ": index must be at least " + std::to_string(floor));
  if (n > kMaxFamilyIndex)
    throw DomainError(std::string(what) + ": index above supported cap 1000000");
}

}  // namespace detail

/// The derived angle δ of the orthoscheme R(α, β, γ),
///   δ = arctan(√(cos²β − sin²α sin²γ) / (cos α cos γ)) ∈ [0, π/2).
inline double orthoscheme_delta(double alpha, double beta, double gamma) {
  using detail::kAngleSlack;
  constexpr double half_pi = detail::kPi / 2.0;
  for (double angle : {alpha, beta, gamma}) {
    if (!std::isfinite(angle) || angle <= 0.0 || angle > half_pi + kAngleSlack)
      throw DomainError("not a hyperbolic orthoscheme: angles must lie in (0, pi/2]");
  }
  if (alpha + beta < half_pi - kAngleSlack || beta + gamma < half_pi - kAngleSlack)
    throw DomainError("not a hyperbolic orthoscheme: need alpha+beta >= pi/2 and beta+gamma >= pi/2");
  const double cb = std::cos(beta);
  const double sa = std::sin(alpha);
  const double sg = std::sin(gamma);
  double radicand = cb * cb - sa * sa * sg * sg;
  if (radicand < 0.0) {
    if (radicand < -kAngleSlack) throw DomainError("not a hyperbolic orthoscheme");
    radicand = 0.0;
  }
  return std::atan2(std::sqrt(radicand), std::cos(alpha) * std::cos(gamma));
}

/// Volume of the orthoscheme R(α, β, γ):
///   ¼[Λ(α+δ) − Λ(α−δ) + Λ(γ+δ) − Λ(γ−δ) − Λ(π/2−β+δ) + Λ(π/2−β−δ) + 2Λ(π/2−δ)].
inline VolumeReport orthoscheme_volume(double alpha, double beta, double gamma) {
  const double delta = orthoscheme_delta(alpha, beta, gamma);
  constexpr double half_pi = detail::kPi / 2.0;
  detail::LobachevskySum sum;
  sum.add(0.25, alpha + delta);
  sum.add(-0.25, alpha - delta);
  sum.add(0.25, gamma + delta);
  sum.add(-0.25, gamma - delta);
  sum.add(-0.25, half_pi - beta + delta);
  sum.add(0.25, half_pi - beta - delta);
  sum.add(0.5, half_pi - delta);
  return {std::max(0.0, sum.value()), "kellerhals_orthoscheme", sum.error()};
}

/// Volume of the compact right-angled Löbell polyhedron L_n, n >= 5.
inline VolumeReport lobell_volume(int n) {
  detail::require_family_index(n, 5, "lobell_volume");
  constexpr double pi = detail::kPi;
  const double step = pi / n;
  const double theta = pi / 2.0 - std::acos(1.0 / (2.0 * std::cos(step)));
  detail::LobachevskySum sum;
  const double half_n = 0.5 * n;
  sum.add(2.0 * half_n, theta);
  sum.add(half_n, theta + step);
  sum.add(half_n, theta - step);
  sum.add(-half_n, 2.0 * theta - pi / 2.0);
  return {sum.value(), "lobell", sum.error()};
}

/// Volume of the ideal right-angled antiprism A_n, n >= 3.
inline VolumeReport antiprism_volume(int n) {
  detail::require_family_index(n, 3, "antiprism_volume");
  constexpr double pi = detail::kPi;
  detail::LobachevskySum sum;
  sum.add(2.0 * n, pi / 4.0 + pi / (2.0 * n));
  sum.add(2.0 * n, pi / 4.0 - pi / (2.0 * n));
  return {sum.value(), "ideal_antiprism", sum.error()};
}

enum class NamedKind { P32, P28, P34, Delta344, Delta444, DeltaPrime344, Lobell, Antiprism };

struct PolyhedronName {
  NamedKind kind = NamedKind::P32;
  int n = 0;  // family index for Lobell / Antiprism

  std::string to_string() const {
    switch (kind) {
      case NamedKind::P32: return "P32";
      case NamedKind::P28: return "P28";
      case NamedKind::P34: return "P34";
      case NamedKind::Delta344: return "Delta344";
      case NamedKind::Delta444: return "Delta444";
      case NamedKind::DeltaPrime344: return "DeltaPrime344";
      case NamedKind::Lobell: return "Lobell(" + std::to_string(n) + ")";
      case NamedKind::Antiprism: return "Antiprism(" + std::to_string(n) + ")";
    }
    return {};
  }
};

/// Parses "P32", "Delta444", "Lobell(7)", "Antiprism(4)" and so on (case-insensitive).
inline PolyhedronName parse_polyhedron_name(std::string_view text) {
  std::string s;
  for (char ch : text) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  if (s == "p32") return {NamedKind::P32};
  if (s == "p28") return {NamedKind::P28};
  if (s == "p34") return {NamedKind::P34};
  if (s == "delta344") return {NamedKind::Delta344};
  if (s == "delta444") return {NamedKind::Delta444};
  if (s == "deltaprime344") return {NamedKind::DeltaPrime344};
  for (auto [prefix, kind] : {std::pair{std::string_view("lobell("), NamedKind::Lobell},
                              std::pair{std::string_view("antiprism("), NamedKind::Antiprism}}) {
    if (s.starts_with(prefix) && s.ends_with(")")) {
      const std::string digits = s.substr(prefix.size(), s.size() - prefix.size() - 1);
      if (digits.empty() || digits.size() > 9 ||
          !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw InputError("bad family index in polyhedron name: " + std::string(text));
      return {kind, std::stoi(digits)};
    }
  }
  throw InputError("unknown polyhedron name: " + std::string(text));
}

/// Closed-form volumes of the named polyhedra.
inline VolumeReport named_volume(const PolyhedronName& name) {
  constexpr double pi = detail::kPi;
  switch (name.kind) {
    case NamedKind::P32: {
      const auto l = lobachevsky(pi / 4.0);
      return {2.0 * l.value, "2*L(pi/4)", 2.0 * l.abs_error_bound};
    }
    case NamedKind::P28: {
      const auto l = lobachevsky(pi / 4.0);
      return {4.0 * l.value, "4*L(pi/4)", 4.0 * l.abs_error_bound};
    }
    case NamedKind::P34: {
      auto r = antiprism_volume(4);
      return {r.value / 4.0, "antiprism(4)/4", r.abs_error_bound / 4.0};
    }
    case NamedKind::Delta344:
      return orthoscheme_volume(pi / 3.0, pi / 4.0, pi / 4.0);
    case NamedKind::Delta444:
      return orthoscheme_volume(pi / 4.0, pi / 4.0, pi / 4.0);
    case NamedKind::DeltaPrime344: {
      auto r = orthoscheme_volume(pi / 3.0, pi / 4.0, pi / 4.0);
      return {6.0 * r.value, "6*orthoscheme(pi/3,pi/4,pi/4)", 6.0 * r.abs_error_bound};
    }
    case NamedKind::Lobell:
      return lobell_volume(name.n);
    case NamedKind::Antiprism:
      return antiprism_volume(name.n);
  }
  throw InputError("unknown polyhedron name");
}

inline VolumeReport named_volume(std::string_view name) {
  return named_volume(parse_polyhedron_name(name));
}

/// Atkinson's bounds for a compact right-angled polyhedron with V vertices:
///   v_oct/32 (V − 8) <= vol < 5 v_tet/8 (V − 10).
inline BoundPair atkinson_bounds_compact(int vertices) {
  if (vertices < 20) throw DomainError("compact bounds require V >= 20");
  if (vertices % 2 != 0) throw DomainError("compact bounds require an even vertex count");
  const double oct = v_oct().value;
  const double tet = v_tet().value;
  return {oct / 32.0 * (vertices - 8), 5.0 * tet / 8.0 * (vertices - 10), false};
}

/// Atkinson's bounds for an ideal right-angled polyhedron with V vertices:
///   v_oct/4 (V − 2) <= vol < v_oct/2 (V − 4); both are equalities for the octahedron.
inline BoundPair atkinson_bounds_ideal(int vertices) {
  if (vertices < 6) throw DomainError("ideal bounds require V >= 6");
  const double oct = v_oct().value;
  return {oct / 4.0 * (vertices - 2), oct / 2.0 * (vertices - 4), vertices == 6};
}

namespace detail {
inline void require_mixed_counts(int v_ideal, int v_finite) {
  if (v_ideal < 1) throw DomainError("mixed bounds require at least one ideal vertex");
  if (v_finite < 0 || v_finite % 2 != 0)
    throw DomainError("mixed bounds require an even, non-negative finite vertex count");
}
}  // namespace detail

/// vol >= G/8 (4 V_inf + V_f − 8) for polyhedra with at least one ideal vertex.
inline double mixed_lower_bound(int v_ideal, int v_finite) {
  detail::require_mixed_counts(v_ideal, v_finite);
  return catalan_constant().value / 8.0 * (4.0 * v_ideal + v_finite - 8.0);
}

/// Upper bound v_oct/2 V_inf + 5 v_tet/8 V_f − v_oct/2 for the same class.
inline double mixed_upper_bound(int v_ideal, int v_finite) {
  detail::require_mixed_counts(v_ideal, v_finite);
  const double oct = v_oct().value;
  return oct / 2.0 * v_ideal + 5.0 * v_tet().value / 8.0 * v_finite - oct / 2.0;
}

inline BoundPair atkinson_bounds_mixed(int v_ideal, int v_finite) {
  return {mixed_lower_bound(v_ideal, v_finite), mixed_upper_bound(v_ideal, v_finite), false};
}

}  // namespace raca
