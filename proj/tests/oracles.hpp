#pragma once

// Reference implementations that share no code with the library.

#include <cmath>
#include <numbers>

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace oracle {

// -∫_0^θ log|2 sin t| dt by tanh-sinh quadrature (handles the log endpoint).
inline double lobachevsky(double theta) {
  constexpr double pi = std::numbers::pi;
  double reduced = std::fmod(theta, pi);
  if (reduced < 0) reduced += pi;
  if (reduced == 0.0) return 0.0;
  static boost::math::quadrature::tanh_sinh<double> integrator;
  const auto f = [](double t) { return -std::log(2.0 * std::sin(t)); };
  // Split at π/2 so the singularity at π (if reached) is also an endpoint.
  if (reduced <= pi / 2) return integrator.integrate(f, 0.0, reduced);
  return integrator.integrate(f, 0.0, pi / 2) + integrator.integrate(f, pi / 2, reduced);
}

inline double catalan() { return boost::math::constants::catalan<double>(); }

}  // namespace oracle
