#include "hubbard/dimer_analytic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hubbard {

DimerSolution solve_dimer(double U, double V) {
  if (!std::isfinite(U) || !std::isfinite(V)) {
    throw std::domain_error("solve_dimer: couplings must be finite");
  }
  DimerSolution s;
  s.U = U;
  s.V = V;
  const double a = U / 2.0 - V;
  // denominator a + sqrt(a^2 + 16) > 0, so theta lands in (0, pi/2)
  s.theta = std::atan2(4.0, a + std::hypot(a, 4.0));
  const double root = std::hypot(U - 2.0 * V, 8.0);
  s.E1 = (U + 2.0 * V - root) / 2.0;
  s.E2 = (U + 2.0 * V + root) / 2.0;
  s.E3 = U;
  s.E4 = 2.0 * V;
  s.E5 = 2.0 * V;
  s.E6 = 2.0 * V;
  return s;
}

double ground_concurrence(double U, double V) {
  return std::abs(std::sin(2.0 * solve_dimer(U, V).theta));
}

double thermal_concurrence(double U, double V, double T) {
  if (!(T > 0.0)) throw std::domain_error("thermal_concurrence: T must be > 0");
  const DimerSolution s = solve_dimer(U, V);
  const double e_min = std::min({s.E1, s.E3, s.E4});  // E1 <= E2 and E4 = E5 = E6

  const auto boltz = [&](double e) { return std::exp(-(e - e_min) / T); };
  const double z = boltz(s.E1) + boltz(s.E2) + boltz(s.E3) + boltz(s.E4) + boltz(s.E5) +
                   boltz(s.E6);
  const double num =
      std::abs(std::sin(2.0 * s.theta)) * (boltz(s.E1) - boltz(s.E2)) - 2.0 * boltz(s.E5);
  return std::max(num, 0.0) / z;
}

std::optional<ThresholdResult> threshold_temperature(double U, double V) {
  const DimerSolution s = solve_dimer(U, V);
  const double sin2t = std::abs(std::sin(2.0 * s.theta));
  if (sin2t == 0.0) return std::nullopt;

  // Threshold condition scaled by e^{E1/T}; E1 is the strict minimum of
  // {E1, E2, E5}, so both exponents are negative and g stays in [-2, sin2t].
  // g > 0 as T -> 0+ and g -> sin2t * 0 - 2 < 0 as T -> infinity.
  const double gap21 = s.E2 - s.E1;
  const double gap51 = s.E5 - s.E1;
  const auto g = [&](double T) {
    return sin2t * (1.0 - std::exp(-gap21 / T)) - 2.0 * std::exp(-gap51 / T);
  };

  double lo = 1e-3;
  while (g(lo) <= 0.0) {
    lo /= 10.0;
    if (lo < 1e-300) throw std::runtime_error("threshold_temperature: no positive bracket");
  }
  double hi = 2.0 * lo;
  while (g(hi) > 0.0) {
    hi *= 2.0;
    if (hi > 1e6) {
      throw std::runtime_error("threshold_temperature: no sign change below T = 1e6");
    }
  }

  double mid = 0.5 * (lo + hi);
  double g_mid = g(mid);
  for (int iter = 0; iter < 400; ++iter) {
    if (g_mid > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    mid = 0.5 * (lo + hi);
    g_mid = g(mid);
    if (hi - lo <= 1e-10 * std::max(1.0, mid) && std::abs(g_mid) <= 1e-10) break;
  }

  return ThresholdResult{mid, g_mid, lo, hi};
}

}  // namespace hubbard
