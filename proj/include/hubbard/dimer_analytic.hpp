// Closed forms for the two-site, two-electron model (t = 1, periodic, so the
// effective hopping coefficient is 2).
//
// The zero-magnetization block diagonalizes with mixing angle
//   tan(theta) = 4 / ((U/2 - V) + sqrt((U/2 - V)^2 + 16)),  theta in (0, pi/2)
// and energies
//   E1,2 = (U + 2V -+ sqrt(64 + (U - 2V)^2)) / 2,  E3 = U,  E4 = 2V,
// plus the two fully polarized states E5 = E6 = 2V. The ground-state
// concurrence is |sin 2 theta|; at temperature T (six-state canonical
// ensemble, k_B = 1)
//   C(T) = (1/Z) max[ |sin 2theta| (e^{-E1/T} - e^{-E2/T}) - 2 e^{-E5/T}, 0 ]
// which vanishes above a threshold temperature T_th.

#pragma once

#include <optional>

namespace hubbard {

struct DimerSolution {
  double theta = 0.0;  // mixing angle, radians
  double E1 = 0.0, E2 = 0.0, E3 = 0.0, E4 = 0.0, E5 = 0.0, E6 = 0.0;
  double U = 0.0, V = 0.0;
};

DimerSolution solve_dimer(double U, double V);

/// |sin 2 theta|; equals 1 exactly on the line V = U/2.
double ground_concurrence(double U, double V);

/// Thermal concurrence at T > 0, evaluated with shifted exponentials.
/// Throws std::domain_error for T <= 0.
double thermal_concurrence(double U, double V, double T);

struct ThresholdResult {
  double t_th = 0.0;
  // Value at t_th of the threshold condition scaled by e^{E1/T} (the literal
  // form times a positive factor, so the root is unchanged but the value
  // stays representable for any couplings).
  double residual = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
};

/// Unique positive root of the threshold condition, by geometric bracketing
/// and bisection to |residual| <= 1e-10 and bracket width <= 1e-10 max(1, T).
/// Returns std::nullopt when sin 2 theta = 0 (no threshold exists); throws
/// std::runtime_error if no sign change is found below T = 1e6.
std::optional<ThresholdResult> threshold_temperature(double U, double V);

}  // namespace hubbard
