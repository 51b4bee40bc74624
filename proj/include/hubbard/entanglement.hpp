// Two-site reduced density matrix of one spin species and its concurrence.
//
// Charge and spin conservation force the reduced state into X form in the
// occupation basis |00>, |0 up>, |up 0>, |up up>:
//
//     ( u+  .   .   .  )          z  = < c^dag_{j,s} c_{l,s} >
//     ( .   w1  z   .  )          u- = < n_{j,s} n_{l,s} >
//     ( .   z   w2  .  )          w1 = < n_{j,s} > - u-
//     ( .   .   .   u- )          w2 = < n_{l,s} > - u-,  u+ = 1 - w1 - w2 - u-
//
// The coherence z is real because the Hamiltonian is real. Three concurrence
// routes are kept side by side: the spectral definition on the 4x4 matrix,
// its X-form closed form 2 max(0, |z| - sqrt(u+ u-)), and the correlator form
// 2 max(0, |z| - u-). The last two differ when u+ != u-, which staggered
// fields and grand-canonical mixing can produce.

#pragma once

#include <Eigen/Dense>

#include "hubbard/spectra.hpp"

namespace hubbard {

struct SpinSectorRDM {
  double u_plus = 0.0;
  double w1 = 0.0;
  double w2 = 0.0;
  double u_minus = 0.0;
  double z = 0.0;
  int site_j = 0;
  int site_l = 1;
  Spin spin = Spin::up;
};

/// Build the RDM from ensemble correlators. Sites must be distinct nearest
/// neighbors (|j - l| = 1, or any pair when L = 2); longer-range pairs pick
/// up an operator string this module does not handle.
SpinSectorRDM two_site_rdm(const Spectrum& spectrum, const ThermalWeights& weights,
                           int site_j, int site_l, Spin spin);
SpinSectorRDM two_site_rdm(const Spectrum& spectrum, const EnsembleSpec& ens,
                           int site_j, int site_l, Spin spin);

/// The 4x4 matrix of the X form above, basis |00>, |0 up>, |up 0>, |up up>.
Eigen::Matrix4d to_matrix(const SpinSectorRDM& rdm);

/// Concurrence from the spectrum of rho * (sy x sy) rho* (sy x sy):
/// C = max(0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4)), eigenvalues sorted
/// descending, values in [-1e-12, 0) clamped to zero. The input must be
/// symmetric, unit trace, and positive semidefinite within 1e-10.
double wootters_concurrence(const Eigen::Matrix4d& rho);

/// Closed form for the X structure: 2 max(0, |z| - sqrt(u+ u-)).
double xform_concurrence(const SpinSectorRDM& rdm);

/// Correlator form: 2 max(0, |z| - u-).
double eq5_concurrence(const SpinSectorRDM& rdm);

/// Entanglement of formation as a function of concurrence:
/// E_f = -x log2 x - (1-x) log2(1-x), x = 1/2 + sqrt(1 - C^2)/2.
double entanglement_of_formation(double concurrence);

struct ConcurrenceResult {
  double c_wootters = 0.0;  // spectral route; the canonical output
  double c_xform = 0.0;
  double c_eq5 = 0.0;
  double e_f = 0.0;         // entanglement of formation of c_wootters
};

ConcurrenceResult concurrence_of(const SpinSectorRDM& rdm);

}  // namespace hubbard
