// Extended Hubbard Hamiltonian on a short chain, assembled sector by sector:
//
//   H = -t sum_{sigma,j,delta=+-1} c^dag_{j,sigma} c_{j+delta,sigma}
//       + U sum_j n_{j,up} n_{j,down}
//       + V sum_j n_j n_{j+1}
//       + sum_j mu_j (n_{j,up} + n_{j,down})
//       - sum_j B_j (n_{j,up} - n_{j,down}) / 2
//
// For L = 2 with periodic boundaries the delta = +-1 sum wraps onto the same
// bond twice, so the dimer picks up hopping coefficient 2t and interaction
// 2V n_1 n_2. Open boundaries count each bond once.

#pragma once

#include <vector>

#include <Eigen/Dense>

#include "hubbard/fock.hpp"

namespace hubbard {

enum class Boundary { periodic, open };

struct ModelParams {
  int num_sites = 2;
  double t = 1.0;   // hopping amplitude (energy units)
  double U = 0.0;   // on-site Coulomb
  double V = 0.0;   // nearest-neighbor Coulomb
  std::vector<double> mu;  // per-site potential, length L
  std::vector<double> B;   // per-site Zeeman field, length L
  Boundary boundary = Boundary::periodic;

  // Global chemical potential for grand-canonical runs, applied as
  // -global_mu * N on the diagonal. Defaults to 0: the staggered mu above is
  // a local potential, not a Fermi level.
  double global_mu = 0.0;

  void validate() const;  // throws std::domain_error
};

/// Two-site parameter set with staggered fields mu_list = (+mu, -mu) and
/// B_list = (+B, -B), periodic so the hopping coefficient is 2t.
ModelParams dimer_params(double U, double V, double mu = 0.0, double B = 0.0);

struct HamiltonianMatrix {
  Sector sector;
  Eigen::MatrixXd matrix;  // dense, real symmetric, dimension |sector|
};

/// Assemble <b'|H|b> over the given sector with fermionic signs from the
/// fock module. Throws std::domain_error on L mismatch or dimension > 4096.
HamiltonianMatrix build_hamiltonian(const ModelParams& params, const Sector& sector);

}  // namespace hubbard
