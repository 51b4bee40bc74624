#include "hubbard/model.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace hubbard {

namespace {

constexpr std::size_t kMaxSectorDim = 4096;

bool all_finite(const std::vector<double>& v) {
  for (double x : v) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

// Directed hopping bonds (source -> target). Periodic chains take both
// delta = +-1 terms per site, which double-counts every bond of an L = 2
// ring; open chains take each bond in both directions exactly once.
std::vector<std::pair<int, int>> directed_bonds(int L, Boundary boundary) {
  std::vector<std::pair<int, int>> bonds;
  if (L < 2) return bonds;  // a single site has no bonds
  if (boundary == Boundary::periodic) {
    for (int j = 0; j < L; ++j) {
      for (int delta : {+1, -1}) {
        const int target = ((j + delta) % L + L) % L;
        if (target != j) bonds.emplace_back(j, target);
      }
    }
  } else {
    for (int j = 0; j + 1 < L; ++j) {
      bonds.emplace_back(j, j + 1);
      bonds.emplace_back(j + 1, j);
    }
  }
  return bonds;
}

// Undirected density-density pairs for the V term, with multiplicity from
// the sum over j (the L = 2 ring counts its single bond twice).
std::vector<std::pair<int, int>> interaction_pairs(int L, Boundary boundary) {
  std::vector<std::pair<int, int>> pairs;
  if (L < 2) return pairs;
  if (boundary == Boundary::periodic) {
    for (int j = 0; j < L; ++j) {
      const int next = (j + 1) % L;
      if (next != j) pairs.emplace_back(j, next);
    }
  } else {
    for (int j = 0; j + 1 < L; ++j) pairs.emplace_back(j, j + 1);
  }
  return pairs;
}

}  // namespace

void ModelParams::validate() const {
  if (num_sites < 1) throw std::domain_error("ModelParams: num_sites must be >= 1");
  if (mu.size() != static_cast<std::size_t>(num_sites) ||
      B.size() != static_cast<std::size_t>(num_sites)) {
    throw std::domain_error("ModelParams: mu and B must have length L");
  }
  if (!std::isfinite(t) || !std::isfinite(U) || !std::isfinite(V) ||
      !std::isfinite(global_mu) || !all_finite(mu) || !all_finite(B)) {
    throw std::domain_error("ModelParams: couplings must be finite");
  }
}

ModelParams dimer_params(double U, double V, double mu, double B) {
  ModelParams p;
  p.num_sites = 2;
  p.t = 1.0;
  p.U = U;
  p.V = V;
  p.mu = {+mu, -mu};
  p.B = {+B, -B};
  p.boundary = Boundary::periodic;
  p.validate();
  return p;
}

HamiltonianMatrix build_hamiltonian(const ModelParams& params, const Sector& sector) {
  params.validate();
  if (sector.num_sites != params.num_sites) {
    throw std::domain_error("build_hamiltonian: sector built for a different L");
  }
  if (sector.size() > kMaxSectorDim) {
    throw std::domain_error("build_hamiltonian: sector dimension exceeds 4096");
  }

  const int L = params.num_sites;
  const auto dim = static_cast<Eigen::Index>(sector.size());
  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(dim, dim);

  const auto bonds = directed_bonds(L, params.boundary);
  const auto pairs = interaction_pairs(L, params.boundary);

  for (Eigen::Index col = 0; col < dim; ++col) {
    const FockState b = sector.states[static_cast<std::size_t>(col)];

    double diag = 0.0;
    for (int j = 0; j < L; ++j) {
      const int nu = apply_number(b, ModeIndex{j, Spin::up});
      const int nd = apply_number(b, ModeIndex{j, Spin::down});
      diag += params.U * nu * nd;
      diag += params.mu[j] * (nu + nd);
      diag += -params.B[j] * (nu - nd) / 2.0;
      diag += -params.global_mu * (nu + nd);
    }
    for (auto [j, l] : pairs) {
      const int nj = apply_number(b, ModeIndex{j, Spin::up}) +
                     apply_number(b, ModeIndex{j, Spin::down});
      const int nl = apply_number(b, ModeIndex{l, Spin::up}) +
                     apply_number(b, ModeIndex{l, Spin::down});
      diag += params.V * nj * nl;
    }
    H(col, col) += diag;

    // hopping: -t c^dag_{target} c_{source} per directed bond and spin
    for (auto [source, target] : bonds) {
      for (Spin s : {Spin::up, Spin::down}) {
        const auto removed = apply_annihilate(b, ModeIndex{source, s});
        if (!removed) continue;
        const auto added = apply_create(removed->state, ModeIndex{target, s});
        if (!added) continue;
        const auto row = static_cast<Eigen::Index>(sector.index_of(added->state));
        H(row, col) += -params.t * removed->sign * added->sign;
      }
    }
  }

  return HamiltonianMatrix{sector, std::move(H)};
}

}  // namespace hubbard
