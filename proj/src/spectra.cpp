#include "hubbard/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hubbard {

std::vector<SectorKey> all_sector_keys(int num_sites) {
  std::vector<SectorKey> keys;
  for (int nu = 0; nu <= num_sites; ++nu) {
    for (int nd = 0; nd <= num_sites; ++nd) keys.emplace_back(nu, nd);
  }
  return keys;
}

std::vector<SectorKey> half_filling_sector_keys(int num_sites) {
  std::vector<SectorKey> keys;
  for (int nu = 0; nu <= num_sites; ++nu) {
    const int nd = num_sites - nu;
    if (nd >= 0 && nd <= num_sites) keys.emplace_back(nu, nd);
  }
  return keys;
}

std::size_t Spectrum::total_states() const {
  std::size_t n = 0;
  for (const auto& s : sectors) n += s.sector.size();
  return n;
}

bool Spectrum::covers(const std::vector<SectorKey>& keys) const {
  auto sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  std::vector<SectorKey> have;
  have.reserve(sectors.size());
  for (const auto& s : sectors) have.emplace_back(s.sector.n_up, s.sector.n_down);
  std::sort(have.begin(), have.end());
  return have == sorted;
}

SectorSpectrum diagonalize(const HamiltonianMatrix& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h.matrix);
  if (solver.info() != Eigen::Success) {
    throw EigensolverError("diagonalize: eigensolver did not converge",
                           std::numeric_limits<double>::infinity());
  }

  SectorSpectrum out{h.sector, solver.eigenvalues(), solver.eigenvectors()};

  const double scale = h.matrix.norm();
  const double residual =
      (h.matrix * out.eigenvectors - out.eigenvectors * out.eigenvalues.asDiagonal())
          .cwiseAbs()
          .maxCoeff();
  if (residual > 1e-10 * std::max(scale, 1e-300)) {
    throw EigensolverError("diagonalize: residual exceeds 1e-10 * ||H||", residual);
  }
  return out;
}

Spectrum diagonalize_sectors(const ModelParams& params, const std::vector<SectorKey>& keys) {
  Spectrum spectrum;
  spectrum.num_sites = params.num_sites;
  spectrum.sectors.reserve(keys.size());
  for (auto [nu, nd] : keys) {
    const Sector sector = enumerate_sector(params.num_sites, nu, nd);
    spectrum.sectors.push_back(diagonalize(build_hamiltonian(params, sector)));
  }
  return spectrum;
}

EnsembleSpec EnsembleSpec::ground() { return EnsembleSpec{EnsembleKind::ground, 0.0, {}}; }

EnsembleSpec EnsembleSpec::canonical(double T, std::vector<SectorKey> sectors) {
  return EnsembleSpec{EnsembleKind::canonical, T, std::move(sectors)};
}

EnsembleSpec EnsembleSpec::grand_canonical(double T) {
  return EnsembleSpec{EnsembleKind::grand_canonical, T, {}};
}

double ThermalWeights::z() const { return std::exp(log_z); }

ThermalWeights thermal_weights(const Spectrum& spectrum, const EnsembleSpec& ens) {
  if (spectrum.sectors.empty()) {
    throw std::domain_error("thermal_weights: empty spectrum");
  }
  if (ens.kind == EnsembleKind::canonical && !spectrum.covers(ens.sectors)) {
    throw std::domain_error(
        "thermal_weights: canonical ensemble demands a spectrum over exactly its sector list");
  }
  if (ens.kind == EnsembleKind::grand_canonical) {
    const auto full = std::size_t{1} << (2 * spectrum.num_sites);
    if (spectrum.total_states() != full || !spectrum.covers(all_sector_keys(spectrum.num_sites))) {
      throw std::domain_error(
          "thermal_weights: grand-canonical ensemble demands all sectors of the model");
    }
  }

  double e_min = std::numeric_limits<double>::infinity();
  for (const auto& s : spectrum.sectors) {
    if (s.eigenvalues.size() > 0) e_min = std::min(e_min, s.eigenvalues(0));
  }

  ThermalWeights result;
  result.weights.reserve(spectrum.sectors.size());

  if (ens.kind == EnsembleKind::ground) {
    std::size_t multiplicity = 0;
    for (const auto& s : spectrum.sectors) {
      for (Eigen::Index k = 0; k < s.eigenvalues.size(); ++k) {
        if (s.eigenvalues(k) - e_min <= kDegeneracyTol) ++multiplicity;
      }
    }
    for (const auto& s : spectrum.sectors) {
      Eigen::VectorXd w = Eigen::VectorXd::Zero(s.eigenvalues.size());
      for (Eigen::Index k = 0; k < s.eigenvalues.size(); ++k) {
        if (s.eigenvalues(k) - e_min <= kDegeneracyTol) {
          w(k) = 1.0 / static_cast<double>(multiplicity);
        }
      }
      result.weights.push_back(std::move(w));
    }
    result.log_z = std::log(static_cast<double>(multiplicity));
    return result;
  }

  const double T = ens.temperature;
  if (T <= 0.0) throw std::domain_error("thermal_weights: thermal kinds need T > 0");
  if (T < kMinTemperature) {
    throw std::domain_error("thermal_weights: T below 1e-6; use the ground kind for T -> 0");
  }

  double z_shifted = 0.0;
  for (const auto& s : spectrum.sectors) {
    for (Eigen::Index k = 0; k < s.eigenvalues.size(); ++k) {
      z_shifted += std::exp(-(s.eigenvalues(k) - e_min) / T);
    }
  }
  for (const auto& s : spectrum.sectors) {
    Eigen::VectorXd w(s.eigenvalues.size());
    for (Eigen::Index k = 0; k < s.eigenvalues.size(); ++k) {
      w(k) = std::exp(-(s.eigenvalues(k) - e_min) / T) / z_shifted;
    }
    result.weights.push_back(std::move(w));
  }
  result.log_z = std::log(z_shifted) - e_min / T;
  return result;
}

// ---------------------------------------------------------------------------
// Operators
// ---------------------------------------------------------------------------

OperatorSpec& OperatorSpec::operator+=(const OperatorSpec& other) {
  terms.insert(terms.end(), other.terms.begin(), other.terms.end());
  return *this;
}

bool OperatorSpec::conserves_sector() const {
  for (const auto& term : terms) {
    int d_up = 0;
    int d_down = 0;
    for (const auto& f : term.factors) {
      int& d = (f.mode.spin == Spin::up) ? d_up : d_down;
      if (f.kind == ModeOpKind::create) ++d;
      if (f.kind == ModeOpKind::annihilate) --d;
    }
    if (d_up != 0 || d_down != 0) return false;
  }
  return true;
}

int OperatorSpec::max_site() const {
  int m = -1;
  for (const auto& term : terms) {
    for (const auto& f : term.factors) m = std::max(m, f.mode.site);
  }
  return m;
}

OperatorSpec number_op(int site, Spin spin) {
  return {{OperatorTerm{1.0, {ModeOp{ModeOpKind::number, ModeIndex{site, spin}}}}}};
}

OperatorSpec hopping_op(int to_site, int from_site, Spin spin) {
  return {{OperatorTerm{1.0,
                        {ModeOp{ModeOpKind::create, ModeIndex{to_site, spin}},
                         ModeOp{ModeOpKind::annihilate, ModeIndex{from_site, spin}}}}}};
}

OperatorSpec density_product_op(int site_a, int site_b, Spin spin) {
  return {{OperatorTerm{1.0,
                        {ModeOp{ModeOpKind::number, ModeIndex{site_a, spin}},
                         ModeOp{ModeOpKind::number, ModeIndex{site_b, spin}}}}}};
}

namespace {

// Apply one product term to a basis state; factors act right to left.
std::optional<SignedState> apply_term(const OperatorTerm& term, FockState b) {
  SignedState acc{b, 1};
  for (auto it = term.factors.rbegin(); it != term.factors.rend(); ++it) {
    switch (it->kind) {
      case ModeOpKind::number:
        if (!apply_number(acc.state, it->mode)) return std::nullopt;
        break;
      case ModeOpKind::create: {
        const auto r = apply_create(acc.state, it->mode);
        if (!r) return std::nullopt;
        acc = SignedState{r->state, acc.sign * r->sign};
        break;
      }
      case ModeOpKind::annihilate: {
        const auto r = apply_annihilate(acc.state, it->mode);
        if (!r) return std::nullopt;
        acc = SignedState{r->state, acc.sign * r->sign};
        break;
      }
    }
  }
  return acc;
}

}  // namespace

double diagonal_matrix_element(const OperatorSpec& op, const Sector& sector,
                               const Eigen::VectorXd& vec) {
  double value = 0.0;
  for (const auto& term : op.terms) {
    double acc = 0.0;
    for (std::size_t k = 0; k < sector.size(); ++k) {
      const double vk = vec(static_cast<Eigen::Index>(k));
      if (vk == 0.0) continue;
      const auto r = apply_term(term, sector.states[k]);
      if (!r) continue;
      const auto row = sector.index_of(r->state);
      acc += vec(static_cast<Eigen::Index>(row)) * r->sign * vk;
    }
    value += term.coefficient * acc;
  }
  return value;
}

double expectation(const OperatorSpec& op, const Spectrum& spectrum,
                   const ThermalWeights& weights) {
  if (!op.conserves_sector()) {
    throw std::domain_error("expectation: operator does not conserve (N_up, N_down)");
  }
  if (op.max_site() >= spectrum.num_sites) {
    throw std::domain_error("expectation: operator references a site >= L");
  }
  if (weights.weights.size() != spectrum.sectors.size()) {
    throw std::domain_error("expectation: weights do not match the spectrum");
  }

  double value = 0.0;
  for (std::size_t si = 0; si < spectrum.sectors.size(); ++si) {
    const auto& s = spectrum.sectors[si];
    const auto& w = weights.weights[si];
    for (Eigen::Index n = 0; n < s.eigenvalues.size(); ++n) {
      if (w(n) == 0.0) continue;
      value += w(n) * diagonal_matrix_element(op, s.sector, s.eigenvectors.col(n));
    }
  }
  return value;
}

double expectation(const OperatorSpec& op, const Spectrum& spectrum, const EnsembleSpec& ens) {
  return expectation(op, spectrum, thermal_weights(spectrum, ens));
}

double energy_expectation(const Spectrum& spectrum, const ThermalWeights& weights) {
  double value = 0.0;
  for (std::size_t si = 0; si < spectrum.sectors.size(); ++si) {
    value += weights.weights[si].dot(spectrum.sectors[si].eigenvalues);
  }
  return value;
}

}  // namespace hubbard
