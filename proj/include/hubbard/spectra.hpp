// Dense eigendecomposition of sector Hamiltonians and statistical averages
// over ground, canonical, and grand-canonical ensembles (k_B = 1).
//
// Boltzmann factors are always evaluated as exp(-(E - E_min)/T) with the
// partition function rescaled to match, so weight ratios stay exact for any
// |E|/T that fits in a double.

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "hubbard/model.hpp"

namespace hubbard {

/// (n_up, n_down) label of a symmetry sector.
using SectorKey = std::pair<int, int>;

std::vector<SectorKey> all_sector_keys(int num_sites);
std::vector<SectorKey> half_filling_sector_keys(int num_sites);  // n_up + n_down == L

struct SectorSpectrum {
  Sector sector;
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXd eigenvectors;  // orthonormal columns, same order
};

struct Spectrum {
  int num_sites = 0;
  std::vector<SectorSpectrum> sectors;

  std::size_t total_states() const;
  bool covers(const std::vector<SectorKey>& keys) const;  // exactly these sectors
};

/// Thrown when the eigensolver fails or the residual check
/// ||H v - lambda v|| <= 1e-10 ||H|| does not hold.
class EigensolverError : public std::runtime_error {
 public:
  EigensolverError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

SectorSpectrum diagonalize(const HamiltonianMatrix& h);

/// Build and diagonalize the listed sectors.
Spectrum diagonalize_sectors(const ModelParams& params, const std::vector<SectorKey>& keys);

enum class EnsembleKind { ground, canonical, grand_canonical };

struct EnsembleSpec {
  EnsembleKind kind = EnsembleKind::ground;
  double temperature = 0.0;          // > 0 for thermal kinds
  std::vector<SectorKey> sectors;    // canonical only: the fixed-N state space

  static EnsembleSpec ground();
  static EnsembleSpec canonical(double T, std::vector<SectorKey> sectors);
  static EnsembleSpec grand_canonical(double T);
};

// Ground mixtures treat levels within this absolute energy window of the
// minimum as degenerate; matches the T -> 0+ thermal limit at level crossings.
inline constexpr double kDegeneracyTol = 1e-9;
inline constexpr double kMinTemperature = 1e-6;

struct ThermalWeights {
  std::vector<Eigen::VectorXd> weights;  // parallel to Spectrum::sectors
  double log_z = 0.0;  // log of the true partition function (ground: log multiplicity)

  double z() const;
};

/// Statistical weights for the ensemble. Ground mixes uniformly over all
/// globally degenerate minima of the spectrum; canonical demands that the
/// spectrum covers exactly ens.sectors; grand canonical demands all 4^L states.
ThermalWeights thermal_weights(const Spectrum& spectrum, const EnsembleSpec& ens);

// ---------------------------------------------------------------------------
// Operators as formal sums of scalar * (mode-operator product)
// ---------------------------------------------------------------------------

enum class ModeOpKind { create, annihilate, number };

struct ModeOp {
  ModeOpKind kind;
  ModeIndex mode;
};

/// One product term; factors act right to left (factors.back() first).
struct OperatorTerm {
  double coefficient = 1.0;
  std::vector<ModeOp> factors;
};

struct OperatorSpec {
  std::vector<OperatorTerm> terms;

  OperatorSpec& operator+=(const OperatorSpec& other);
  /// Net particle count change per spin must vanish in every term.
  bool conserves_sector() const;
  int max_site() const;
};

OperatorSpec number_op(int site, Spin spin);                       // n_{j,sigma}
OperatorSpec hopping_op(int to_site, int from_site, Spin spin);    // c^dag_j c_l
OperatorSpec density_product_op(int site_a, int site_b, Spin spin);

/// <n| op |n> for one normalized eigenvector in its sector basis.
double diagonal_matrix_element(const OperatorSpec& op, const Sector& sector,
                               const Eigen::VectorXd& vec);

/// Ensemble average sum_n w_n <n|op|n>. The operator must conserve (N_up,
/// N_down); sector-changing operators are rejected with std::domain_error.
double expectation(const OperatorSpec& op, const Spectrum& spectrum,
                   const ThermalWeights& weights);
double expectation(const OperatorSpec& op, const Spectrum& spectrum,
                   const EnsembleSpec& ens);

/// Ensemble average of the energy.
double energy_expectation(const Spectrum& spectrum, const ThermalWeights& weights);

}  // namespace hubbard
