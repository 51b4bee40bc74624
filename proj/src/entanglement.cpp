#include "hubbard/entanglement.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace hubbard {

namespace {

constexpr double kRdmTol = 1e-12;
constexpr double kInputTol = 1e-10;

void validate_rdm(const SpinSectorRDM& r) {
  const double trace = ((r.u_plus + r.w1) + r.w2) + r.u_minus;
  if (std::abs(trace - 1.0) > kRdmTol) {
    throw std::domain_error("SpinSectorRDM: trace deviates from 1");
  }
  if (r.u_plus < -kRdmTol || r.w1 < -kRdmTol || r.w2 < -kRdmTol || r.u_minus < -kRdmTol) {
    throw std::domain_error("SpinSectorRDM: negative diagonal entry");
  }
  if (r.w1 * r.w2 - r.z * r.z < -kRdmTol) {
    throw std::domain_error("SpinSectorRDM: central block not positive semidefinite");
  }
}

}  // namespace

SpinSectorRDM two_site_rdm(const Spectrum& spectrum, const ThermalWeights& weights,
                           int site_j, int site_l, Spin spin) {
  const int L = spectrum.num_sites;
  if (site_j == site_l || site_j < 0 || site_l < 0 || site_j >= L || site_l >= L) {
    throw std::domain_error("two_site_rdm: sites must be distinct and < L");
  }
  if (std::abs(site_j - site_l) != 1 && L != 2) {
    throw std::domain_error("two_site_rdm: only nearest-neighbor pairs are supported");
  }

  SpinSectorRDM r;
  r.site_j = site_j;
  r.site_l = site_l;
  r.spin = spin;
  r.z = expectation(hopping_op(site_j, site_l, spin), spectrum, weights);
  r.u_minus = expectation(density_product_op(site_j, site_l, spin), spectrum, weights);
  const double n_j = expectation(number_op(site_j, spin), spectrum, weights);
  const double n_l = expectation(number_op(site_l, spin), spectrum, weights);
  r.w1 = n_j - r.u_minus;
  r.w2 = n_l - r.u_minus;
  r.u_plus = 1.0 - r.w1 - r.w2 - r.u_minus;

  validate_rdm(r);
  return r;
}

SpinSectorRDM two_site_rdm(const Spectrum& spectrum, const EnsembleSpec& ens,
                           int site_j, int site_l, Spin spin) {
  return two_site_rdm(spectrum, thermal_weights(spectrum, ens), site_j, site_l, spin);
}

Eigen::Matrix4d to_matrix(const SpinSectorRDM& r) {
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  m(0, 0) = r.u_plus;
  m(1, 1) = r.w1;
  m(2, 2) = r.w2;
  m(3, 3) = r.u_minus;
  m(1, 2) = m(2, 1) = r.z;
  return m;
}

double wootters_concurrence(const Eigen::Matrix4d& rho) {
  if ((rho - rho.transpose()).cwiseAbs().maxCoeff() > kInputTol) {
    throw std::domain_error("wootters_concurrence: input is not symmetric");
  }
  if (std::abs(rho.trace() - 1.0) > kInputTol) {
    throw std::domain_error("wootters_concurrence: input trace deviates from 1");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> decomposition(rho);
  if (decomposition.eigenvalues()(0) < -kInputTol) {
    throw std::domain_error("wootters_concurrence: input is not positive semidefinite");
  }

  // (sigma^y x sigma^y) in the basis |00>, |01>, |10>, |11> is the
  // antidiagonal (-1, 1, 1, -1); rho is real, so rho~ = (yy) rho (yy).
  Eigen::Matrix4d yy = Eigen::Matrix4d::Zero();
  yy(0, 3) = yy(3, 0) = -1.0;
  yy(1, 2) = yy(2, 1) = +1.0;

  // The needed sqrt(lambda_i) of rho * rho~ are |eig_i| of the symmetric
  // matrix A = sqrt(rho) (yy) sqrt(rho), since A^2 is similar to rho * rho~
  // and yy^2 = 1. Going through A keeps the near-zero values at absolute
  // accuracy ~1e-15; eigenvalues of the nonsymmetric product rho * rho~
  // land near zero with ~sqrt(eps) noise after the square root instead.
  const Eigen::Vector4d clamped = decomposition.eigenvalues().cwiseMax(0.0);
  const Eigen::Matrix4d sqrt_rho = decomposition.eigenvectors() *
                                   clamped.cwiseSqrt().asDiagonal() *
                                   decomposition.eigenvectors().transpose();
  const Eigen::Matrix4d a = sqrt_rho * yy * sqrt_rho;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> spectrum(
      Eigen::Matrix4d(0.5 * (a + a.transpose())), Eigen::EigenvaluesOnly);

  std::array<double, 4> roots{};
  for (int i = 0; i < 4; ++i) roots[static_cast<std::size_t>(i)] = std::abs(spectrum.eigenvalues()(i));
  std::sort(roots.begin(), roots.end(), std::greater<>());

  return std::max(roots[0] - roots[1] - roots[2] - roots[3], 0.0);
}

double xform_concurrence(const SpinSectorRDM& r) {
  const double cross = std::sqrt(std::max(r.u_plus * r.u_minus, 0.0));
  return 2.0 * std::max(std::abs(r.z) - cross, 0.0);
}

double eq5_concurrence(const SpinSectorRDM& r) {
  return 2.0 * std::max(std::abs(r.z) - r.u_minus, 0.0);
}

double entanglement_of_formation(double concurrence) {
  if (!(concurrence >= -kRdmTol && concurrence <= 1.0 + kRdmTol)) {
    throw std::domain_error("entanglement_of_formation: concurrence outside [0, 1]");
  }
  const double c = std::clamp(concurrence, 0.0, 1.0);
  const double x = 0.5 + 0.5 * std::sqrt(1.0 - c * c);
  auto h = [](double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; };
  return h(x) + h(1.0 - x);
}

ConcurrenceResult concurrence_of(const SpinSectorRDM& rdm) {
  ConcurrenceResult out;
  out.c_wootters = wootters_concurrence(to_matrix(rdm));
  out.c_xform = xform_concurrence(rdm);
  out.c_eq5 = eq5_concurrence(rdm);
  out.e_f = entanglement_of_formation(out.c_wootters);
  return out;
}

}  // namespace hubbard
