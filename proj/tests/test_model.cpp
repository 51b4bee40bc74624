#include "hubbard/model.hpp"

#include <limits>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "hubbard/spectra.hpp"

using namespace hubbard;

TEST_CASE("dimer_params builds the staggered two-site model") {
  const ModelParams p = dimer_params(2.0, 0.0, 0.5, 0.25);
  CHECK(p.num_sites == 2);
  CHECK(p.t == 1.0);
  CHECK(p.boundary == Boundary::periodic);
  CHECK(p.mu == std::vector<double>{0.5, -0.5});
  CHECK(p.B == std::vector<double>{0.25, -0.25});
  CHECK(p.global_mu == 0.0);
}

TEST_CASE("half-filled dimer block") {
  // U, V chosen exactly representable so every entry comparison is exact.
  const double U = 1.25, V = 0.75;
  const auto h = build_hamiltonian(dimer_params(U, V), enumerate_sector(2, 1, 1));

  SUBCASE("raw basis: diagonal and hopping pattern") {
    // ascending masks [|ud,0>, |d,u>, |u,d>, |0,ud>]: doubly occupied states
    // carry U, singly occupied ones carry the bond energy 2V
    CHECK(h.matrix(0, 0) == U);
    CHECK(h.matrix(1, 1) == 2 * V);
    CHECK(h.matrix(2, 2) == 2 * V);
    CHECK(h.matrix(3, 3) == U);
    // doubly <-> doubly and singly <-> singly entries vanish
    CHECK(h.matrix(0, 3) == 0.0);
    CHECK(h.matrix(1, 2) == 0.0);
    // periodic L=2 doubles the hopping; fermionic ordering fixes the signs
    CHECK(h.matrix(0, 1) == +2.0);
    CHECK(h.matrix(0, 2) == -2.0);
    CHECK(h.matrix(3, 1) == +2.0);
    CHECK(h.matrix(3, 2) == -2.0);
  }

  SUBCASE("presentation basis (|ud,0>, |0,ud>, |u,d>, -|d,u>) gives the textbook matrix") {
    // Reordering and absorbing the fermionic phase of |d,u> makes every
    // hopping entry -2; this is the form the 4x4 block is usually quoted in.
    const int perm[4] = {0, 3, 2, 1};
    const double sign[4] = {1.0, 1.0, 1.0, -1.0};
    Eigen::Matrix4d m;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        m(i, j) = sign[i] * sign[j] * h.matrix(perm[i], perm[j]);
      }
    }
    Eigen::Matrix4d expected;
    expected << U, 0, -2, -2,
                0, U, -2, -2,
                -2, -2, 2 * V, 0,
                -2, -2, 0, 2 * V;
    CHECK(m == expected);
  }
}

TEST_CASE("single-particle sector is pure hopping") {
  const auto h = build_hamiltonian(dimer_params(3.0, -1.0), enumerate_sector(2, 1, 0));
  Eigen::Matrix2d expected;
  expected << 0, -2, -2, 0;
  CHECK(h.matrix == expected);

  // open boundary counts the bond once
  ModelParams open = dimer_params(3.0, -1.0);
  open.boundary = Boundary::open;
  const auto h_open = build_hamiltonian(open, enumerate_sector(2, 1, 0));
  CHECK(h_open.matrix(0, 1) == -1.0);
}

TEST_CASE("site fields enter the diagonal with the documented signs") {
  // positive B favors up-spin on site 0: -B (n_up - n_down)/2
  const auto h = build_hamiltonian(dimer_params(0.0, 0.0, 0.0, 1.0), enumerate_sector(2, 1, 0));
  // states: up electron on site 0 (mask 0b0001) then site 1 (mask 0b0100)
  CHECK(h.matrix(0, 0) == -0.5);
  CHECK(h.matrix(1, 1) == +0.5);

  const auto hmu = build_hamiltonian(dimer_params(0.0, 0.0, 0.7, 0.0), enumerate_sector(2, 1, 0));
  CHECK(hmu.matrix(0, 0) == 0.7);
  CHECK(hmu.matrix(1, 1) == -0.7);
}

TEST_CASE("assembled matrices are exactly symmetric") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> coupling(-5.0, 5.0);
  for (int trial = 0; trial < 20; ++trial) {
    ModelParams p = dimer_params(coupling(rng), coupling(rng), coupling(rng), coupling(rng));
    if (trial % 2 == 1) {
      p.num_sites = 3;
      p.mu = {coupling(rng), coupling(rng), coupling(rng)};
      p.B = {coupling(rng), coupling(rng), coupling(rng)};
      p.boundary = trial % 4 == 1 ? Boundary::open : Boundary::periodic;
    }
    p.t = coupling(rng);
    for (int nu = 0; nu <= p.num_sites; ++nu) {
      for (int nd = 0; nd <= p.num_sites; ++nd) {
        const auto h = build_hamiltonian(p, enumerate_sector(p.num_sites, nu, nd));
        CHECK(h.matrix == h.matrix.transpose().eval());
      }
    }
  }
}

TEST_CASE("hopping-only Hamiltonians are traceless") {
  ModelParams p = dimer_params(0.0, 0.0);
  p.t = 1.37;
  for (int L : {2, 3}) {
    p.num_sites = L;
    p.mu.assign(L, 0.0);
    p.B.assign(L, 0.0);
    for (Boundary b : {Boundary::periodic, Boundary::open}) {
      p.boundary = b;
      for (int nu = 0; nu <= L; ++nu) {
        for (int nd = 0; nd <= L; ++nd) {
          const auto h = build_hamiltonian(p, enumerate_sector(L, nu, nd));
          CHECK(h.matrix.trace() == 0.0);
        }
      }
    }
  }
}

TEST_CASE("spin-swapped sectors share their spectrum at zero field") {
  const ModelParams p = dimer_params(1.9, -0.6);
  for (auto [nu, nd] : {std::pair{1, 0}, std::pair{2, 1}, std::pair{2, 0}}) {
    const auto a = diagonalize(build_hamiltonian(p, enumerate_sector(2, nu, nd)));
    const auto b = diagonalize(build_hamiltonian(p, enumerate_sector(2, nd, nu)));
    REQUIRE(a.eigenvalues.size() == b.eigenvalues.size());
    CHECK((a.eigenvalues - b.eigenvalues).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("construction errors") {
  SUBCASE("sector built for a different L") {
    CHECK_THROWS_AS(build_hamiltonian(dimer_params(1.0, 0.0), enumerate_sector(3, 1, 1)),
                    std::domain_error);
  }
  SUBCASE("mu/B length mismatch") {
    ModelParams p = dimer_params(0.0, 0.0);
    p.mu = {0.0};
    CHECK_THROWS_AS(build_hamiltonian(p, enumerate_sector(2, 1, 1)), std::domain_error);
  }
  SUBCASE("non-finite couplings") {
    ModelParams p = dimer_params(0.0, 0.0);
    p.U = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(p.validate(), std::domain_error);
  }
  SUBCASE("sector dimension cap") {
    ModelParams p;
    p.num_sites = 8;
    p.mu.assign(8, 0.0);
    p.B.assign(8, 0.0);
    // C(8,4)^2 = 4900 > 4096
    CHECK_THROWS_AS(build_hamiltonian(p, enumerate_sector(8, 4, 4)), std::domain_error);
  }
}
