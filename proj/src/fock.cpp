#include "hubbard/fock.hpp"

#include <algorithm>
#include <stdexcept>

namespace hubbard {

namespace {

// Parity of the occupation below mode m; fixes all anticommutation signs.
int jordan_wigner_sign(FockState s, int mode) {
  const std::uint64_t below = s.bits & ((std::uint64_t{1} << mode) - 1);
  return (__builtin_popcountll(below) & 1) ? -1 : +1;
}

}  // namespace

std::optional<SignedState> apply_create(FockState s, int mode) {
  if (s.occupied(mode)) return std::nullopt;  // Pauli exclusion
  return SignedState{FockState{s.bits | (std::uint64_t{1} << mode)},
                     jordan_wigner_sign(s, mode)};
}

std::optional<SignedState> apply_annihilate(FockState s, int mode) {
  if (!s.occupied(mode)) return std::nullopt;
  return SignedState{FockState{s.bits & ~(std::uint64_t{1} << mode)},
                     jordan_wigner_sign(s, mode)};
}

std::optional<SignedState> apply_create(FockState s, ModeIndex m) {
  return apply_create(s, m.linear());
}

std::optional<SignedState> apply_annihilate(FockState s, ModeIndex m) {
  return apply_annihilate(s, m.linear());
}

int apply_number(FockState s, int mode) { return s.occupied(mode) ? 1 : 0; }

int apply_number(FockState s, ModeIndex m) { return apply_number(s, m.linear()); }

int count_up(FockState s, int num_sites) {
  int n = 0;
  for (int j = 0; j < num_sites; ++j) n += s.occupied(2 * j);
  return n;
}

int count_down(FockState s, int num_sites) {
  int n = 0;
  for (int j = 0; j < num_sites; ++j) n += s.occupied(2 * j + 1);
  return n;
}

std::size_t Sector::index_of(FockState s) const {
  auto it = std::lower_bound(states.begin(), states.end(), s);
  if (it == states.end() || *it != s) {
    throw std::out_of_range("Sector::index_of: state not in sector");
  }
  return static_cast<std::size_t>(it - states.begin());
}

Sector enumerate_sector(int num_sites, int n_up, int n_down) {
  if (num_sites < 1 || num_sites > 16) {
    throw std::domain_error("enumerate_sector: need 1 <= L <= 16");
  }
  if (n_up < 0 || n_up > num_sites || n_down < 0 || n_down > num_sites) {
    throw std::domain_error("enumerate_sector: particle counts outside [0, L]");
  }

  Sector sector{num_sites, n_up, n_down, {}};
  sector.states.reserve(binomial(num_sites, n_up) * binomial(num_sites, n_down));

  // Per-spin site masks with fixed popcount, spread onto even (up) or odd
  // (down) mode bits, then combined.
  auto site_masks = [num_sites](int count) {
    std::vector<std::uint64_t> masks;
    const std::uint64_t end = std::uint64_t{1} << num_sites;
    for (std::uint64_t m = 0; m < end; ++m) {
      if (__builtin_popcountll(m) == count) masks.push_back(m);
    }
    return masks;
  };
  auto spread = [num_sites](std::uint64_t site_mask, int offset) {
    std::uint64_t bits = 0;
    for (int j = 0; j < num_sites; ++j) {
      if ((site_mask >> j) & 1u) bits |= std::uint64_t{1} << (2 * j + offset);
    }
    return bits;
  };

  for (std::uint64_t up : site_masks(n_up)) {
    for (std::uint64_t down : site_masks(n_down)) {
      sector.states.push_back(FockState{spread(up, 0) | spread(down, 1)});
    }
  }
  std::sort(sector.states.begin(), sector.states.end());
  return sector;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 0; i < std::min(k, n - k); ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace hubbard
