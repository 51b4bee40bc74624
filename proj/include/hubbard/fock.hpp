// Occupation-number basis for spinful fermions on a small chain.
//
// Modes are ordered site-major with up before down: mode m = 2*site + spin
// (spin: up=0, down=1). All fermionic signs follow from this ordering and
// from the convention |mask> = c^dag_{m1} c^dag_{m2} ... |vac> with
// m1 < m2 < ...  Changing the ordering changes individual matrix elements
// (it is a gauge choice) but no observable.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace hubbard {

enum class Spin : int { up = 0, down = 1 };

/// Label of one spin-orbital. The linear index is a bijection onto [0, 2L).
struct ModeIndex {
  int site = 0;
  Spin spin = Spin::up;

  int linear() const { return 2 * site + static_cast<int>(spin); }

  friend bool operator==(const ModeIndex&, const ModeIndex&) = default;
};

/// Occupation bitmask over 2L spin-orbitals; bit m set <=> mode m occupied.
struct FockState {
  std::uint64_t bits = 0;

  bool occupied(int mode) const { return (bits >> mode) & 1u; }
  int popcount() const { return __builtin_popcountll(bits); }

  friend auto operator<=>(const FockState&, const FockState&) = default;
};

/// Result of applying a creation/annihilation operator: the new state and
/// the fermionic sign (-1)^(number of occupied modes below the acted one).
struct SignedState {
  FockState state;
  int sign = 1;  // +1 or -1
};

// The "no result" case (creating on an occupied mode, annihilating an empty
// one) is an ordinary value, not an error: std::nullopt.
std::optional<SignedState> apply_create(FockState s, ModeIndex m);
std::optional<SignedState> apply_annihilate(FockState s, ModeIndex m);
std::optional<SignedState> apply_create(FockState s, int mode);
std::optional<SignedState> apply_annihilate(FockState s, int mode);

/// Bit test n_m |s> = 0 or 1.
int apply_number(FockState s, ModeIndex m);
int apply_number(FockState s, int mode);

int count_up(FockState s, int num_sites);
int count_down(FockState s, int num_sites);

/// All basis states with fixed particle numbers (N_up, N_down), sorted
/// strictly ascending by bitmask value.
struct Sector {
  int num_sites = 0;
  int n_up = 0;
  int n_down = 0;
  std::vector<FockState> states;

  std::size_t size() const { return states.size(); }
  /// Inverse lookup; throws std::out_of_range if the state is not in the sector.
  std::size_t index_of(FockState s) const;
};

/// Enumerate the (n_up, n_down) sector of an L-site chain.
/// Throws std::domain_error for counts outside [0, L] or L < 1.
Sector enumerate_sector(int num_sites, int n_up, int n_down);

std::uint64_t binomial(int n, int k);

}  // namespace hubbard
