#pragma once

/**
 * @file group.hpp
 * @brief Finite permutation groups backed by a base and strong generating set.
 */

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dessins/perm.hpp"
#include "dessins/schreier_sims.hpp"

namespace dessins {

using GroupOrder = BigInt;

inline constexpr std::uint64_t default_element_cap = 1'000'000;

class PermGroup {
public:
  /// Deterministic BSGS of the group generated by `generators`.
  /// Throws DomainError on an empty list or mismatched degrees.
  static PermGroup from_generators(std::vector<Permutation> generators);

  std::size_t degree() const noexcept { return chain_.degree(); }
  const std::vector<Permutation> &generators() const noexcept { return generators_; }
  std::vector<Point> base() const { return chain_.base(); }
  const std::vector<Permutation> &strong_generators() const noexcept {
    return chain_.strong_generators();
  }
  const StabilizerChain &chain() const noexcept { return chain_; }

  GroupOrder order() const { return chain_.order(); }
  bool contains(const Permutation &p) const;

  /// Every element exactly once, sorted by image array. Throws CapExceeded if order() > cap.
  std::vector<Permutation> elements(std::uint64_t cap = default_element_cap) const;

  /// Elements commuting with every generator, sorted; always contains the identity.
  std::vector<Permutation> center(std::uint64_t cap = default_element_cap) const;

  /// Orbits on {1..degree}, each sorted, ordered by smallest point.
  std::vector<std::vector<Point>> orbits() const;
  bool is_transitive() const;
  bool is_full_symmetric() const;

private:
  PermGroup(std::vector<Permutation> generators, StabilizerChain chain)
      : generators_(std::move(generators)), chain_(std::move(chain)) {}

  std::vector<Permutation> generators_;
  StabilizerChain chain_;
};

BigInt factorial(std::size_t n);

/// Orbits of the group generated by `generators` (no BSGS needed).
std::vector<std::vector<Point>> orbits_of(const std::vector<Permutation> &generators);

} // namespace dessins
