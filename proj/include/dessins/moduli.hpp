#pragma once

/**
 * @file moduli.hpp
 * @brief Kernel (core) comparison of monodromy actions and Galois-orbit reports.
 *
 * Two dessins have the same regular cover exactly when their monodromy
 * homomorphisms F(x,y) -> Sym(n) have the same kernel. That is decided without
 * building covers: the kernels agree iff the diagonal group generated by
 * (sx1 + sx2, sy1 + sy2) on n1 + n2 points has the same order as both factors.
 */

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dessins/dessin.hpp"
#include "dessins/word.hpp"

namespace dessins {

inline constexpr std::size_t default_witness_budget = 100'000;

/// Group generated by direct_sum_pair(sx1, sx2) and direct_sum_pair(sy1, sy2).
PermGroup subdirect_group(const Dessin &d1, const Dessin &d2);

bool kernels_equal(const Dessin &d1, const Dessin &d2);

/// A word trivial under one dessin and nontrivial under the other, or nullopt if the kernels
/// agree. The result is re-verified by evaluation. Throws CapExceeded past `budget` sifts.
std::optional<Word> distinguishing_witness(const Dessin &d1, const Dessin &d2,
                                           std::size_t budget = default_witness_budget);

struct DessinSummary {
  std::string name;
  Passport passport;
  long long genus;
  GroupOrder monodromy_order;
  /// Degree and genus of the regular cover, computed from the group order and element orders.
  GroupOrder cover_degree;
  BigInt cover_genus;
};

struct WitnessEntry {
  std::size_t i, j;
  Word word;
};

struct OrbitReport {
  std::vector<DessinSummary> dessins;
  std::vector<std::vector<bool>> isomorphic;
  std::vector<std::vector<bool>> kernels_equal;
  /// Subdirect orders, symmetric; the diagonal holds the monodromy orders.
  std::vector<std::vector<GroupOrder>> subdirect_orders;
  std::vector<WitnessEntry> witnesses;
};

/// Throws DomainError on an empty list.
OrbitReport orbit_report(const std::vector<Dessin> &dessins, bool with_witnesses = false,
                         std::size_t budget = default_witness_budget);

/// Genus of the regular cover via the Euler characteristic |G| (1/|x| + 1/|y| + 1/|xy| - 1).
BigInt regular_cover_genus(const Dessin &d);

} // namespace dessins
