#pragma once

/**
 * @file fpgroup.hpp
 * @brief Todd-Coxeter (HLT) coset enumeration over the trivial subgroup of <x, y | R>.
 */

#include <cstddef>
#include <vector>

#include "dessins/dessin.hpp"
#include "dessins/word.hpp"

namespace dessins {

inline constexpr std::size_t default_coset_cap = 100'000;

struct Presentation {
  std::vector<Word> relators;
  /// Maximum number of live cosets.
  std::size_t cap = default_coset_cap;
};

struct CosetEnumeration {
  /// Index of the normal closure of the relators in F(x, y), i.e. the order of the quotient.
  std::size_t index;
  /// Right action of x and y on the cosets; its kernel is the normal closure.
  Dessin action;
};

/// Throws CapExceeded (observed() = high-water mark of live cosets) when the table outgrows
/// the cap, which happens for infinite groups and for caps that are too small.
CosetEnumeration coset_enumerate(const Presentation &p);

} // namespace dessins
