#pragma once

/**
 * @file dessin.hpp
 * @brief Dessins d'enfants as transitive pairs of permutations.
 *
 * Edge e is sent to e^sigma_x by the black-vertex rotation and to e^sigma_y by
 * the white-vertex rotation. The face rotation is z = (sigma_x sigma_y)^-1.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dessins/group.hpp"
#include "dessins/perm.hpp"

namespace dessins {

struct Passport {
  CycleType x, y, z;

  /// "PX|PY|PZ" with each part in CycleType::parse syntax.
  static Passport parse(std::string_view text);
  std::size_t degree() const noexcept { return x.degree(); }
  /// Genus implied by the cycle counts (throws DomainError if the counts are inconsistent).
  long long genus() const;
  std::string to_string() const;

  auto operator<=>(const Passport &) const = default;
};

/// (|x|, |y|, |xy|) in the monodromy group of a regular dessin.
struct RegularType {
  std::uint64_t p = 1, q = 1, r = 1;

  std::string to_string() const;
  auto operator<=>(const RegularType &) const = default;
};

class Dessin {
public:
  /// Trivial dessin: one edge.
  Dessin();
  /// Throws DomainError on degree mismatch or if <sigma_x, sigma_y> is not transitive
  /// (the message lists the orbits).
  Dessin(Permutation sigma_x, Permutation sigma_y, std::string name = {});

  std::size_t degree() const noexcept { return sx_.degree(); }
  const Permutation &sigma_x() const noexcept { return sx_; }
  const Permutation &sigma_y() const noexcept { return sy_; }
  /// (sigma_x sigma_y)^-1
  Permutation sigma_z() const;
  const std::string &name() const noexcept { return name_; }
  Dessin with_name(std::string name) const;

  friend bool operator==(const Dessin &a, const Dessin &b) {
    return a.sx_ == b.sx_ && a.sy_ == b.sy_;
  }

private:
  Permutation sx_, sy_;
  std::string name_;
};

/// Edge map between dessins; edge_map[e-1] is the image of edge e.
struct CoveringMap {
  Dessin source;
  Dessin target;
  std::vector<Point> edge_map;

  /// Equivariance with both generators and surjectivity, checked edge by edge.
  bool is_valid() const;
};

Dessin new_dessin(const Permutation &sigma_x, const Permutation &sigma_y);

Passport passport(const Dessin &d);
/// From 2 - 2g = c(sx) + c(sy) + c(sx sy) - n.
long long genus(const Dessin &d);
PermGroup monodromy_group(const Dessin &d);
bool is_regular(const Dessin &d);

/// The same dessin with edge e renamed to e^g.
Dessin relabel(const Dessin &d, const Permutation &g);

/// Edges are the elements of the monodromy group in PermGroup::elements order; generators act
/// by right multiplication. Throws CapExceeded if the group order exceeds `cap`.
Dessin regular_cover(const Dessin &d, std::uint64_t cap = default_element_cap);
/// The map "element g -> image of edge 1 under g" from regular_cover(d) onto d.
CoveringMap regular_cover_map(const Dessin &d, std::uint64_t cap = default_element_cap);

/// An edge bijection b (as a permutation, e -> b(e)) with b(e^sigma) == b(e)^sigma' for both
/// generators, if one exists.
std::optional<Permutation> isomorphic(const Dessin &d1, const Dessin &d2);
/// All self-isomorphisms, sorted.
std::vector<Permutation> automorphisms(const Dessin &d);

/// Blocks are renumbered 1..k by increasing smallest member. Throws DomainError if the
/// partition does not cover {1..n} exactly once or is not invariant.
Dessin quotient_by_partition(const Dessin &d, const std::vector<std::vector<Point>> &blocks);
/// The map from d onto its quotient by `blocks`.
CoveringMap quotient_map(const Dessin &d, const std::vector<std::vector<Point>> &blocks);

/// Quotient of a regular dessin by a subgroup of the center of its monodromy group.
Dessin quotient_by_central(const Dessin &regular, const std::vector<Permutation> &central);

/// Throws DomainError if d is not regular.
RegularType type_of_regular(const Dessin &d);

/// Euler characteristic N (1/p + 1/q + 1/r - 1); throws DomainError if not integral.
BigInt euler_rh(const BigInt &degree, const RegularType &type);
/// (2 - chi) / 2; throws DomainError if chi is odd or exceeds 2.
BigInt genus_from_euler(const BigInt &chi);

/// Canonical byte encoding: equal iff the dessins are isomorphic.
std::string canonical_form(const Dessin &d);

inline constexpr std::size_t default_enumeration_degree_cap = 8;

/// All dessins with the given passport up to isomorphism, sorted by canonical form.
/// sigma_x is fixed to the canonical permutation of its cycle type.
std::vector<Dessin> enumerate_by_passport(const Passport &p,
                                          std::size_t cap_degree = default_enumeration_degree_cap);

/// Cycles of lengths parts[0], parts[1], ... on consecutive points starting at 1.
Permutation canonical_permutation(const CycleType &type);

} // namespace dessins
