#pragma once

/**
 * @file triangle.hpp
 * @brief Triangle-group types, the inclusion table, and normality of regular dessins in
 *        larger triangle groups.
 *
 * A type (p, q, r) stands for Delta(p,q,r) = <x, y | x^p, y^q, (xy)^r>. Reordering the
 * entries gives an isomorphic group; inclusions are reported in the ordering of the query.
 */

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dessins/dessin.hpp"
#include "dessins/word.hpp"

namespace dessins {

struct TriangleType {
  long long p = 2, q = 2, r = 2;

  enum class Geometry { spherical, euclidean, hyperbolic };

  /// "p,q,r"
  static TriangleType parse(std::string_view text);
  Geometry geometry() const;
  std::string to_string() const;
  bool same_up_to_order(const TriangleType &other) const;

  auto operator<=>(const TriangleType &) const = default;
};

/// Conjugation of the sub group by a coset representative of the super group.
struct CosetConjugation {
  Word representative; // in the super generators
  Word image_x;        // in the sub generators
  Word image_y;
};

struct Inclusion {
  TriangleType sub;
  TriangleType super;
  long long index = 0;
  /// Images of the sub generators x, y, z as words in the super generators.
  std::optional<std::array<Word, 3>> generator_images;
  std::vector<CosetConjugation> coset_action;
  /// Table line this inclusion was instantiated from.
  std::size_t source_line = 0;

  std::string to_string() const;
};

class InclusionTable {
public:
  /// Parses and validates the table text; throws Error naming the offending line.
  static InclusionTable parse(std::string_view text);
  /// The table compiled in from data/triangle_inclusions.txt.
  static const InclusionTable &builtin();

  std::size_t size() const noexcept { return rows_.size(); }

  /// Every inclusion with `t` (in its given ordering) as sub type.
  std::vector<Inclusion> inclusions_of(const TriangleType &t) const;

  struct Entry {
    long long coefficient; // value if parameter == 0
    char parameter;        // 0 for a constant
  };
  struct Row {
    std::array<Entry, 3> sub, super;
    long long index;
    std::optional<std::array<Word, 3>> images;
    std::vector<CosetConjugation> conjugations;
    std::size_t line;
  };
  const std::vector<Row> &rows() const noexcept { return rows_; }

private:
  std::vector<Row> rows_;
};

struct MaximalityResult {
  bool maximal;
  std::vector<Inclusion> inclusions;
};

/// Throws DomainError for entries below 2 or spherical types.
MaximalityResult is_maximal(const TriangleType &t,
                            const InclusionTable &table = InclusionTable::builtin());

/// Whether the kernel of the regular dessin's monodromy stays normal in inc.super, tested by
/// checking that every coset conjugation extends to an automorphism of the monodromy group.
/// Throws DomainError if the dessin is not regular, a relation of inc.sub fails, or the
/// inclusion carries no conjugation data.
bool normal_in_supergroup(const Dessin &regular, const Inclusion &inc);

/// The relabelling x -> image_x, y -> image_y extends to an automorphism of <sx, sy>
/// (subdirect order test).
bool extends_to_automorphism(const Permutation &sx, const Permutation &sy, const Word &image_x,
                             const Word &image_y);

} // namespace dessins
