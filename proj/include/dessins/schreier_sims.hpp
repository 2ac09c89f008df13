#pragma once

/**
 * @file schreier_sims.hpp
 * @brief Deterministic Schreier-Sims stabilizer chain.
 *
 * Base points are taken from an optional prefix, then extended with the
 * smallest point moved by whichever strong generator fixes the current base.
 * When word tracking is on, every transversal element and strong generator
 * carries a word in the input generators (at most two, read as x and y).
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dessins/perm.hpp"
#include "dessins/word.hpp"

namespace dessins {

class StabilizerChain {
public:
  struct Options {
    /// Points (1-based) forced to the front of the base, in order.
    std::vector<Point> base_prefix;
    /// Carry words in the generators; requires at most two generators.
    bool track_words = false;
    /// Abort with CapExceeded after this many sifts (0 = unlimited).
    std::size_t sift_budget = 0;
  };

  StabilizerChain() = default;
  StabilizerChain(std::vector<Permutation> generators, std::size_t degree, Options options);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t length() const noexcept { return levels_.size(); }

  /// 1-based base points.
  std::vector<Point> base() const;
  const std::vector<Permutation> &strong_generators() const noexcept { return strong_; }
  /// Empty unless word tracking was requested.
  const std::vector<Word> &strong_words() const noexcept { return strong_words_; }

  /// Indices into strong_generators() of those fixing the first `level` base points.
  const std::vector<std::size_t> &level_generators(std::size_t level) const {
    return levels_[level].gens;
  }
  /// Orbit of the base point at `level` under its level generators (0-based points).
  const std::vector<std::uint32_t> &orbit(std::size_t level) const { return levels_[level].orbit; }
  /// Transversal element mapping the base point of `level` to `point` (0-based).
  const Permutation &transversal(std::size_t level, std::uint32_t point) const;

  BigInt order() const;
  bool contains(const Permutation &p) const;

  /// Residue after sifting from level 0, plus the level where sifting stopped
  /// (== length() when it went all the way through).
  std::pair<Permutation, std::size_t> sift(const Permutation &p) const;

  std::size_t sifts_performed() const noexcept { return sifts_; }

private:
  struct Level {
    std::uint32_t base_point = 0;
    std::vector<std::size_t> gens;
    std::vector<std::uint32_t> orbit;
    std::vector<std::int32_t> slot; // per point: index into reps, or -1
    std::vector<Permutation> reps;
    std::vector<Permutation> rep_inverses;
    std::vector<Word> rep_words;
    // checked[slot][k] marks the Schreier generator (orbit point, gens[k]) as verified
    std::vector<std::vector<bool>> checked;
  };

  struct Residue {
    Permutation perm;
    Word word;
    std::size_t stopped_at;
  };

  void add_level(std::uint32_t base_point);
  void extend_orbit(std::size_t level);
  void add_strong_generator(Permutation g, Word w, std::size_t first_level, std::size_t last_level);
  Residue sift_from(Permutation g, Word w, std::size_t level);
  void run();

  std::size_t degree_ = 0;
  Options options_;
  std::vector<Permutation> strong_;
  std::vector<Word> strong_words_;
  std::vector<Level> levels_;
  std::size_t sifts_ = 0;
};

/// Smallest point (0-based) moved by p, if any.
std::optional<std::uint32_t> first_moved_point(const Permutation &p);

} // namespace dessins
