#pragma once

/**
 * @file word.hpp
 * @brief Freely reduced words in the free group on {x, y}.
 *
 * Conventions: `a^b` is b^-1 a b, and `[a,b]` is a^-1 b^-1 a b.
 */

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "dessins/perm.hpp"

namespace dessins {

enum class Generator : std::uint8_t { x = 0, y = 1 };

struct Letter {
  Generator gen;
  long long exp; // never zero

  friend bool operator==(const Letter &, const Letter &) = default;
};

/// Element of the free group F(x, y), always stored freely reduced:
/// adjacent letters have distinct generators and exponents are nonzero.
class Word {
public:
  Word() = default;

  static Word x(long long exp = 1) { return letter(Generator::x, exp); }
  static Word y(long long exp = 1) { return letter(Generator::y, exp); }
  static Word letter(Generator g, long long exp = 1);

  const std::vector<Letter> &letters() const noexcept { return letters_; }
  bool is_identity() const noexcept { return letters_.empty(); }
  /// Sum of |exponent| over letters.
  std::size_t length() const noexcept;

  Word inverse() const;
  Word pow(long long k) const;
  /// b^-1 * this * b
  Word conjugated_by(const Word &b) const;

  Word operator*(const Word &rhs) const;
  Word &operator*=(const Word &rhs);

  /// Juxtaposition with '^' exponents, e.g. "x^3y^2x^-1"; the identity prints as "1".
  std::string to_string() const;

  friend bool operator==(const Word &, const Word &) = default;

private:
  void push(Letter l);

  std::vector<Letter> letters_;
};

/// a^-1 b^-1 a b
Word commutator(const Word &a, const Word &b);

/// Parses `word := term+ ; term := atom ('^' (int | atom))* ;
/// atom := 'x' | 'y' | '(' word ')' | '[' word ',' word ']'`. Whitespace is ignored.
/// A lone "1" denotes the identity.
Word parse_word(std::string_view text);

/// Image of w under x -> sx, y -> sy.
Permutation evaluate(const Word &w, const Permutation &sx, const Permutation &sy);

/// Image of w under the endomorphism x -> image_x, y -> image_y.
Word substitute(const Word &w, const Word &image_x, const Word &image_y);

long long exponent_sum(const Word &w, Generator g);

std::ostream &operator<<(std::ostream &os, const Word &w);

} // namespace dessins
