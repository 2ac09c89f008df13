#pragma once

/**
 * @file perm.hpp
 * @brief Permutations of {1..n}, cycle notation, and cycle types.
 *
 * Points are 1-based in every public signature. Permutations act on the
 * right: `compose(p, q)` (also `p * q`) applies `p` first and then `q`.
 */

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace dessins {

using BigInt = boost::multiprecision::cpp_int;
using Point = std::uint32_t;
using Cycle = std::vector<Point>;

/// Parts of a cycle decomposition, sorted in non-increasing order, fixed points included.
class CycleType {
public:
  CycleType() = default;
  explicit CycleType(std::vector<std::size_t> parts);

  /// Accepts "2,2,1,1", "2 2 1 1", "2^2 1^2" and mixtures thereof.
  static CycleType parse(std::string_view text);

  const std::vector<std::size_t> &parts() const noexcept { return parts_; }
  std::size_t degree() const noexcept;
  std::size_t cycle_count() const noexcept { return parts_.size(); }

  /// Exponential notation, e.g. "2^2 1^2".
  std::string to_string() const;
  /// Plain comma-separated parts, e.g. "2,2,1,1".
  std::string to_list_string() const;

  auto operator<=>(const CycleType &) const = default;

private:
  std::vector<std::size_t> parts_;
};

class Permutation {
public:
  /// The identity on one point.
  Permutation() : img_{0} {}

  static Permutation identity(std::size_t degree);
  /// `images[i-1]` is the image of point i. Throws DomainError unless a bijection of {1..n}.
  static Permutation from_images(std::span<const Point> images);
  /// Builds from disjoint cycles; throws DomainError on out-of-range or repeated points.
  static Permutation from_cycles(const std::vector<Cycle> &cycles, std::size_t degree);

  std::size_t degree() const noexcept { return img_.size(); }
  Point operator()(Point p) const noexcept { return img_[p - 1] + 1; }

  /// 0-based image array, for algorithms that index directly.
  std::span<const std::uint32_t> raw() const noexcept { return img_; }
  std::uint32_t raw(std::size_t i) const noexcept { return img_[i]; }

  /// 1-based image array.
  std::vector<Point> images() const;

  bool is_identity() const noexcept;

  friend bool operator==(const Permutation &, const Permutation &) = default;
  /// Degree first, then lexicographic on image arrays.
  friend std::strong_ordering operator<=>(const Permutation &a, const Permutation &b);

  /// compose(*this, rhs): this first, then rhs.
  Permutation operator*(const Permutation &rhs) const;

private:
  explicit Permutation(std::vector<std::uint32_t> img) : img_(std::move(img)) {}
  friend Permutation from_raw(std::vector<std::uint32_t> img);

  std::vector<std::uint32_t> img_;
};

/// Trusted constructor from a 0-based image array (no validation).
Permutation from_raw(std::vector<std::uint32_t> img);

/// "p first, then q". Throws DomainError on degree mismatch.
Permutation compose(const Permutation &p, const Permutation &q);
Permutation inverse(const Permutation &p);
/// p^k for any integer k.
Permutation power(const Permutation &p, long long k);
/// g^{-1} p g
Permutation conjugate(const Permutation &p, const Permutation &g);

/// Least k >= 1 with p^k == identity.
BigInt order(const Permutation &p);
CycleType cycle_type(const Permutation &p);
/// Number of cycles, fixed points included.
std::size_t cycle_count(const Permutation &p);
/// Non-trivial cycles, each starting at its smallest point, ordered by that point.
std::vector<Cycle> cycles(const Permutation &p);
/// All cycles including fixed points, same ordering rule.
std::vector<Cycle> all_cycles(const Permutation &p);

/// Acts as p1 on {1..n1} and as p2 shifted by n1 on {n1+1..n1+n2}.
Permutation direct_sum_pair(const Permutation &p1, const Permutation &p2);

/// Parses `perm := cycle* ; cycle := '(' int (',' int)* ')' | '()'`, whitespace ignored.
Permutation parse_cycles(std::string_view text, std::size_t degree);
/// Cycle notation without fixed points; the identity prints as "()".
std::string to_cycle_string(const Permutation &p);

std::ostream &operator<<(std::ostream &os, const Permutation &p);

struct PermutationHash {
  std::size_t operator()(const Permutation &p) const noexcept;
};

} // namespace dessins
