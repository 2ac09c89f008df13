#pragma once

/**
 * @file dessin_file.hpp
 * @brief The four-line dessin file format.
 *
 *     name <string>
 *     degree <n>
 *     x <cycles>
 *     y <cycles>
 *
 * Cycles use the cycle-notation grammar of perm.hpp; points are 1-based and fixed
 * points are omitted. Blank trailing lines are ignored.
 */

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "dessins/dessin.hpp"

namespace dessins {

struct DessinFile {
  std::string name;
  std::size_t degree = 1;
  std::vector<Cycle> sigma_x;
  std::vector<Cycle> sigma_y;

  /// Errors are reported as "<source>:<line>: <message>".
  static DessinFile parse(std::string_view text, const std::string &source = "<input>");
  static DessinFile from_dessin(const Dessin &d);

  Dessin to_dessin() const;
  std::string to_string() const;
};

Dessin read_dessin_file(const std::filesystem::path &path);
void write_dessin_file(const std::filesystem::path &path, const Dessin &d);

/// x^3y^2(x^3y^2)^x(x^3y^2)^(x^2): trivial under h0's monodromy, (4,10)(6,12) under h1's.
Word reference_witness();

} // namespace dessins
