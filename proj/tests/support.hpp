#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "dessins/dessin.hpp"
#include "dessins/dessin_file.hpp"
#include "dessins/word.hpp"

namespace testing {

inline std::string data_path(const std::string &name) {
  return std::string(DESSINS_DATA_DIR) + "/" + name;
}

inline dessins::Dessin load(const std::string &name) {
  return dessins::read_dessin_file(data_path(name));
}

inline std::mt19937_64 &rng() {
  static std::mt19937_64 gen(0x5eed'd355'1a5ULL);
  return gen;
}

inline std::size_t uniform(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng());
}

inline dessins::Permutation random_perm(std::size_t n) {
  std::vector<dessins::Point> img(n);
  std::iota(img.begin(), img.end(), dessins::Point{1});
  std::shuffle(img.begin(), img.end(), rng());
  return dessins::Permutation::from_images(img);
}

inline dessins::Word random_word(std::size_t max_letters) {
  dessins::Word w;
  const std::size_t len = uniform(0, max_letters);
  for (std::size_t i = 0; i < len; ++i) {
    long long e = static_cast<long long>(uniform(1, 3));
    if (uniform(0, 1))
      e = -e;
    w *= dessins::Word::letter(uniform(0, 1) ? dessins::Generator::y : dessins::Generator::x, e);
  }
  return w;
}

/// A random transitive pair on n points; retries until transitive.
inline dessins::Dessin random_dessin(std::size_t n) {
  for (;;) {
    auto sx = random_perm(n), sy = random_perm(n);
    auto orbits = dessins::orbits_of({sx, sy});
    if (orbits.size() == 1)
      return dessins::Dessin(sx, sy);
  }
}

/// Closure by breadth-first multiplication; the slow oracle for group orders.
inline std::set<dessins::Permutation> closure(const std::vector<dessins::Permutation> &gens,
                                              std::size_t degree) {
  std::set<dessins::Permutation> seen{dessins::Permutation::identity(degree)};
  std::vector<dessins::Permutation> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<dessins::Permutation> next;
    for (const auto &p : frontier)
      for (const auto &g : gens) {
        auto q = dessins::compose(p, g);
        if (seen.insert(q).second)
          next.push_back(q);
      }
    frontier = std::move(next);
  }
  return seen;
}

} // namespace testing
