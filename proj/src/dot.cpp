#include "dessins/dot.hpp"

#include <sstream>

namespace dessins {

std::string export_dot(const Dessin &d) {
  const auto black = all_cycles(d.sigma_x());
  const auto white = all_cycles(d.sigma_y());
  std::vector<std::size_t> black_of(d.degree()), white_of(d.degree());
  for (std::size_t i = 0; i < black.size(); ++i)
    for (Point e : black[i])
      black_of[e - 1] = i + 1;
  for (std::size_t i = 0; i < white.size(); ++i)
    for (Point e : white[i])
      white_of[e - 1] = i + 1;

  std::ostringstream os;
  os << "graph \"" << (d.name().empty() ? "dessin" : d.name()) << "\" {\n";
  os << "  node [shape=circle, label=\"\", width=0.15];\n";
  for (std::size_t i = 1; i <= black.size(); ++i)
    os << "  b" << i << " [style=filled, fillcolor=black];\n";
  for (std::size_t i = 1; i <= white.size(); ++i)
    os << "  w" << i << " [style=filled, fillcolor=white];\n";
  for (std::size_t e = 0; e < d.degree(); ++e)
    os << "  b" << black_of[e] << " -- w" << white_of[e] << " [label=\"" << e + 1 << "\"];\n";
  os << "}\n";
  return os.str();
}

} // namespace dessins
