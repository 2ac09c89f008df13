#include "dessins/dessin_file.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "dessins/error.hpp"
#include "dessins/word.hpp"

namespace dessins {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

} // namespace

DessinFile DessinFile::parse(std::string_view text, const std::string &source) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r')
      line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  while (!lines.empty() && trim(lines.back()).empty())
    lines.pop_back();

  auto fail = [&](std::size_t line, const std::string &msg) -> Error {
    return Error(source + ":" + std::to_string(line) + ": " + msg);
  };
  if (lines.size() != 4)
    throw fail(lines.size() < 4 ? lines.size() + 1 : 5,
               "expected exactly 4 lines (name, degree, x, y), found " + std::to_string(lines.size()));

  auto field = [&](std::size_t i, std::string_view key) {
    std::string_view line = trim(lines[i]);
    if (line.substr(0, key.size()) != key ||
        (line.size() > key.size() && !std::isspace(static_cast<unsigned char>(line[key.size()]))))
      throw fail(i + 1, "expected '" + std::string(key) + " ...'");
    return trim(line.substr(key.size()));
  };

  DessinFile f;
  f.name = std::string(field(0, "name"));
  if (f.name.empty())
    throw fail(1, "empty name");

  auto degree_text = field(1, "degree");
  if (degree_text.empty() || degree_text.size() > 7 ||
      !std::all_of(degree_text.begin(), degree_text.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw fail(2, "degree must be a positive integer");
  f.degree = std::stoul(std::string(degree_text));
  if (f.degree == 0)
    throw fail(2, "degree must be a positive integer");

  for (std::size_t i = 2; i < 4; ++i) {
    auto body = field(i, i == 2 ? "x" : "y");
    try {
      auto cycles_of = cycles(parse_cycles(body, f.degree));
      (i == 2 ? f.sigma_x : f.sigma_y) = std::move(cycles_of);
    } catch (const ParseError &e) {
      throw fail(i + 1, e.what());
    }
  }
  return f;
}

DessinFile DessinFile::from_dessin(const Dessin &d) {
  return {d.name().empty() ? std::string("unnamed") : d.name(), d.degree(), cycles(d.sigma_x()),
          cycles(d.sigma_y())};
}

Dessin DessinFile::to_dessin() const {
  return Dessin(Permutation::from_cycles(sigma_x, degree), Permutation::from_cycles(sigma_y, degree),
                name);
}

std::string DessinFile::to_string() const {
  std::ostringstream os;
  os << "name " << name << '\n'
     << "degree " << degree << '\n'
     << "x " << to_cycle_string(Permutation::from_cycles(sigma_x, degree)) << '\n'
     << "y " << to_cycle_string(Permutation::from_cycles(sigma_y, degree)) << '\n';
  return os.str();
}

Dessin read_dessin_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error("cannot open dessin file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const auto file = DessinFile::parse(buffer.str(), path.string());
  try {
    return file.to_dessin();
  } catch (const DomainError &e) {
    throw DomainError(path.string() + ": " + e.what());
  }
}

void write_dessin_file(const std::filesystem::path &path, const Dessin &d) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw Error("cannot write dessin file '" + path.string() + "'");
  out << DessinFile::from_dessin(d).to_string();
  if (!out)
    throw Error("failed writing dessin file '" + path.string() + "'");
}

Word reference_witness() { return parse_word("x^3y^2(x^3y^2)^x(x^3y^2)^(x^2)"); }

} // namespace dessins
