#include "dessins/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>

#include <boost/integer/common_factor_rt.hpp>

#include "dessins/error.hpp"

namespace dessins {

// ---------------------------------------------------------------------------
// CycleType

CycleType::CycleType(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
  for (auto p : parts_)
    if (p == 0)
      throw DomainError("cycle type parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

std::size_t CycleType::degree() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), std::size_t{0});
}

CycleType CycleType::parse(std::string_view text) {
  std::vector<std::size_t> parts;
  std::size_t i = 0;
  auto read_int = [&](const char *what) {
    std::size_t start = i;
    std::size_t value = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      value = value * 10 + static_cast<std::size_t>(text[i] - '0');
      if (value > 1'000'000)
        throw ParseError(std::string(what) + " too large", start);
      ++i;
    }
    if (i == start)
      throw ParseError(std::string("expected ") + what, start);
    return value;
  };
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };

  skip();
  while (i < text.size()) {
    std::size_t at = i;
    std::size_t part = read_int("cycle length");
    std::size_t mult = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      mult = read_int("multiplicity");
    }
    if (part == 0 || mult == 0)
      throw ParseError("cycle lengths and multiplicities must be positive", at);
    parts.insert(parts.end(), mult, part);
    skip();
  }
  if (parts.empty())
    throw ParseError("empty cycle type", 0);
  return CycleType(std::move(parts));
}

std::string CycleType::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size();) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i])
      ++j;
    if (i != 0)
      os << ' ';
    os << parts_[i];
    if (j - i > 1)
      os << '^' << (j - i);
    i = j;
  }
  return os.str();
}

std::string CycleType::to_list_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i)
    os << (i ? "," : "") << parts_[i];
  return os.str();
}

// ---------------------------------------------------------------------------
// Permutation

Permutation from_raw(std::vector<std::uint32_t> img) { return Permutation(std::move(img)); }

Permutation Permutation::identity(std::size_t degree) {
  if (degree == 0)
    throw DomainError("permutation degree must be at least 1");
  std::vector<std::uint32_t> img(degree);
  std::iota(img.begin(), img.end(), 0u);
  return Permutation(std::move(img));
}

Permutation Permutation::from_images(std::span<const Point> images) {
  if (images.empty())
    throw DomainError("permutation degree must be at least 1");
  std::vector<std::uint32_t> img(images.size());
  std::vector<bool> seen(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    Point p = images[i];
    if (p < 1 || p > images.size())
      throw DomainError("image " + std::to_string(p) + " of point " + std::to_string(i + 1) +
                        " out of range [1.." + std::to_string(images.size()) + "]");
    if (seen[p - 1])
      throw DomainError("image " + std::to_string(p) + " repeated");
    seen[p - 1] = true;
    img[i] = p - 1;
  }
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(const std::vector<Cycle> &cycles, std::size_t degree) {
  auto id = identity(degree);
  std::vector<std::uint32_t> img(id.img_);
  std::vector<bool> seen(degree, false);
  for (const auto &c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      Point p = c[k];
      if (p < 1 || p > degree)
        throw DomainError("point " + std::to_string(p) + " out of range [1.." + std::to_string(degree) + "]");
      if (seen[p - 1])
        throw DomainError("point " + std::to_string(p) + " repeated");
      seen[p - 1] = true;
      img[p - 1] = c[(k + 1) % c.size()] - 1;
    }
  }
  return Permutation(std::move(img));
}

std::vector<Point> Permutation::images() const {
  std::vector<Point> out(img_.size());
  std::transform(img_.begin(), img_.end(), out.begin(), [](std::uint32_t v) { return v + 1; });
  return out;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i)
      return false;
  return true;
}

std::strong_ordering operator<=>(const Permutation &a, const Permutation &b) {
  if (auto c = a.img_.size() <=> b.img_.size(); c != 0)
    return c;
  return std::lexicographical_compare_three_way(a.img_.begin(), a.img_.end(), b.img_.begin(),
                                                b.img_.end());
}

Permutation Permutation::operator*(const Permutation &rhs) const { return compose(*this, rhs); }

Permutation compose(const Permutation &p, const Permutation &q) {
  if (p.degree() != q.degree())
    throw DomainError("degree mismatch: " + std::to_string(p.degree()) + " vs " +
                      std::to_string(q.degree()));
  std::vector<std::uint32_t> img(p.degree());
  for (std::size_t i = 0; i < img.size(); ++i)
    img[i] = q.raw(p.raw(i));
  return from_raw(std::move(img));
}

Permutation inverse(const Permutation &p) {
  std::vector<std::uint32_t> img(p.degree());
  for (std::size_t i = 0; i < img.size(); ++i)
    img[p.raw(i)] = static_cast<std::uint32_t>(i);
  return from_raw(std::move(img));
}

Permutation power(const Permutation &p, long long k) {
  Permutation base = k < 0 ? inverse(p) : p;
  unsigned long long e = k < 0 ? 0ull - static_cast<unsigned long long>(k) : static_cast<unsigned long long>(k);
  Permutation result = Permutation::identity(p.degree());
  while (e) {
    if (e & 1u)
      result = compose(result, base);
    base = compose(base, base);
    e >>= 1u;
  }
  return result;
}

Permutation conjugate(const Permutation &p, const Permutation &g) {
  return compose(compose(inverse(g), p), g);
}

std::vector<Cycle> all_cycles(const Permutation &p) {
  std::vector<Cycle> out;
  std::vector<bool> seen(p.degree(), false);
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (seen[i])
      continue;
    Cycle c;
    for (std::uint32_t j = static_cast<std::uint32_t>(i); !seen[j]; j = p.raw(j)) {
      seen[j] = true;
      c.push_back(j + 1);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Cycle> cycles(const Permutation &p) {
  auto all = all_cycles(p);
  std::erase_if(all, [](const Cycle &c) { return c.size() < 2; });
  return all;
}

CycleType cycle_type(const Permutation &p) {
  std::vector<std::size_t> parts;
  for (const auto &c : all_cycles(p))
    parts.push_back(c.size());
  return CycleType(std::move(parts));
}

std::size_t cycle_count(const Permutation &p) {
  std::size_t count = 0;
  std::vector<bool> seen(p.degree(), false);
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (seen[i])
      continue;
    ++count;
    for (std::uint32_t j = static_cast<std::uint32_t>(i); !seen[j]; j = p.raw(j))
      seen[j] = true;
  }
  return count;
}

BigInt order(const Permutation &p) {
  BigInt result = 1;
  for (const auto &c : all_cycles(p)) {
    BigInt len = c.size();
    result = result / boost::multiprecision::gcd(result, len) * len;
  }
  return result;
}

Permutation direct_sum_pair(const Permutation &p1, const Permutation &p2) {
  const auto n1 = static_cast<std::uint32_t>(p1.degree());
  std::vector<std::uint32_t> img(p1.raw().begin(), p1.raw().end());
  img.reserve(p1.degree() + p2.degree());
  for (auto v : p2.raw())
    img.push_back(v + n1);
  return from_raw(std::move(img));
}

// ---------------------------------------------------------------------------
// Cycle notation

namespace {

class CycleParser {
public:
  CycleParser(std::string_view text, std::size_t degree) : text_(text), degree_(degree) {}

  Permutation run() {
    if (degree_ == 0)
      throw DomainError("permutation degree must be at least 1");
    std::vector<std::uint32_t> img(degree_);
    std::iota(img.begin(), img.end(), 0u);
    std::vector<bool> seen(degree_, false);

    skip_ws();
    while (pos_ < text_.size()) {
      expect('(');
      skip_ws();
      if (peek() == ')') {
        ++pos_;
        skip_ws();
        continue;
      }
      std::vector<Point> cycle;
      for (;;) {
        skip_ws();
        std::size_t at = pos_;
        Point p = read_point();
        if (seen[p - 1])
          throw ParseError("point " + std::to_string(p) + " repeated", at);
        seen[p - 1] = true;
        cycle.push_back(p);
        skip_ws();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        expect(')');
        break;
      }
      for (std::size_t k = 0; k < cycle.size(); ++k)
        img[cycle[k] - 1] = cycle[(k + 1) % cycle.size()] - 1;
      skip_ws();
    }
    return from_raw(std::move(img));
  }

private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  void expect(char c) {
    if (peek() != c) {
      std::string got = pos_ < text_.size() ? std::string("'") + text_[pos_] + "'" : "end of input";
      throw ParseError(std::string("expected '") + c + "', found " + got, pos_);
    }
    ++pos_;
  }

  Point read_point() {
    std::size_t start = pos_;
    unsigned long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<unsigned>(text_[pos_] - '0');
      if (value > degree_)
        break;
      ++pos_;
    }
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start)
      throw ParseError("expected a point", start);
    if (value < 1 || value > degree_)
      throw ParseError("point " + std::string(text_.substr(start, pos_ - start)) +
                           " out of range [1.." + std::to_string(degree_) + "]",
                       start);
    return static_cast<Point>(value);
  }

  std::string_view text_;
  std::size_t degree_;
  std::size_t pos_ = 0;
};

} // namespace

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  return CycleParser(text, degree).run();
}

std::string to_cycle_string(const Permutation &p) {
  auto cs = cycles(p);
  if (cs.empty())
    return "()";
  std::string out;
  for (const auto &c : cs) {
    out += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k)
        out += ',';
      out += std::to_string(c[k]);
    }
    out += ')';
  }
  return out;
}

std::ostream &operator<<(std::ostream &os, const Permutation &p) { return os << to_cycle_string(p); }

std::size_t PermutationHash::operator()(const Permutation &p) const noexcept {
  // FNV-1a over the image array
  std::size_t h = 1469598103934665603ull;
  for (auto v : p.raw()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

} // namespace dessins
