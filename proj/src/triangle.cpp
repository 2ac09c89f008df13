#include "dessins/triangle.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "dessins/error.hpp"
#include "dessins/fpgroup.hpp"
#include "dessins/triangle_table.hpp"

namespace dessins {

// ---------------------------------------------------------------------------
// TriangleType

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  return out;
}

long long parse_integer(std::string_view s, const std::string &what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError("expected a positive integer for " + what + ", got '" + std::string(s) + "'", 0);
  if (s.size() > 9)
    throw ParseError(what + " too large", 0);
  return std::stoll(std::string(s));
}

} // namespace

TriangleType TriangleType::parse(std::string_view text) {
  const auto first = text.find_first_not_of(" \t");
  const auto last = text.find_last_not_of(" \t");
  std::string_view inner = first == std::string_view::npos ? text.substr(0, 0)
                                                           : text.substr(first, last - first + 1);
  if (inner.size() >= 2 && inner.front() == '(' && inner.back() == ')')
    inner = inner.substr(1, inner.size() - 2);
  auto parts = split(inner, ',');
  if (parts.size() != 3)
    throw ParseError("triangle type needs three comma-separated entries, got '" +
                     std::string(text) + "'", 0);
  return {parse_integer(parts[0], "p"), parse_integer(parts[1], "q"), parse_integer(parts[2], "r")};
}

TriangleType::Geometry TriangleType::geometry() const {
  // compare 1/p + 1/q + 1/r with 1
  const long long lhs = q * r + p * r + p * q;
  const long long rhs = p * q * r;
  if (lhs > rhs)
    return Geometry::spherical;
  if (lhs == rhs)
    return Geometry::euclidean;
  return Geometry::hyperbolic;
}

std::string TriangleType::to_string() const {
  return "(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + ")";
}

bool TriangleType::same_up_to_order(const TriangleType &other) const {
  std::array<long long, 3> a{p, q, r}, b{other.p, other.q, other.r};
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

std::string Inclusion::to_string() const {
  return sub.to_string() + " < " + super.to_string() + " index " + std::to_string(index);
}

// ---------------------------------------------------------------------------
// Relabellings of the generators of a triangle group

namespace {

struct Relabelling {
  std::array<int, 3> positions; // new type entry i is old entry positions[i]
  const char *x;                // new x as a word in the old x, y
  const char *y;
};

const std::array<Relabelling, 6> &relabellings() {
  static const std::array<Relabelling, 6> table{{
      {{0, 1, 2}, "x", "y"},
      {{1, 2, 0}, "y", "y^-1x^-1"},
      {{2, 0, 1}, "y^-1x^-1", "x"},
      {{1, 0, 2}, "y^-1", "x^-1"},
      {{0, 2, 1}, "x^-1", "xy"},
      {{2, 1, 0}, "xy", "y^-1"},
  }};
  return table;
}

// Word pair (a, b) expressing the old generators in the new ones.
std::pair<Word, Word> inverse_relabelling(const Word &nx, const Word &ny) {
  for (const auto &r : relabellings()) {
    Word ax = parse_word(r.x), ay = parse_word(r.y);
    if (substitute(ax, nx, ny) == Word::x() && substitute(ay, nx, ny) == Word::y())
      return {ax, ay};
  }
  throw std::logic_error("relabelling has no inverse in the table");
}

std::array<long long, 3> as_array(const TriangleType &t) { return {t.p, t.q, t.r}; }

TriangleType from_array(const std::array<long long, 3> &a) { return {a[0], a[1], a[2]}; }

using Assignment = std::map<char, long long>;

std::optional<long long> instantiate(const InclusionTable::Entry &e, const Assignment &vars) {
  if (e.parameter == 0)
    return e.coefficient;
  auto it = vars.find(e.parameter);
  if (it == vars.end())
    return std::nullopt;
  return e.coefficient * it->second;
}

std::optional<std::array<long long, 3>> instantiate(const std::array<InclusionTable::Entry, 3> &t,
                                                    const Assignment &vars) {
  std::array<long long, 3> out{};
  for (int i = 0; i < 3; ++i) {
    auto v = instantiate(t[static_cast<std::size_t>(i)], vars);
    if (!v)
      return std::nullopt;
    out[static_cast<std::size_t>(i)] = *v;
  }
  return out;
}

bool entries_at_least_two(const std::array<long long, 3> &a) {
  return std::all_of(a.begin(), a.end(), [](long long v) { return v >= 2; });
}

// Hyperbolic measure numerator/denominator: 1 - 1/p - 1/q - 1/r.
std::pair<long long, long long> measure(const std::array<long long, 3> &t) {
  const long long p = t[0], q = t[1], r = t[2];
  return {p * q * r - q * r - p * r - p * q, p * q * r};
}

InclusionTable::Entry parse_entry(std::string_view s) {
  if (s.empty())
    throw DomainError("empty type entry");
  std::size_t i = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
    ++i;
  long long coefficient = i ? parse_integer(s.substr(0, i), "type entry") : 1;
  if (i == s.size())
    return {coefficient, 0};
  if (i + 1 != s.size() || !std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == 'x' ||
      s[i] == 'y')
    throw DomainError("bad type entry '" + std::string(s) + "'");
  return {coefficient, s[i]};
}

std::array<InclusionTable::Entry, 3> parse_pattern(std::string_view s) {
  auto parts = split(s, ',');
  if (parts.size() != 3)
    throw DomainError("type needs three entries: '" + std::string(s) + "'");
  return {parse_entry(parts[0]), parse_entry(parts[1]), parse_entry(parts[2])};
}

std::vector<char> parameters_of(const std::array<InclusionTable::Entry, 3> &t) {
  std::vector<char> out;
  for (const auto &e : t)
    if (e.parameter && std::find(out.begin(), out.end(), e.parameter) == out.end())
      out.push_back(e.parameter);
  return out;
}

// All assignments of `params` with values in [lo, hi].
std::vector<Assignment> assignments(const std::vector<char> &params, long long lo, long long hi) {
  std::vector<Assignment> out{{}};
  for (char c : params) {
    std::vector<Assignment> next;
    for (const auto &a : out)
      for (long long v = lo; v <= hi; ++v) {
        Assignment b = a;
        b[c] = v;
        next.push_back(std::move(b));
      }
    out = std::move(next);
  }
  return out;
}

std::string format_instance(const std::array<long long, 3> &a) { return from_array(a).to_string(); }

// Checks the recorded words inside the finite group Delta(super), built by coset enumeration.
void check_words_in_finite_instance(const InclusionTable::Row &row,
                                    const std::array<long long, 3> &sub,
                                    const std::array<long long, 3> &super) {
  auto fail = [&](const std::string &why) {
    throw Error("triangle table line " + std::to_string(row.line) + ": instance " +
                format_instance(sub) + " < " + format_instance(super) + ": " + why);
  };
  Presentation pres{{Word::x(super[0]), Word::y(super[1]), (Word::x() * Word::y()).pow(super[2])},
                    10'000};
  const auto quotient = coset_enumerate(pres);
  const auto &sx = quotient.action.sigma_x();
  const auto &sy = quotient.action.sigma_y();
  const auto &images = *row.images;
  const Permutation X = evaluate(images[0], sx, sy);
  const Permutation Y = evaluate(images[1], sx, sy);
  const Permutation Z = evaluate(images[2], sx, sy);
  if (!power(X, sub[0]).is_identity() || !power(Y, sub[1]).is_identity() ||
      !power(Z, sub[2]).is_identity())
    fail("generator images do not satisfy the sub relations");
  const auto sub_order = PermGroup::from_generators({X, Y}).order();
  if (sub_order * row.index != BigInt(quotient.index))
    fail("subgroup has index " + (BigInt(quotient.index) / sub_order).str() + ", expected " +
         std::to_string(row.index));
  for (const auto &c : row.conjugations) {
    const Permutation rep = evaluate(c.representative, sx, sy);
    if (conjugate(X, rep) != evaluate(c.image_x, X, Y) ||
        conjugate(Y, rep) != evaluate(c.image_y, X, Y))
      fail("conjugation by " + c.representative.to_string() + " does not match its images");
  }
}

void validate_row(const InclusionTable::Row &row) {
  auto fail = [&](const std::string &why) {
    throw Error("triangle table line " + std::to_string(row.line) + ": " + why);
  };
  const auto params = parameters_of(row.sub);
  for (char c : parameters_of(row.super))
    if (std::find(params.begin(), params.end(), c) == params.end())
      fail(std::string("parameter '") + c + "' of the super type does not occur in the sub type");
  if (row.index < 2)
    fail("index must be at least 2");
  if (row.images) {
    const Word expected_z = ((*row.images)[0] * (*row.images)[1]).inverse();
    if ((*row.images)[2] != expected_z)
      fail("z image " + (*row.images)[2].to_string() + " is not (xy)^-1 = " + expected_z.to_string());
  } else if (!row.conjugations.empty()) {
    fail("coset conjugations need generator images");
  }

  std::size_t hyperbolic_checked = 0, finite_checked = 0;
  for (const auto &a : assignments(params, 2, 30)) {
    const auto sub = *instantiate(row.sub, a);
    const auto super = *instantiate(row.super, a);
    if (!entries_at_least_two(sub) || !entries_at_least_two(super))
      continue;
    const auto gsub = from_array(sub).geometry();
    const auto gsuper = from_array(super).geometry();
    if (gsub != gsuper)
      fail("instance " + format_instance(sub) + " < " + format_instance(super) +
           " mixes geometries");
    if (gsub == TriangleType::Geometry::hyperbolic) {
      const auto [ns, ds] = measure(sub);
      const auto [np, dp] = measure(super);
      if (ns * dp != row.index * np * ds)
        fail("instance " + format_instance(sub) + " < " + format_instance(super) +
             ": area ratio disagrees with index " + std::to_string(row.index));
      ++hyperbolic_checked;
    } else if (gsub == TriangleType::Geometry::spherical && row.images) {
      check_words_in_finite_instance(row, sub, super);
      ++finite_checked;
    }
  }
  if (hyperbolic_checked == 0)
    fail("no hyperbolic instance to check");
  if (row.images && finite_checked == 0)
    fail("generator images have no finite instance to check against");
}

} // namespace

// ---------------------------------------------------------------------------
// InclusionTable

InclusionTable InclusionTable::parse(std::string_view text) {
  InclusionTable table;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty())
      continue;

    try {
      auto fields = split(line, '|');
      if (fields.size() != 5)
        throw DomainError("expected 5 '|'-separated fields, got " + std::to_string(fields.size()));
      Row row;
      row.line = line_no;
      row.sub = parse_pattern(fields[0]);
      row.super = parse_pattern(fields[1]);
      row.index = parse_integer(fields[2], "index");
      if (fields[3] != "-") {
        auto words = split(fields[3], ';');
        if (words.size() != 3)
          throw DomainError("expected three generator images");
        row.images = std::array<Word, 3>{parse_word(words[0]), parse_word(words[1]),
                                         parse_word(words[2])};
      }
      if (fields[4] != "-") {
        for (auto item : split(fields[4], ';')) {
          auto colon = item.find(':');
          if (colon == std::string_view::npos)
            throw DomainError("coset conjugation needs 'rep : x-image , y-image'");
          auto images = split(item.substr(colon + 1), ',');
          if (images.size() != 2)
            throw DomainError("coset conjugation needs two images");
          row.conjugations.push_back(
              {parse_word(trim(item.substr(0, colon))), parse_word(images[0]), parse_word(images[1])});
        }
      }
      table.rows_.push_back(std::move(row));
    } catch (const Error &e) {
      throw Error("triangle table line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  for (const auto &row : table.rows_)
    validate_row(row);
  return table;
}

const InclusionTable &InclusionTable::builtin() {
  static const InclusionTable table = parse(detail::triangle_table_text);
  return table;
}

std::vector<Inclusion> InclusionTable::inclusions_of(const TriangleType &t) const {
  std::vector<Inclusion> out;
  const auto query = as_array(t);
  for (const auto &row : rows_) {
    std::vector<std::array<long long, 3>> supers_seen;
    for (const auto &relabel : relabellings()) {
      // Pattern of the relabelled sub type.
      std::array<Entry, 3> pattern{};
      for (std::size_t i = 0; i < 3; ++i)
        pattern[i] = row.sub[static_cast<std::size_t>(relabel.positions[i])];
      Assignment vars;
      bool ok = true;
      for (std::size_t i = 0; i < 3 && ok; ++i) {
        const Entry &e = pattern[i];
        if (e.parameter == 0) {
          ok = e.coefficient == query[i];
          continue;
        }
        if (query[i] % e.coefficient != 0) {
          ok = false;
          continue;
        }
        const long long v = query[i] / e.coefficient;
        auto [it, inserted] = vars.emplace(e.parameter, v);
        ok = inserted || it->second == v;
      }
      if (!ok)
        continue;
      const auto super = instantiate(row.super, vars);
      if (!super || !entries_at_least_two(*super))
        continue;
      if (from_array(*super).geometry() != t.geometry())
        continue;
      if (std::find(supers_seen.begin(), supers_seen.end(), *super) != supers_seen.end())
        continue;
      supers_seen.push_back(*super);

      Inclusion inc;
      inc.sub = t;
      inc.super = from_array(*super);
      inc.index = row.index;
      inc.source_line = row.line;
      if (row.images) {
        const Word nx = parse_word(relabel.x), ny = parse_word(relabel.y);
        const auto &img = *row.images;
        Word ix = substitute(nx, img[0], img[1]);
        Word iy = substitute(ny, img[0], img[1]);
        Word iz = (ix * iy).inverse();
        inc.generator_images = std::array<Word, 3>{ix, iy, iz};
        const auto [ax, ay] = inverse_relabelling(nx, ny);
        for (const auto &c : row.conjugations) {
          // new generator -> old word -> conjugated old word -> new word
          Word cx = substitute(substitute(nx, c.image_x, c.image_y), ax, ay);
          Word cy = substitute(substitute(ny, c.image_x, c.image_y), ax, ay);
          inc.coset_action.push_back({c.representative, std::move(cx), std::move(cy)});
        }
      }
      out.push_back(std::move(inc));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Maximality and normality

MaximalityResult is_maximal(const TriangleType &t, const InclusionTable &table) {
  if (t.p < 2 || t.q < 2 || t.r < 2)
    throw DomainError("triangle type entries must be at least 2: " + t.to_string());
  if (t.geometry() == TriangleType::Geometry::spherical)
    throw DomainError("spherical type " + t.to_string() + " is not supported");
  auto inclusions = table.inclusions_of(t);
  const bool maximal = inclusions.empty();
  return {maximal, std::move(inclusions)};
}

bool extends_to_automorphism(const Permutation &sx, const Permutation &sy, const Word &image_x,
                             const Word &image_y) {
  const Permutation a = evaluate(image_x, sx, sy);
  const Permutation b = evaluate(image_y, sx, sy);
  const auto g = PermGroup::from_generators({sx, sy}).order();
  const auto h = PermGroup::from_generators({a, b}).order();
  const auto k =
      PermGroup::from_generators({direct_sum_pair(sx, a), direct_sum_pair(sy, b)}).order();
  return h == g && k == g;
}

bool normal_in_supergroup(const Dessin &regular, const Inclusion &inc) {
  if (!is_regular(regular))
    throw DomainError("normality test requires a regular dessin");
  const auto &sx = regular.sigma_x();
  const auto &sy = regular.sigma_y();
  if (!power(sx, inc.sub.p).is_identity())
    throw DomainError("relation x^" + std::to_string(inc.sub.p) + " fails in the monodromy group");
  if (!power(sy, inc.sub.q).is_identity())
    throw DomainError("relation y^" + std::to_string(inc.sub.q) + " fails in the monodromy group");
  if (!power(compose(sx, sy), inc.sub.r).is_identity())
    throw DomainError("relation (xy)^" + std::to_string(inc.sub.r) +
                      " fails in the monodromy group");
  if (inc.coset_action.empty())
    throw DomainError("inclusion " + inc.to_string() + " carries no coset conjugation data");
  return std::all_of(inc.coset_action.begin(), inc.coset_action.end(),
                     [&](const CosetConjugation &c) {
                       return extends_to_automorphism(sx, sy, c.image_x, c.image_y);
                     });
}

} // namespace dessins
