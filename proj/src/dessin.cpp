#include "dessins/dessin.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "dessins/error.hpp"

namespace dessins {

namespace {

std::string orbits_to_string(const std::vector<std::vector<Point>> &orbits) {
  std::ostringstream os;
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    os << (i ? " {" : "{");
    for (std::size_t k = 0; k < orbits[i].size(); ++k)
      os << (k ? "," : "") << orbits[i][k];
    os << '}';
  }
  return os.str();
}

std::uint64_t to_u64(const BigInt &v) {
  if (v > std::numeric_limits<std::uint64_t>::max())
    throw DomainError("element order " + v.str() + " does not fit in 64 bits");
  return static_cast<std::uint64_t>(v);
}

} // namespace

// ---------------------------------------------------------------------------
// Passport / RegularType

Passport Passport::parse(std::string_view text) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i)
    if (i == text.size() || text[i] == '|') {
      fields.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  if (fields.size() != 3)
    throw ParseError("passport needs three '|'-separated cycle types", 0);
  Passport p{CycleType::parse(fields[0]), CycleType::parse(fields[1]), CycleType::parse(fields[2])};
  if (p.x.degree() != p.y.degree() || p.x.degree() != p.z.degree())
    throw DomainError("passport cycle types have different degrees: " + p.to_string());
  return p;
}

long long Passport::genus() const {
  const auto n = static_cast<long long>(degree());
  const auto chi = static_cast<long long>(x.cycle_count() + y.cycle_count() + z.cycle_count()) - n;
  if (chi > 2 || (chi % 2) != 0)
    throw DomainError("passport " + to_string() + " has no integral genus");
  return (2 - chi) / 2;
}

std::string Passport::to_string() const {
  return x.to_string() + " | " + y.to_string() + " | " + z.to_string();
}

std::string RegularType::to_string() const {
  return "(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + ")";
}

// ---------------------------------------------------------------------------
// Dessin

Dessin::Dessin() : sx_(Permutation::identity(1)), sy_(Permutation::identity(1)) {}

Dessin::Dessin(Permutation sigma_x, Permutation sigma_y, std::string name)
    : sx_(std::move(sigma_x)), sy_(std::move(sigma_y)), name_(std::move(name)) {
  if (sx_.degree() != sy_.degree())
    throw DomainError("degree mismatch: sigma_x has degree " + std::to_string(sx_.degree()) +
                      ", sigma_y has degree " + std::to_string(sy_.degree()));
  auto orbits = orbits_of({sx_, sy_});
  if (orbits.size() != 1)
    throw DomainError("non-transitive pair; orbits " + orbits_to_string(orbits));
}

Permutation Dessin::sigma_z() const { return inverse(compose(sx_, sy_)); }

Dessin Dessin::with_name(std::string name) const {
  Dessin d = *this;
  d.name_ = std::move(name);
  return d;
}

Dessin new_dessin(const Permutation &sigma_x, const Permutation &sigma_y) {
  return Dessin(sigma_x, sigma_y);
}

bool CoveringMap::is_valid() const {
  const std::size_t n = source.degree();
  if (edge_map.size() != n)
    return false;
  std::vector<bool> hit(target.degree(), false);
  for (std::size_t e = 1; e <= n; ++e) {
    const Point m = edge_map[e - 1];
    if (m < 1 || m > target.degree())
      return false;
    hit[m - 1] = true;
    if (edge_map[source.sigma_x()(static_cast<Point>(e)) - 1] != target.sigma_x()(m))
      return false;
    if (edge_map[source.sigma_y()(static_cast<Point>(e)) - 1] != target.sigma_y()(m))
      return false;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

Passport passport(const Dessin &d) {
  return {cycle_type(d.sigma_x()), cycle_type(d.sigma_y()), cycle_type(d.sigma_z())};
}

long long genus(const Dessin &d) {
  const auto chi = static_cast<long long>(cycle_count(d.sigma_x()) + cycle_count(d.sigma_y()) +
                                          cycle_count(d.sigma_z())) -
                   static_cast<long long>(d.degree());
  return (2 - chi) / 2;
}

PermGroup monodromy_group(const Dessin &d) {
  return PermGroup::from_generators({d.sigma_x(), d.sigma_y()});
}

bool is_regular(const Dessin &d) { return monodromy_group(d).order() == d.degree(); }

Dessin relabel(const Dessin &d, const Permutation &g) {
  return Dessin(conjugate(d.sigma_x(), g), conjugate(d.sigma_y(), g), d.name());
}

// ---------------------------------------------------------------------------
// Regular cover

namespace {

struct RegularAction {
  std::vector<Permutation> elements;
  Dessin cover;
};

RegularAction regular_action(const Dessin &d, std::uint64_t cap) {
  auto elements = monodromy_group(d).elements(cap);
  auto index_of = [&](const Permutation &g) {
    auto it = std::lower_bound(elements.begin(), elements.end(), g);
    return static_cast<std::uint32_t>(it - elements.begin());
  };
  std::vector<std::uint32_t> x(elements.size()), y(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    x[i] = index_of(compose(elements[i], d.sigma_x()));
    y[i] = index_of(compose(elements[i], d.sigma_y()));
  }
  Dessin cover(from_raw(std::move(x)), from_raw(std::move(y)),
               d.name().empty() ? std::string{} : d.name() + "-cover");
  return {std::move(elements), std::move(cover)};
}

} // namespace

Dessin regular_cover(const Dessin &d, std::uint64_t cap) { return regular_action(d, cap).cover; }

CoveringMap regular_cover_map(const Dessin &d, std::uint64_t cap) {
  auto action = regular_action(d, cap);
  std::vector<Point> map;
  map.reserve(action.elements.size());
  for (const auto &g : action.elements)
    map.push_back(g(1));
  return {std::move(action.cover), d, std::move(map)};
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

// Extends edge 1 -> `image` to an equivariant bijection d1 -> d2, if possible.
std::optional<Permutation> propagate(const Dessin &d1, const Dessin &d2, std::uint32_t image) {
  const std::size_t n = d1.degree();
  constexpr std::uint32_t unset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> map(n, unset);
  std::vector<bool> used(n, false);
  std::vector<std::uint32_t> queue{0};
  map[0] = image;
  used[image] = true;
  const Permutation *src[2] = {&d1.sigma_x(), &d1.sigma_y()};
  const Permutation *dst[2] = {&d2.sigma_x(), &d2.sigma_y()};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const std::uint32_t e = queue[qi];
    for (int s = 0; s < 2; ++s) {
      const std::uint32_t f = src[s]->raw(e);
      const std::uint32_t g = dst[s]->raw(map[e]);
      if (map[f] == unset) {
        if (used[g])
          return std::nullopt;
        map[f] = g;
        used[g] = true;
        queue.push_back(f);
      } else if (map[f] != g) {
        return std::nullopt;
      }
    }
  }
  return from_raw(std::move(map));
}

} // namespace

std::optional<Permutation> isomorphic(const Dessin &d1, const Dessin &d2) {
  if (d1.degree() != d2.degree())
    return std::nullopt;
  for (std::uint32_t c = 0; c < d2.degree(); ++c)
    if (auto b = propagate(d1, d2, c))
      return b;
  return std::nullopt;
}

std::vector<Permutation> automorphisms(const Dessin &d) {
  std::vector<Permutation> out;
  for (std::uint32_t c = 0; c < d.degree(); ++c)
    if (auto b = propagate(d, d, c))
      out.push_back(std::move(*b));
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Quotients

namespace {

// block_of[e] (0-based edge) -> 0-based block number after renumbering by smallest member.
std::vector<std::uint32_t> block_assignment(const Dessin &d,
                                            const std::vector<std::vector<Point>> &blocks) {
  const std::size_t n = d.degree();
  constexpr std::uint32_t unset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> raw(n, unset);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty())
      throw DomainError("partition contains an empty block");
    for (Point e : blocks[b]) {
      if (e < 1 || e > n)
        throw DomainError("partition point " + std::to_string(e) + " out of range [1.." +
                          std::to_string(n) + "]");
      if (raw[e - 1] != unset)
        throw DomainError("partition point " + std::to_string(e) + " appears twice");
      raw[e - 1] = static_cast<std::uint32_t>(b);
    }
  }
  for (std::size_t e = 0; e < n; ++e)
    if (raw[e] == unset)
      throw DomainError("partition does not cover point " + std::to_string(e + 1));

  // Renumber by smallest member: scanning edges in order meets each block first at its minimum.
  std::vector<std::uint32_t> renumber(blocks.size(), unset);
  std::uint32_t next = 0;
  std::vector<std::uint32_t> block_of(n);
  for (std::size_t e = 0; e < n; ++e) {
    if (renumber[raw[e]] == unset)
      renumber[raw[e]] = next++;
    block_of[e] = renumber[raw[e]];
  }
  return block_of;
}

std::string block_to_string(const std::vector<std::uint32_t> &block_of, std::uint32_t b) {
  std::vector<std::vector<Point>> one(1);
  for (std::size_t e = 0; e < block_of.size(); ++e)
    if (block_of[e] == b)
      one[0].push_back(static_cast<Point>(e + 1));
  return orbits_to_string(one);
}

} // namespace

Dessin quotient_by_partition(const Dessin &d, const std::vector<std::vector<Point>> &blocks) {
  auto block_of = block_assignment(d, blocks);
  const std::size_t k = blocks.size();
  constexpr std::uint32_t unset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> img[2] = {std::vector<std::uint32_t>(k, unset),
                                       std::vector<std::uint32_t>(k, unset)};
  const Permutation *gens[2] = {&d.sigma_x(), &d.sigma_y()};
  const char *names[2] = {"sigma_x", "sigma_y"};
  for (std::size_t e = 0; e < d.degree(); ++e)
    for (int s = 0; s < 2; ++s) {
      const std::uint32_t target = block_of[gens[s]->raw(e)];
      auto &slot = img[s][block_of[e]];
      if (slot == unset)
        slot = target;
      else if (slot != target)
        throw DomainError("partition not invariant: block " + block_to_string(block_of, block_of[e]) +
                          " is split by " + names[s]);
    }
  return Dessin(from_raw(std::move(img[0])), from_raw(std::move(img[1])),
                d.name().empty() ? std::string{} : d.name() + "-quotient");
}

CoveringMap quotient_map(const Dessin &d, const std::vector<std::vector<Point>> &blocks) {
  Dessin q = quotient_by_partition(d, blocks);
  auto block_of = block_assignment(d, blocks);
  std::vector<Point> map(block_of.size());
  for (std::size_t e = 0; e < block_of.size(); ++e)
    map[e] = block_of[e] + 1;
  return {d, std::move(q), std::move(map)};
}

Dessin quotient_by_central(const Dessin &regular, const std::vector<Permutation> &central) {
  const auto group = monodromy_group(regular);
  if (group.order() != regular.degree())
    throw DomainError("quotient_by_central requires a regular dessin");
  if (central.empty())
    throw DomainError("central subgroup must be nonempty");
  std::vector<Permutation> sorted(central);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (const auto &z : sorted) {
    if (z.degree() != regular.degree())
      throw DomainError("degree mismatch in central subgroup");
    if (!group.contains(z))
      throw DomainError("element " + to_cycle_string(z) + " is not in the monodromy group");
    if (compose(z, regular.sigma_x()) != compose(regular.sigma_x(), z) ||
        compose(z, regular.sigma_y()) != compose(regular.sigma_y(), z))
      throw DomainError("element " + to_cycle_string(z) + " is not central");
  }
  for (const auto &a : sorted)
    for (const auto &b : sorted)
      if (!std::binary_search(sorted.begin(), sorted.end(), compose(a, b)))
        throw DomainError("central elements are not closed under multiplication");

  // Z acts semiregularly, so its orbits are the blocks.
  const std::size_t n = regular.degree();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Point>> blocks;
  for (std::uint32_t e = 0; e < n; ++e) {
    if (seen[e])
      continue;
    std::vector<Point> block;
    for (const auto &z : sorted) {
      const auto f = z.raw(e);
      if (!seen[f]) {
        seen[f] = true;
        block.push_back(f + 1);
      }
    }
    blocks.push_back(std::move(block));
  }
  Dessin q = quotient_by_partition(regular, blocks);
  return regular.name().empty() ? q : q.with_name(regular.name() + "-central-quotient");
}

// ---------------------------------------------------------------------------
// Types and Euler characteristic

RegularType type_of_regular(const Dessin &d) {
  if (!is_regular(d))
    throw DomainError("dessin is not regular");
  return {to_u64(order(d.sigma_x())), to_u64(order(d.sigma_y())),
          to_u64(order(compose(d.sigma_x(), d.sigma_y())))};
}

BigInt euler_rh(const BigInt &degree, const RegularType &t) {
  if (t.p == 0 || t.q == 0 || t.r == 0)
    throw DomainError("regular type entries must be positive");
  const BigInt p = t.p, q = t.q, r = t.r;
  const BigInt numerator = degree * (q * r + p * r + p * q - p * q * r);
  const BigInt denominator = p * q * r;
  if (numerator % denominator != 0)
    throw DomainError("Euler characteristic " + degree.str() + "(1/" + p.str() + "+1/" + q.str() +
                      "+1/" + r.str() + "-1) is not an integer");
  return numerator / denominator;
}

BigInt genus_from_euler(const BigInt &chi) {
  if (chi > 2 || (chi % 2) != 0)
    throw DomainError("Euler characteristic " + chi.str() + " does not come from a closed surface");
  return (2 - chi) / 2;
}

// ---------------------------------------------------------------------------
// Canonical form and enumeration

std::string canonical_form(const Dessin &d) {
  const std::size_t n = d.degree();
  const Permutation x = d.sigma_x(), y = d.sigma_y();
  const Permutation xi = inverse(x), yi = inverse(y);
  const Permutation *order[4] = {&x, &xi, &y, &yi};
  constexpr std::uint32_t unset = static_cast<std::uint32_t>(-1);

  auto put = [](std::string &s, std::uint32_t v) {
    for (int shift = 24; shift >= 0; shift -= 8)
      s.push_back(static_cast<char>((v >> shift) & 0xffu));
  };

  std::string best;
  std::vector<std::uint32_t> label(n), old_of(n);
  for (std::uint32_t start = 0; start < n; ++start) {
    std::fill(label.begin(), label.end(), unset);
    label[start] = 0;
    old_of[0] = start;
    std::uint32_t next = 1;
    for (std::uint32_t i = 0; i < next; ++i)
      for (const Permutation *g : order) {
        const std::uint32_t t = g->raw(old_of[i]);
        if (label[t] == unset) {
          label[t] = next;
          old_of[next++] = t;
        }
      }
    std::string code;
    code.reserve(4 * (2 * n + 1));
    put(code, static_cast<std::uint32_t>(n));
    for (std::uint32_t i = 0; i < n; ++i)
      put(code, label[x.raw(old_of[i])]);
    for (std::uint32_t i = 0; i < n; ++i)
      put(code, label[y.raw(old_of[i])]);
    if (start == 0 || code < best)
      best = std::move(code);
  }
  return best;
}

Permutation canonical_permutation(const CycleType &type) {
  std::vector<Cycle> cs;
  Point next = 1;
  for (auto len : type.parts()) {
    Cycle c(len);
    std::iota(c.begin(), c.end(), next);
    next += static_cast<Point>(len);
    cs.push_back(std::move(c));
  }
  return Permutation::from_cycles(cs, type.degree());
}

std::vector<Dessin> enumerate_by_passport(const Passport &p, std::size_t cap_degree) {
  const std::size_t n = p.x.degree();
  if (p.y.degree() != n || p.z.degree() != n)
    throw DomainError("passport cycle types have different degrees");
  if (n > cap_degree)
    throw CapExceeded("passport degree " + std::to_string(n) + " exceeds enumeration cap " +
                          std::to_string(cap_degree),
                      std::to_string(n));
  const Permutation sx = canonical_permutation(p.x);
  std::map<std::string, Dessin> found;
  std::vector<std::uint32_t> img(n);
  std::iota(img.begin(), img.end(), 0u);
  do {
    Permutation sy = from_raw(img);
    if (cycle_type(sy) != p.y)
      continue;
    if (cycle_type(inverse(compose(sx, sy))) != p.z)
      continue;
    if (orbits_of({sx, sy}).size() != 1)
      continue;
    Dessin d(sx, sy);
    found.try_emplace(canonical_form(d), std::move(d));
  } while (std::next_permutation(img.begin(), img.end()));

  std::vector<Dessin> out;
  out.reserve(found.size());
  for (auto &[code, d] : found)
    out.push_back(std::move(d));
  return out;
}

} // namespace dessins
