#include "dessins/group.hpp"

#include <algorithm>

#include "dessins/error.hpp"

namespace dessins {

BigInt factorial(std::size_t n) {
  BigInt f = 1;
  for (std::size_t k = 2; k <= n; ++k)
    f *= k;
  return f;
}

PermGroup PermGroup::from_generators(std::vector<Permutation> generators) {
  if (generators.empty())
    throw DomainError("a group needs at least one generator");
  const std::size_t n = generators.front().degree();
  StabilizerChain chain(generators, n, {});
  return PermGroup(std::move(generators), std::move(chain));
}

bool PermGroup::contains(const Permutation &p) const {
  if (p.degree() != degree())
    throw DomainError("degree mismatch: " + std::to_string(p.degree()) + " vs " +
                      std::to_string(degree()));
  return chain_.contains(p);
}

std::vector<Permutation> PermGroup::elements(std::uint64_t cap) const {
  const GroupOrder n = order();
  if (n > cap)
    throw CapExceeded("group order " + n.str() + " exceeds element cap " + std::to_string(cap),
                      n.str());

  // Every element factors uniquely as u_{k-1} ... u_1 u_0 with u_i from the i-th transversal.
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(n));
  const std::size_t k = chain_.length();
  auto rec = [&](auto &&self, std::size_t level, const Permutation &suffix) -> void {
    if (level == static_cast<std::size_t>(-1)) {
      out.push_back(suffix);
      return;
    }
    for (std::uint32_t beta : chain_.orbit(level))
      self(self, level - 1, compose(suffix, chain_.transversal(level, beta)));
  };
  rec(rec, k - 1, Permutation::identity(degree()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> PermGroup::center(std::uint64_t cap) const {
  std::vector<Permutation> z;
  for (auto &g : elements(cap)) {
    bool central = std::all_of(generators_.begin(), generators_.end(), [&](const Permutation &s) {
      return compose(g, s) == compose(s, g);
    });
    if (central)
      z.push_back(std::move(g));
  }
  return z;
}

std::vector<std::vector<Point>> orbits_of(const std::vector<Permutation> &generators) {
  if (generators.empty())
    return {};
  const std::size_t n = generators.front().degree();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Point>> out;
  for (std::uint32_t start = 0; start < n; ++start) {
    if (seen[start])
      continue;
    std::vector<std::uint32_t> queue{start};
    seen[start] = true;
    for (std::size_t qi = 0; qi < queue.size(); ++qi)
      for (const auto &g : generators) {
        auto img = g.raw(queue[qi]);
        if (!seen[img]) {
          seen[img] = true;
          queue.push_back(img);
        }
      }
    std::vector<Point> orbit;
    for (auto q : queue)
      orbit.push_back(q + 1);
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

std::vector<std::vector<Point>> PermGroup::orbits() const { return orbits_of(generators_); }

bool PermGroup::is_transitive() const { return orbits().size() == 1; }

bool PermGroup::is_full_symmetric() const { return order() == factorial(degree()); }

} // namespace dessins
