#include "dessins/fpgroup.hpp"

#include <array>
#include <cstdint>

#include "dessins/error.hpp"

namespace dessins {

namespace {

// Columns: 0 = x, 1 = x^-1, 2 = y, 3 = y^-1.
constexpr int inverse_column(int c) { return c ^ 1; }

class CosetTable {
public:
  explicit CosetTable(std::size_t cap) : cap_(cap) {
    if (cap_ == 0)
      throw DomainError("coset cap must be at least 1");
    new_coset();
  }

  std::size_t run(const std::vector<std::vector<int>> &relators) {
    for (std::size_t alpha = 0; alpha < table_.size(); ++alpha) {
      for (const auto &r : relators) {
        if (!live(alpha))
          break;
        scan_and_fill(alpha, r);
      }
      for (int c = 0; c < 4 && live(alpha); ++c)
        if (table_[alpha][c] < 0)
          define(alpha, c);
    }
    return live_count_;
  }

  /// Compacted right action of column `c` on live cosets, numbered by first definition.
  std::vector<std::vector<std::uint32_t>> actions() const {
    std::vector<std::int64_t> renumber(table_.size(), -1);
    std::uint32_t next = 0;
    for (std::size_t a = 0; a < table_.size(); ++a)
      if (live(a))
        renumber[a] = next++;
    std::vector<std::vector<std::uint32_t>> out(2, std::vector<std::uint32_t>(next));
    for (std::size_t a = 0; a < table_.size(); ++a)
      if (live(a)) {
        out[0][static_cast<std::size_t>(renumber[a])] =
            static_cast<std::uint32_t>(renumber[static_cast<std::size_t>(table_[a][0])]);
        out[1][static_cast<std::size_t>(renumber[a])] =
            static_cast<std::uint32_t>(renumber[static_cast<std::size_t>(table_[a][2])]);
      }
    return out;
  }

private:
  bool live(std::size_t a) const { return forward_[a] == static_cast<std::int64_t>(a); }

  std::size_t new_coset() {
    if (live_count_ >= cap_)
      throw CapExceeded("coset enumeration exceeded the cap of " + std::to_string(cap_) +
                            " live cosets (high-water mark " + std::to_string(high_water_) + ")",
                        std::to_string(high_water_));
    const std::size_t a = table_.size();
    table_.push_back({-1, -1, -1, -1});
    forward_.push_back(static_cast<std::int64_t>(a));
    ++live_count_;
    if (live_count_ > high_water_)
      high_water_ = live_count_;
    return a;
  }

  void define(std::size_t alpha, int c) {
    const std::size_t beta = new_coset();
    table_[alpha][c] = static_cast<std::int64_t>(beta);
    table_[beta][inverse_column(c)] = static_cast<std::int64_t>(alpha);
  }

  void scan_and_fill(std::size_t alpha, const std::vector<int> &w) {
    std::size_t f = alpha, b = alpha;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    for (;;) {
      while (i <= j && table_[f][w[static_cast<std::size_t>(i)]] >= 0) {
        f = static_cast<std::size_t>(table_[f][w[static_cast<std::size_t>(i)]]);
        ++i;
      }
      if (i > j) {
        if (f != b)
          coincidence(f, b);
        return;
      }
      while (j >= i && table_[b][inverse_column(w[static_cast<std::size_t>(j)])] >= 0) {
        b = static_cast<std::size_t>(table_[b][inverse_column(w[static_cast<std::size_t>(j)])]);
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        const int c = w[static_cast<std::size_t>(i)];
        table_[f][c] = static_cast<std::int64_t>(b);
        table_[b][inverse_column(c)] = static_cast<std::int64_t>(f);
        return;
      }
      define(f, w[static_cast<std::size_t>(i)]);
    }
  }

  std::size_t rep(std::size_t k) {
    std::size_t root = k;
    while (forward_[root] != static_cast<std::int64_t>(root))
      root = static_cast<std::size_t>(forward_[root]);
    while (forward_[k] != static_cast<std::int64_t>(root)) {
      const auto next = static_cast<std::size_t>(forward_[k]);
      forward_[k] = static_cast<std::int64_t>(root);
      k = next;
    }
    return root;
  }

  void merge(std::size_t k, std::size_t l, std::vector<std::size_t> &queue) {
    const std::size_t phi = rep(k), psi = rep(l);
    if (phi == psi)
      return;
    const std::size_t mu = std::min(phi, psi), nu = std::max(phi, psi);
    forward_[nu] = static_cast<std::int64_t>(mu);
    --live_count_;
    queue.push_back(nu);
  }

  void coincidence(std::size_t alpha, std::size_t beta) {
    std::vector<std::size_t> queue;
    merge(alpha, beta, queue);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const std::size_t gamma = queue[qi];
      for (int c = 0; c < 4; ++c) {
        if (table_[gamma][c] < 0)
          continue;
        const auto delta = static_cast<std::size_t>(table_[gamma][c]);
        const int ci = inverse_column(c);
        if (table_[delta][ci] == static_cast<std::int64_t>(gamma))
          table_[delta][ci] = -1;
        const std::size_t mu = rep(gamma), nu = rep(delta);
        if (table_[mu][c] >= 0)
          merge(nu, static_cast<std::size_t>(table_[mu][c]), queue);
        else if (table_[nu][ci] >= 0)
          merge(mu, static_cast<std::size_t>(table_[nu][ci]), queue);
        else {
          table_[mu][c] = static_cast<std::int64_t>(nu);
          table_[nu][ci] = static_cast<std::int64_t>(mu);
        }
      }
    }
  }

  std::size_t cap_;
  std::vector<std::array<std::int64_t, 4>> table_;
  std::vector<std::int64_t> forward_;
  std::size_t live_count_ = 0;
  std::size_t high_water_ = 0;
};

std::vector<int> expand(const Word &w) {
  std::vector<int> out;
  for (const auto &l : w.letters()) {
    const int base = l.gen == Generator::x ? 0 : 2;
    const int column = l.exp > 0 ? base : base + 1;
    const long long count = l.exp > 0 ? l.exp : -l.exp;
    out.insert(out.end(), static_cast<std::size_t>(count), column);
  }
  return out;
}

} // namespace

CosetEnumeration coset_enumerate(const Presentation &p) {
  std::vector<std::vector<int>> relators;
  for (const auto &r : p.relators)
    if (!r.is_identity())
      relators.push_back(expand(r));

  CosetTable table(p.cap);
  const std::size_t index = table.run(relators);
  auto act = table.actions();
  return {index, Dessin(from_raw(std::move(act[0])), from_raw(std::move(act[1])))};
}

} // namespace dessins
