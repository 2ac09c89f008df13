#include "dessins/moduli.hpp"

#include "dessins/error.hpp"
#include "dessins/schreier_sims.hpp"

namespace dessins {

PermGroup subdirect_group(const Dessin &d1, const Dessin &d2) {
  return PermGroup::from_generators({direct_sum_pair(d1.sigma_x(), d2.sigma_x()),
                                     direct_sum_pair(d1.sigma_y(), d2.sigma_y())});
}

bool kernels_equal(const Dessin &d1, const Dessin &d2) {
  const auto k = subdirect_group(d1, d2).order();
  return k == monodromy_group(d1).order() && k == monodromy_group(d2).order();
}

namespace {

// Strong generators of the pointwise stabilizer of the first `fixed` points of the subdirect
// group (base starting with those points) lie in the kernel of the projection onto that factor.
std::optional<Word> witness_fixing(const Dessin &d1, const Dessin &d2, bool fix_first,
                                   std::size_t budget) {
  const std::size_t n1 = d1.degree(), n2 = d2.degree();
  StabilizerChain::Options options;
  options.track_words = true;
  options.sift_budget = budget;
  const std::size_t offset = fix_first ? 0 : n1;
  const std::size_t count = fix_first ? n1 : n2;
  for (std::size_t i = 1; i <= count; ++i)
    options.base_prefix.push_back(static_cast<Point>(offset + i));

  StabilizerChain chain({direct_sum_pair(d1.sigma_x(), d2.sigma_x()),
                         direct_sum_pair(d1.sigma_y(), d2.sigma_y())},
                        n1 + n2, std::move(options));
  if (chain.length() <= count)
    return std::nullopt;
  const auto &fixing = chain.level_generators(count);
  if (fixing.empty())
    return std::nullopt;
  // Shortest available word keeps the report readable.
  std::size_t best = fixing.front();
  for (std::size_t k : fixing)
    if (chain.strong_words()[k].length() < chain.strong_words()[best].length())
      best = k;
  return chain.strong_words()[best];
}

} // namespace

std::optional<Word> distinguishing_witness(const Dessin &d1, const Dessin &d2, std::size_t budget) {
  auto w = witness_fixing(d1, d2, true, budget);
  if (!w)
    w = witness_fixing(d1, d2, false, budget);
  if (!w)
    return std::nullopt;
  const bool trivial1 = evaluate(*w, d1.sigma_x(), d1.sigma_y()).is_identity();
  const bool trivial2 = evaluate(*w, d2.sigma_x(), d2.sigma_y()).is_identity();
  if (trivial1 == trivial2)
    throw std::logic_error("witness word failed verification: " + w->to_string());
  return w;
}

BigInt regular_cover_genus(const Dessin &d) {
  const auto order_of = [](const Permutation &p) {
    const BigInt o = order(p);
    return static_cast<std::uint64_t>(o);
  };
  const RegularType t{order_of(d.sigma_x()), order_of(d.sigma_y()),
                      order_of(compose(d.sigma_x(), d.sigma_y()))};
  return genus_from_euler(euler_rh(monodromy_group(d).order(), t));
}

OrbitReport orbit_report(const std::vector<Dessin> &dessins, bool with_witnesses,
                         std::size_t budget) {
  if (dessins.empty())
    throw DomainError("orbit report needs at least one dessin");
  const std::size_t m = dessins.size();
  OrbitReport report;
  std::vector<GroupOrder> orders;
  for (std::size_t i = 0; i < m; ++i) {
    const Dessin &d = dessins[i];
    const auto order = monodromy_group(d).order();
    orders.push_back(order);
    report.dessins.push_back({d.name().empty() ? "D" + std::to_string(i + 1) : d.name(),
                              passport(d), genus(d), order, order, regular_cover_genus(d)});
  }
  report.isomorphic.assign(m, std::vector<bool>(m, true));
  report.kernels_equal.assign(m, std::vector<bool>(m, true));
  report.subdirect_orders.assign(m, std::vector<GroupOrder>(m));
  for (std::size_t i = 0; i < m; ++i) {
    report.subdirect_orders[i][i] = orders[i];
    for (std::size_t j = i + 1; j < m; ++j) {
      const bool iso = isomorphic(dessins[i], dessins[j]).has_value();
      const auto k = subdirect_group(dessins[i], dessins[j]).order();
      const bool same = k == orders[i] && k == orders[j];
      report.isomorphic[i][j] = report.isomorphic[j][i] = iso;
      report.kernels_equal[i][j] = report.kernels_equal[j][i] = same;
      report.subdirect_orders[i][j] = report.subdirect_orders[j][i] = k;
      if (with_witnesses && !same)
        if (auto w = distinguishing_witness(dessins[i], dessins[j], budget))
          report.witnesses.push_back({i, j, std::move(*w)});
    }
  }
  return report;
}

} // namespace dessins
