#include "dessins/schreier_sims.hpp"

#include "dessins/error.hpp"

namespace dessins {

std::optional<std::uint32_t> first_moved_point(const Permutation &p) {
  for (std::uint32_t i = 0; i < p.degree(); ++i)
    if (p.raw(i) != i)
      return i;
  return std::nullopt;
}

StabilizerChain::StabilizerChain(std::vector<Permutation> generators, std::size_t degree,
                                 Options options)
    : degree_(degree), options_(std::move(options)) {
  if (degree_ == 0)
    throw DomainError("group degree must be at least 1");
  if (options_.track_words && generators.size() > 2)
    throw DomainError("word tracking supports at most two generators");
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].degree() != degree_)
      throw DomainError("degree mismatch: generator " + std::to_string(i + 1) + " has degree " +
                        std::to_string(generators[i].degree()) + ", expected " +
                        std::to_string(degree_));
    if (generators[i].is_identity())
      continue;
    strong_.push_back(generators[i]);
    if (options_.track_words)
      strong_words_.push_back(Word::letter(i == 0 ? Generator::x : Generator::y));
  }

  std::vector<bool> in_base(degree_, false);
  for (Point p : options_.base_prefix) {
    if (p < 1 || p > degree_)
      throw DomainError("base point " + std::to_string(p) + " out of range");
    if (in_base[p - 1])
      continue;
    in_base[p - 1] = true;
    add_level(p - 1);
  }
  for (const auto &s : strong_) {
    bool moves_base = false;
    for (const auto &level : levels_)
      if (s.raw(level.base_point) != level.base_point) {
        moves_base = true;
        break;
      }
    if (!moves_base)
      add_level(*first_moved_point(s));
  }
  run();
}

void StabilizerChain::add_level(std::uint32_t base_point) {
  Level level;
  level.base_point = base_point;
  level.slot.assign(degree_, -1);
  for (std::size_t k = 0; k < strong_.size(); ++k) {
    bool fixes = true;
    for (const auto &prev : levels_)
      if (strong_[k].raw(prev.base_point) != prev.base_point) {
        fixes = false;
        break;
      }
    if (fixes)
      level.gens.push_back(k);
  }
  level.orbit.push_back(base_point);
  level.slot[base_point] = 0;
  level.reps.push_back(Permutation::identity(degree_));
  level.rep_inverses.push_back(Permutation::identity(degree_));
  if (options_.track_words)
    level.rep_words.emplace_back();
  level.checked.emplace_back(level.gens.size(), false);
  levels_.push_back(std::move(level));
  extend_orbit(levels_.size() - 1);
}

void StabilizerChain::extend_orbit(std::size_t index) {
  Level &level = levels_[index];
  for (std::size_t oi = 0; oi < level.orbit.size(); ++oi) {
    const std::uint32_t beta = level.orbit[oi];
    for (std::size_t gi : level.gens) {
      const Permutation &s = strong_[gi];
      const std::uint32_t gamma = s.raw(beta);
      if (level.slot[gamma] >= 0)
        continue;
      const auto from = static_cast<std::size_t>(level.slot[beta]);
      level.slot[gamma] = static_cast<std::int32_t>(level.reps.size());
      level.orbit.push_back(gamma);
      Permutation rep = compose(level.reps[from], s);
      level.rep_inverses.push_back(inverse(rep));
      level.reps.push_back(std::move(rep));
      if (options_.track_words)
        level.rep_words.push_back(level.rep_words[from] * strong_words_[gi]);
      level.checked.emplace_back(level.gens.size(), false);
    }
  }
}

void StabilizerChain::add_strong_generator(Permutation g, Word w, std::size_t first_level,
                                           std::size_t last_level) {
  const std::size_t index = strong_.size();
  strong_.push_back(std::move(g));
  if (options_.track_words)
    strong_words_.push_back(std::move(w));
  for (std::size_t l = first_level; l <= last_level; ++l) {
    levels_[l].gens.push_back(index);
    for (auto &row : levels_[l].checked)
      row.push_back(false);
    extend_orbit(l);
  }
}

StabilizerChain::Residue StabilizerChain::sift_from(Permutation g, Word w, std::size_t level) {
  ++sifts_;
  if (options_.sift_budget && sifts_ > options_.sift_budget)
    throw CapExceeded("sift budget of " + std::to_string(options_.sift_budget) + " exceeded",
                      std::to_string(sifts_));
  for (; level < levels_.size(); ++level) {
    const Level &L = levels_[level];
    const std::uint32_t beta = g.raw(L.base_point);
    const std::int32_t slot = L.slot[beta];
    if (slot < 0)
      return {std::move(g), std::move(w), level};
    g = compose(g, L.rep_inverses[static_cast<std::size_t>(slot)]);
    if (options_.track_words)
      w *= L.rep_words[static_cast<std::size_t>(slot)].inverse();
  }
  return {std::move(g), std::move(w), levels_.size()};
}

void StabilizerChain::run() {
  std::size_t i = levels_.size();
  while (i > 0) {
    const std::size_t lvl = i - 1;
    bool restarted = false;
    for (std::size_t oi = 0; oi < levels_[lvl].orbit.size() && !restarted; ++oi) {
      for (std::size_t k = 0; k < levels_[lvl].gens.size(); ++k) {
        Level &L = levels_[lvl];
        if (L.checked[oi][k])
          continue;
        L.checked[oi][k] = true;
        const std::uint32_t beta = L.orbit[oi];
        const std::size_t gi = L.gens[k];
        const std::uint32_t gamma = strong_[gi].raw(beta);
        const auto gamma_slot = static_cast<std::size_t>(L.slot[gamma]);
        Permutation g = compose(compose(L.reps[oi], strong_[gi]), L.rep_inverses[gamma_slot]);
        if (g.is_identity())
          continue;
        Word w;
        if (options_.track_words)
          w = L.rep_words[oi] * strong_words_[gi] * L.rep_words[gamma_slot].inverse();
        Residue r = sift_from(std::move(g), std::move(w), lvl + 1);
        if (r.perm.is_identity())
          continue;
        if (r.stopped_at == levels_.size())
          add_level(*first_moved_point(r.perm));
        const std::size_t last = r.stopped_at;
        add_strong_generator(std::move(r.perm), std::move(r.word), lvl + 1, last);
        i = last + 1;
        restarted = true;
        break;
      }
    }
    if (!restarted)
      --i;
  }
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> out;
  for (const auto &l : levels_)
    out.push_back(l.base_point + 1);
  return out;
}

const Permutation &StabilizerChain::transversal(std::size_t level, std::uint32_t point) const {
  const auto slot = levels_.at(level).slot.at(point);
  if (slot < 0)
    throw DomainError("point not in basic orbit");
  return levels_[level].reps[static_cast<std::size_t>(slot)];
}

BigInt StabilizerChain::order() const {
  BigInt n = 1;
  for (const auto &l : levels_)
    n *= l.orbit.size();
  return n;
}

std::pair<Permutation, std::size_t> StabilizerChain::sift(const Permutation &p) const {
  if (p.degree() != degree_)
    throw DomainError("degree mismatch: " + std::to_string(p.degree()) + " vs " +
                      std::to_string(degree_));
  Permutation g = p;
  for (std::size_t level = 0; level < levels_.size(); ++level) {
    const Level &L = levels_[level];
    const std::int32_t slot = L.slot[g.raw(L.base_point)];
    if (slot < 0)
      return {std::move(g), level};
    g = compose(g, L.rep_inverses[static_cast<std::size_t>(slot)]);
  }
  return {std::move(g), levels_.size()};
}

bool StabilizerChain::contains(const Permutation &p) const {
  auto [residue, level] = sift(p);
  return level == levels_.size() && residue.is_identity();
}

} // namespace dessins
