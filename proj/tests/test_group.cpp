#include <doctest.h>

#include "dessins/error.hpp"
#include "dessins/group.hpp"
#include "dessins/schreier_sims.hpp"
#include "support.hpp"

using namespace dessins;

namespace {
Permutation P(const char *text, std::size_t n) { return parse_cycles(text, n); }

PermGroup symmetric(std::size_t n) {
  std::vector<Point> cyc(n);
  for (std::size_t i = 0; i < n; ++i)
    cyc[i] = static_cast<Point>(i + 1);
  return PermGroup::from_generators(
      {Permutation::from_cycles({{1, 2}}, n), Permutation::from_cycles({cyc}, n)});
}
} // namespace

TEST_CASE("orders") {
  CHECK(PermGroup::from_generators({Permutation::identity(4)}).order() == 1);
  const auto h0 = testing::load("h0"), f = testing::load("f");
  CHECK(PermGroup::from_generators({h0.sigma_x(), h0.sigma_y()}).order() == 576);
  CHECK(PermGroup::from_generators({f.sigma_x(), f.sigma_y()}).order() == 18);
  for (const char *name : {"h1", "h2"}) {
    const auto h = testing::load(name);
    CHECK(PermGroup::from_generators({h.sigma_x(), h.sigma_y()}).order() == 576);
  }
  CHECK(symmetric(6).order() == 720);
  CHECK(symmetric(20).order() == factorial(20));
  CHECK_THROWS_AS(PermGroup::from_generators({}), DomainError);
}

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(25).str() == "15511210043330985984000000");
}

TEST_CASE("contains") {
  const auto c3 = PermGroup::from_generators({P("(1,2,3)", 3)});
  CHECK(c3.contains(Permutation::identity(3)));
  CHECK(!c3.contains(P("(1,2)", 3)));
  CHECK(c3.contains(P("(1,3,2)", 3)));
  CHECK_THROWS_AS(c3.contains(Permutation::identity(4)), DomainError);

  const auto h0 = testing::load("h0");
  const auto g = PermGroup::from_generators({h0.sigma_x(), h0.sigma_y()});
  CHECK(g.contains(P("(1,7)(2,8)(3,9)(4,10)(5,11)(6,12)", 12)));
  CHECK(!g.contains(P("(1,2)", 12)));
}

TEST_CASE("elements and center") {
  const auto triv = PermGroup::from_generators({Permutation::identity(3)});
  CHECK(triv.elements() == std::vector{Permutation::identity(3)});
  CHECK(triv.center() == std::vector{Permutation::identity(3)});
  CHECK(PermGroup::from_generators({P("(1,2,3)", 3)}).elements().size() == 3);

  const auto v4 = PermGroup::from_generators({P("(1,2)", 4), P("(3,4)", 4)});
  CHECK(v4.center().size() == 4);

  const auto h0 = testing::load("h0");
  const auto g = PermGroup::from_generators({h0.sigma_x(), h0.sigma_y()});
  const auto els = g.elements();
  CHECK(els.size() == 576);
  CHECK(std::is_sorted(els.begin(), els.end()));
  CHECK(std::adjacent_find(els.begin(), els.end()) == els.end());
  CHECK(g.center() ==
        std::vector{Permutation::identity(12), P("(1,7)(2,8)(3,9)(4,10)(5,11)(6,12)", 12)});

  CHECK_THROWS_AS(g.elements(100), CapExceeded);
  try {
    g.elements(100);
  } catch (const CapExceeded &e) {
    CHECK(e.observed() == "576");
  }
}

TEST_CASE("transitivity and full symmetric recognition") {
  CHECK(PermGroup::from_generators({P("(1,2,3)", 3)}).is_transitive());
  CHECK(!PermGroup::from_generators({P("(1,2)", 3)}).is_transitive());
  const auto h0 = testing::load("h0");
  CHECK(PermGroup::from_generators({h0.sigma_x(), h0.sigma_y()}).is_transitive());
  CHECK(PermGroup::from_generators({P("(1,2)", 6), P("(1,2,3,4,5,6)", 6)}).is_full_symmetric());
  CHECK(!PermGroup::from_generators({P("(1,2,3)", 3)}).is_full_symmetric());
  CHECK(orbits_of({P("(1,3)", 4)}) == std::vector<std::vector<Point>>{{1, 3}, {2}, {4}});
}

TEST_CASE("stabilizer chain options") {
  const auto h0 = testing::load("h0");
  StabilizerChain::Options opt;
  opt.base_prefix = {7, 5};
  opt.track_words = true;
  StabilizerChain chain({h0.sigma_x(), h0.sigma_y()}, 12, opt);
  CHECK(chain.order() == 576);
  CHECK(chain.base()[0] == 7);
  CHECK(chain.base()[1] == 5);
  REQUIRE(chain.strong_words().size() == chain.strong_generators().size());
  for (std::size_t i = 0; i < chain.strong_words().size(); ++i)
    CHECK(evaluate(chain.strong_words()[i], h0.sigma_x(), h0.sigma_y()) ==
          chain.strong_generators()[i]);

  StabilizerChain::Options tight;
  tight.sift_budget = 3;
  CHECK_THROWS_AS(StabilizerChain({h0.sigma_x(), h0.sigma_y()}, 12, tight), CapExceeded);
}

TEST_CASE("property: order agrees with closure at degree <= 8") {
  for (int i = 0; i < 200; ++i) {
    const auto n = testing::uniform(1, 8);
    std::vector<Permutation> gens;
    const auto k = testing::uniform(1, 3);
    for (std::size_t j = 0; j < k; ++j) {
      auto p = testing::random_perm(n);
      // bias towards small subgroups so the oracle sees more than S_n
      if (testing::uniform(0, 2) == 0)
        p = power(p, static_cast<long long>(testing::uniform(2, 4)));
      gens.push_back(p);
    }
    const auto g = PermGroup::from_generators(gens);
    const auto brute = testing::closure(gens, n);
    REQUIRE(g.order() == brute.size());
    if (brute.size() <= 5000) {
      const auto els = g.elements();
      REQUIRE(std::vector<Permutation>(brute.begin(), brute.end()) == els);
    }
    const auto outsider = testing::random_perm(n);
    REQUIRE(g.contains(outsider) == (brute.count(outsider) == 1));
  }
}

TEST_CASE("property: Lagrange") {
  for (int i = 0; i < 100; ++i) {
    const auto n = testing::uniform(2, 8);
    const auto g = PermGroup::from_generators({testing::random_perm(n), testing::random_perm(n)});
    const auto els = g.elements();
    std::vector<Permutation> sub;
    for (int j = 0; j < 2; ++j)
      sub.push_back(els[testing::uniform(0, els.size() - 1)]);
    const auto h = PermGroup::from_generators(sub);
    REQUIRE(g.order() % h.order() == 0);
  }
}

TEST_CASE("property: center commutes with everything") {
  int done = 0;
  while (done < 60) {
    const auto n = testing::uniform(2, 8);
    std::vector<Permutation> gens{testing::random_perm(n)};
    if (testing::uniform(0, 1))
      gens.push_back(testing::random_perm(n));
    const auto g = PermGroup::from_generators(gens);
    if (g.order() > 5000)
      continue;
    ++done;
    const auto els = g.elements();
    const auto z = g.center();
    std::size_t brute = 0;
    for (const auto &a : els) {
      bool central = true;
      for (const auto &b : els)
        central = central && compose(a, b) == compose(b, a);
      brute += central;
    }
    REQUIRE(z.size() == brute);
    for (const auto &a : z)
      for (const auto &b : els)
        REQUIRE(compose(a, b) == compose(b, a));
  }
}

TEST_CASE("property: full symmetric recognition agrees with closure") {
  for (int i = 0; i < 100; ++i) {
    const auto n = testing::uniform(1, 6);
    std::vector<Permutation> gens{testing::random_perm(n), testing::random_perm(n)};
    const auto brute = testing::closure(gens, n);
    REQUIRE(PermGroup::from_generators(gens).is_full_symmetric() == (brute.size() == factorial(n)));
  }
}
