#include <doctest.h>

#include <set>

#include "dessins/error.hpp"
#include "dessins/fpgroup.hpp"
#include "dessins/moduli.hpp"
#include "support.hpp"

using namespace dessins;

namespace {
CosetEnumeration run(std::initializer_list<const char *> relators, std::size_t cap = default_coset_cap) {
  Presentation p;
  p.cap = cap;
  for (const char *r : relators)
    p.relators.push_back(parse_word(r));
  return coset_enumerate(p);
}

void check_relators_hold(const CosetEnumeration &e, std::initializer_list<const char *> relators) {
  CHECK(e.action.degree() == e.index);
  for (const char *r : relators)
    CHECK(evaluate(parse_word(r), e.action.sigma_x(), e.action.sigma_y()).is_identity());
}

/// Number of pairs (a, b) in S_n satisfying the relators: a homomorphism count oracle.
std::size_t image_order_oracle(std::initializer_list<const char *> relators, std::size_t n) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{1});
  std::vector<Permutation> all;
  do
    all.push_back(Permutation::from_images(img));
  while (std::next_permutation(img.begin(), img.end()));
  std::size_t best = 1;
  for (const auto &a : all)
    for (const auto &b : all) {
      bool ok = true;
      for (const char *r : relators)
        ok = ok && evaluate(parse_word(r), a, b).is_identity();
      if (ok) {
        const auto order = testing::closure({a, b}, n).size();
        best = std::max(best, order);
      }
    }
  return best;
}
} // namespace

TEST_CASE("the order-18 quotient") {
  const auto e = run({"x^3", "y^2", "[x,x^y]"});
  CHECK(e.index == 18);
  check_relators_hold(e, {"x^3", "y^2", "[x,x^y]"});
  CHECK(is_regular(e.action));
  CHECK(kernels_equal(e.action, regular_cover(testing::load("f"))));
  CHECK(kernels_equal(e.action, testing::load("f")));
}

TEST_CASE("small presentations") {
  CHECK(run({"x", "y"}).index == 1);
  const auto v4 = run({"x^2", "y^2", "(xy)^2"});
  CHECK(v4.index == 4);
  check_relators_hold(v4, {"x^2", "y^2", "(xy)^2"});
  // the largest image in S_4 of <x,y | x^2, y^2, (xy)^2> is the Klein four group
  CHECK(image_order_oracle({"x^2", "y^2", "(xy)^2"}, 4) == 4);

  CHECK(run({"x^2", "y^3", "(xy)^3"}).index == 12);
  CHECK(run({"x^2", "y^3", "(xy)^4"}).index == 24);
  CHECK(run({"x^2", "y^3", "(xy)^5"}).index == 60);
  CHECK(run({"x^3", "y^3", "(xy)^2"}).index == 12);
  CHECK(run({"x^2", "y^2", "(xy)^5"}).index == 10);
  CHECK(run({"x^5", "y", "x^3"}).index == 1);
  CHECK(run({"x^6", "y^4", "[x,y]"}).index == 24);
}

TEST_CASE("oracle agrees on small quotients") {
  CHECK(run({"x^2", "y^3", "(xy)^3"}).index == image_order_oracle({"x^2", "y^3", "(xy)^3"}, 4));
  CHECK(run({"x^2", "y^2", "(xy)^3"}).index == image_order_oracle({"x^2", "y^2", "(xy)^3"}, 3));
}

TEST_CASE("infinite groups exceed the cap") {
  for (auto rels : {std::vector<const char *>{"x^2", "y^3", "(xy)^6"},
                    std::vector<const char *>{"x^3", "y^3", "(xy)^3"},
                    std::vector<const char *>{"x^2", "y^4", "(xy)^4"}}) {
    Presentation p;
    p.cap = 2000;
    for (const char *r : rels)
      p.relators.push_back(parse_word(r));
    CHECK_THROWS_AS(coset_enumerate(p), CapExceeded);
  }
  try {
    run({"x^2"}, 500);
    FAIL("expected CapExceeded");
  } catch (const CapExceeded &e) {
    CHECK(std::stoul(e.observed()) >= 500);
  }
}

TEST_CASE("property: completed enumerations are faithful") {
  const std::vector<std::vector<const char *>> family = {
      {"x^2", "y^3", "(xy)^3"}, {"x^3", "y^2", "[x,x^y]"}, {"x^4", "y^2", "(xy)^4", "[x^2,y]"},
      {"x^2", "y^2", "(xy)^6"}, {"x^5", "y^5", "xy"},       {"x^3", "y^3", "(xy)^2"}};
  for (const auto &rels : family) {
    Presentation p;
    for (const char *r : rels)
      p.relators.push_back(parse_word(r));
    const auto e = coset_enumerate(p);
    REQUIRE(e.action.degree() == e.index);
    REQUIRE(orbits_of({e.action.sigma_x(), e.action.sigma_y()}).size() == 1);
    for (const auto &r : p.relators)
      REQUIRE(evaluate(r, e.action.sigma_x(), e.action.sigma_y()).is_identity());
    // the action is the regular representation of the quotient
    REQUIRE(monodromy_group(e.action).order() == e.index);
  }
}

TEST_CASE("property: random relator sets of finite groups") {
  // quotients of random regular dessins: relators that hold in a known finite group
  int completed = 0;
  for (int i = 0; i < 40; ++i) {
    const auto d = regular_cover(testing::random_dessin(testing::uniform(1, 4)));
    const auto t = type_of_regular(d);
    Presentation p;
    p.cap = 20000;
    p.relators = {Word::x(static_cast<long long>(t.p)), Word::y(static_cast<long long>(t.q)),
                  parse_word("xy").pow(static_cast<long long>(t.r))};
    // extra relators that hold in the group, usually enough to force finiteness
    for (int k = 0; k < 200; ++k) {
      const auto w = testing::random_word(8);
      if (evaluate(w, d.sigma_x(), d.sigma_y()).is_identity() && !w.is_identity())
        p.relators.push_back(w);
    }
    try {
      const auto e = coset_enumerate(p);
      // the quotient maps onto the group of d
      REQUIRE(e.index % d.degree() == 0);
      REQUIRE(kernels_equal(e.action, d) == (e.index == d.degree()));
      ++completed;
    } catch (const CapExceeded &) {
      // random relators may leave the quotient infinite
    }
  }
  CHECK(completed >= 20);
}
