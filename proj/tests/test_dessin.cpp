#include <doctest.h>

#include <map>
#include <set>

#include "dessins/error.hpp"
#include "dessins/dessin.hpp"
#include "dessins/moduli.hpp"
#include "support.hpp"

using namespace dessins;

namespace {
Permutation P(const char *text, std::size_t n) { return parse_cycles(text, n); }

const Permutation &central_h0() {
  static const auto z = P("(1,7)(2,8)(3,9)(4,10)(5,11)(6,12)", 12);
  return z;
}

/// Fibres of a covering map, as a partition of the source edges.
std::vector<std::vector<Point>> fibres(const CoveringMap &m) {
  std::map<Point, std::vector<Point>> by_image;
  for (std::size_t e = 0; e < m.edge_map.size(); ++e)
    by_image[m.edge_map[e]].push_back(static_cast<Point>(e + 1));
  std::vector<std::vector<Point>> out;
  for (auto &[_, block] : by_image)
    out.push_back(std::move(block));
  return out;
}
} // namespace

TEST_CASE("construction") {
  const auto h0 = testing::load("h0");
  CHECK(h0.degree() == 12);
  CHECK(h0.sigma_x() == P("(1,2,3,7,8,9)(6,12)", 12));
  CHECK(h0.sigma_y() == P("(1,4)(2,5)(7,10)(8,11)(3,6,9,12)", 12));
  CHECK(Dessin().degree() == 1);
  CHECK(new_dessin(Permutation::identity(1), Permutation::identity(1)) == Dessin());
  CHECK_THROWS_WITH_AS(Dessin(P("(1,2)", 4), P("(3,4)", 4)), doctest::Contains("transitive"),
                       DomainError);
  CHECK_THROWS_AS(Dessin(P("(1,2)", 2), P("(1,2)", 3)), DomainError);
}

TEST_CASE("passport and genus") {
  const auto f = testing::load("f"), h0 = testing::load("h0");
  const auto pf = passport(f);
  CHECK(pf.x == CycleType({3, 1, 1, 1}));
  CHECK(pf.y == CycleType({2, 2, 2}));
  CHECK(pf.z == CycleType({6}));
  const auto ph = passport(h0);
  CHECK(ph.x == CycleType({6, 2, 1, 1, 1, 1}));
  CHECK(ph.y == CycleType({4, 2, 2, 2, 2}));
  CHECK(ph.z == CycleType({12}));
  CHECK(passport(Dessin()).x == CycleType({1}));
  CHECK(genus(f) == 0);
  CHECK(genus(h0) == 1);
  CHECK(genus(Dessin()) == 0);
  CHECK(ph.genus() == 1);
  CHECK(Passport::parse("2^2 1 1|3 2 1|6").genus() == 0);
  CHECK_THROWS_AS(Passport::parse("2|2|1").genus(), DomainError);
  CHECK_THROWS_AS(Passport::parse("2 2|3 1"), ParseError);
}

TEST_CASE("monodromy and regularity") {
  const auto f = testing::load("f"), h0 = testing::load("h0");
  CHECK(monodromy_group(h0).order() == 576);
  CHECK(monodromy_group(f).order() == 18);
  CHECK(monodromy_group(Dessin()).order() == 1);
  CHECK(!is_regular(h0));
  CHECK(is_regular(regular_cover(f)));
  CHECK(is_regular(Dessin()));
  CHECK_THROWS_AS(type_of_regular(h0), DomainError);
}

TEST_CASE("regular covers") {
  const auto h0 = testing::load("h0"), f = testing::load("f");
  const auto c0 = regular_cover(h0);
  CHECK(c0.degree() == 576);
  CHECK(genus(c0) == 145);
  CHECK(type_of_regular(c0) == RegularType{6, 4, 12});
  CHECK(c0.name() == "h0-cover");

  const auto cf = regular_cover(f);
  CHECK(cf.degree() == 18);
  CHECK(genus(cf) == 1);
  CHECK(type_of_regular(cf) == RegularType{3, 2, 6});
  CHECK(isomorphic(regular_cover(cf), cf).has_value());

  CHECK_THROWS_AS(regular_cover(h0, 500), CapExceeded);
}

TEST_CASE("isomorphism and automorphisms") {
  const auto h0 = testing::load("h0"), h1 = testing::load("h1"), h2 = testing::load("h2");
  CHECK(!isomorphic(h0, h1));
  CHECK(!isomorphic(h1, h2));
  CHECK(!isomorphic(h0, h2));
  CHECK(isomorphic(h0, h0).value().is_identity());

  const auto aut = automorphisms(h0);
  CHECK(aut.size() == 2);
  CHECK(aut[1] == central_h0());
  CHECK(automorphisms(Dessin()).size() == 1);
  CHECK(automorphisms(regular_cover(testing::load("f"))).size() == 18);
}

TEST_CASE("quotients by partitions") {
  const auto h0 = testing::load("h0"), f = testing::load("f");
  std::vector<std::vector<Point>> halves;
  for (Point i = 1; i <= 6; ++i)
    halves.push_back({i, i + 6});
  const auto q = quotient_by_partition(h0, halves);
  CHECK(q.degree() == 6);
  CHECK(isomorphic(q, f).has_value());
  CHECK(quotient_map(h0, halves).is_valid());

  std::vector<std::vector<Point>> singletons;
  for (Point i = 1; i <= 12; ++i)
    singletons.push_back({i});
  CHECK(quotient_by_partition(h0, singletons) == h0);

  std::vector<Point> all(12);
  for (Point i = 0; i < 12; ++i)
    all[i] = i + 1;
  CHECK(quotient_by_partition(h0, {all}) == Dessin());

  CHECK_THROWS_WITH_AS(quotient_by_partition(h0, {{1, 2}, {3, 4, 5, 6, 7, 8, 9, 10, 11, 12}}),
                       doctest::Contains("not invariant"), DomainError);
  CHECK_THROWS_AS(quotient_by_partition(h0, {{1, 2}}), DomainError);
}

TEST_CASE("central quotient of the cover of h0") {
  const auto h0 = testing::load("h0");
  const auto cover = regular_cover(h0);
  const auto z = monodromy_group(cover).center();
  CHECK(z.size() == 2);
  const auto e0 = quotient_by_central(cover, z);
  CHECK(e0.degree() == 288);
  CHECK(is_regular(e0));
  const auto t = type_of_regular(e0);
  CHECK(t == RegularType{6, 4, 6});
  CHECK(euler_rh(288, t) == -120);
  CHECK(genus_from_euler(euler_rh(288, t)) == 61);
  CHECK(genus(e0) == 61);

  CHECK(quotient_by_central(cover, {Permutation::identity(576)}) == cover);
  CHECK_THROWS_AS(quotient_by_central(h0, {central_h0()}), DomainError);
}

TEST_CASE("euler_rh") {
  CHECK(euler_rh(288, {6, 4, 6}) == -120);
  CHECK(euler_rh(576, {6, 4, 12}) == -288);
  CHECK(genus_from_euler(-288) == 145);
  for (int n : {6, 12, 600})
    CHECK(euler_rh(n, {2, 3, 6}) == 0);
  CHECK_THROWS_AS(euler_rh(5, {2, 3, 7}), DomainError);
}

TEST_CASE("canonical form") {
  const auto c = canonical_form(Dessin());
  CHECK(c.size() == 12);
  CHECK(c == std::string("\0\0\0\1\0\0\0\0\0\0\0\0", 12));
  const auto h0 = testing::load("h0"), h1 = testing::load("h1");
  CHECK(canonical_form(h0) != canonical_form(h1));
}

TEST_CASE("enumeration by passport") {
  const auto found = enumerate_by_passport(Passport::parse("2^2 1^2|3 2 1|6"));
  std::size_t full = 0;
  for (const auto &d : found) {
    CHECK(genus(d) == 0);
    CHECK(passport(d) == Passport::parse("2^2 1^2|3 2 1|6"));
    full += monodromy_group(d).is_full_symmetric();
  }
  CHECK(found.size() == 3);
  CHECK(full == 3);
  for (std::size_t i = 0; i < found.size(); ++i)
    for (std::size_t j = i + 1; j < found.size(); ++j) {
      CHECK(!isomorphic(found[i], found[j]));
      CHECK(!kernels_equal(found[i], found[j]));
    }

  const auto trivial = enumerate_by_passport(Passport::parse("1|1|1"));
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0] == Dessin());

  // sigma_x = sigma_y = (1,2), z trivial: a sphere with two edges
  const auto two = enumerate_by_passport(Passport::parse("2|2|1 1"));
  REQUIRE(two.size() == 1);
  CHECK(two[0].sigma_x() == P("(1,2)", 2));
  CHECK(two[0].sigma_y() == P("(1,2)", 2));

  // a product of two fixed-point-free involutions on 4 points is never a 3-cycle
  CHECK(enumerate_by_passport(Passport::parse("2 2|2 2|3 1")).empty());
  CHECK(enumerate_by_passport(Passport::parse("3|3|3")).size() == 1);
  CHECK_THROWS_AS(enumerate_by_passport(Passport::parse("9|9|9"), 8), CapExceeded);
  CHECK_THROWS_AS(enumerate_by_passport(Passport::parse("2 1|3|3 1")), DomainError);
}

TEST_CASE("property: passport, genus, order are isomorphism invariants") {
  for (int i = 0; i < 150; ++i) {
    const auto d = testing::random_dessin(testing::uniform(1, 9));
    const auto g = testing::random_perm(d.degree());
    const auto e = relabel(d, g);
    REQUIRE(passport(e) == passport(d));
    REQUIRE(genus(e) == genus(d));
    REQUIRE(monodromy_group(e).order() == monodromy_group(d).order());
    REQUIRE(canonical_form(e) == canonical_form(d));
    const auto m = isomorphic(d, e);
    REQUIRE(m.has_value());
    REQUIRE(relabel(d, *m) == e);
  }
}

TEST_CASE("property: canonical form decides isomorphism") {
  for (int i = 0; i < 200; ++i) {
    const auto n = testing::uniform(1, 6);
    const auto a = testing::random_dessin(n), b = testing::random_dessin(n);
    REQUIRE(isomorphic(a, b).has_value() == (canonical_form(a) == canonical_form(b)));
  }
}

TEST_CASE("property: covers are regular and fold back onto the base") {
  for (int i = 0; i < 60; ++i) {
    const auto d = testing::random_dessin(testing::uniform(1, 6));
    const auto m = regular_cover_map(d);
    REQUIRE(is_regular(m.source));
    REQUIRE(m.is_valid());
    const auto back = quotient_by_partition(m.source, fibres(m));
    REQUIRE(isomorphic(back, d).has_value());
    const auto t = type_of_regular(m.source);
    const auto chi = euler_rh(m.source.degree(), t);
    REQUIRE(genus_from_euler(chi) == genus(m.source));
  }
}

TEST_CASE("property: two genus formulas agree on regular dessins") {
  for (int i = 0; i < 100; ++i) {
    const auto d = regular_cover(testing::random_dessin(testing::uniform(1, 5)));
    REQUIRE(genus_from_euler(euler_rh(d.degree(), type_of_regular(d))) == genus(d));
  }
}

TEST_CASE("property: quotient maps are equivariant") {
  const auto h0 = testing::load("h0");
  std::vector<std::vector<Point>> blocks;
  for (const auto &orbit : orbits_of({central_h0()}))
    blocks.push_back(orbit);
  const auto m = quotient_map(h0, blocks);
  CHECK(m.is_valid());
  CHECK(regular_cover_map(h0).is_valid());
  for (std::size_t e = 0; e < m.edge_map.size(); ++e) {
    const Point p = static_cast<Point>(e + 1);
    REQUIRE(m.edge_map[h0.sigma_x()(p) - 1] == m.target.sigma_x()(m.edge_map[e]));
    REQUIRE(m.edge_map[h0.sigma_y()(p) - 1] == m.target.sigma_y()(m.edge_map[e]));
  }
}

TEST_CASE("property: enumeration is closed under relabelling") {
  for (const char *text : {"2^2 1^2|3 2 1|6", "2 2|2 2|2 2", "3 1|3 1|2 2", "2 1 1|3 1|4"}) {
    const auto p = Passport::parse(text);
    const auto found = enumerate_by_passport(p);
    std::set<std::string> codes;
    for (const auto &d : found)
      REQUIRE(codes.insert(canonical_form(d)).second);
    for (const auto &d : found)
      for (int k = 0; k < 10; ++k)
        REQUIRE(codes.count(canonical_form(relabel(d, testing::random_perm(d.degree())))) == 1);
    // random samples from the candidate space land in the enumerated set
    const auto sx = canonical_permutation(p.x);
    for (int k = 0; k < 300; ++k) {
      const auto sy = conjugate(canonical_permutation(p.y), testing::random_perm(p.degree()));
      if (orbits_of({sx, sy}).size() != 1)
        continue;
      const Dessin d(sx, sy);
      if (passport(d) == p)
        REQUIRE(codes.count(canonical_form(d)) == 1);
    }
  }
}
