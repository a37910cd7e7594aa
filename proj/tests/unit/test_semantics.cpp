// Definitional semantics: constraint evaluation, domain enumeration, subcube
// algebra, criterion families, adequacy, and deterministic point finding.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "tselect/parse.hpp"
#include "tselect/semantics.hpp"

#include "../support/helpers.hpp"
#include "../support/random_gen.hpp"

using namespace tselect;
using namespace testutil;

namespace {

Declarations change_command_decls() {
  return parse_instance(read_file(fixture_path("change_command.tsel"))).decls;
}

// All points of the full product space, sorted.
std::vector<TestPoint> full_space(const Declarations& decls) {
  return sorted(enumerate_domain(decls, ConstraintExpr::make_true()));
}

Subcube cube_of(const Declarations& decls, const CriterionExpr& primitive) {
  CubeSet cubes = criterion_cubes(decls, primitive);
  REQUIRE(cubes.size() == 1);
  return cubes.front();
}

// Random subcube over the given space: each coordinate independently either
// free or restricted to a random non-empty (sometimes empty) subset.
Subcube random_cube(Rng& rng, const Declarations& decls, bool allow_empty) {
  Subcube cube = Subcube::full(decls.size());
  for (std::uint32_t p = 0; p < decls.size(); ++p) {
    if (chance(rng, 0.5)) continue;
    std::uint32_t range = (std::uint32_t)decls.params[p].range.size();
    std::vector<std::uint32_t> values;
    for (std::uint32_t v = 0; v < range; ++v)
      if (chance(rng, 0.5)) values.push_back(v);
    if (values.empty() && !allow_empty) values.push_back(pick(rng, 0, range - 1));
    cube.restrict_coord(p, values);
  }
  return cube;
}

}  // namespace

TEST_CASE("eval_constraint on primitives and the trivial constraint") {
  Declarations decls = make_decls({{"string_1", {"a", "ab"}}});
  TestPoint a = pt({0}), ab = pt({1});
  CHECK(eval_constraint(ktrue(), a));
  CHECK(eval_constraint(keq(0, 0), a));
  CHECK_FALSE(eval_constraint(keq(0, 0), ab));
  CHECK(eval_constraint(kneq(0, 0), ab));
}

TEST_CASE("eval_constraint over a 2x2 boolean space") {
  Declarations decls =
      make_decls({{"u", {"true", "false"}}, {"v", {"true", "false"}}});
  ConstraintExpr psi = kand({kor({keq(0, 0), keq(0, 1)}), keq(1, 0)});
  std::vector<TestPoint> satisfying;
  for (const auto& p : full_space(decls))
    if (eval_constraint(psi, p)) satisfying.push_back(p);
  CHECK(satisfying == std::vector<TestPoint>{pt({0, 0}), pt({1, 0})});
}

TEST_CASE("domain sizes for the bundled models") {
  CHECK(enumerate_domain(change_command_decls(), ktrue()).size() == 288);
  Declarations five =
      parse_instance(read_file(fixture_path("five_by_five.tsel"))).decls;
  CHECK(enumerate_domain(five, ktrue()).size() == 3125);
}

TEST_CASE("domain enumeration respects the constraint and the cap") {
  Declarations decls = make_decls({{"p", {"a"}}});
  CHECK(enumerate_domain(decls, kneq(0, 0)).empty());
  Declarations big = make_decls({{"x", {"1", "2", "3"}}, {"y", {"1", "2", "3"}}});
  CHECK_THROWS_WITH_AS(enumerate_domain(big, ktrue(), 8),
                       doctest::Contains("9"), Error);
}

TEST_CASE("enumeration order: last coordinate varies fastest") {
  Declarations decls = make_decls({{"x", {"1", "2"}}, {"y", {"1", "2"}}});
  auto points = enumerate_domain(decls, ktrue());
  CHECK(points == std::vector<TestPoint>{pt({0, 0}), pt({0, 1}), pt({1, 0}),
                                         pt({1, 1})});
}

TEST_CASE("subcube intersection identities") {
  Declarations decls = change_command_decls();
  Subcube full = Subcube::full(decls.size());
  Subcube x = full;
  x.restrict_coord(2, {1});  // string_1 = "a"
  CHECK(subcube_intersect(x, full) == x);
  Subcube slash = full, zed = full;
  slash.restrict_coord(0, {0});
  zed.restrict_coord(0, {1});
  CHECK(subcube_intersect(slash, zed).empty());
}

TEST_CASE("pairwise intersection does not imply joint intersection") {
  Declarations decls = make_decls({{"q", {"1", "2", "3"}}});
  Subcube not1 = Subcube::full(1), not2 = Subcube::full(1), not3 = Subcube::full(1);
  not1.restrict_coord(0, {1, 2});
  not2.restrict_coord(0, {0, 2});
  not3.restrict_coord(0, {0, 1});
  CHECK_FALSE(subcube_intersect(not1, not2).empty());
  CHECK_FALSE(subcube_intersect(not1, not3).empty());
  CHECK_FALSE(subcube_intersect(not2, not3).empty());
  CHECK(subcube_intersect(subcube_intersect(not1, not2), not3).empty());
}

TEST_CASE("subcube membership and intersection agree with enumeration") {
  Rng rng(7101);
  for (int round = 0; round < 200; ++round) {
    Declarations decls = random_decls(rng);
    Subcube x = random_cube(rng, decls, true);
    Subcube y = random_cube(rng, decls, true);
    Subcube both = subcube_intersect(x, y);
    BigUint count = 0;
    for (const auto& p : full_space(decls)) {
      CHECK(both.contains(p) == (x.contains(p) && y.contains(p)));
      if (x.contains(p)) ++count;
    }
    CHECK(x.point_count(decls) == count);
    CHECK(x.empty() == (x.point_count(decls) == 0));
  }
}

TEST_CASE("criterion cubes for primitives and unions") {
  Declarations decls = change_command_decls();
  SUBCASE("equality primitive restricts one coordinate") {
    Subcube c = cube_of(decls, ceq(2, 1));
    CHECK(c.restricted.size() == 1);
    CHECK(c.restricted[0].param == 2);
    CHECK(c.restricted[0].values == std::vector<std::uint32_t>{1});
  }
  SUBCASE("ANY_TEST denotes the full cube") {
    Subcube c = cube_of(decls, cany());
    CHECK(c.restricted.empty());
    CHECK(c.point_count(decls) == 288);
  }
  SUBCASE("inequality restricts to the complement") {
    Subcube c = cube_of(decls, cneq(0, 0));
    CHECK(c.restricted[0].values == std::vector<std::uint32_t>{1});
  }
  SUBCASE("union contributes one cube per term") {
    Declarations small = make_decls({{"p", {"x", "y", "z"}}});
    CubeSet cubes = criterion_cubes(small, cunion({ceq(0, 0), ceq(0, 1)}));
    REQUIRE(cubes.size() == 2);
    CHECK(cubes[0].restricted[0].values == std::vector<std::uint32_t>{0});
    CHECK(cubes[1].restricted[0].values == std::vector<std::uint32_t>{1});
  }
  SUBCASE("sugar and non-normal shapes are rejected") {
    Declarations small = make_decls({{"p", {"x", "y"}}, {"q", {"u", "v"}}});
    CHECK_THROWS_AS(criterion_cubes(small, ceach(0, {0, 1})), Error);
    CHECK_THROWS_AS(
        criterion_cubes(small, ctensor({cunion({ceq(0, 0), ceq(0, 1)}), ceq(1, 0)})),
        Error);
  }
}

TEST_CASE("criterion point sets follow the defining equations") {
  Declarations decls = make_decls({{"p", {"x", "y", "z"}}});
  auto space = full_space(decls);
  SUBCASE("primitive: singleton family") {
    auto fam = criterion_point_sets(decls, ceq(0, 0));
    REQUIRE(fam.size() == 1);
    CHECK(fam[0] == std::vector<TestPoint>{pt({0})});
  }
  SUBCASE("union concatenates families as a set") {
    auto fam = criterion_point_sets(decls, cunion({ceq(0, 0), ceq(0, 0)}));
    CHECK(fam.size() == 1);
  }
  SUBCASE("tensor takes pairwise intersections, keeping empty results") {
    auto fam = criterion_point_sets(decls, ctensor({ceq(0, 0), ceq(0, 1)}));
    REQUIRE(fam.size() == 1);
    CHECK(fam[0].empty());
  }
  SUBCASE("ANY_TEST denotes the whole-space family") {
    auto fam = criterion_point_sets(decls, cany());
    REQUIRE(fam.size() == 1);
    CHECK(fam[0] == space);
  }
}

TEST_CASE("point membership in the criterion union distributes") {
  Rng rng(7102);
  for (int round = 0; round < 200; ++round) {
    Declarations decls = random_decls(rng);
    CriterionExpr gamma = random_criterion(rng, decls, 16);
    auto family = criterion_point_sets(decls, gamma);
    for (const auto& p : full_space(decls)) {
      bool in_union = false;
      for (const auto& x : family)
        if (std::binary_search(x.begin(), x.end(), p)) {
          in_union = true;
          break;
        }
      CHECK(point_in_criterion_union(decls, gamma, p) == in_union);
    }
  }
}

TEST_CASE("adequacy of the six search-string/delimiter combinations") {
  Instance inst = parse_instance(read_file(fixture_path("change_command.tsel")));
  // Pairs (string_1, separator_1), extended arbitrarily on the other
  // coordinates: every search string once, and both delimiters.
  std::vector<TestPoint> six = {pt({0, 0, 0, 0, 0}), pt({0, 0, 1, 0, 0}),
                                pt({0, 0, 2, 0, 0}), pt({0, 0, 3, 0, 0}),
                                pt({0, 0, 4, 0, 0}), pt({1, 0, 5, 0, 0})};
  CHECK(is_adequate(inst, six));
  std::vector<TestPoint> five(six.begin(), six.end() - 1);
  CHECK_FALSE(is_adequate(inst, five));
}

TEST_CASE("adequacy with no criterion requirements is vacuous") {
  Declarations decls = make_decls({{"p", {"a", "b"}}});
  Instance inst{decls, keq(0, 0), ceq(0, 1), 0};
  // The only criterion cube misses the domain, so nothing is required.
  CHECK(is_adequate(inst, {}));
}

TEST_CASE("adequacy rejects out-of-domain points") {
  Declarations decls = make_decls({{"p", {"a", "b"}}});
  Instance inst{decls, keq(0, 0), cany(), 0};
  CHECK_THROWS_AS(is_adequate(inst, {pt({1})}), Error);
}

TEST_CASE("both adequacy overloads agree on random instances") {
  Rng rng(7103);
  for (int round = 0; round < 150; ++round) {
    Instance inst = random_instance(rng);
    NormalizedInstance ni = normalize_instance(inst);
    auto domain = enumerate_domain(inst.decls, inst.constraint);
    std::vector<TestPoint> t;
    for (const auto& p : domain)
      if (chance(rng, 0.4)) t.push_back(p);
    CHECK(is_adequate(inst, t) ==
          is_adequate(inst.decls, ni.s_cubes, ni.c_cubes, t));
  }
}

TEST_CASE("find_point picks the first value of the first viable cube") {
  Declarations decls = make_decls({{"a", {"x", "y"}}, {"b", {"u", "v"}}});
  Subcube full = Subcube::full(2);
  SUBCASE("full against full yields the all-first point") {
    auto p = find_point(full, {full});
    REQUIRE(p.has_value());
    CHECK(*p == pt({0, 0}));
  }
  SUBCASE("disjoint restriction yields nothing") {
    Subcube xa = full, xb = full;
    xa.restrict_coord(0, {1});
    xb.restrict_coord(0, {0});
    CHECK_FALSE(find_point(xa, {xb}).has_value());
  }
}

TEST_CASE("find_point agrees with brute force on random inputs") {
  Rng rng(7104);
  for (int round = 0; round < 300; ++round) {
    Declarations decls = random_decls(rng);
    Subcube x = random_cube(rng, decls, true);
    CubeSet c;
    std::uint32_t n = pick(rng, 0, 3);
    for (std::uint32_t i = 0; i < n; ++i) c.push_back(random_cube(rng, decls, true));
    auto found = find_point(x, c);
    bool any = false;
    for (const auto& p : full_space(decls)) {
      if (!x.contains(p)) continue;
      for (const auto& cube : c)
        if (cube.contains(p)) {
          any = true;
          break;
        }
      if (any) break;
    }
    CHECK(found.has_value() == any);
    if (found) {
      CHECK(x.contains(*found));
      bool in_c = false;
      for (const auto& cube : c) in_c = in_c || cube.contains(*found);
      CHECK(in_c);
    }
  }
}

TEST_CASE("point rendering and parsing round-trips") {
  Declarations decls =
      make_decls({{"s", {"", "a;b", "q\"t", "c\\d"}}, {"t", {"u"}}});
  std::vector<TestPoint> points = {pt({0, 0}), pt({1, 0}), pt({2, 0}), pt({3, 0})};
  std::string text = render_points(decls, points);
  CHECK(parse_points(decls, text) == points);
  CHECK(render_point(decls, pt({1, 0})) == "s=\"a;b\"; t=\"u\"");
}

TEST_CASE("point files ignore blanks and comments, and validate names") {
  Declarations decls = make_decls({{"a", {"x"}}, {"b", {"y"}}});
  CHECK(parse_points(decls, "# header\n\na=\"x\"; b=\"y\"\n") ==
        std::vector<TestPoint>{pt({0, 0})});
  CHECK_THROWS_AS(parse_points(decls, "b=\"y\"; a=\"x\"\n"), Error);
  CHECK_THROWS_AS(parse_points(decls, "a=\"x\"; b=\"zz\"\n"), Error);
}
