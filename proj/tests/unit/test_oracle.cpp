// Reference-oracle tests: brute-force minimum search, empty-set adequacy,
// the 3-CNF reductions on both the criterion and the constraint side, the
// graph-coloring correspondence, and the family stringency comparator with
// its MIN-reduction laws.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>

#include "tselect/normalize.hpp"
#include "tselect/oracle.hpp"
#include "tselect/solver.hpp"

#include "../support/helpers.hpp"
#include "../support/random_gen.hpp"

using namespace tselect;
using namespace testutil;

namespace {

Instance make_instance(Declarations d, ConstraintExpr c, CriterionExpr g) {
  Instance inst;
  inst.decls = std::move(d);
  inst.constraint = std::move(c);
  inst.criterion = std::move(g);
  return inst;
}

Declarations one_triple() { return make_decls({{"p", {"1", "2", "3"}}}); }

Graph complete(std::uint32_t n) {
  Graph g;
  g.num_vertices = n;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j) g.edges.emplace_back(i, j);
  return g;
}

Graph edgeless(std::uint32_t n) {
  Graph g;
  g.num_vertices = n;
  return g;
}

Graph cycle(std::uint32_t n) {
  Graph g;
  g.num_vertices = n;
  for (std::uint32_t i = 0; i < n; ++i) {
    std::uint32_t j = (i + 1) % n;
    g.edges.emplace_back(std::min(i, j), std::max(i, j));
  }
  return g;
}

Graph path(std::uint32_t n) {
  Graph g;
  g.num_vertices = n;
  for (std::uint32_t i = 0; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
  return g;
}

// Complete bipartite graph on parts {0,1} and {2,3,4}.
Graph two_by_three() {
  Graph g;
  g.num_vertices = 5;
  for (std::uint32_t i = 0; i < 2; ++i)
    for (std::uint32_t j = 2; j < 5; ++j) g.edges.emplace_back(i, j);
  return g;
}

bool same_graph(const Graph& a, const Graph& b) {
  if (a.num_vertices != b.num_vertices) return false;
  auto ea = a.edges;
  auto eb = b.edges;
  std::sort(ea.begin(), ea.end());
  std::sort(eb.begin(), eb.end());
  return ea == eb;
}

// Pairwise intersections of two families, members kept sorted, duplicates
// collapsed -- the set-level meaning of the criterion product.
PointSetFamily tensor_family(const PointSetFamily& a, const PointSetFamily& b) {
  PointSetFamily out;
  for (const auto& x : a)
    for (const auto& y : b) {
      std::vector<TestPoint> z;
      std::set_intersection(x.begin(), x.end(), y.begin(), y.end(),
                            std::back_inserter(z));
      if (std::find(out.begin(), out.end(), z) == out.end())
        out.push_back(std::move(z));
    }
  return out;
}

PointSetFamily union_family(PointSetFamily a, const PointSetFamily& b) {
  for (const auto& y : b)
    if (std::find(a.begin(), a.end(), y) == a.end()) a.push_back(y);
  return a;
}

std::vector<TestPoint> line_universe(std::uint32_t n) {
  std::vector<TestPoint> u;
  for (std::uint32_t i = 0; i < n; ++i) u.push_back(pt({i}));
  return u;
}

}  // namespace

TEST_CASE("brute-force minimum on hand-checked instances") {
  SUBCASE("three exclusion requirements over three values need two points") {
    Instance inst = make_instance(one_triple(), ktrue(),
                                  cunion({cneq(0, 0), cneq(0, 1), cneq(0, 2)}));
    auto min = brute_force_minimum(inst);
    CHECK(min == std::vector<TestPoint>{pt({0}), pt({1})});
  }
  SUBCASE("covering every value needs every point") {
    Instance inst = make_instance(one_triple(), ktrue(), cexh({0}));
    CHECK(brute_force_minimum(inst).size() == 3);
  }
  SUBCASE("the trivial criterion needs one point") {
    Instance inst = make_instance(one_triple(), ktrue(), cany());
    CHECK(brute_force_minimum(inst) == std::vector<TestPoint>{pt({0})});
  }
  SUBCASE("requirements outside the domain need nothing") {
    Instance inst = make_instance(one_triple(), keq(0, 0), ceq(0, 1));
    CHECK(brute_force_minimum(inst).empty());
  }
  SUBCASE("output is sorted and deterministic") {
    Instance inst = make_instance(
        make_decls({{"p", {"1", "2"}}, {"q", {"1", "2"}}}), ktrue(),
        cunion({ceq(0, 1), ceq(1, 1), ctensor({ceq(0, 0), ceq(1, 0)})}));
    auto a = brute_force_minimum(inst);
    auto b = brute_force_minimum(inst);
    CHECK(a == b);
    CHECK(std::is_sorted(a.begin(), a.end()));
  }
}

TEST_CASE("brute-force minimum enforces its caps") {
  SUBCASE("product space cap") {
    Instance inst = make_instance(
        make_decls({{"p", {"1", "2", "3"}}, {"q", {"1", "2", "3"}}}), ktrue(),
        cany());
    OracleCaps caps;
    caps.point_cap = 8;
    try {
      brute_force_minimum(inst, caps);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Cap);
      CHECK(std::string(e.what()).find("9") != std::string::npos);
    }
  }
  SUBCASE("required-set cap") {
    Instance inst = make_instance(one_triple(), ktrue(), cexh({0}));
    OracleCaps caps;
    caps.cube_cap = 2;
    try {
      brute_force_minimum(inst, caps);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Cap);
      CHECK(std::string(e.what()).find("3") != std::string::npos);
    }
  }
}

TEST_CASE("brute-force minimum is adequate and never beats itself") {
  Rng rng(7151);
  for (int round = 0; round < 100; ++round) {
    CAPTURE(round);
    Instance inst = random_instance(rng);
    auto min = brute_force_minimum(inst);
    CHECK(is_adequate(inst, min));
    auto greedy = minimal_adequate_set(normalize_instance(inst));
    CHECK(min.size() <= greedy.size());
  }
}

TEST_CASE("empty-set adequacy") {
  SUBCASE("false when a requirement meets the domain") {
    Instance inst = make_instance(one_triple(), ktrue(), ceq(0, 0));
    CHECK_FALSE(empty_set_adequate(inst));
  }
  SUBCASE("true when the constraint is unsatisfiable") {
    Instance inst = make_instance(one_triple(),
                                  kand({keq(0, 0), keq(0, 1)}), cany());
    CHECK(empty_set_adequate(inst));
  }
  SUBCASE("true when every requirement avoids the domain") {
    Instance inst = make_instance(one_triple(), keq(0, 0), ceq(0, 1));
    CHECK(empty_set_adequate(inst));
  }
  SUBCASE("agrees with the minimum being empty") {
    Rng rng(40921);
    for (int round = 0; round < 100; ++round) {
      CAPTURE(round);
      Instance inst = random_instance(rng);
      CHECK(empty_set_adequate(inst) == brute_force_minimum(inst).empty());
    }
  }
}

TEST_CASE("truth-table satisfiability") {
  SUBCASE("a clause holding a literal and its negation is a tautology") {
    CnfFormula f;
    f.num_variables = 2;
    f.clauses.push_back({{{0, true}, {0, false}, {1, true}}});
    CHECK(truth_table_satisfiable(f));
  }
  SUBCASE("opposite forced literals contradict") {
    CnfFormula f;
    f.num_variables = 1;
    f.clauses.push_back({{{0, true}, {0, true}, {0, true}}});
    f.clauses.push_back({{{0, false}, {0, false}, {0, false}}});
    CHECK_FALSE(truth_table_satisfiable(f));
  }
  SUBCASE("no clauses means vacuously satisfiable") {
    CnfFormula f;
    f.num_variables = 3;
    CHECK(truth_table_satisfiable(f));
  }
  SUBCASE("variable count is capped") {
    CnfFormula f;
    f.num_variables = 21;
    try {
      truth_table_satisfiable(f);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Cap);
    }
  }
}

TEST_CASE("both satisfiability reductions state the same fact") {
  SUBCASE("encoded shapes") {
    CnfFormula f;
    f.num_variables = 3;
    f.clauses.push_back({{{0, true}, {1, false}, {2, true}}});
    f.clauses.push_back({{{1, true}, {1, true}, {0, false}}});

    Instance crit = cnf_to_criterion_instance(f);
    REQUIRE(crit.decls.size() == 3);
    CHECK(crit.decls.params[0].name == "u1");
    CHECK(crit.decls.params[2].name == "u3");
    CHECK(crit.decls.params[0].range ==
          std::vector<std::string>{"true", "false"});
    CHECK(crit.constraint.kind == ConstraintExpr::Kind::True);
    REQUIRE(crit.criterion.kind == CriterionExpr::Kind::Tensor);
    REQUIRE(crit.criterion.children.size() == 2);
    CHECK(crit.criterion.children[0].kind == CriterionExpr::Kind::Union);
    CHECK(crit.criterion.children[0].children.size() == 3);
    CHECK(same_criterion(crit.criterion.children[0].children[1], ceq(1, 1)));

    Instance cons = cnf_to_constraint_instance(f);
    CHECK(cons.criterion.kind == CriterionExpr::Kind::AnyTest);
    REQUIRE(cons.constraint.kind == ConstraintExpr::Kind::And);
    REQUIRE(cons.constraint.children.size() == 2);
    CHECK(cons.constraint.children[1].kind == ConstraintExpr::Kind::Or);
    CHECK(same_constraint(cons.constraint.children[1].children[2], keq(0, 1)));
  }
  SUBCASE("single-clause and clause-free formulas collapse the joins") {
    CnfFormula f;
    f.num_variables = 2;
    f.clauses.push_back({{{0, true}, {1, true}, {1, false}}});
    CHECK(cnf_to_criterion_instance(f).criterion.kind ==
          CriterionExpr::Kind::Union);
    CHECK(cnf_to_constraint_instance(f).constraint.kind ==
          ConstraintExpr::Kind::Or);
    CnfFormula empty;
    empty.num_variables = 1;
    CHECK(cnf_to_criterion_instance(empty).criterion.kind ==
          CriterionExpr::Kind::AnyTest);
    CHECK(cnf_to_constraint_instance(empty).constraint.kind ==
          ConstraintExpr::Kind::True);
  }
  SUBCASE("satisfiable exactly when the empty set is not adequate") {
    Rng rng(31337);
    int sat_seen = 0, unsat_seen = 0;
    for (int round = 0; round < 120; ++round) {
      CAPTURE(round);
      CnfFormula f = random_cnf(rng, 10, 8);
      bool sat = truth_table_satisfiable(f);
      CHECK(empty_set_adequate(cnf_to_criterion_instance(f)) == !sat);
      CHECK(empty_set_adequate(cnf_to_constraint_instance(f)) == !sat);
      (sat ? sat_seen : unsat_seen)++;
    }
    // The sample must exercise both outcomes to mean anything.
    CHECK(sat_seen > 0);
    CHECK(unsat_seen > 0);
  }
}

TEST_CASE("graph encoding reproduces the graph as an intersection graph") {
  SUBCASE("hand-checked shapes") {
    for (const Graph& g : {complete(3), edgeless(3), path(3), cycle(5),
                           edgeless(1), two_by_three()}) {
      Instance inst = graph_to_instance(g);
      CHECK(inst.decls.size() == g.num_vertices);
      CHECK(inst.decls.params[0].name == "v0");
      CubeSet cubes = criterion_cubes(inst.decls, inst.criterion);
      REQUIRE(cubes.size() == g.num_vertices);
      CHECK(same_graph(intersection_graph(inst.decls, cubes), g));
    }
  }
  SUBCASE("a fully adjacent vertex contributes a single-atom term") {
    Instance inst = graph_to_instance(complete(3));
    REQUIRE(inst.criterion.kind == CriterionExpr::Kind::Union);
    CHECK(same_criterion(inst.criterion.children[1], ceq(1, 0)));
  }
  SUBCASE("random graphs round-trip") {
    Rng rng(5081);
    for (int round = 0; round < 60; ++round) {
      CAPTURE(round);
      Graph g = random_graph(rng, 5);
      Instance inst = graph_to_instance(g);
      CubeSet cubes = criterion_cubes(inst.decls, inst.criterion);
      CHECK(same_graph(intersection_graph(inst.decls, cubes), g));
    }
  }
}

TEST_CASE("chromatic number on known graphs") {
  CHECK(chromatic_number(edgeless(0)) == 0);
  CHECK(chromatic_number(edgeless(1)) == 1);
  CHECK(chromatic_number(edgeless(4)) == 1);
  CHECK(chromatic_number(path(3)) == 2);
  CHECK(chromatic_number(complete(3)) == 3);
  CHECK(chromatic_number(complete(4)) == 4);
  CHECK(chromatic_number(cycle(4)) == 2);
  CHECK(chromatic_number(cycle(5)) == 3);
  CHECK(chromatic_number(two_by_three()) == 2);
}

TEST_CASE("coloring the complement of the intersection graph sizes the minimum") {
  SUBCASE("named graphs") {
    CHECK(coloring_matches_minimum(edgeless(1)));
    CHECK(coloring_matches_minimum(edgeless(3)));
    CHECK(coloring_matches_minimum(path(3)));
    CHECK(coloring_matches_minimum(complete(3)));
    CHECK(coloring_matches_minimum(complete(4)));
    CHECK(coloring_matches_minimum(cycle(5)));
    CHECK(coloring_matches_minimum(two_by_three()));
  }
  SUBCASE("random graphs") {
    Rng rng(90125);
    for (int round = 0; round < 40; ++round) {
      CAPTURE(round);
      CHECK(coloring_matches_minimum(random_graph(rng, 5)));
    }
  }
  SUBCASE("vertex count is capped") {
    try {
      coloring_matches_minimum(edgeless(7));
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Cap);
    }
  }
}

TEST_CASE("min_family keeps exactly the minimal non-empty members") {
  auto p0 = pt({0});
  auto p1 = pt({1});
  SUBCASE("supersets and the empty member drop") {
    PointSetFamily s{{}, {p0}, {p0, p1}};
    CHECK(min_family(s) == PointSetFamily{{p0}});
  }
  SUBCASE("duplicates collapse") {
    PointSetFamily s{{p0}, {p0}};
    CHECK(min_family(s) == PointSetFamily{{p0}});
  }
  SUBCASE("incomparable members survive") {
    auto p2 = pt({2});
    PointSetFamily s{{p0, p1}, {p1, p2}};
    CHECK(min_family(s) == s);
  }
  SUBCASE("idempotent on random families") {
    Rng rng(2718);
    auto universe = line_universe(4);
    for (int round = 0; round < 100; ++round) {
      CAPTURE(round);
      PointSetFamily s = random_family(rng, universe);
      CHECK(canonical_family(min_family(min_family(s))) ==
            canonical_family(min_family(s)));
    }
  }
}

TEST_CASE("family comparison by stringency") {
  auto u = line_universe(4);
  auto p0 = pt({0});
  auto p1 = pt({1});
  SUBCASE("adding a requirement makes a family more stringent") {
    CHECK(compare_families({{p0}}, {{p0}, {p1}}, u) == FamilyOrder::Less);
    CHECK(compare_families({{p0}, {p1}}, {{p0}}, u) == FamilyOrder::Greater);
  }
  SUBCASE("equal families compare equal, empty members ignored") {
    CHECK(compare_families({{p0}}, {{p0}}, u) == FamilyOrder::Equal);
    CHECK(compare_families({{}, {p0}}, {{p0}}, u) == FamilyOrder::Equal);
  }
  SUBCASE("the empty family is least stringent") {
    CHECK(compare_families({}, {{p0}}, u) == FamilyOrder::Less);
  }
  SUBCASE("disjoint requirements are incomparable") {
    CHECK(compare_families({{p0}}, {{p1}}, u) == FamilyOrder::Incomparable);
  }
  SUBCASE("points outside the universe are rejected") {
    try {
      compare_families({{pt({9})}}, {{p0}}, u);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Validation);
    }
  }
  SUBCASE("universe size is capped") {
    try {
      compare_families({{p0}}, {{p0}}, line_universe(17));
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Cap);
    }
  }
}

TEST_CASE("families are equally stringent exactly when their MIN agrees") {
  Rng rng(16180);
  auto universe = line_universe(4);
  int equal_seen = 0, differ_seen = 0;
  for (int round = 0; round < 150; ++round) {
    CAPTURE(round);
    PointSetFamily s1 = random_family(rng, universe);
    PointSetFamily s2 = chance(rng, 0.3) ? union_family(s1, random_family(rng, universe))
                                         : random_family(rng, universe);
    bool same_min = canonical_family(min_family(s1)) ==
                    canonical_family(min_family(s2));
    bool equal = compare_families(s1, s2, universe) == FamilyOrder::Equal;
    CHECK(equal == same_min);
    (equal ? equal_seen : differ_seen)++;
    // Reducing to MIN never changes stringency.
    CHECK(compare_families(s1, min_family(s1), universe) == FamilyOrder::Equal);
  }
  CHECK(equal_seen > 0);
  CHECK(differ_seen > 0);
}

TEST_CASE("family union respects stringency equivalence") {
  Rng rng(27182);
  auto universe = line_universe(4);
  for (int round = 0; round < 100; ++round) {
    CAPTURE(round);
    PointSetFamily f1 = random_family(rng, universe);
    PointSetFamily f1_reduced = min_family(f1);
    PointSetFamily f2 = random_family(rng, universe);
    REQUIRE(compare_families(f1, f1_reduced, universe) == FamilyOrder::Equal);
    CHECK(compare_families(union_family(f1, f2), union_family(f1_reduced, f2),
                           universe) == FamilyOrder::Equal);
  }
}

TEST_CASE("family product does not respect stringency equivalence") {
  // Frozen counterexample over one three-valued parameter: the first family
  // carries a redundant superset member that MIN would drop, yet after the
  // product with a third family the two sides pull apart.
  Declarations decls = one_triple();
  auto universe = line_universe(3);
  auto p0 = pt({0});
  auto p1 = pt({1});
  auto p2 = pt({2});

  CriterionExpr g1 = cunion({ceq(0, 0), cneq(0, 2)});
  CriterionExpr g1_reduced = ceq(0, 0);
  CriterionExpr g2 = cneq(0, 0);

  PointSetFamily s1 = criterion_point_sets(decls, g1);
  PointSetFamily s1r = criterion_point_sets(decls, g1_reduced);
  PointSetFamily s2 = criterion_point_sets(decls, g2);
  CHECK(family_equal(s1, {{p0}, {p0, p1}}));
  CHECK(family_equal(s1r, {{p0}}));
  CHECK(family_equal(s2, {{p1, p2}}));
  REQUIRE(compare_families(s1, s1r, universe) == FamilyOrder::Equal);

  SUBCASE("computed on the families directly") {
    PointSetFamily left = tensor_family(s1, s2);
    PointSetFamily right = tensor_family(s1r, s2);
    CHECK(family_equal(left, {{}, {p1}}));
    CHECK(family_equal(right, {{}}));
    CHECK(compare_families(left, right, universe) == FamilyOrder::Greater);
  }
  SUBCASE("computed through the criterion semantics") {
    PointSetFamily left = criterion_point_sets(decls, ctensor({g1, g2}));
    PointSetFamily right =
        criterion_point_sets(decls, ctensor({g1_reduced, g2}));
    CHECK(compare_families(left, right, universe) != FamilyOrder::Equal);
  }
  SUBCASE("a bounded random search finds such a triple on its own") {
    Rng rng(6022);
    auto u4 = line_universe(4);
    bool found = false;
    for (int attempt = 0; attempt < 3000 && !found; ++attempt) {
      PointSetFamily f1 = random_family(rng, u4);
      PointSetFamily f1_reduced = min_family(f1);
      if (canonical_family(f1) == canonical_family(f1_reduced)) continue;
      PointSetFamily f2 = random_family(rng, u4);
      found = compare_families(tensor_family(f1, f2),
                               tensor_family(f1_reduced, f2),
                               u4) != FamilyOrder::Equal;
    }
    CHECK(found);
  }
}
