#include "tselect/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "tselect/errors.hpp"
#include "tselect/normalize.hpp"

namespace tselect {

namespace {

BigUint space_size(const Declarations& decls) {
  BigUint n = 1;
  for (const auto& p : decls.params) n *= (unsigned long)p.range.size();
  return n;
}

void check_space_cap(const Declarations& decls, std::uint64_t cap) {
  BigUint n = space_size(decls);
  if (n > cap)
    throw Error(ErrorKind::Cap, "product space holds " + n.get_str() +
                                    " points, oracle point cap is " +
                                    std::to_string(cap));
}

bool point_in_sorted(const std::vector<TestPoint>& sorted, const TestPoint& p) {
  return std::binary_search(sorted.begin(), sorted.end(), p);
}

}  // namespace

std::vector<TestPoint> brute_force_minimum(const Instance& inst,
                                           const OracleCaps& caps) {
  check_space_cap(inst.decls, caps.point_cap);
  std::vector<TestPoint> domain =
      enumerate_domain(inst.decls, inst.constraint, caps.point_cap);
  std::sort(domain.begin(), domain.end());

  PointSetFamily family =
      criterion_point_sets(inst.decls, inst.criterion, caps.point_cap);

  // Only sets meeting the domain impose requirements; intersect each with
  // the domain so hits are counted among eligible points only.
  std::vector<std::vector<TestPoint>> required;
  for (const auto& x : family) {
    std::vector<TestPoint> meet;
    std::set_intersection(x.begin(), x.end(), domain.begin(), domain.end(),
                          std::back_inserter(meet));
    if (!meet.empty()) required.push_back(std::move(meet));
  }
  if (required.size() > caps.cube_cap)
    throw Error(ErrorKind::Cap,
                "criterion denotes " + std::to_string(required.size()) +
                    " point sets meeting the domain, oracle cap is " +
                    std::to_string(caps.cube_cap));
  if (required.empty()) return {};

  // Domain points are interchangeable when they belong to exactly the same
  // required sets, so one representative per membership class suffices.
  const std::uint32_t num_sets = (std::uint32_t)required.size();
  std::vector<std::pair<std::uint32_t, TestPoint>> reps;  // (membership, point)
  {
    std::map<std::uint32_t, std::size_t> seen;
    for (const auto& p : domain) {
      std::uint32_t mask = 0;
      for (std::uint32_t i = 0; i < num_sets; ++i)
        if (point_in_sorted(required[i], p)) mask |= (1u << i);
      if (mask == 0) continue;
      if (seen.emplace(mask, reps.size()).second) reps.emplace_back(mask, p);
    }
  }

  std::vector<std::vector<std::size_t>> candidates(num_sets);
  for (std::size_t r = 0; r < reps.size(); ++r)
    for (std::uint32_t i = 0; i < num_sets; ++i)
      if (reps[r].first & (1u << i)) candidates[i].push_back(r);

  const std::uint32_t all = num_sets == 32 ? ~0u : (1u << num_sets) - 1;
  std::vector<std::size_t> chosen;

  auto search = [&](auto&& self, std::uint32_t uncovered, std::size_t depth) -> bool {
    if (uncovered == 0) return true;
    if (depth == 0) return false;
    // Branch on the uncovered set with the fewest representatives.
    std::uint32_t best = UINT32_MAX;
    std::size_t best_count = SIZE_MAX;
    for (std::uint32_t i = 0; i < num_sets; ++i)
      if ((uncovered & (1u << i)) && candidates[i].size() < best_count) {
        best = i;
        best_count = candidates[i].size();
      }
    for (auto r : candidates[best]) {
      chosen.push_back(r);
      if (self(self, uncovered & ~reps[r].first, depth - 1)) return true;
      chosen.pop_back();
    }
    return false;
  };

  for (std::size_t k = 1; k <= num_sets; ++k) {
    chosen.clear();
    if (search(search, all, k)) {
      std::vector<TestPoint> out;
      out.reserve(chosen.size());
      for (auto r : chosen) out.push_back(reps[r].second);
      std::sort(out.begin(), out.end());
      return out;
    }
  }
  // Every required set is non-empty within the domain, so selecting one
  // point per set always succeeds; reaching here means a logic error.
  throw Error(ErrorKind::Internal, "exhaustive search failed to cover");
}

bool empty_set_adequate(const Instance& inst, const OracleCaps& caps) {
  check_space_cap(inst.decls, caps.point_cap);
  std::vector<TestPoint> domain =
      enumerate_domain(inst.decls, inst.constraint, caps.point_cap);
  for (const auto& p : domain)
    if (point_in_criterion_union(inst.decls, inst.criterion, p)) return false;
  return true;
}

bool truth_table_satisfiable(const CnfFormula& f) {
  if (f.num_variables > 20)
    throw Error(ErrorKind::Cap, "truth table over " +
                                    std::to_string(f.num_variables) +
                                    " variables exceeds the cap of 20");
  const std::uint64_t total = 1ull << f.num_variables;
  for (std::uint64_t assignment = 0; assignment < total; ++assignment) {
    bool ok = true;
    for (const auto& clause : f.clauses) {
      bool sat = false;
      for (const auto& [var, positive] : clause)
        if ((((assignment >> var) & 1) != 0) == positive) {
          sat = true;
          break;
        }
      if (!sat) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

namespace {

Declarations boolean_decls(const std::string& prefix, std::uint32_t count,
                           std::uint32_t first_index) {
  Declarations decls;
  for (std::uint32_t i = 0; i < count; ++i)
    decls.params.push_back(
        ParameterDecl{prefix + std::to_string(i + first_index), {"true", "false"}});
  return decls;
}

// Value indices in the boolean ranges above.
constexpr std::uint32_t kTrue = 0;
constexpr std::uint32_t kFalse = 1;

CriterionExpr literal_criterion(std::uint32_t var, bool positive) {
  return CriterionExpr::atom(CriterionExpr::Kind::Eq, var,
                             positive ? kTrue : kFalse);
}

ConstraintExpr literal_constraint(std::uint32_t var, bool positive) {
  return ConstraintExpr::atom(ConstraintExpr::Kind::Eq, var,
                              positive ? kTrue : kFalse);
}

}  // namespace

Instance cnf_to_criterion_instance(const CnfFormula& f) {
  Instance inst;
  inst.decls = boolean_decls("u", f.num_variables, 1);
  inst.constraint = ConstraintExpr::make_true();
  std::vector<CriterionExpr> clause_criteria;
  for (const auto& clause : f.clauses) {
    std::vector<CriterionExpr> lits;
    for (const auto& [var, positive] : clause)
      lits.push_back(literal_criterion(var, positive));
    clause_criteria.push_back(
        CriterionExpr::node(CriterionExpr::Kind::Union, std::move(lits)));
  }
  if (clause_criteria.empty())
    inst.criterion = CriterionExpr::any_test();
  else if (clause_criteria.size() == 1)
    inst.criterion = std::move(clause_criteria.front());
  else
    inst.criterion = CriterionExpr::node(CriterionExpr::Kind::Tensor,
                                         std::move(clause_criteria));
  return inst;
}

Instance cnf_to_constraint_instance(const CnfFormula& f) {
  Instance inst;
  inst.decls = boolean_decls("u", f.num_variables, 1);
  inst.criterion = CriterionExpr::any_test();
  std::vector<ConstraintExpr> clause_constraints;
  for (const auto& clause : f.clauses) {
    std::vector<ConstraintExpr> lits;
    for (const auto& [var, positive] : clause)
      lits.push_back(literal_constraint(var, positive));
    clause_constraints.push_back(
        ConstraintExpr::node(ConstraintExpr::Kind::Or, std::move(lits)));
  }
  if (clause_constraints.empty())
    inst.constraint = ConstraintExpr::make_true();
  else if (clause_constraints.size() == 1)
    inst.constraint = std::move(clause_constraints.front());
  else
    inst.constraint = ConstraintExpr::node(ConstraintExpr::Kind::And,
                                           std::move(clause_constraints));
  return inst;
}

Instance graph_to_instance(const Graph& g) {
  Instance inst;
  inst.decls = boolean_decls("v", g.num_vertices, 0);
  inst.constraint = ConstraintExpr::make_true();
  std::vector<CriterionExpr> terms;
  for (std::uint32_t i = 0; i < g.num_vertices; ++i) {
    std::vector<CriterionExpr> factors;
    factors.push_back(CriterionExpr::atom(CriterionExpr::Kind::Eq, i, kTrue));
    for (std::uint32_t j = 0; j < g.num_vertices; ++j)
      if (j != i && !g.adjacent(i, j))
        factors.push_back(CriterionExpr::atom(CriterionExpr::Kind::Eq, j, kFalse));
    terms.push_back(factors.size() == 1
                        ? std::move(factors.front())
                        : CriterionExpr::node(CriterionExpr::Kind::Tensor,
                                              std::move(factors)));
  }
  if (terms.empty())
    inst.criterion = CriterionExpr::any_test();
  else if (terms.size() == 1)
    inst.criterion = std::move(terms.front());
  else
    inst.criterion =
        CriterionExpr::node(CriterionExpr::Kind::Union, std::move(terms));
  return inst;
}

Graph intersection_graph(const Declarations&, const CubeSet& cubes) {
  std::vector<const Subcube*> live;
  for (const auto& c : cubes)
    if (!c.empty()) live.push_back(&c);
  Graph g;
  g.num_vertices = (std::uint32_t)live.size();
  for (std::uint32_t i = 0; i < g.num_vertices; ++i)
    for (std::uint32_t j = i + 1; j < g.num_vertices; ++j)
      if (!subcube_intersect(*live[i], *live[j]).empty()) g.edges.emplace_back(i, j);
  return g;
}

std::uint32_t chromatic_number(const Graph& g) {
  const std::uint32_t n = g.num_vertices;
  if (n == 0) return 0;
  std::vector<std::vector<std::uint32_t>> adj(n);
  for (auto [a, b] : g.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<std::uint32_t> color(n, UINT32_MAX);
  auto assign = [&](auto&& self, std::uint32_t v, std::uint32_t k) -> bool {
    if (v == n) return true;
    // Symmetry pruning: a fresh color may only be the next unused one.
    std::uint32_t used = 0;
    for (std::uint32_t u = 0; u < v; ++u) used = std::max(used, color[u] + 1);
    std::uint32_t limit = std::min(k, used + 1);
    for (std::uint32_t c = 0; c < limit; ++c) {
      bool ok = true;
      for (auto u : adj[v])
        if (u < v && color[u] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      color[v] = c;
      if (self(self, v + 1, k)) return true;
      color[v] = UINT32_MAX;
    }
    return false;
  };
  for (std::uint32_t k = 1; k <= n; ++k) {
    std::fill(color.begin(), color.end(), UINT32_MAX);
    if (assign(assign, 0, k)) return k;
  }
  return n;  // unreachable: n colors always suffice
}

bool coloring_matches_minimum(const Graph& g) {
  if (g.num_vertices > 6)
    throw Error(ErrorKind::Cap, "coloring correspondence checked up to 6 "
                                "vertices, graph has " +
                                    std::to_string(g.num_vertices));
  Instance inst = graph_to_instance(g);
  CubeSet cubes = criterion_cubes(inst.decls, inst.criterion);
  Graph meet = intersection_graph(inst.decls, cubes);

  Graph complement;
  complement.num_vertices = meet.num_vertices;
  for (std::uint32_t i = 0; i < meet.num_vertices; ++i)
    for (std::uint32_t j = i + 1; j < meet.num_vertices; ++j)
      if (!meet.adjacent(i, j)) complement.edges.emplace_back(i, j);

  std::uint32_t chi = chromatic_number(complement);
  std::vector<TestPoint> minimum = brute_force_minimum(inst);
  return chi == minimum.size();
}

PointSetFamily min_family(const PointSetFamily& s) {
  PointSetFamily out;
  for (const auto& x : s) {
    if (x.empty()) continue;
    bool minimal = true;
    for (const auto& y : s) {
      if (y.empty() || y == x) continue;
      if (y.size() < x.size() &&
          std::includes(x.begin(), x.end(), y.begin(), y.end())) {
        minimal = false;
        break;
      }
    }
    if (minimal && std::find(out.begin(), out.end(), x) == out.end())
      out.push_back(x);
  }
  return out;
}

FamilyOrder compare_families(const PointSetFamily& s1, const PointSetFamily& s2,
                             const std::vector<TestPoint>& universe) {
  if (universe.size() > 16)
    throw Error(ErrorKind::Cap, "family comparison universe holds " +
                                    std::to_string(universe.size()) +
                                    " points, cap is 16");
  std::vector<TestPoint> sorted = universe;
  std::sort(sorted.begin(), sorted.end());

  auto member_masks = [&](const PointSetFamily& s) {
    std::vector<std::uint32_t> masks;
    for (const auto& x : s) {
      if (x.empty()) continue;
      std::uint32_t mask = 0;
      for (const auto& p : x) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), p);
        if (it == sorted.end() || *it != p)
          throw Error(ErrorKind::Validation,
                      "family member point lies outside the universe");
        mask |= (1u << (it - sorted.begin()));
      }
      masks.push_back(mask);
    }
    return masks;
  };

  std::vector<std::uint32_t> m1 = member_masks(s1);
  std::vector<std::uint32_t> m2 = member_masks(s2);

  auto hits_all = [](const std::vector<std::uint32_t>& masks, std::uint32_t t) {
    for (auto m : masks)
      if ((m & t) == 0) return false;
    return true;
  };

  bool le12 = true;  // s1 at most as stringent as s2
  bool le21 = true;
  const std::uint64_t total = 1ull << sorted.size();
  for (std::uint64_t t = 0; t < total && (le12 || le21); ++t) {
    bool h1 = hits_all(m1, (std::uint32_t)t);
    bool h2 = hits_all(m2, (std::uint32_t)t);
    if (h2 && !h1) le12 = false;
    if (h1 && !h2) le21 = false;
  }
  if (le12 && le21) return FamilyOrder::Equal;
  if (le12) return FamilyOrder::Less;
  if (le21) return FamilyOrder::Greater;
  return FamilyOrder::Incomparable;
}

}  // namespace tselect
