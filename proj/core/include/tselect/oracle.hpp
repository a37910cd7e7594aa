#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tselect/ast.hpp"
#include "tselect/semantics.hpp"

namespace tselect {

// Slow, obviously-correct references used to cross-check the production
// path, plus the constructions connecting selection problems to graph
// coloring and 3-CNF satisfiability. Everything here enumerates, so the
// size caps are load-bearing preconditions, not tuning knobs.

// A family of point sets over one declaration space. Members are sorted
// point lists without duplicates; the family itself is duplicate-free.
using PointSetFamily = std::vector<std::vector<TestPoint>>;

// Undirected graph without self-loops, vertices 0..n-1.
struct Graph {
  std::uint32_t num_vertices = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // i < j

  bool adjacent(std::uint32_t a, std::uint32_t b) const {
    if (a > b) std::swap(a, b);
    for (auto [i, j] : edges)
      if (i == a && j == b) return true;
    return false;
  }
};

// CNF with exactly three literals per clause. Literals are (variable
// index, polarity); polarity true means the positive literal.
struct CnfFormula {
  std::uint32_t num_variables = 0;
  std::vector<std::array<std::pair<std::uint32_t, bool>, 3>> clauses;
};

// Caps for the enumerating oracles.
struct OracleCaps {
  std::uint64_t point_cap = 4096;   // max size of the full product space
  std::size_t cube_cap = 20;        // max criterion point sets to hit
};

// A minimum-cardinality adequate test set, by increasing-cardinality search.
// Candidate points are one representative per class of the partition of the
// domain by criterion-set membership, which preserves the optimum. Output
// is deterministic for fixed input.
std::vector<TestPoint> brute_force_minimum(const Instance& inst,
                                           const OracleCaps& caps = {});

// Whether the empty set is adequate, i.e. no criterion point set meets the
// domain. Decided by scanning domain points for membership in the
// criterion's union, so only the point cap applies.
bool empty_set_adequate(const Instance& inst, const OracleCaps& caps = {});

// Satisfiability of `f` by truth-table scan. Variable count must stay
// within the point cap (2^n points).
bool truth_table_satisfiable(const CnfFormula& f);

// Encodes satisfiability into the criterion side: one boolean parameter per
// variable, no constraint, criterion = tensor over clauses of the 3-way
// union of the clause's literal criteria. The formula is satisfiable
// exactly when the empty set is NOT adequate.
Instance cnf_to_criterion_instance(const CnfFormula& f);

// Same statement on the constraint side: constraint = conjunction over
// clauses of 3-way disjunctions, criterion = ANY_TEST.
Instance cnf_to_constraint_instance(const CnfFormula& f);

// Encodes a graph as a selection problem over one boolean parameter per
// vertex: vertex i contributes the term "i true, every non-neighbor of i
// false". Two of these criterion cubes intersect exactly when the original
// vertices are adjacent, so the cube family's intersection graph is
// isomorphic to `g`.
Instance graph_to_instance(const Graph& g);

// Pairwise intersection graph of the non-empty cubes in `cubes`.
Graph intersection_graph(const Declarations& decls, const CubeSet& cubes);

// Chromatic number by exhaustive colouring, intended for tiny graphs.
std::uint32_t chromatic_number(const Graph& g);

// Checks the coloring correspondence on one graph: the chromatic number of
// the complement of the intersection graph of the encoded instance's cube
// family equals the brute-force minimum test set size. Graphs up to 6
// vertices (ErrorKind::Cap above).
bool coloring_matches_minimum(const Graph& g);

// The non-empty members of `s` that contain no other non-empty member
// properly. Adequacy only depends on these.
PointSetFamily min_family(const PointSetFamily& s);

// Outcome of comparing two families by stringency.
enum class FamilyOrder { Less, Equal, Greater, Incomparable };

// Compares families by quantifying over every subset T of `universe`
// (at most 16 points, ErrorKind::Cap above): s1 is at most as stringent as
// s2 when every T hitting all non-empty members of s2 also hits all
// non-empty members of s1. All family points must lie in the universe.
FamilyOrder compare_families(const PointSetFamily& s1, const PointSetFamily& s2,
                             const std::vector<TestPoint>& universe);

}  // namespace tselect
