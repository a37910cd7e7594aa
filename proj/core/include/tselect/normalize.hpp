#pragma once

#include <cstdint>

#include "tselect/ast.hpp"
#include "tselect/semantics.hpp"

namespace tselect {

// An instance reduced to flat cube families: one subcube per criterion term
// and one per constraint disjunct. The solver operates on this form only.
struct NormalizedInstance {
  Declarations decls;
  CubeSet s_cubes;  // criterion terms, in term order; empty cubes retained
  CubeSet c_cubes;  // constraint disjuncts; their union is the domain
  std::size_t criterion_terms = 0;   // r
  std::size_t constraint_terms = 0;  // m
};

// Rewrites EACH into a union of equalities (listed value order) and
// EXHAUSTIVE into a tensor of full-range EACHes (listed parameter order,
// then range order). The result contains only primitive leaves and
// union/tensor nodes.
CriterionExpr eliminate_sugar(const Declarations& decls, const CriterionExpr& gamma);

// Distributes tensor over union bottom-up until the expression is a union
// of tensor terms of primitives. Each term is kept as a set: a primitive
// repeated within a term collapses, and terms with identical primitive sets
// collapse to the first occurrence. Contradictory terms are kept (they
// denote empty cubes). Throws ErrorKind::Budget, reporting the count
// reached, if more than `budget` terms get materialized. Requires a
// sugar-free input.
CriterionExpr to_union_normal_form(const CriterionExpr& gamma,
                                   std::uint64_t budget = 1000000);

// Disjunctive normal form of a constraint. True becomes a single empty
// conjunction (the full cube). The same term budget applies.
ConstraintExpr to_disjunctive_normal_form(const ConstraintExpr& psi,
                                          std::uint64_t budget = 1000000);

// Full pipeline: sugar elimination, both normal forms, then cube families.
NormalizedInstance normalize_instance(const Instance& inst,
                                      std::uint64_t budget = 1000000);

// Upper bound on the size of any test set the solver can produce, computed
// on the unexpanded criterion: primitives and ANY_TEST count 1, EACH counts
// its list length, EXHAUSTIVE the product of its range sizes, union adds,
// tensor multiplies. Equals the term count of the fully distributed
// expansion before duplicate terms collapse, so it is cheap even when the
// expansion itself would be hopeless.
BigUint criterion_upper_bound(const Declarations& decls, const CriterionExpr& gamma);

}  // namespace tselect
