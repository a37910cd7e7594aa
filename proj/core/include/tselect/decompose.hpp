#pragma once

#include <vector>

#include "tselect/composition.hpp"
#include "tselect/semantics.hpp"
#include "tselect/solver.hpp"

namespace tselect {

// Splits an instance into independent components when its structure allows
// it without distributing anything. Two parameters are coupled when they
// share a top-level conjunct of the constraint, or when one occurs in the
// smallest criterion subexpression containing all occurrences of the other;
// components are the classes of the resulting equivalence closure. Classes
// whose criterion parts cannot be regrouped out of the expression (they
// would need a distributive step) are merged until the split is exact, so
// in the worst case the whole instance comes back as a single leaf.
//
// Components are combined mirroring the criterion's joining nodes, classes
// ordered by smallest parameter index. Parameters mentioned by neither the
// constraint nor the criterion become singleton ANY_TEST leaves, attached
// with AndTensor (which leaves the denoted family unchanged). Evaluating
// the returned tree gives back an instance equivalent to the input up to
// regrouping, with the original declaration order.
CompositionTree discover_decomposition(const Instance& inst);

// Pairs two test sets positionwise, repeating the last element of the
// shorter one. Both inputs must be non-empty (ErrorKind::Internal).
std::vector<std::pair<TestPoint, TestPoint>> zip_pad(
    const std::vector<TestPoint>& a, const std::vector<TestPoint>& b);

// Combines component test sets into a test set of the combined instance.
// AndTensor takes the full cross product (left-major order). AndUnion
// takes the positionwise pairing when both sides are non-empty; when one
// side is empty, its points are substituted by the witness `d1`/`d2`
// (any domain point of that component); when both are empty the result is
// empty. Witnesses must be supplied for AndUnion.
std::vector<TestPoint> compose_test_sets(ComposeOp op,
                                         const std::vector<TestPoint>& t1,
                                         const TestPoint& d1,
                                         const std::vector<TestPoint>& t2,
                                         const TestPoint& d2);

// Result of solving a composition tree, with enough detail for reporting.
struct ComposedSolution {
  std::vector<TestPoint> points;     // over tree.combined declarations
  BigUint bound = 0;                 // criterion bound folded over the tree
  std::size_t criterion_terms = 0;   // total normalized terms across leaves
};

// Solves every leaf with minimal_adequate_set and folds the results with
// compose_test_sets. Every leaf must have a non-empty domain; otherwise an
// ErrorKind::EmptyDomain error names the offending leaf. Leaf errors
// (budget, caps) propagate unchanged.
ComposedSolution solve_composed(const CompositionTree& tree,
                                OrderPolicy order = OrderPolicy::Input,
                                std::uint64_t budget = 1000000);

// The instance a composition tree denotes: concatenated declarations in
// `combined` order, conjoined constraints, criteria joined per operator.
Instance evaluate_composition(const CompositionTree& tree);

// Builds the two-leaf tree for explicitly combining independent instances.
// Declarations are concatenated left then right; parameter names must be
// disjoint (ErrorKind::Validation).
CompositionTree combine_instances(ComposeOp op, const Instance& left,
                                  const Instance& right);

}  // namespace tselect
