#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "tselect/ast.hpp"

namespace tselect {

// Unbounded nonnegative integer, used wherever counts can exceed 64 bits
// (cube sizes, term bounds).
using BigUint = mpz_class;

// One test: a value index per declared parameter, in declaration order.
struct TestPoint {
  std::vector<std::uint32_t> coords;

  auto operator<=>(const TestPoint&) const = default;
};

// A per-coordinate restriction of the full product space. Coordinates not
// listed in `restricted` admit every value ("all" marker by omission), so
// intersection work is linear in the number of restricted coordinates.
struct Subcube {
  struct Coord {
    std::uint32_t param = 0;
    std::vector<std::uint32_t> values;  // sorted ascending, duplicates removed

    auto operator<=>(const Coord&) const = default;
  };

  std::uint32_t width = 0;           // number of declared parameters
  std::vector<Coord> restricted;     // sorted by param, at most one per param

  auto operator<=>(const Subcube&) const = default;

  static Subcube full(std::uint32_t width) { return Subcube{width, {}}; }

  // Empty as a point set, i.e. some coordinate allows no value at all.
  bool empty() const {
    for (const auto& c : restricted)
      if (c.values.empty()) return true;
    return false;
  }

  bool contains(const TestPoint& p) const;

  // Number of points, using the declared range sizes for free coordinates.
  BigUint point_count(const Declarations& decls) const;

  // Restrict one coordinate to the given sorted value set, intersecting
  // with any existing restriction.
  void restrict_coord(std::uint32_t param, const std::vector<std::uint32_t>& values);
};

using CubeSet = std::vector<Subcube>;

// Coordinatewise intersection. Both cubes must describe the same space.
Subcube subcube_intersect(const Subcube& a, const Subcube& b);

// Truth of a constraint formula at one point.
bool eval_constraint(const ConstraintExpr& c, const TestPoint& p);

// All points of the full product space satisfying the constraint, in
// odometer order (last coordinate varies fastest). Refuses to run when the
// product space exceeds `cap` points.
std::vector<TestPoint> enumerate_domain(const Declarations& decls,
                                        const ConstraintExpr& constraint,
                                        std::uint64_t cap = 1000000);

// The subcube family denoted by a sugar-free criterion in union-of-tensor
// form, one cube per term, in term order. Throws ErrorKind::NotNormalized
// on any other shape.
CubeSet criterion_cubes(const Declarations& decls, const CriterionExpr& gamma);

// The family of point sets denoted by an arbitrary criterion, computed
// directly from the defining equations over the full product space:
// a primitive denotes the singleton family of its satisfying set, union
// concatenates families, tensor takes pairwise intersections. The family
// is a set of sets, so duplicates collapse. Intended for small spaces;
// throws ErrorKind::Cap when the product space exceeds `point_cap` or the
// family (after any single step) exceeds `family_cap`.
std::vector<std::vector<TestPoint>> criterion_point_sets(
    const Declarations& decls, const CriterionExpr& gamma,
    std::uint64_t point_cap = 4096, std::size_t family_cap = 4096);

// Whether `p` lies in the union of the criterion's point-set family.
// Union distributes over set union and tensor over intersection, so this
// needs no expansion and accepts sugared criteria.
bool point_in_criterion_union(const Declarations& decls,
                              const CriterionExpr& gamma, const TestPoint& p);

// Adequacy of a candidate test set: every criterion cube that meets the
// domain must contain a point of `t`. Points of `t` must themselves lie in
// the domain (ErrorKind::OutsideDomain otherwise).
//
// The first overload works on the normalized cube families; the second
// evaluates the defining semantics by enumeration and accepts any instance
// within the enumeration cap.
bool is_adequate(const Declarations& decls, const CubeSet& s_cubes,
                 const CubeSet& c_cubes, const std::vector<TestPoint>& t);
bool is_adequate(const Instance& inst, const std::vector<TestPoint>& t,
                 std::uint64_t cap = 1000000);

// First point of x that satisfies the constraint given as domain cubes, or
// nothing. Deterministic: domain cubes are scanned in order, the first
// non-empty intersection wins, and each coordinate takes its lowest allowed
// value index. No enumeration of the cube contents happens.
std::optional<TestPoint> find_point(const Subcube& x, const CubeSet& c_cubes);

// One point per line, `name="value"` pairs joined by "; ", declaration
// order. This is the external format for any emitted test set.
std::string render_point(const Declarations& decls, const TestPoint& p);
std::string render_points(const Declarations& decls,
                          const std::vector<TestPoint>& points);

// Inverse of render_point for a whole file: ignores blank lines and lines
// starting with '#'. Names must appear in declaration order.
std::vector<TestPoint> parse_points(const Declarations& decls,
                                    const std::string& text);

}  // namespace tselect
