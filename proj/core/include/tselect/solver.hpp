#pragma once

#include <vector>

#include "tselect/normalize.hpp"
#include "tselect/semantics.hpp"

namespace tselect {

// Order in which criterion cubes are processed by the greedy phase.
// Input preserves term order; SmallestFirst sorts ascending by cube point
// count (stable), which tends to place the tightest requirements first.
enum class OrderPolicy { Input, SmallestFirst };

// Computes a minimal adequate test set in two phases. The greedy phase
// walks the criterion cubes in order and, for every cube not yet hit,
// selects its first domain point while maintaining, for each point, the
// set of cubes containing it and, for each cube, the number of selected
// points it contains. The trim phase then revisits points in selection
// order and drops any point all of whose cubes would stay covered, i.e.
// whose every containing cube holds at least two selected points.
// Both phases are deterministic, so equal inputs give equal outputs.
std::vector<TestPoint> minimal_adequate_set(const NormalizedInstance& ni,
                                            OrderPolicy order = OrderPolicy::Input);

// True when no point of `t` can be removed without losing adequacy.
// Precondition: `t` is adequate (ErrorKind::NotAdequate otherwise).
// The empty set is minimal whenever it is adequate.
bool is_minimal(const NormalizedInstance& ni, const std::vector<TestPoint>& t);

}  // namespace tselect
