#include "tselect/solver.hpp"

#include <algorithm>
#include <numeric>

namespace tselect {

std::vector<TestPoint> minimal_adequate_set(const NormalizedInstance& ni,
                                            OrderPolicy order) {
  const auto& s = ni.s_cubes;

  std::vector<std::size_t> processing(s.size());
  std::iota(processing.begin(), processing.end(), 0);
  if (order == OrderPolicy::SmallestFirst) {
    std::vector<BigUint> sizes;
    sizes.reserve(s.size());
    for (const auto& x : s) sizes.push_back(x.point_count(ni.decls));
    std::stable_sort(processing.begin(), processing.end(),
                     [&](std::size_t a, std::size_t b) { return sizes[a] < sizes[b]; });
  }

  std::vector<TestPoint> points;                       // selection order
  std::vector<std::vector<std::size_t>> contains;      // per point: cube indices
  std::vector<std::size_t> count(s.size(), 0);         // per cube: |X ∩ T|

  for (std::size_t xi : processing) {
    if (count[xi] > 0) continue;
    auto p = find_point(s[xi], ni.c_cubes);
    if (!p) continue;  // the cube misses the domain entirely
    std::vector<std::size_t> in_cubes;
    for (std::size_t y = 0; y < s.size(); ++y)
      if (s[y].contains(*p)) {
        in_cubes.push_back(y);
        ++count[y];
      }
    // find_point returned a member of s[xi], so the list cannot be empty.
    if (in_cubes.empty())
      throw Error(ErrorKind::Internal, "selected point lies in no criterion cube");
    points.push_back(std::move(*p));
    contains.push_back(std::move(in_cubes));
  }

  // Trim pass, in selection order: a point goes when every cube holding it
  // keeps at least two selected points, so dropping it cannot uncover one.
  std::vector<bool> alive(points.size(), true);
  for (std::size_t t = 0; t < points.size(); ++t) {
    bool removable = true;
    for (std::size_t y : contains[t])
      if (count[y] < 2) {
        removable = false;
        break;
      }
    if (!removable) continue;
    alive[t] = false;
    for (std::size_t y : contains[t]) --count[y];
  }

  std::vector<TestPoint> out;
  out.reserve(points.size());
  for (std::size_t t = 0; t < points.size(); ++t)
    if (alive[t]) out.push_back(std::move(points[t]));
  return out;
}

bool is_minimal(const NormalizedInstance& ni, const std::vector<TestPoint>& t) {
  if (!is_adequate(ni.decls, ni.s_cubes, ni.c_cubes, t))
    throw Error(ErrorKind::NotAdequate,
                "minimality is only defined for adequate test sets");
  if (t.empty()) return true;

  // A point is needed exactly when some domain-meeting cube holds it and
  // nothing else from t. Count hits per cube once, then look for cubes
  // pinning each point.
  std::vector<std::size_t> hits(ni.s_cubes.size(), 0);
  std::vector<bool> meets_domain(ni.s_cubes.size(), false);
  for (std::size_t x = 0; x < ni.s_cubes.size(); ++x) {
    for (const auto& c : ni.c_cubes)
      if (!subcube_intersect(ni.s_cubes[x], c).empty()) {
        meets_domain[x] = true;
        break;
      }
    if (!meets_domain[x]) continue;
    for (const auto& p : t)
      if (ni.s_cubes[x].contains(p)) ++hits[x];
  }
  for (const auto& p : t) {
    bool needed = false;
    for (std::size_t x = 0; x < ni.s_cubes.size(); ++x)
      if (meets_domain[x] && hits[x] == 1 && ni.s_cubes[x].contains(p)) {
        needed = true;
        break;
      }
    if (!needed) return false;
  }
  return true;
}

}  // namespace tselect
