#include "tselect/semantics.hpp"

#include <algorithm>
#include <cstddef>
#include <sstream>

namespace tselect {

namespace {

[[noreturn]] void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

void check_same_space(const Subcube& a, const Subcube& b) {
  if (a.width != b.width)
    fail(ErrorKind::Internal, "subcube width mismatch: " +
                                  std::to_string(a.width) + " vs " +
                                  std::to_string(b.width));
}

std::vector<std::uint32_t> intersect_sorted(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

// Product of all range sizes, for cap checks and diagnostics.
BigUint space_size(const Declarations& decls) {
  BigUint n = 1;
  for (const auto& p : decls.params) n *= (unsigned long)p.range.size();
  return n;
}

void check_point_shape(const Declarations& decls, const TestPoint& p) {
  if (p.coords.size() != decls.size())
    fail(ErrorKind::Internal, "test point has " +
                                  std::to_string(p.coords.size()) +
                                  " coordinates, expected " +
                                  std::to_string(decls.size()));
  for (std::size_t i = 0; i < p.coords.size(); ++i)
    if (p.coords[i] >= decls.params[i].range.size())
      fail(ErrorKind::Internal,
           "coordinate out of range for parameter " + decls.params[i].name);
}

}  // namespace

bool Subcube::contains(const TestPoint& p) const {
  for (const auto& c : restricted)
    if (!std::binary_search(c.values.begin(), c.values.end(), p.coords[c.param]))
      return false;
  return true;
}

BigUint Subcube::point_count(const Declarations& decls) const {
  BigUint n = 1;
  std::size_t r = 0;
  for (std::uint32_t i = 0; i < width; ++i) {
    if (r < restricted.size() && restricted[r].param == i) {
      n *= (unsigned long)restricted[r].values.size();
      ++r;
    } else {
      n *= (unsigned long)decls.params[i].range.size();
    }
  }
  return n;
}

void Subcube::restrict_coord(std::uint32_t param,
                             const std::vector<std::uint32_t>& values) {
  auto it = std::lower_bound(
      restricted.begin(), restricted.end(), param,
      [](const Coord& c, std::uint32_t p) { return c.param < p; });
  if (it != restricted.end() && it->param == param) {
    it->values = intersect_sorted(it->values, values);
  } else {
    restricted.insert(it, Coord{param, values});
  }
}

Subcube subcube_intersect(const Subcube& a, const Subcube& b) {
  check_same_space(a, b);
  Subcube out{a.width, {}};
  out.restricted.reserve(a.restricted.size() + b.restricted.size());
  std::size_t i = 0, j = 0;
  while (i < a.restricted.size() && j < b.restricted.size()) {
    const auto& ca = a.restricted[i];
    const auto& cb = b.restricted[j];
    if (ca.param < cb.param) {
      out.restricted.push_back(ca);
      ++i;
    } else if (cb.param < ca.param) {
      out.restricted.push_back(cb);
      ++j;
    } else {
      out.restricted.push_back(
          Subcube::Coord{ca.param, intersect_sorted(ca.values, cb.values)});
      ++i;
      ++j;
    }
  }
  for (; i < a.restricted.size(); ++i) out.restricted.push_back(a.restricted[i]);
  for (; j < b.restricted.size(); ++j) out.restricted.push_back(b.restricted[j]);
  return out;
}

bool eval_constraint(const ConstraintExpr& c, const TestPoint& p) {
  switch (c.kind) {
    case ConstraintExpr::Kind::True:
      return true;
    case ConstraintExpr::Kind::Eq:
      return p.coords[c.param] == c.value;
    case ConstraintExpr::Kind::Neq:
      return p.coords[c.param] != c.value;
    case ConstraintExpr::Kind::Or:
      for (const auto& ch : c.children)
        if (eval_constraint(ch, p)) return true;
      return false;
    case ConstraintExpr::Kind::And:
      for (const auto& ch : c.children)
        if (!eval_constraint(ch, p)) return false;
      return true;
  }
  fail(ErrorKind::Internal, "corrupt constraint node");
}

namespace {

// Odometer walk over the full product space; `f` sees each point once.
template <typename F>
void for_each_point(const Declarations& decls, F&& f) {
  TestPoint p;
  p.coords.assign(decls.size(), 0);
  if (decls.size() == 0) {
    f(p);
    return;
  }
  for (;;) {
    f(p);
    std::size_t i = decls.size();
    while (i > 0) {
      --i;
      if (++p.coords[i] < decls.params[i].range.size()) break;
      p.coords[i] = 0;
      if (i == 0) return;
    }
  }
}

void check_enumeration_cap(const Declarations& decls, std::uint64_t cap) {
  BigUint total = space_size(decls);
  if (total > (unsigned long)cap)
    fail(ErrorKind::Cap, "product space holds " + total.get_str() +
                             " points, enumeration cap is " +
                             std::to_string(cap));
}

}  // namespace

std::vector<TestPoint> enumerate_domain(const Declarations& decls,
                                        const ConstraintExpr& constraint,
                                        std::uint64_t cap) {
  check_enumeration_cap(decls, cap);
  std::vector<TestPoint> out;
  for_each_point(decls, [&](const TestPoint& p) {
    if (eval_constraint(constraint, p)) out.push_back(p);
  });
  return out;
}

namespace {

void apply_primitive(const Declarations& decls, const CriterionExpr& leaf,
                     Subcube& cube) {
  switch (leaf.kind) {
    case CriterionExpr::Kind::Eq:
      cube.restrict_coord(leaf.param, {leaf.value});
      return;
    case CriterionExpr::Kind::Neq: {
      std::vector<std::uint32_t> vals;
      const auto n = decls.params[leaf.param].range.size();
      vals.reserve(n - 1);
      for (std::uint32_t v = 0; v < n; ++v)
        if (v != leaf.value) vals.push_back(v);
      cube.restrict_coord(leaf.param, vals);
      return;
    }
    case CriterionExpr::Kind::AnyTest:
      return;  // no restriction
    default:
      fail(ErrorKind::NotNormalized,
           "criterion contains sugar; eliminate EACH/EXHAUSTIVE first");
  }
}

void collect_term_leaves(const CriterionExpr& term,
                         std::vector<const CriterionExpr*>& leaves) {
  if (term.is_primitive()) {
    leaves.push_back(&term);
    return;
  }
  if (term.kind == CriterionExpr::Kind::Tensor) {
    for (const auto& ch : term.children) collect_term_leaves(ch, leaves);
    return;
  }
  if (term.kind == CriterionExpr::Kind::Union)
    fail(ErrorKind::NotNormalized,
         "criterion is not in union-of-tensor form: union under tensor");
  fail(ErrorKind::NotNormalized,
       "criterion contains sugar; eliminate EACH/EXHAUSTIVE first");
}

void collect_terms(const CriterionExpr& gamma,
                   std::vector<const CriterionExpr*>& terms) {
  if (gamma.kind == CriterionExpr::Kind::Union) {
    for (const auto& ch : gamma.children) collect_terms(ch, terms);
    return;
  }
  terms.push_back(&gamma);
}

}  // namespace

CubeSet criterion_cubes(const Declarations& decls, const CriterionExpr& gamma) {
  std::vector<const CriterionExpr*> terms;
  collect_terms(gamma, terms);
  CubeSet cubes;
  cubes.reserve(terms.size());
  for (const auto* term : terms) {
    std::vector<const CriterionExpr*> leaves;
    collect_term_leaves(*term, leaves);
    Subcube cube = Subcube::full((std::uint32_t)decls.size());
    for (const auto* leaf : leaves) apply_primitive(decls, *leaf, cube);
    cubes.push_back(std::move(cube));
  }
  return cubes;
}

namespace {

using PointSet = std::vector<TestPoint>;  // sorted, unique

void sort_unique(std::vector<PointSet>& family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

std::vector<PointSet> point_sets_rec(const Declarations& decls,
                                     const std::vector<TestPoint>& space,
                                     const CriterionExpr& gamma,
                                     std::size_t family_cap);

std::vector<PointSet> satisfying_set(const std::vector<TestPoint>& space,
                                     std::uint32_t param, std::uint32_t value,
                                     bool equal) {
  PointSet s;
  for (const auto& p : space)
    if ((p.coords[param] == value) == equal) s.push_back(p);
  return {std::move(s)};
}

std::vector<PointSet> tensor_fold(const Declarations& decls,
                                  const std::vector<TestPoint>& space,
                                  const std::vector<CriterionExpr>& children,
                                  std::size_t family_cap) {
  std::vector<PointSet> acc = {PointSet(space)};  // identity of intersection
  for (const auto& ch : children) {
    auto fam = point_sets_rec(decls, space, ch, family_cap);
    std::vector<PointSet> next;
    for (const auto& a : acc)
      for (const auto& b : fam) {
        PointSet inter;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                              std::back_inserter(inter));
        next.push_back(std::move(inter));
      }
    sort_unique(next);
    if (next.size() > family_cap)
      fail(ErrorKind::Cap, "criterion family exceeds cap of " +
                               std::to_string(family_cap) + " point sets");
    acc = std::move(next);
  }
  return acc;
}

std::vector<PointSet> point_sets_rec(const Declarations& decls,
                                     const std::vector<TestPoint>& space,
                                     const CriterionExpr& gamma,
                                     std::size_t family_cap) {
  switch (gamma.kind) {
    case CriterionExpr::Kind::Eq:
      return satisfying_set(space, gamma.param, gamma.value, true);
    case CriterionExpr::Kind::Neq:
      return satisfying_set(space, gamma.param, gamma.value, false);
    case CriterionExpr::Kind::AnyTest:
      return {PointSet(space)};
    case CriterionExpr::Kind::Each: {
      std::vector<PointSet> fam;
      for (auto v : gamma.values) {
        auto s = satisfying_set(space, gamma.param, v, true);
        fam.push_back(std::move(s.front()));
      }
      sort_unique(fam);
      return fam;
    }
    case CriterionExpr::Kind::Exhaustive: {
      std::vector<CriterionExpr> eaches;
      for (auto q : gamma.params) {
        std::vector<std::uint32_t> all(decls.params[q].range.size());
        for (std::uint32_t v = 0; v < all.size(); ++v) all[v] = v;
        eaches.push_back(CriterionExpr::each(q, std::move(all)));
      }
      return tensor_fold(decls, space, eaches, family_cap);
    }
    case CriterionExpr::Kind::Union: {
      std::vector<PointSet> fam;
      for (const auto& ch : gamma.children) {
        auto sub = point_sets_rec(decls, space, ch, family_cap);
        fam.insert(fam.end(), std::make_move_iterator(sub.begin()),
                   std::make_move_iterator(sub.end()));
      }
      sort_unique(fam);
      if (fam.size() > family_cap)
        fail(ErrorKind::Cap, "criterion family exceeds cap of " +
                                 std::to_string(family_cap) + " point sets");
      return fam;
    }
    case CriterionExpr::Kind::Tensor:
      return tensor_fold(decls, space, gamma.children, family_cap);
  }
  fail(ErrorKind::Internal, "corrupt criterion node");
}

}  // namespace

std::vector<std::vector<TestPoint>> criterion_point_sets(
    const Declarations& decls, const CriterionExpr& gamma,
    std::uint64_t point_cap, std::size_t family_cap) {
  check_enumeration_cap(decls, point_cap);
  std::vector<TestPoint> space;
  for_each_point(decls, [&](const TestPoint& p) { space.push_back(p); });
  std::sort(space.begin(), space.end());
  return point_sets_rec(decls, space, gamma, family_cap);
}

bool point_in_criterion_union(const Declarations& decls,
                              const CriterionExpr& gamma, const TestPoint& p) {
  switch (gamma.kind) {
    case CriterionExpr::Kind::Eq:
      return p.coords[gamma.param] == gamma.value;
    case CriterionExpr::Kind::Neq:
      return p.coords[gamma.param] != gamma.value;
    case CriterionExpr::Kind::AnyTest:
    case CriterionExpr::Kind::Exhaustive:
      return true;
    case CriterionExpr::Kind::Each:
      return std::find(gamma.values.begin(), gamma.values.end(),
                       p.coords[gamma.param]) != gamma.values.end();
    case CriterionExpr::Kind::Union:
      for (const auto& ch : gamma.children)
        if (point_in_criterion_union(decls, ch, p)) return true;
      return false;
    case CriterionExpr::Kind::Tensor:
      for (const auto& ch : gamma.children)
        if (!point_in_criterion_union(decls, ch, p)) return false;
      return true;
  }
  fail(ErrorKind::Internal, "corrupt criterion node");
}

bool is_adequate(const Declarations& decls, const CubeSet& s_cubes,
                 const CubeSet& c_cubes, const std::vector<TestPoint>& t) {
  for (const auto& p : t) {
    check_point_shape(decls, p);
    bool inside = false;
    for (const auto& c : c_cubes)
      if (!c.empty() && c.contains(p)) {
        inside = true;
        break;
      }
    if (!inside)
      fail(ErrorKind::OutsideDomain,
           "test point " + render_point(decls, p) + " violates the constraint");
  }
  for (const auto& x : s_cubes) {
    bool meets_domain = false;
    for (const auto& c : c_cubes)
      if (!subcube_intersect(x, c).empty()) {
        meets_domain = true;
        break;
      }
    if (!meets_domain) continue;
    bool hit = false;
    for (const auto& p : t)
      if (x.contains(p)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

bool is_adequate(const Instance& inst, const std::vector<TestPoint>& t,
                 std::uint64_t cap) {
  for (const auto& p : t) {
    check_point_shape(inst.decls, p);
    if (!eval_constraint(inst.constraint, p))
      fail(ErrorKind::OutsideDomain, "test point " +
                                         render_point(inst.decls, p) +
                                         " violates the constraint");
  }
  auto domain = enumerate_domain(inst.decls, inst.constraint, cap);
  std::sort(domain.begin(), domain.end());
  auto family = criterion_point_sets(inst.decls, inst.criterion, cap,
                                     (std::size_t)cap);
  std::vector<TestPoint> sorted_t(t);
  std::sort(sorted_t.begin(), sorted_t.end());
  for (const auto& x : family) {
    std::vector<TestPoint> in_domain;
    std::set_intersection(x.begin(), x.end(), domain.begin(), domain.end(),
                          std::back_inserter(in_domain));
    if (in_domain.empty()) continue;
    std::vector<TestPoint> hit;
    std::set_intersection(x.begin(), x.end(), sorted_t.begin(), sorted_t.end(),
                          std::back_inserter(hit));
    if (hit.empty()) return false;
  }
  return true;
}

std::optional<TestPoint> find_point(const Subcube& x, const CubeSet& c_cubes) {
  for (const auto& c : c_cubes) {
    Subcube z = subcube_intersect(x, c);
    if (z.empty()) continue;
    TestPoint p;
    p.coords.assign(z.width, 0);
    for (const auto& coord : z.restricted) p.coords[coord.param] = coord.values[0];
    return p;
  }
  return std::nullopt;
}

namespace {

std::string escape_value(const std::string& v) {
  std::string out;
  out.reserve(v.size() + 2);
  out.push_back('"');
  for (char ch : v) {
    if (ch == '"' || ch == '\\') out.push_back('\\');
    out.push_back(ch);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string render_point(const Declarations& decls, const TestPoint& p) {
  check_point_shape(decls, p);
  std::string out;
  for (std::size_t i = 0; i < decls.size(); ++i) {
    if (i > 0) out += "; ";
    out += decls.params[i].name;
    out += '=';
    out += escape_value(decls.params[i].range[p.coords[i]]);
  }
  return out;
}

std::string render_points(const Declarations& decls,
                          const std::vector<TestPoint>& points) {
  std::string out;
  for (const auto& p : points) {
    out += render_point(decls, p);
    out += '\n';
  }
  return out;
}

namespace {

// Minimal scanner for one serialized point line.
struct LineScanner {
  const std::string& s;
  std::size_t pos = 0;
  int line_no;

  [[noreturn]] void fail_here(const std::string& msg) const {
    throw Error(ErrorKind::Validation,
                "point file line " + std::to_string(line_no) + ": " + msg);
  }

  bool done() const { return pos >= s.size(); }

  std::string ident() {
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum((unsigned char)s[pos]) || s[pos] == '_'))
      ++pos;
    if (pos == start) fail_here("expected a parameter name");
    return s.substr(start, pos - start);
  }

  void expect(char c) {
    if (pos >= s.size() || s[pos] != c)
      fail_here(std::string("expected '") + c + "'");
    ++pos;
  }

  std::string quoted() {
    expect('"');
    std::string out;
    while (pos < s.size() && s[pos] != '"') {
      if (s[pos] == '\\' && pos + 1 < s.size()) ++pos;
      out.push_back(s[pos++]);
    }
    expect('"');
    return out;
  }
};

}  // namespace

std::vector<TestPoint> parse_points(const Declarations& decls,
                                    const std::string& text) {
  std::vector<TestPoint> out;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    LineScanner sc{line, first, line_no};
    TestPoint p;
    for (std::size_t i = 0; i < decls.size(); ++i) {
      if (i > 0) {
        sc.expect(';');
        while (sc.pos < line.size() && line[sc.pos] == ' ') ++sc.pos;
      }
      std::string name = sc.ident();
      if (name != decls.params[i].name)
        sc.fail_here("expected parameter " + decls.params[i].name +
                     " in declaration order, got " + name);
      sc.expect('=');
      std::string value = sc.quoted();
      auto v = decls.value_index((std::uint32_t)i, value);
      if (!v)
        sc.fail_here("value \"" + value + "\" is not in the range of " + name);
      p.coords.push_back(*v);
    }
    while (sc.pos < line.size() && (line[sc.pos] == ' ' || line[sc.pos] == '\t'))
      ++sc.pos;
    if (!sc.done()) sc.fail_here("trailing characters after the last value");
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace tselect
