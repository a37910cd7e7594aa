// Shared construction and comparison helpers for the test suites.
#pragma once

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tselect/ast.hpp"
#include "tselect/semantics.hpp"

namespace testutil {

inline std::string fixture_path(const std::string& name) {
  return std::string(TSELECT_FIXTURE_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline tselect::Declarations make_decls(
    std::initializer_list<std::pair<std::string, std::vector<std::string>>> ps) {
  tselect::Declarations decls;
  for (const auto& [name, range] : ps)
    decls.params.push_back(tselect::ParameterDecl{name, range});
  return decls;
}

// --- criterion shorthands -------------------------------------------------

inline tselect::CriterionExpr ceq(std::uint32_t p, std::uint32_t v) {
  return tselect::CriterionExpr::atom(tselect::CriterionExpr::Kind::Eq, p, v);
}
inline tselect::CriterionExpr cneq(std::uint32_t p, std::uint32_t v) {
  return tselect::CriterionExpr::atom(tselect::CriterionExpr::Kind::Neq, p, v);
}
inline tselect::CriterionExpr cany() { return tselect::CriterionExpr::any_test(); }
inline tselect::CriterionExpr ceach(std::uint32_t p,
                                    std::vector<std::uint32_t> values) {
  return tselect::CriterionExpr::each(p, std::move(values));
}
inline tselect::CriterionExpr cexh(std::vector<std::uint32_t> params) {
  return tselect::CriterionExpr::exhaustive(std::move(params));
}
inline tselect::CriterionExpr cunion(std::vector<tselect::CriterionExpr> children) {
  return tselect::CriterionExpr::node(tselect::CriterionExpr::Kind::Union,
                                      std::move(children));
}
inline tselect::CriterionExpr ctensor(std::vector<tselect::CriterionExpr> children) {
  return tselect::CriterionExpr::node(tselect::CriterionExpr::Kind::Tensor,
                                      std::move(children));
}

// --- constraint shorthands ------------------------------------------------

inline tselect::ConstraintExpr ktrue() { return tselect::ConstraintExpr::make_true(); }
inline tselect::ConstraintExpr keq(std::uint32_t p, std::uint32_t v) {
  return tselect::ConstraintExpr::atom(tselect::ConstraintExpr::Kind::Eq, p, v);
}
inline tselect::ConstraintExpr kneq(std::uint32_t p, std::uint32_t v) {
  return tselect::ConstraintExpr::atom(tselect::ConstraintExpr::Kind::Neq, p, v);
}
inline tselect::ConstraintExpr kor(std::vector<tselect::ConstraintExpr> children) {
  return tselect::ConstraintExpr::node(tselect::ConstraintExpr::Kind::Or,
                                       std::move(children));
}
inline tselect::ConstraintExpr kand(std::vector<tselect::ConstraintExpr> children) {
  return tselect::ConstraintExpr::node(tselect::ConstraintExpr::Kind::And,
                                       std::move(children));
}

// --- points and families ---------------------------------------------------

inline tselect::TestPoint pt(std::initializer_list<std::uint32_t> coords) {
  tselect::TestPoint p;
  p.coords.assign(coords);
  return p;
}

inline std::vector<tselect::TestPoint> sorted(std::vector<tselect::TestPoint> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Families compare as sets of sets: members are already sorted point lists,
// so sorting the family itself gives a canonical form.
inline std::vector<std::vector<tselect::TestPoint>> canonical_family(
    std::vector<std::vector<tselect::TestPoint>> f) {
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  return f;
}

inline bool family_equal(std::vector<std::vector<tselect::TestPoint>> a,
                         std::vector<std::vector<tselect::TestPoint>> b) {
  return canonical_family(std::move(a)) == canonical_family(std::move(b));
}

// Structural equality for ASTs (operator== is not defined on expression
// nodes; comparison goes through the renderer-independent recursion).
inline bool same_constraint(const tselect::ConstraintExpr& a,
                            const tselect::ConstraintExpr& b) {
  if (a.kind != b.kind || a.param != b.param || a.value != b.value ||
      a.children.size() != b.children.size())
    return false;
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (!same_constraint(a.children[i], b.children[i])) return false;
  return true;
}

inline bool same_criterion(const tselect::CriterionExpr& a,
                           const tselect::CriterionExpr& b) {
  if (a.kind != b.kind || a.param != b.param || a.value != b.value ||
      a.values != b.values || a.params != b.params ||
      a.children.size() != b.children.size())
    return false;
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (!same_criterion(a.children[i], b.children[i])) return false;
  return true;
}

inline bool same_instance(const tselect::Instance& a, const tselect::Instance& b) {
  if (a.decls.size() != b.decls.size()) return false;
  for (std::uint32_t i = 0; i < a.decls.size(); ++i) {
    if (a.decls.params[i].name != b.decls.params[i].name) return false;
    if (a.decls.params[i].range != b.decls.params[i].range) return false;
  }
  return same_constraint(a.constraint, b.constraint) &&
         same_criterion(a.criterion, b.criterion);
}

}  // namespace testutil
