#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tselect/errors.hpp"

namespace tselect {

// One declared parameter with its finite value range. Range order is
// significant: it fixes value indices and all deterministic tie-breaks.
struct ParameterDecl {
  std::string name;
  std::vector<std::string> range;  // non-empty, values distinct
};

// Ordered parameter list. Declaration order defines point coordinates.
struct Declarations {
  std::vector<ParameterDecl> params;

  std::size_t size() const { return params.size(); }

  std::optional<std::uint32_t> index_of(std::string_view name) const {
    for (std::uint32_t i = 0; i < params.size(); ++i)
      if (params[i].name == name) return i;
    return std::nullopt;
  }

  std::optional<std::uint32_t> value_index(std::uint32_t param,
                                           std::string_view value) const {
    const auto& range = params[param].range;
    for (std::uint32_t i = 0; i < range.size(); ++i)
      if (range[i] == value) return i;
    return std::nullopt;
  }
};

// Constraint formulas are trees of or/and nodes over equality and
// inequality atoms. Parameters and values are stored as indices into the
// owning Declarations; the parser resolves names before building nodes.
struct ConstraintExpr {
  enum class Kind { True, Eq, Neq, Or, And };

  Kind kind = Kind::True;
  std::uint32_t param = 0;  // Eq, Neq
  std::uint32_t value = 0;  // Eq, Neq
  std::vector<ConstraintExpr> children;  // Or, And (two or more)

  static ConstraintExpr make_true() { return ConstraintExpr{}; }

  static ConstraintExpr atom(Kind k, std::uint32_t param, std::uint32_t value) {
    ConstraintExpr e;
    e.kind = k;
    e.param = param;
    e.value = value;
    return e;
  }

  static ConstraintExpr node(Kind k, std::vector<ConstraintExpr> children) {
    ConstraintExpr e;
    e.kind = k;
    e.children = std::move(children);
    return e;
  }

  bool is_atom() const { return kind == Kind::Eq || kind == Kind::Neq; }
};

// Selection criteria. Leaves are the two primitive forms, ANY_TEST, and the
// two sugar forms; internal nodes are n-ary union (++) and tensor (**).
struct CriterionExpr {
  enum class Kind { Eq, Neq, AnyTest, Each, Exhaustive, Union, Tensor };

  Kind kind = Kind::AnyTest;
  std::uint32_t param = 0;            // Eq, Neq, Each
  std::uint32_t value = 0;            // Eq, Neq
  std::vector<std::uint32_t> values;  // Each: listed value indices
  std::vector<std::uint32_t> params;  // Exhaustive: listed parameters
  std::vector<CriterionExpr> children;  // Union, Tensor (two or more)

  static CriterionExpr any_test() { return CriterionExpr{}; }

  static CriterionExpr atom(Kind k, std::uint32_t param, std::uint32_t value) {
    CriterionExpr e;
    e.kind = k;
    e.param = param;
    e.value = value;
    return e;
  }

  static CriterionExpr each(std::uint32_t param, std::vector<std::uint32_t> values) {
    CriterionExpr e;
    e.kind = Kind::Each;
    e.param = param;
    e.values = std::move(values);
    return e;
  }

  static CriterionExpr exhaustive(std::vector<std::uint32_t> params) {
    CriterionExpr e;
    e.kind = Kind::Exhaustive;
    e.params = std::move(params);
    return e;
  }

  static CriterionExpr node(Kind k, std::vector<CriterionExpr> children) {
    CriterionExpr e;
    e.kind = k;
    e.children = std::move(children);
    return e;
  }

  bool is_primitive() const {
    return kind == Kind::Eq || kind == Kind::Neq || kind == Kind::AnyTest;
  }
};

// A complete selection problem: what can vary, which combinations are
// permitted, and which families of tests must be hit.
struct Instance {
  Declarations decls;
  ConstraintExpr constraint;  // True when the document omits the section
  CriterionExpr criterion;
  // Character count of the source with comments and redundant whitespace
  // removed. Zero for instances built programmatically.
  std::size_t source_size = 0;
};

}  // namespace tselect
