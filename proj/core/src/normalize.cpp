#include "tselect/normalize.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace tselect {

CriterionExpr eliminate_sugar(const Declarations& decls, const CriterionExpr& gamma) {
  switch (gamma.kind) {
    case CriterionExpr::Kind::Eq:
    case CriterionExpr::Kind::Neq:
    case CriterionExpr::Kind::AnyTest:
      return gamma;
    case CriterionExpr::Kind::Each: {
      std::vector<CriterionExpr> parts;
      parts.reserve(gamma.values.size());
      for (auto v : gamma.values)
        parts.push_back(CriterionExpr::atom(CriterionExpr::Kind::Eq, gamma.param, v));
      if (parts.size() == 1) return std::move(parts.front());
      return CriterionExpr::node(CriterionExpr::Kind::Union, std::move(parts));
    }
    case CriterionExpr::Kind::Exhaustive: {
      std::vector<CriterionExpr> factors;
      factors.reserve(gamma.params.size());
      for (auto q : gamma.params) {
        std::vector<std::uint32_t> all(decls.params[q].range.size());
        for (std::uint32_t v = 0; v < all.size(); ++v) all[v] = v;
        factors.push_back(
            eliminate_sugar(decls, CriterionExpr::each(q, std::move(all))));
      }
      if (factors.size() == 1) return std::move(factors.front());
      return CriterionExpr::node(CriterionExpr::Kind::Tensor, std::move(factors));
    }
    case CriterionExpr::Kind::Union:
    case CriterionExpr::Kind::Tensor: {
      std::vector<CriterionExpr> children;
      children.reserve(gamma.children.size());
      for (const auto& ch : gamma.children)
        children.push_back(eliminate_sugar(decls, ch));
      return CriterionExpr::node(gamma.kind, std::move(children));
    }
  }
  throw Error(ErrorKind::Internal, "corrupt criterion node");
}

namespace {

// A primitive of either expression language, comparable so terms can be
// treated as sets.
struct Prim {
  enum Kind : std::uint8_t { Eq, Neq, Any };
  Kind kind;
  std::uint32_t param = 0;
  std::uint32_t value = 0;

  auto operator<=>(const Prim&) const = default;
};

// One tensor/conjunction term. Primitives keep their first-appearance
// order for rendering; the sorted copy is the set identity used to drop
// duplicate terms.
struct Term {
  std::vector<Prim> prims;

  std::vector<Prim> key() const {
    std::vector<Prim> k(prims);
    std::sort(k.begin(), k.end());
    return k;
  }

  void merge(const Term& other) {
    for (const auto& p : other.prims)
      if (std::find(prims.begin(), prims.end(), p) == prims.end())
        prims.push_back(p);
  }
};

// Term list with set identity. Keeps first-occurrence order.
class TermList {
public:
  void add(Term t, std::uint64_t budget, std::uint64_t& materialized,
           const char* what) {
    if (++materialized > budget)
      throw Error(ErrorKind::Budget,
                  std::string(what) + " term budget exceeded: " +
                      std::to_string(materialized) + " terms materialized (budget " +
                      std::to_string(budget) + ")");
    auto key = t.key();
    if (seen_.emplace(std::move(key), terms_.size()).second)
      terms_.push_back(std::move(t));
  }

  // Moves other's terms in without re-charging the budget; duplicates drop.
  void absorb(TermList&& other) {
    for (auto& t : other.terms_) {
      auto key = t.key();
      if (seen_.emplace(std::move(key), terms_.size()).second)
        terms_.push_back(std::move(t));
    }
  }

  const std::vector<Term>& terms() const { return terms_; }

private:
  std::vector<Term> terms_;
  std::map<std::vector<Prim>, std::size_t> seen_;
};

TermList tensor_product(const TermList& a, const TermList& b, std::uint64_t budget,
                        std::uint64_t& materialized, const char* what) {
  TermList out;
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms()) {
      Term merged = ta;
      merged.merge(tb);
      out.add(std::move(merged), budget, materialized, what);
    }
  return out;
}

TermList criterion_terms_rec(const CriterionExpr& gamma, std::uint64_t budget,
                             std::uint64_t& materialized) {
  switch (gamma.kind) {
    case CriterionExpr::Kind::Eq:
    case CriterionExpr::Kind::Neq: {
      TermList tl;
      Prim p{gamma.kind == CriterionExpr::Kind::Eq ? Prim::Eq : Prim::Neq,
             gamma.param, gamma.value};
      tl.add(Term{{p}}, budget, materialized, "criterion");
      return tl;
    }
    case CriterionExpr::Kind::AnyTest: {
      TermList tl;
      tl.add(Term{{Prim{Prim::Any, 0, 0}}}, budget, materialized, "criterion");
      return tl;
    }
    case CriterionExpr::Kind::Union: {
      TermList out;
      for (const auto& ch : gamma.children)
        out.absorb(criterion_terms_rec(ch, budget, materialized));
      return out;
    }
    case CriterionExpr::Kind::Tensor: {
      TermList acc;
      bool first = true;
      for (const auto& ch : gamma.children) {
        TermList part = criterion_terms_rec(ch, budget, materialized);
        if (first) {
          acc = std::move(part);
          first = false;
        } else {
          acc = tensor_product(acc, part, budget, materialized, "criterion");
        }
      }
      return acc;
    }
    case CriterionExpr::Kind::Each:
    case CriterionExpr::Kind::Exhaustive:
      throw Error(ErrorKind::NotNormalized,
                  "criterion contains sugar; eliminate EACH/EXHAUSTIVE first");
  }
  throw Error(ErrorKind::Internal, "corrupt criterion node");
}

CriterionExpr prim_to_criterion(const Prim& p) {
  switch (p.kind) {
    case Prim::Eq: return CriterionExpr::atom(CriterionExpr::Kind::Eq, p.param, p.value);
    case Prim::Neq: return CriterionExpr::atom(CriterionExpr::Kind::Neq, p.param, p.value);
    case Prim::Any: return CriterionExpr::any_test();
  }
  throw Error(ErrorKind::Internal, "corrupt primitive");
}

CriterionExpr term_to_criterion(const Term& t) {
  std::vector<CriterionExpr> leaves;
  leaves.reserve(t.prims.size());
  for (const auto& p : t.prims) leaves.push_back(prim_to_criterion(p));
  if (leaves.size() == 1) return std::move(leaves.front());
  return CriterionExpr::node(CriterionExpr::Kind::Tensor, std::move(leaves));
}

ConstraintExpr prim_to_constraint(const Prim& p) {
  return ConstraintExpr::atom(
      p.kind == Prim::Eq ? ConstraintExpr::Kind::Eq : ConstraintExpr::Kind::Neq,
      p.param, p.value);
}

TermList constraint_terms_rec(const ConstraintExpr& psi, std::uint64_t budget,
                              std::uint64_t& materialized) {
  switch (psi.kind) {
    case ConstraintExpr::Kind::True: {
      // The empty conjunction: one term restricting nothing.
      TermList tl;
      tl.add(Term{}, budget, materialized, "constraint");
      return tl;
    }
    case ConstraintExpr::Kind::Eq:
    case ConstraintExpr::Kind::Neq: {
      TermList tl;
      Prim p{psi.kind == ConstraintExpr::Kind::Eq ? Prim::Eq : Prim::Neq,
             psi.param, psi.value};
      tl.add(Term{{p}}, budget, materialized, "constraint");
      return tl;
    }
    case ConstraintExpr::Kind::Or: {
      TermList out;
      for (const auto& ch : psi.children)
        out.absorb(constraint_terms_rec(ch, budget, materialized));
      return out;
    }
    case ConstraintExpr::Kind::And: {
      TermList acc;
      bool first = true;
      for (const auto& ch : psi.children) {
        TermList part = constraint_terms_rec(ch, budget, materialized);
        if (first) {
          acc = std::move(part);
          first = false;
        } else {
          acc = tensor_product(acc, part, budget, materialized, "constraint");
        }
      }
      return acc;
    }
  }
  throw Error(ErrorKind::Internal, "corrupt constraint node");
}

ConstraintExpr term_to_constraint(const Term& t) {
  if (t.prims.empty()) return ConstraintExpr::make_true();
  std::vector<ConstraintExpr> atoms;
  atoms.reserve(t.prims.size());
  for (const auto& p : t.prims) atoms.push_back(prim_to_constraint(p));
  if (atoms.size() == 1) return std::move(atoms.front());
  return ConstraintExpr::node(ConstraintExpr::Kind::And, std::move(atoms));
}

Subcube term_to_cube(const Declarations& decls, const Term& t) {
  Subcube cube = Subcube::full((std::uint32_t)decls.size());
  for (const auto& p : t.prims) {
    if (p.kind == Prim::Any) continue;
    if (p.kind == Prim::Eq) {
      cube.restrict_coord(p.param, {p.value});
    } else {
      std::vector<std::uint32_t> vals;
      const auto n = decls.params[p.param].range.size();
      vals.reserve(n - 1);
      for (std::uint32_t v = 0; v < n; ++v)
        if (v != p.value) vals.push_back(v);
      cube.restrict_coord(p.param, vals);
    }
  }
  return cube;
}

}  // namespace

CriterionExpr to_union_normal_form(const CriterionExpr& gamma, std::uint64_t budget) {
  std::uint64_t materialized = 0;
  TermList tl = criterion_terms_rec(gamma, budget, materialized);
  std::vector<CriterionExpr> terms;
  terms.reserve(tl.terms().size());
  for (const auto& t : tl.terms()) terms.push_back(term_to_criterion(t));
  if (terms.size() == 1) return std::move(terms.front());
  return CriterionExpr::node(CriterionExpr::Kind::Union, std::move(terms));
}

ConstraintExpr to_disjunctive_normal_form(const ConstraintExpr& psi,
                                          std::uint64_t budget) {
  std::uint64_t materialized = 0;
  TermList tl = constraint_terms_rec(psi, budget, materialized);
  std::vector<ConstraintExpr> terms;
  terms.reserve(tl.terms().size());
  for (const auto& t : tl.terms()) terms.push_back(term_to_constraint(t));
  if (terms.size() == 1) return std::move(terms.front());
  return ConstraintExpr::node(ConstraintExpr::Kind::Or, std::move(terms));
}

NormalizedInstance normalize_instance(const Instance& inst, std::uint64_t budget) {
  NormalizedInstance ni;
  ni.decls = inst.decls;

  CriterionExpr sugar_free = eliminate_sugar(inst.decls, inst.criterion);
  std::uint64_t materialized = 0;
  TermList s_terms = criterion_terms_rec(sugar_free, budget, materialized);
  ni.s_cubes.reserve(s_terms.terms().size());
  for (const auto& t : s_terms.terms())
    ni.s_cubes.push_back(term_to_cube(inst.decls, t));

  materialized = 0;
  TermList c_terms = constraint_terms_rec(inst.constraint, budget, materialized);
  ni.c_cubes.reserve(c_terms.terms().size());
  for (const auto& t : c_terms.terms())
    ni.c_cubes.push_back(term_to_cube(inst.decls, t));

  ni.criterion_terms = ni.s_cubes.size();
  ni.constraint_terms = ni.c_cubes.size();
  return ni;
}

BigUint criterion_upper_bound(const Declarations& decls, const CriterionExpr& gamma) {
  switch (gamma.kind) {
    case CriterionExpr::Kind::Eq:
    case CriterionExpr::Kind::Neq:
    case CriterionExpr::Kind::AnyTest:
      return 1;
    case CriterionExpr::Kind::Each:
      return (unsigned long)gamma.values.size();
    case CriterionExpr::Kind::Exhaustive: {
      BigUint n = 1;
      for (auto q : gamma.params) n *= (unsigned long)decls.params[q].range.size();
      return n;
    }
    case CriterionExpr::Kind::Union: {
      BigUint n = 0;
      for (const auto& ch : gamma.children) n += criterion_upper_bound(decls, ch);
      return n;
    }
    case CriterionExpr::Kind::Tensor: {
      BigUint n = 1;
      for (const auto& ch : gamma.children) n *= criterion_upper_bound(decls, ch);
      return n;
    }
  }
  throw Error(ErrorKind::Internal, "corrupt criterion node");
}

}  // namespace tselect
