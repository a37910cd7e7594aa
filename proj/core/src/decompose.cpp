#include "tselect/decompose.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>

#include "tselect/normalize.hpp"

namespace tselect {

namespace {

struct UnionFind {
  std::vector<std::uint32_t> parent;

  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);  // smallest index becomes the representative
    parent[b] = a;
    return true;
  }
};

void constraint_params(const ConstraintExpr& e, std::set<std::uint32_t>& out) {
  switch (e.kind) {
    case ConstraintExpr::Kind::True:
      return;
    case ConstraintExpr::Kind::Eq:
    case ConstraintExpr::Kind::Neq:
      out.insert(e.param);
      return;
    case ConstraintExpr::Kind::Or:
    case ConstraintExpr::Kind::And:
      for (const auto& ch : e.children) constraint_params(ch, out);
      return;
  }
}

void criterion_params(const CriterionExpr& e, std::set<std::uint32_t>& out) {
  switch (e.kind) {
    case CriterionExpr::Kind::Eq:
    case CriterionExpr::Kind::Neq:
      out.insert(e.param);
      return;
    case CriterionExpr::Kind::AnyTest:
      return;
    case CriterionExpr::Kind::Each:
      out.insert(e.param);
      return;
    case CriterionExpr::Kind::Exhaustive:
      out.insert(e.params.begin(), e.params.end());
      return;
    case CriterionExpr::Kind::Union:
    case CriterionExpr::Kind::Tensor:
      for (const auto& ch : e.children) criterion_params(ch, out);
      return;
  }
}

std::size_t count_occurrences(const CriterionExpr& e, std::uint32_t param) {
  switch (e.kind) {
    case CriterionExpr::Kind::Eq:
    case CriterionExpr::Kind::Neq:
    case CriterionExpr::Kind::Each:
      return e.param == param ? 1 : 0;
    case CriterionExpr::Kind::AnyTest:
      return 0;
    case CriterionExpr::Kind::Exhaustive:
      return std::count(e.params.begin(), e.params.end(), param) ? 1 : 0;
    case CriterionExpr::Kind::Union:
    case CriterionExpr::Kind::Tensor: {
      std::size_t n = 0;
      for (const auto& ch : e.children) n += count_occurrences(ch, param);
      return n;
    }
  }
  return 0;
}

// Smallest subexpression containing every occurrence of `param`.
const CriterionExpr* smallest_covering(const CriterionExpr& root, std::uint32_t param,
                                       std::size_t total) {
  const CriterionExpr* node = &root;
  for (;;) {
    if (node->children.empty()) return node;
    const CriterionExpr* next = nullptr;
    for (const auto& ch : node->children)
      if (count_occurrences(ch, param) == total) {
        next = &ch;
        break;
      }
    if (!next) return node;
    node = next;
  }
}

// True when the constraint is a top-level conjunction: an and-node, a single
// atom, or the trivial True. A disjunction root offers no terms to split.
bool collect_conjuncts(const ConstraintExpr& psi,
                       std::vector<const ConstraintExpr*>& out) {
  switch (psi.kind) {
    case ConstraintExpr::Kind::True:
      return true;
    case ConstraintExpr::Kind::And:
      for (const auto& ch : psi.children)
        if (ch.kind == ConstraintExpr::Kind::And) {
          if (!collect_conjuncts(ch, out)) return false;
        } else if (ch.kind != ConstraintExpr::Kind::True) {
          out.push_back(&ch);
        }
      return true;
    case ConstraintExpr::Kind::Eq:
    case ConstraintExpr::Kind::Neq:
    case ConstraintExpr::Kind::Or:
      if (psi.kind == ConstraintExpr::Kind::Or) return false;
      out.push_back(&psi);
      return true;
  }
  return false;
}

// One fixpoint pass of the exact-split rule: classes that would need a
// distributive step to separate get merged. At any operator node, children
// sharing a class form a block; a block spanning several children cannot be
// split below this node, so all its classes must act as one. A param-free
// child (pure ANY_TEST subtree) glues the whole node together, since it has
// no class of its own to travel with.
bool merge_pass(const CriterionExpr& node, UnionFind& uf) {
  if (node.children.empty()) return false;
  bool changed = false;

  std::vector<std::set<std::uint32_t>> child_classes(node.children.size());
  bool any_free = false;
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    std::set<std::uint32_t> params;
    criterion_params(node.children[i], params);
    for (auto p : params) child_classes[i].insert(uf.find(p));
    if (child_classes[i].empty()) any_free = true;
  }

  if (any_free) {
    std::uint32_t first = UINT32_MAX;
    for (const auto& cs : child_classes)
      for (auto c : cs) {
        if (first == UINT32_MAX) first = c;
        else changed |= uf.unite(first, c);
      }
  } else {
    UnionFind groups(node.children.size());
    std::map<std::uint32_t, std::size_t> owner;
    for (std::size_t i = 0; i < node.children.size(); ++i)
      for (auto c : child_classes[i]) {
        auto it = owner.find(c);
        if (it == owner.end()) owner.emplace(c, i);
        else groups.unite((std::uint32_t)it->second, (std::uint32_t)i);
      }
    std::map<std::uint32_t, std::vector<std::size_t>> members;
    for (std::size_t i = 0; i < node.children.size(); ++i)
      members[groups.find((std::uint32_t)i)].push_back(i);
    for (const auto& [rep, kids] : members) {
      if (kids.size() < 2) continue;
      std::uint32_t first = UINT32_MAX;
      for (auto k : kids)
        for (auto c : child_classes[k]) {
          if (first == UINT32_MAX) first = c;
          else changed |= uf.unite(first, c);
        }
    }
  }

  for (const auto& ch : node.children) changed |= merge_pass(ch, uf);
  return changed;
}

// Criterion structure over whole classes, mirroring the original tree.
struct BuiltPart {
  bool leaf = true;
  std::uint32_t cls = 0;             // leaf: class representative
  CriterionExpr expr;                // leaf: criterion part, original indices
  CriterionExpr::Kind op = CriterionExpr::Kind::Union;  // inner node join
  std::vector<BuiltPart> parts;      // inner node children, ordered
  std::uint32_t min_param = UINT32_MAX;
};

std::uint32_t class_of_node(const CriterionExpr& node, UnionFind& uf,
                            std::uint32_t* min_param) {
  std::set<std::uint32_t> params;
  criterion_params(node, params);
  assert(!params.empty());
  *min_param = *params.begin();
  return uf.find(*params.begin());
}

BuiltPart build_parts(const CriterionExpr& node, UnionFind& uf) {
  std::set<std::uint32_t> params;
  criterion_params(node, params);
  std::set<std::uint32_t> classes;
  for (auto p : params) classes.insert(uf.find(p));

  if (classes.size() <= 1) {
    BuiltPart part;
    part.leaf = true;
    part.cls = *classes.begin();
    part.expr = node;
    part.min_param = *params.begin();
    return part;
  }

  // Several classes below one node: the fixpoint guarantees no param-free
  // children here and no block with more than one child and class.
  UnionFind groups((std::uint32_t)node.children.size());
  std::map<std::uint32_t, std::size_t> owner;
  std::vector<std::set<std::uint32_t>> child_classes(node.children.size());
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    std::set<std::uint32_t> ps;
    criterion_params(node.children[i], ps);
    assert(!ps.empty());
    for (auto p : ps) child_classes[i].insert(uf.find(p));
    for (auto c : child_classes[i]) {
      auto it = owner.find(c);
      if (it == owner.end()) owner.emplace(c, i);
      else groups.unite((std::uint32_t)it->second, (std::uint32_t)i);
    }
  }
  std::map<std::uint32_t, std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < node.children.size(); ++i)
    blocks[groups.find((std::uint32_t)i)].push_back(i);

  BuiltPart out;
  out.leaf = false;
  out.op = node.kind;
  for (const auto& [rep, kids] : blocks) {
    if (kids.size() == 1) {
      out.parts.push_back(build_parts(node.children[kids.front()], uf));
    } else {
      // One class spread over several children: keep them together, joined
      // by this node's operator.
      std::vector<CriterionExpr> members;
      std::uint32_t min_param = UINT32_MAX;
      std::uint32_t cls = 0;
      for (auto k : kids) {
        std::uint32_t mp;
        cls = class_of_node(node.children[k], uf, &mp);
        min_param = std::min(min_param, mp);
        members.push_back(node.children[k]);
      }
      BuiltPart part;
      part.leaf = true;
      part.cls = cls;
      part.min_param = min_param;
      part.expr = members.size() == 1
                      ? std::move(members.front())
                      : CriterionExpr::node(node.kind, std::move(members));
      out.parts.push_back(std::move(part));
    }
  }
  std::stable_sort(out.parts.begin(), out.parts.end(),
                   [](const BuiltPart& a, const BuiltPart& b) {
                     return a.min_param < b.min_param;
                   });
  out.min_param = out.parts.front().min_param;
  return out;
}

std::uint32_t remap_index(const std::vector<std::int32_t>& to_local,
                          std::uint32_t orig) {
  assert(to_local[orig] >= 0);
  return (std::uint32_t)to_local[orig];
}

ConstraintExpr remap_constraint(const ConstraintExpr& e,
                                const std::vector<std::int32_t>& to_local) {
  ConstraintExpr out = e;
  if (out.is_atom()) out.param = remap_index(to_local, out.param);
  for (auto& ch : out.children) ch = remap_constraint(ch, to_local);
  return out;
}

CriterionExpr remap_criterion(const CriterionExpr& e,
                              const std::vector<std::int32_t>& to_local) {
  CriterionExpr out = e;
  switch (out.kind) {
    case CriterionExpr::Kind::Eq:
    case CriterionExpr::Kind::Neq:
    case CriterionExpr::Kind::Each:
      out.param = remap_index(to_local, out.param);
      break;
    case CriterionExpr::Kind::Exhaustive:
      for (auto& q : out.params) q = remap_index(to_local, q);
      break;
    default:
      break;
  }
  for (auto& ch : out.children) ch = remap_criterion(ch, to_local);
  return out;
}

CompositionTree single_leaf_tree(const Instance& inst) {
  CompositionTree tree;
  tree.combined = inst.decls;
  std::vector<std::uint32_t> slots(inst.decls.size());
  std::iota(slots.begin(), slots.end(), 0);
  tree.leaves.push_back(CompositionTree::Leaf{"whole", inst, std::move(slots)});
  tree.root = CompositionTree::Node::make_leaf(0);
  return tree;
}

}  // namespace

CompositionTree discover_decomposition(const Instance& inst) {
  const std::size_t n = inst.decls.size();
  if (n == 0) return single_leaf_tree(inst);

  std::vector<const ConstraintExpr*> conjuncts;
  if (!collect_conjuncts(inst.constraint, conjuncts))
    return single_leaf_tree(inst);  // disjunction at the top: nothing to split

  UnionFind uf(n);

  // Constraint coupling: parameters sharing a conjunct travel together.
  for (const auto* term : conjuncts) {
    std::set<std::uint32_t> params;
    constraint_params(*term, params);
    if (params.empty()) continue;
    auto first = *params.begin();
    for (auto p : params) uf.unite(first, p);
  }

  // Criterion coupling: a parameter drags along everything occurring in the
  // smallest subexpression containing all its occurrences.
  for (std::uint32_t i = 0; i < n; ++i) {
    std::size_t total = count_occurrences(inst.criterion, i);
    if (total == 0) continue;
    const CriterionExpr* cover = smallest_covering(inst.criterion, i, total);
    std::set<std::uint32_t> params;
    criterion_params(*cover, params);
    for (auto p : params) uf.unite(i, p);
  }

  // Exact-split fixpoint: grow classes until the criterion regroups cleanly.
  while (merge_pass(inst.criterion, uf)) {
  }

  std::set<std::uint32_t> criterion_ps, constraint_ps;
  criterion_params(inst.criterion, criterion_ps);
  for (const auto* term : conjuncts) constraint_params(*term, constraint_ps);

  // Class members, keyed by representative; singleton classes for
  // parameters mentioned nowhere.
  std::map<std::uint32_t, std::vector<std::uint32_t>> members;
  for (std::uint32_t i = 0; i < n; ++i) members[uf.find(i)].push_back(i);
  if (members.size() == 1) return single_leaf_tree(inst);

  CompositionTree tree;
  tree.combined = inst.decls;

  std::map<std::uint32_t, std::int32_t> leaf_of_class;
  auto make_leaf = [&](std::uint32_t rep) -> std::int32_t {
    auto found = leaf_of_class.find(rep);
    if (found != leaf_of_class.end()) return found->second;
    const auto& ps = members.at(rep);
    CompositionTree::Leaf leaf;
    leaf.name = inst.decls.params[ps.front()].name;
    std::vector<std::int32_t> to_local(n, -1);
    for (auto p : ps) {
      to_local[p] = (std::int32_t)leaf.inst.decls.params.size();
      leaf.inst.decls.params.push_back(inst.decls.params[p]);
      leaf.slots.push_back(p);
    }
    std::vector<ConstraintExpr> own_terms;
    for (const auto* term : conjuncts) {
      std::set<std::uint32_t> ps2;
      constraint_params(*term, ps2);
      if (!ps2.empty() && uf.find(*ps2.begin()) == rep)
        own_terms.push_back(remap_constraint(*term, to_local));
    }
    if (own_terms.empty())
      leaf.inst.constraint = ConstraintExpr::make_true();
    else if (own_terms.size() == 1)
      leaf.inst.constraint = std::move(own_terms.front());
    else
      leaf.inst.constraint =
          ConstraintExpr::node(ConstraintExpr::Kind::And, std::move(own_terms));
    leaf.inst.criterion = CriterionExpr::any_test();  // overridden for
                                                      // criterion-bearing classes
    std::int32_t idx = (std::int32_t)tree.leaves.size();
    tree.leaves.push_back(std::move(leaf));
    leaf_of_class.emplace(rep, idx);
    return idx;
  };

  std::unique_ptr<CompositionTree::Node> root;

  if (!criterion_ps.empty()) {
    BuiltPart parts = build_parts(inst.criterion, uf);

    // Convert the class structure into tree nodes, creating leaves as they
    // first appear.
    auto convert = [&](auto&& self, const BuiltPart& part)
        -> std::unique_ptr<CompositionTree::Node> {
      if (part.leaf) {
        std::int32_t idx = make_leaf(part.cls);
        std::vector<std::int32_t> to_local(n, -1);
        auto& leaf = tree.leaves[idx];
        for (std::size_t k = 0; k < leaf.slots.size(); ++k)
          to_local[leaf.slots[k]] = (std::int32_t)k;
        leaf.inst.criterion = remap_criterion(part.expr, to_local);
        return CompositionTree::Node::make_leaf(idx);
      }
      ComposeOp op = part.op == CriterionExpr::Kind::Union ? ComposeOp::AndUnion
                                                           : ComposeOp::AndTensor;
      auto acc = self(self, part.parts.front());
      for (std::size_t i = 1; i < part.parts.size(); ++i)
        acc = CompositionTree::Node::make(op, std::move(acc),
                                          self(self, part.parts[i]));
      return acc;
    };
    root = convert(convert, parts);
  }

  // Remaining classes carry no criterion occurrence: constraint-only classes
  // and untouched singletons. They join with tensor, which leaves the
  // denoted family unchanged. When the criterion mentions no parameter at
  // all, the first such leaf carries it verbatim.
  std::vector<std::uint32_t> rest;
  for (const auto& [rep, ps] : members)
    if (!leaf_of_class.count(rep)) rest.push_back(rep);
  std::sort(rest.begin(), rest.end());
  for (auto rep : rest) {
    std::int32_t idx = make_leaf(rep);
    if (!root && criterion_ps.empty()) {
      // Param-free criterion (pure ANY_TEST combinations): keep it on the
      // first leaf so the evaluated tree denotes the same family.
      tree.leaves[idx].inst.criterion = inst.criterion;
    }
    auto leaf_node = CompositionTree::Node::make_leaf(idx);
    root = root ? CompositionTree::Node::make(ComposeOp::AndTensor,
                                              std::move(root), std::move(leaf_node))
                : std::move(leaf_node);
  }

  tree.root = std::move(root);
  return tree;
}

std::vector<std::pair<TestPoint, TestPoint>> zip_pad(
    const std::vector<TestPoint>& a, const std::vector<TestPoint>& b) {
  if (a.empty() || b.empty())
    throw Error(ErrorKind::Internal, "zip_pad requires non-empty inputs");
  std::vector<std::pair<TestPoint, TestPoint>> out;
  std::size_t len = std::max(a.size(), b.size());
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i)
    out.emplace_back(a[std::min(i, a.size() - 1)], b[std::min(i, b.size() - 1)]);
  return out;
}

namespace {

TestPoint concat_points(const TestPoint& p, const TestPoint& q) {
  TestPoint out = p;
  out.coords.insert(out.coords.end(), q.coords.begin(), q.coords.end());
  return out;
}

}  // namespace

std::vector<TestPoint> compose_test_sets(ComposeOp op,
                                         const std::vector<TestPoint>& t1,
                                         const TestPoint& d1,
                                         const std::vector<TestPoint>& t2,
                                         const TestPoint& d2) {
  std::vector<TestPoint> out;
  if (op == ComposeOp::AndTensor) {
    out.reserve(t1.size() * t2.size());
    for (const auto& p : t1)
      for (const auto& q : t2) out.push_back(concat_points(p, q));
    return out;
  }
  if (t1.empty() && t2.empty()) return out;
  if (t1.empty()) {
    out.reserve(t2.size());
    for (const auto& q : t2) out.push_back(concat_points(d1, q));
    return out;
  }
  if (t2.empty()) {
    out.reserve(t1.size());
    for (const auto& p : t1) out.push_back(concat_points(p, d2));
    return out;
  }
  for (auto& [p, q] : zip_pad(t1, t2)) out.push_back(concat_points(p, q));
  return out;
}

namespace {

struct NodeSolution {
  std::vector<TestPoint> points;  // combined width, foreign slots zeroed
  TestPoint witness;              // one domain point of this subtree
  BigUint bound;
  std::size_t terms = 0;
};

// Writes q's coordinates into p at the leaf's combined positions.
void scatter(TestPoint& p, const TestPoint& q,
             const std::vector<std::uint32_t>& slots) {
  for (std::size_t i = 0; i < slots.size(); ++i) p.coords[slots[i]] = q.coords[i];
}

TestPoint merge_points(const TestPoint& a, const TestPoint& b,
                       const std::vector<bool>& from_b) {
  TestPoint out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i)
    if (from_b[i]) out.coords[i] = b.coords[i];
  return out;
}

class ComposedSolver {
public:
  ComposedSolver(const CompositionTree& tree, OrderPolicy order, std::uint64_t budget)
      : tree_(tree), order_(order), budget_(budget) {}

  NodeSolution solve(const CompositionTree::Node& node) {
    if (node.is_leaf()) return solve_leaf(tree_.leaves[node.leaf]);

    NodeSolution left = solve(*node.left);
    NodeSolution right = solve(*node.right);
    std::vector<bool> right_owned(tree_.combined.size(), false);
    mark_slots(*node.right, right_owned);

    NodeSolution out;
    out.witness = merge_points(left.witness, right.witness, right_owned);
    out.terms = left.terms + right.terms;
    if (node.op == ComposeOp::AndTensor) {
      out.bound = left.bound * right.bound;
      out.points.reserve(left.points.size() * right.points.size());
      for (const auto& p : left.points)
        for (const auto& q : right.points)
          out.points.push_back(merge_points(p, q, right_owned));
    } else {
      out.bound = left.bound + right.bound;
      if (left.points.empty() && right.points.empty()) {
        // nothing required on either side
      } else if (left.points.empty()) {
        for (const auto& q : right.points)
          out.points.push_back(merge_points(left.witness, q, right_owned));
      } else if (right.points.empty()) {
        for (const auto& p : left.points)
          out.points.push_back(merge_points(p, right.witness, right_owned));
      } else {
        std::size_t len = std::max(left.points.size(), right.points.size());
        for (std::size_t i = 0; i < len; ++i)
          out.points.push_back(
              merge_points(left.points[std::min(i, left.points.size() - 1)],
                           right.points[std::min(i, right.points.size() - 1)],
                           right_owned));
      }
    }
    return out;
  }

private:
  NodeSolution solve_leaf(const CompositionTree::Leaf& leaf) {
    NormalizedInstance ni = normalize_instance(leaf.inst, budget_);
    auto witness =
        find_point(Subcube::full((std::uint32_t)leaf.inst.decls.size()), ni.c_cubes);
    if (!witness)
      throw Error(ErrorKind::EmptyDomain,
                  "component " + leaf.name + " has an empty domain");
    auto points = minimal_adequate_set(ni, order_);

    NodeSolution out;
    out.bound = criterion_upper_bound(leaf.inst.decls, leaf.inst.criterion);
    out.terms = ni.criterion_terms;
    TestPoint blank;
    blank.coords.assign(tree_.combined.size(), 0);
    out.witness = blank;
    scatter(out.witness, *witness, leaf.slots);
    out.points.reserve(points.size());
    for (const auto& p : points) {
      TestPoint wide = blank;
      scatter(wide, p, leaf.slots);
      out.points.push_back(std::move(wide));
    }
    return out;
  }

  void mark_slots(const CompositionTree::Node& node, std::vector<bool>& owned) {
    if (node.is_leaf()) {
      for (auto s : tree_.leaves[node.leaf].slots) owned[s] = true;
      return;
    }
    mark_slots(*node.left, owned);
    mark_slots(*node.right, owned);
  }

  const CompositionTree& tree_;
  OrderPolicy order_;
  std::uint64_t budget_;
};

}  // namespace

ComposedSolution solve_composed(const CompositionTree& tree, OrderPolicy order,
                                std::uint64_t budget) {
  if (!tree.root) throw Error(ErrorKind::Internal, "composition tree has no root");
  ComposedSolver solver(tree, order, budget);
  NodeSolution result = solver.solve(*tree.root);
  return ComposedSolution{std::move(result.points), std::move(result.bound),
                          result.terms};
}

namespace {

void evaluate_node(const CompositionTree& tree, const CompositionTree::Node& node,
                   std::vector<ConstraintExpr>& conjuncts, CriterionExpr& criterion) {
  if (node.is_leaf()) {
    const auto& leaf = tree.leaves[node.leaf];
    ConstraintExpr c = leaf.inst.constraint;
    CriterionExpr g = leaf.inst.criterion;
    std::vector<std::int32_t> table(leaf.inst.decls.size(), -1);
    for (std::size_t i = 0; i < leaf.slots.size(); ++i)
      table[i] = (std::int32_t)leaf.slots[i];
    c = remap_constraint(c, table);
    g = remap_criterion(g, table);
    if (c.kind != ConstraintExpr::Kind::True) conjuncts.push_back(std::move(c));
    criterion = std::move(g);
    return;
  }
  CriterionExpr left_g, right_g;
  evaluate_node(tree, *node.left, conjuncts, left_g);
  evaluate_node(tree, *node.right, conjuncts, right_g);
  auto kind = node.op == ComposeOp::AndUnion ? CriterionExpr::Kind::Union
                                             : CriterionExpr::Kind::Tensor;
  std::vector<CriterionExpr> children;
  children.push_back(std::move(left_g));
  children.push_back(std::move(right_g));
  criterion = CriterionExpr::node(kind, std::move(children));
}

}  // namespace

Instance evaluate_composition(const CompositionTree& tree) {
  if (!tree.root) throw Error(ErrorKind::Internal, "composition tree has no root");
  Instance inst;
  inst.decls = tree.combined;
  std::vector<ConstraintExpr> conjuncts;
  evaluate_node(tree, *tree.root, conjuncts, inst.criterion);
  if (conjuncts.empty())
    inst.constraint = ConstraintExpr::make_true();
  else if (conjuncts.size() == 1)
    inst.constraint = std::move(conjuncts.front());
  else
    inst.constraint =
        ConstraintExpr::node(ConstraintExpr::Kind::And, std::move(conjuncts));
  return inst;
}

CompositionTree combine_instances(ComposeOp op, const Instance& left,
                                  const Instance& right) {
  for (const auto& p : right.decls.params)
    if (left.decls.index_of(p.name))
      throw Error(ErrorKind::Validation,
                  "parameter " + p.name + " is declared by both components");
  CompositionTree tree;
  CompositionTree::Leaf l{"left", left, {}};
  CompositionTree::Leaf r{"right", right, {}};
  for (std::uint32_t i = 0; i < left.decls.size(); ++i) {
    l.slots.push_back(i);
    tree.combined.params.push_back(left.decls.params[i]);
  }
  for (std::uint32_t i = 0; i < right.decls.size(); ++i) {
    r.slots.push_back((std::uint32_t)tree.combined.params.size());
    tree.combined.params.push_back(right.decls.params[i]);
  }
  tree.leaves.push_back(std::move(l));
  tree.leaves.push_back(std::move(r));
  tree.root = CompositionTree::Node::make(op, CompositionTree::Node::make_leaf(0),
                                          CompositionTree::Node::make_leaf(1));
  return tree;
}

}  // namespace tselect
