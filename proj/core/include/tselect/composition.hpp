#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "tselect/ast.hpp"

namespace tselect {

// How two parameter-disjoint instances combine into one: conjoin the
// constraints and join the criteria with tensor or union respectively.
enum class ComposeOp { AndTensor, AndUnion };

// A binary tree of parameter-disjoint component instances. Evaluating the
// tree bottom-up with ComposeOp yields a single combined instance; solving
// the leaves and combining their test sets solves the combined instance
// without ever normalizing it whole.
//
// `combined` holds the declarations of the evaluated instance. Each leaf
// maps its own coordinates into that space through `slots`, so leaves may
// interleave parameters in any order (as discovered decompositions do).
struct CompositionTree {
  struct Leaf {
    std::string name;  // component name for diagnostics
    Instance inst;
    std::vector<std::uint32_t> slots;  // leaf coordinate -> combined coordinate
  };

  // Either a leaf reference (children empty) or an operator node.
  struct Node {
    ComposeOp op = ComposeOp::AndTensor;
    std::int32_t leaf = -1;
    std::unique_ptr<Node> left, right;

    bool is_leaf() const { return leaf >= 0; }

    static std::unique_ptr<Node> make_leaf(std::int32_t index) {
      auto n = std::make_unique<Node>();
      n->leaf = index;
      return n;
    }

    static std::unique_ptr<Node> make(ComposeOp op, std::unique_ptr<Node> l,
                                      std::unique_ptr<Node> r) {
      auto n = std::make_unique<Node>();
      n->op = op;
      n->left = std::move(l);
      n->right = std::move(r);
      return n;
    }
  };

  Declarations combined;
  std::vector<Leaf> leaves;
  std::unique_ptr<Node> root;

  bool single_leaf() const { return root && root->is_leaf(); }
};

}  // namespace tselect
