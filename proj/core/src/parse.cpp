#include "tselect/parse.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <set>
#include <unordered_map>

namespace tselect {

namespace {

enum class Tok {
  Ident,
  String,
  KwDeclaration,
  KwConstraint,
  KwCriterion,
  KwCompose,
  KwInstance,
  KwCombine,
  KwOr,
  KwAnd,
  KwTrue,
  KwFalse,
  KwAnyTest,
  KwEach,
  KwExhaustive,
  Colon,
  LBrace,
  RBrace,
  Comma,
  LParen,
  RParen,
  Less,
  Greater,
  Assign,
  NotEqual,
  UnionOp,      // ++
  TensorOp,     // **
  AndUnionOp,   // [AND++]
  AndTensorOp,  // [AND**]
  End,
};

struct Token {
  Tok kind;
  std::string text;  // identifier name or unescaped string value
  SourcePos pos;
};

const std::unordered_map<std::string, Tok>& keyword_table() {
  static const std::unordered_map<std::string, Tok> table = {
      {"declaration", Tok::KwDeclaration},
      {"constraint", Tok::KwConstraint},
      {"criterion", Tok::KwCriterion},
      {"compose", Tok::KwCompose},
      {"instance", Tok::KwInstance},
      {"combine", Tok::KwCombine},
      {"or", Tok::KwOr},
      {"and", Tok::KwAnd},
      {"true", Tok::KwTrue},
      {"false", Tok::KwFalse},
      {"ANY_TEST", Tok::KwAnyTest},
      {"EACH", Tok::KwEach},
      {"EXHAUSTIVE", Tok::KwExhaustive},
  };
  return table;
}

std::string describe(Tok kind) {
  switch (kind) {
    case Tok::Ident: return "identifier";
    case Tok::String: return "quoted value";
    case Tok::KwDeclaration: return "'declaration'";
    case Tok::KwConstraint: return "'constraint'";
    case Tok::KwCriterion: return "'criterion'";
    case Tok::KwCompose: return "'compose'";
    case Tok::KwInstance: return "'instance'";
    case Tok::KwCombine: return "'combine'";
    case Tok::KwOr: return "'or'";
    case Tok::KwAnd: return "'and'";
    case Tok::KwTrue: return "'true'";
    case Tok::KwFalse: return "'false'";
    case Tok::KwAnyTest: return "'ANY_TEST'";
    case Tok::KwEach: return "'EACH'";
    case Tok::KwExhaustive: return "'EXHAUSTIVE'";
    case Tok::Colon: return "':'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Comma: return "','";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Less: return "'<'";
    case Tok::Greater: return "'>'";
    case Tok::Assign: return "'='";
    case Tok::NotEqual: return "'!='";
    case Tok::UnionOp: return "'++'";
    case Tok::TensorOp: return "'**'";
    case Tok::AndUnionOp: return "'[AND++]'";
    case Tok::AndTensorOp: return "'[AND**]'";
    case Tok::End: return "end of input";
  }
  return "token";
}

std::string describe(const Token& t) {
  if (t.kind == Tok::Ident) return "identifier '" + t.text + "'";
  if (t.kind == Tok::String) return "value \"" + t.text + "\"";
  return describe(t.kind);
}

class Lexer {
public:
  explicit Lexer(const std::string& text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_trivia();
      SourcePos pos = pos_;
      if (at_end()) {
        out.push_back({Tok::End, "", pos});
        return out;
      }
      char c = text_[i_];
      if (std::isalpha((unsigned char)c) || c == '_') {
        std::string word = ident();
        auto kw = keyword_table().find(word);
        out.push_back({kw == keyword_table().end() ? Tok::Ident : kw->second,
                       word, pos});
        continue;
      }
      switch (c) {
        case '"': out.push_back({Tok::String, quoted(), pos}); continue;
        case ':': bump(); out.push_back({Tok::Colon, ":", pos}); continue;
        case '{': bump(); out.push_back({Tok::LBrace, "{", pos}); continue;
        case '}': bump(); out.push_back({Tok::RBrace, "}", pos}); continue;
        case ',': bump(); out.push_back({Tok::Comma, ",", pos}); continue;
        case '(': bump(); out.push_back({Tok::LParen, "(", pos}); continue;
        case ')': bump(); out.push_back({Tok::RParen, ")", pos}); continue;
        case '<': bump(); out.push_back({Tok::Less, "<", pos}); continue;
        case '>': bump(); out.push_back({Tok::Greater, ">", pos}); continue;
        case '=': bump(); out.push_back({Tok::Assign, "=", pos}); continue;
        case '!':
          bump();
          if (!at_end() && text_[i_] == '=') {
            bump();
            out.push_back({Tok::NotEqual, "!=", pos});
            continue;
          }
          throw ParseError(pos, "expected '=' after '!'");
        case '+':
          bump();
          if (!at_end() && text_[i_] == '+') {
            bump();
            out.push_back({Tok::UnionOp, "++", pos});
            continue;
          }
          throw ParseError(pos, "expected '+' after '+'");
        case '*':
          bump();
          if (!at_end() && text_[i_] == '*') {
            bump();
            out.push_back({Tok::TensorOp, "**", pos});
            continue;
          }
          throw ParseError(pos, "expected '*' after '*'");
        case '[': out.push_back(bracket_op(pos)); continue;
        default:
          throw ParseError(pos, std::string("unexpected character '") + c + "'");
      }
    }
  }

private:
  bool at_end() const { return i_ >= text_.size(); }

  void bump() {
    if (text_[i_] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    ++i_;
  }

  void skip_trivia() {
    while (!at_end()) {
      char c = text_[i_];
      if (c == '#') {
        while (!at_end() && text_[i_] != '\n') bump();
      } else if (std::isspace((unsigned char)c)) {
        bump();
      } else {
        return;
      }
    }
  }

  std::string ident() {
    std::size_t start = i_;
    while (!at_end() && (std::isalnum((unsigned char)text_[i_]) || text_[i_] == '_'))
      bump();
    return text_.substr(start, i_ - start);
  }

  std::string quoted() {
    SourcePos start = pos_;
    bump();  // opening quote
    std::string out;
    while (!at_end() && text_[i_] != '"') {
      if (text_[i_] == '\\') {
        bump();
        if (at_end()) break;
      }
      out.push_back(text_[i_]);
      bump();
    }
    if (at_end()) throw ParseError(start, "unterminated string value");
    bump();  // closing quote
    return out;
  }

  Token bracket_op(SourcePos pos) {
    static const std::string union_op = "[AND++]";
    static const std::string tensor_op = "[AND**]";
    if (text_.compare(i_, union_op.size(), union_op) == 0) {
      for (std::size_t k = 0; k < union_op.size(); ++k) bump();
      return {Tok::AndUnionOp, union_op, pos};
    }
    if (text_.compare(i_, tensor_op.size(), tensor_op) == 0) {
      for (std::size_t k = 0; k < tensor_op.size(); ++k) bump();
      return {Tok::AndTensorOp, tensor_op, pos};
    }
    throw ParseError(pos, "expected '[AND++]' or '[AND**]'");
  }

  const std::string& text_;
  std::size_t i_ = 0;
  SourcePos pos_{1, 1};
};

class Parser {
public:
  explicit Parser(const std::string& text)
      : tokens_(Lexer(text).run()), source_size_(stripped_source_size(text)) {}

  std::variant<Instance, CompositionTree> document() {
    if (at(Tok::KwCompose)) {
      CompositionTree tree = compose_document();
      expect(Tok::End, "end of document");
      return tree;
    }
    Instance inst = instance_body();
    expect(Tok::End, "end of document");
    inst.source_size = source_size_;
    return inst;
  }

private:
  const Token& peek() const { return tokens_[k_]; }
  bool at(Tok kind) const { return peek().kind == kind; }

  Token advance() { return tokens_[k_++]; }

  Token expect(Tok kind, const std::string& what) {
    if (!at(kind))
      throw ParseError(peek().pos, "expected " + what + ", got " + describe(peek()));
    return advance();
  }

  [[noreturn]] void validation_error(SourcePos pos, const std::string& msg) {
    throw ParseError(ErrorKind::Validation, pos, msg);
  }

  // value := quoted string | true | false
  std::string value() {
    if (at(Tok::String)) return advance().text;
    if (at(Tok::KwTrue)) { advance(); return "true"; }
    if (at(Tok::KwFalse)) { advance(); return "false"; }
    throw ParseError(peek().pos, "expected a quoted value, got " + describe(peek()));
  }

  Declarations declarations() {
    expect(Tok::KwDeclaration, "'declaration'");
    Declarations decls;
    while (at(Tok::Ident)) {
      Token name = advance();
      if (decls.index_of(name.text))
        validation_error(name.pos, "duplicate declaration of parameter " + name.text);
      expect(Tok::Colon, "':'");
      expect(Tok::LBrace, "'{'");
      ParameterDecl decl;
      decl.name = name.text;
      for (;;) {
        SourcePos vpos = peek().pos;
        std::string v = value();
        if (std::find(decl.range.begin(), decl.range.end(), v) != decl.range.end())
          validation_error(vpos, "duplicate value \"" + v + "\" in the range of " +
                                     decl.name);
        decl.range.push_back(std::move(v));
        if (at(Tok::Comma)) { advance(); continue; }
        break;
      }
      expect(Tok::RBrace, "'}' or ','");
      decls.params.push_back(std::move(decl));
    }
    if (decls.params.empty())
      throw ParseError(peek().pos, "expected at least one parameter declaration");
    return decls;
  }

  std::uint32_t resolve_param(const Declarations& decls, const Token& name) {
    auto idx = decls.index_of(name.text);
    if (!idx)
      validation_error(name.pos, "undeclared parameter " + name.text);
    return *idx;
  }

  std::uint32_t resolve_value(const Declarations& decls, std::uint32_t param,
                              SourcePos pos, const std::string& v) {
    auto idx = decls.value_index(param, v);
    if (!idx)
      validation_error(pos, "value \"" + v + "\" is not in the range of " +
                                decls.params[param].name);
    return *idx;
  }

  // constraint := and_chain { "or" and_chain }
  ConstraintExpr constraint_expr(const Declarations& decls) {
    std::vector<ConstraintExpr> disjuncts{constraint_term(decls)};
    while (at(Tok::KwOr)) {
      advance();
      disjuncts.push_back(constraint_term(decls));
    }
    if (disjuncts.size() == 1) return std::move(disjuncts.front());
    return ConstraintExpr::node(ConstraintExpr::Kind::Or, std::move(disjuncts));
  }

  ConstraintExpr constraint_term(const Declarations& decls) {
    std::vector<ConstraintExpr> conjuncts{constraint_atom(decls)};
    while (at(Tok::KwAnd)) {
      advance();
      conjuncts.push_back(constraint_atom(decls));
    }
    if (conjuncts.size() == 1) return std::move(conjuncts.front());
    return ConstraintExpr::node(ConstraintExpr::Kind::And, std::move(conjuncts));
  }

  ConstraintExpr constraint_atom(const Declarations& decls) {
    if (at(Tok::LParen)) {
      advance();
      ConstraintExpr e = constraint_expr(decls);
      expect(Tok::RParen, "')'");
      return e;
    }
    if (at(Tok::KwTrue)) {
      advance();
      return ConstraintExpr::make_true();
    }
    Token name = expect(Tok::Ident, "a parameter name, '(' or 'true'");
    std::uint32_t param = resolve_param(decls, name);
    bool equal;
    if (at(Tok::Assign)) { advance(); equal = true; }
    else if (at(Tok::NotEqual)) { advance(); equal = false; }
    else throw ParseError(peek().pos, "expected '=' or '!=', got " + describe(peek()));
    SourcePos vpos = peek().pos;
    std::string v = value();
    return ConstraintExpr::atom(equal ? ConstraintExpr::Kind::Eq
                                      : ConstraintExpr::Kind::Neq,
                                param, resolve_value(decls, param, vpos, v));
  }

  // criterion := tensor_chain { "++" tensor_chain }
  CriterionExpr criterion_expr(const Declarations& decls) {
    std::vector<CriterionExpr> parts{criterion_term(decls)};
    while (at(Tok::UnionOp)) {
      advance();
      parts.push_back(criterion_term(decls));
    }
    if (parts.size() == 1) return std::move(parts.front());
    return CriterionExpr::node(CriterionExpr::Kind::Union, std::move(parts));
  }

  CriterionExpr criterion_term(const Declarations& decls) {
    std::vector<CriterionExpr> parts{criterion_atom(decls)};
    while (at(Tok::TensorOp)) {
      advance();
      parts.push_back(criterion_atom(decls));
    }
    if (parts.size() == 1) return std::move(parts.front());
    return CriterionExpr::node(CriterionExpr::Kind::Tensor, std::move(parts));
  }

  CriterionExpr criterion_atom(const Declarations& decls) {
    if (at(Tok::LParen)) {
      advance();
      CriterionExpr e = criterion_expr(decls);
      expect(Tok::RParen, "')'");
      return e;
    }
    if (at(Tok::KwAnyTest)) {
      advance();
      return CriterionExpr::any_test();
    }
    if (at(Tok::Less)) {
      advance();
      Token name = expect(Tok::Ident, "a parameter name");
      std::uint32_t param = resolve_param(decls, name);
      bool equal;
      if (at(Tok::Assign)) { advance(); equal = true; }
      else if (at(Tok::NotEqual)) { advance(); equal = false; }
      else throw ParseError(peek().pos, "expected '=' or '!=', got " + describe(peek()));
      SourcePos vpos = peek().pos;
      std::string v = value();
      expect(Tok::Greater, "'>'");
      return CriterionExpr::atom(equal ? CriterionExpr::Kind::Eq
                                       : CriterionExpr::Kind::Neq,
                                 param, resolve_value(decls, param, vpos, v));
    }
    if (at(Tok::KwEach)) {
      advance();
      expect(Tok::LParen, "'('");
      Token name = expect(Tok::Ident, "a parameter name");
      std::uint32_t param = resolve_param(decls, name);
      expect(Tok::Colon, "':'");
      std::vector<std::uint32_t> values;
      for (;;) {
        SourcePos vpos = peek().pos;
        std::string v = value();
        std::uint32_t idx = resolve_value(decls, param, vpos, v);
        if (std::find(values.begin(), values.end(), idx) != values.end())
          validation_error(vpos, "duplicate value \"" + v + "\" in EACH list");
        values.push_back(idx);
        if (at(Tok::Comma)) { advance(); continue; }
        break;
      }
      expect(Tok::RParen, "')' or ','");
      return CriterionExpr::each(param, std::move(values));
    }
    if (at(Tok::KwExhaustive)) {
      advance();
      expect(Tok::LParen, "'('");
      std::vector<std::uint32_t> params;
      for (;;) {
        Token name = expect(Tok::Ident, "a parameter name");
        std::uint32_t idx = resolve_param(decls, name);
        if (std::find(params.begin(), params.end(), idx) != params.end())
          validation_error(name.pos,
                           "duplicate parameter " + name.text + " in EXHAUSTIVE list");
        params.push_back(idx);
        if (at(Tok::Comma)) { advance(); continue; }
        break;
      }
      expect(Tok::RParen, "')' or ','");
      return CriterionExpr::exhaustive(std::move(params));
    }
    throw ParseError(peek().pos,
                     "expected '<', '(', 'ANY_TEST', 'EACH' or 'EXHAUSTIVE', got " +
                         describe(peek()));
  }

  Instance instance_body() {
    Instance inst;
    inst.decls = declarations();
    if (at(Tok::KwConstraint)) {
      advance();
      inst.constraint = constraint_expr(inst.decls);
    } else {
      inst.constraint = ConstraintExpr::make_true();
    }
    expect(Tok::KwCriterion, "'criterion'");
    inst.criterion = criterion_expr(inst.decls);
    return inst;
  }

  // compose := "compose" { "instance" name body } "combine" combine_expr
  CompositionTree compose_document() {
    expect(Tok::KwCompose, "'compose'");
    std::map<std::string, Instance> named;
    while (at(Tok::KwInstance)) {
      advance();
      Token name = expect(Tok::Ident, "a component name");
      if (named.count(name.text))
        validation_error(name.pos, "duplicate component " + name.text);
      named.emplace(name.text, instance_body());
    }
    if (named.empty())
      throw ParseError(peek().pos, "expected at least one 'instance' block");
    expect(Tok::KwCombine, "'combine'");

    CompositionTree tree;
    std::map<std::string, std::int32_t> leaf_index;
    auto root = combine_expr(named, tree, leaf_index);
    tree.root = std::move(root);

    // Combined declarations in first-use order; parameter names must be
    // disjoint across the components actually combined.
    std::set<std::string> seen;
    for (auto& leaf : tree.leaves) {
      leaf.slots.clear();
      for (const auto& p : leaf.inst.decls.params) {
        if (!seen.insert(p.name).second)
          throw Error(ErrorKind::Validation,
                      "parameter " + p.name +
                          " is declared by more than one combined component");
        leaf.slots.push_back((std::uint32_t)tree.combined.params.size());
        tree.combined.params.push_back(p);
      }
    }
    return tree;
  }

  std::unique_ptr<CompositionTree::Node> combine_expr(
      const std::map<std::string, Instance>& named, CompositionTree& tree,
      std::map<std::string, std::int32_t>& leaf_index) {
    auto left = combine_term(named, tree, leaf_index);
    while (at(Tok::AndUnionOp)) {
      advance();
      auto right = combine_term(named, tree, leaf_index);
      left = CompositionTree::Node::make(ComposeOp::AndUnion, std::move(left),
                                         std::move(right));
    }
    return left;
  }

  std::unique_ptr<CompositionTree::Node> combine_term(
      const std::map<std::string, Instance>& named, CompositionTree& tree,
      std::map<std::string, std::int32_t>& leaf_index) {
    auto left = combine_atom(named, tree, leaf_index);
    while (at(Tok::AndTensorOp)) {
      advance();
      auto right = combine_atom(named, tree, leaf_index);
      left = CompositionTree::Node::make(ComposeOp::AndTensor, std::move(left),
                                         std::move(right));
    }
    return left;
  }

  std::unique_ptr<CompositionTree::Node> combine_atom(
      const std::map<std::string, Instance>& named, CompositionTree& tree,
      std::map<std::string, std::int32_t>& leaf_index) {
    if (at(Tok::LParen)) {
      advance();
      auto e = combine_expr(named, tree, leaf_index);
      expect(Tok::RParen, "')'");
      return e;
    }
    Token name = expect(Tok::Ident, "a component name or '('");
    auto it = named.find(name.text);
    if (it == named.end())
      validation_error(name.pos, "unknown component " + name.text);
    if (leaf_index.count(name.text))
      validation_error(name.pos,
                       "component " + name.text + " used more than once");
    std::int32_t idx = (std::int32_t)tree.leaves.size();
    tree.leaves.push_back(CompositionTree::Leaf{name.text, it->second, {}});
    leaf_index.emplace(name.text, idx);
    return CompositionTree::Node::make_leaf(idx);
  }

  std::vector<Token> tokens_;
  std::size_t k_ = 0;
  std::size_t source_size_;
};

}  // namespace

std::variant<Instance, CompositionTree> parse_document(const std::string& text) {
  return Parser(text).document();
}

Instance parse_instance(const std::string& text) {
  auto doc = parse_document(text);
  if (std::holds_alternative<CompositionTree>(doc))
    throw Error(ErrorKind::Validation,
                "document is a composition; parse it with parse_document");
  return std::get<Instance>(std::move(doc));
}

namespace {

std::string quote(const std::string& v) {
  std::string out = "\"";
  for (char c : v) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void render_constraint(const Declarations& decls, const ConstraintExpr& e,
                       bool parenthesize_or, std::string& out) {
  switch (e.kind) {
    case ConstraintExpr::Kind::True:
      out += "true";
      return;
    case ConstraintExpr::Kind::Eq:
    case ConstraintExpr::Kind::Neq:
      out += decls.params[e.param].name;
      out += e.kind == ConstraintExpr::Kind::Eq ? " = " : " != ";
      out += quote(decls.params[e.param].range[e.value]);
      return;
    case ConstraintExpr::Kind::Or: {
      if (parenthesize_or) out += '(';
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i > 0) out += " or ";
        render_constraint(decls, e.children[i], true, out);
      }
      if (parenthesize_or) out += ')';
      return;
    }
    case ConstraintExpr::Kind::And: {
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i > 0) out += " and ";
        // Nested And keeps parentheses so the n-ary structure round-trips.
        const auto& ch = e.children[i];
        bool parens = ch.kind == ConstraintExpr::Kind::Or ||
                      ch.kind == ConstraintExpr::Kind::And;
        if (parens) out += '(';
        render_constraint(decls, ch, false, out);
        if (parens) out += ')';
      }
      return;
    }
  }
}

void render_criterion(const Declarations& decls, const CriterionExpr& e,
                      bool parenthesize_union, std::string& out) {
  switch (e.kind) {
    case CriterionExpr::Kind::Eq:
    case CriterionExpr::Kind::Neq:
      out += '<';
      out += decls.params[e.param].name;
      out += e.kind == CriterionExpr::Kind::Eq ? " = " : " != ";
      out += quote(decls.params[e.param].range[e.value]);
      out += '>';
      return;
    case CriterionExpr::Kind::AnyTest:
      out += "ANY_TEST";
      return;
    case CriterionExpr::Kind::Each: {
      out += "EACH(";
      out += decls.params[e.param].name;
      out += " : ";
      for (std::size_t i = 0; i < e.values.size(); ++i) {
        if (i > 0) out += ", ";
        out += quote(decls.params[e.param].range[e.values[i]]);
      }
      out += ')';
      return;
    }
    case CriterionExpr::Kind::Exhaustive: {
      out += "EXHAUSTIVE(";
      for (std::size_t i = 0; i < e.params.size(); ++i) {
        if (i > 0) out += ", ";
        out += decls.params[e.params[i]].name;
      }
      out += ')';
      return;
    }
    case CriterionExpr::Kind::Union: {
      if (parenthesize_union) out += '(';
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i > 0) out += " ++ ";
        render_criterion(decls, e.children[i], true, out);
      }
      if (parenthesize_union) out += ')';
      return;
    }
    case CriterionExpr::Kind::Tensor: {
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i > 0) out += " ** ";
        const auto& ch = e.children[i];
        bool parens = ch.kind == CriterionExpr::Kind::Union ||
                      ch.kind == CriterionExpr::Kind::Tensor;
        if (parens) out += '(';
        render_criterion(decls, ch, false, out);
        if (parens) out += ')';
      }
      return;
    }
  }
}

}  // namespace

std::string render_instance(const Instance& inst) {
  std::string out = "declaration\n";
  for (const auto& p : inst.decls.params) {
    out += "  ";
    out += p.name;
    out += " : {";
    for (std::size_t i = 0; i < p.range.size(); ++i) {
      if (i > 0) out += ", ";
      out += quote(p.range[i]);
    }
    out += "}\n";
  }
  if (inst.constraint.kind != ConstraintExpr::Kind::True) {
    out += "constraint\n  ";
    render_constraint(inst.decls, inst.constraint, false, out);
    out += '\n';
  }
  out += "criterion\n  ";
  render_criterion(inst.decls, inst.criterion, false, out);
  out += '\n';
  return out;
}

std::size_t stripped_source_size(const std::string& text) {
  std::string canon;
  canon.reserve(text.size());
  bool in_string = false;
  bool escaped = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (in_string) {
      canon.push_back(c);
      if (escaped) escaped = false;
      else if (c == '\\') escaped = true;
      else if (c == '"') in_string = false;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      --i;  // let the newline go through the whitespace path
      continue;
    }
    if (std::isspace((unsigned char)c)) {
      if (!canon.empty() && canon.back() != ' ') canon.push_back(' ');
      continue;
    }
    if (c == '"') in_string = true;
    canon.push_back(c);
  }
  if (!canon.empty() && canon.back() == ' ') canon.pop_back();
  return canon.size();
}

}  // namespace tselect
