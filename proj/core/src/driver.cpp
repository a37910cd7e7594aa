#include "tselect/driver.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <variant>

#include "tselect/decompose.hpp"
#include "tselect/normalize.hpp"
#include "tselect/oracle.hpp"
#include "tselect/parse.hpp"

namespace tselect {

namespace {

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Budget:
    case ErrorKind::Cap:
      return kExitBudget;
    case ErrorKind::EmptyDomain:
      return kExitEmptyDomain;
    default:
      return kExitParse;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorKind::Validation, "cannot open input file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

using Clock = std::chrono::steady_clock;

void note_phase(std::ostream& progress, int verbosity, const char* name,
                Clock::time_point start) {
  if (verbosity < 1) return;
  double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  std::ostringstream line;
  line << "# phase " << name << ": " << std::fixed << std::setprecision(1) << ms
       << " ms\n";
  progress << line.str();
}

BigUint tree_bound(const CompositionTree& tree, const CompositionTree::Node& node) {
  if (node.is_leaf()) {
    const auto& leaf = tree.leaves[node.leaf];
    return criterion_upper_bound(leaf.inst.decls, leaf.inst.criterion);
  }
  BigUint l = tree_bound(tree, *node.left);
  BigUint r = tree_bound(tree, *node.right);
  return node.op == ComposeOp::AndTensor ? BigUint(l * r) : BigUint(l + r);
}

void write_result(const RunConfig& config, const Declarations& decls,
                  const std::vector<TestPoint>& points, const BigUint& bound,
                  std::size_t terms, std::ostream& progress) {
  std::ostringstream body;
  body << "# points: " << points.size() << "  bound: " << bound.get_str()
       << "  terms: " << terms << "\n";
  body << render_points(decls, points);
  if (!config.output_path) {
    progress << body.str();
    return;
  }
  const std::string& path = *config.output_path;
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::Validation, "cannot write output file " + tmp);
    out << body.str();
    out.flush();
    if (!out) throw Error(ErrorKind::Validation, "failed writing output file " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw Error(ErrorKind::Validation, "cannot move output into place at " + path);
  }
}

}  // namespace

int run(const RunConfig& config, std::ostream& progress, std::ostream& diag) {
  const char* phase = "read";
  int phase_num = 1;
  try {
    auto t = Clock::now();
    std::string text = read_file(config.input_path);
    note_phase(progress, config.verbosity, "read", t);

    phase = "parse";
    phase_num = 2;
    t = Clock::now();
    auto doc = parse_document(text);
    note_phase(progress, config.verbosity, "parse", t);

    phase = "bound";
    phase_num = 3;
    t = Clock::now();
    const bool is_tree = std::holds_alternative<CompositionTree>(doc);
    BigUint bound;
    if (is_tree) {
      const auto& tree = std::get<CompositionTree>(doc);
      bound = tree_bound(tree, *tree.root);
    } else {
      const auto& inst = std::get<Instance>(doc);
      bound = criterion_upper_bound(inst.decls, inst.criterion);
    }
    progress << "# bound: " << bound.get_str() << "\n";
    note_phase(progress, config.verbosity, "bound", t);
    if (config.bound_only) return kExitOk;

    std::vector<TestPoint> points;
    std::size_t terms = 0;
    const Declarations* decls = nullptr;

    if (is_tree) {
      const auto& tree = std::get<CompositionTree>(doc);
      decls = &tree.combined;
      phase = "solve";
      phase_num = 5;
      t = Clock::now();
      ComposedSolution sol = solve_composed(tree, config.order, config.budget);
      points = std::move(sol.points);
      terms = sol.criterion_terms;
      note_phase(progress, config.verbosity, "solve", t);
    } else {
      const auto& inst = std::get<Instance>(doc);
      decls = &inst.decls;
      bool solved = false;
      if (config.decompose) {
        phase = "normalize";
        phase_num = 4;
        CompositionTree disc = discover_decomposition(inst);
        if (!disc.single_leaf()) {
          phase = "solve";
          phase_num = 5;
          t = Clock::now();
          try {
            ComposedSolution sol = solve_composed(disc, config.order, config.budget);
            points = std::move(sol.points);
            terms = sol.criterion_terms;
            solved = true;
          } catch (const Error& e) {
            // A discovered component with an empty domain means the full
            // domain is empty, so the direct solve below answers with the
            // empty set instead of failing.
            if (e.kind() != ErrorKind::EmptyDomain) throw;
          }
          if (solved)
            note_phase(progress, config.verbosity, "solve", t);
        }
      }
      if (!solved) {
        phase = "normalize";
        phase_num = 4;
        t = Clock::now();
        NormalizedInstance ni = normalize_instance(inst, config.budget);
        terms = ni.criterion_terms;
        note_phase(progress, config.verbosity, "normalize", t);
        phase = "solve";
        phase_num = 5;
        t = Clock::now();
        points = minimal_adequate_set(ni, config.order);
        note_phase(progress, config.verbosity, "solve", t);
      }
    }

    phase = "print";
    phase_num = 6;
    t = Clock::now();
    write_result(config, *decls, points, bound, terms, progress);
    note_phase(progress, config.verbosity, "print", t);
    return kExitOk;
  } catch (const Error& e) {
    diag << "phase " << phase_num << " (" << phase << "): " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    diag << "phase " << phase_num << " (" << phase << "): " << e.what() << "\n";
    return kExitParse;
  }
}

int report_bound(const RunConfig& config, std::ostream& out, std::ostream& diag) {
  try {
    std::string text = read_file(config.input_path);
    auto doc = parse_document(text);
    BigUint bound;
    if (std::holds_alternative<CompositionTree>(doc)) {
      const auto& tree = std::get<CompositionTree>(doc);
      bound = tree_bound(tree, *tree.root);
    } else {
      const auto& inst = std::get<Instance>(doc);
      bound = criterion_upper_bound(inst.decls, inst.criterion);
    }
    out << "# bound: " << bound.get_str() << "\n";
    return kExitOk;
  } catch (const Error& e) {
    diag << "bound: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    diag << "bound: " << e.what() << "\n";
    return kExitParse;
  }
}

namespace {

Instance load_instance(const std::string& path) {
  auto doc = parse_document(read_file(path));
  if (std::holds_alternative<Instance>(doc))
    return std::move(std::get<Instance>(doc));
  return evaluate_composition(std::get<CompositionTree>(doc));
}

}  // namespace

int oracle_minimum(const std::string& instance_path, std::ostream& out,
                   std::ostream& diag) {
  try {
    Instance inst = load_instance(instance_path);
    std::vector<TestPoint> points = brute_force_minimum(inst);
    out << "# minimum: " << points.size() << "\n";
    out << render_points(inst.decls, points);
    return kExitOk;
  } catch (const Error& e) {
    diag << "oracle minimum: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    diag << "oracle minimum: " << e.what() << "\n";
    return kExitParse;
  }
}

int oracle_empty_adequate(const std::string& instance_path, std::ostream& out,
                          std::ostream& diag) {
  try {
    Instance inst = load_instance(instance_path);
    out << (empty_set_adequate(inst) ? "yes" : "no") << "\n";
    return kExitOk;
  } catch (const Error& e) {
    diag << "oracle ea: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    diag << "oracle ea: " << e.what() << "\n";
    return kExitParse;
  }
}

int oracle_check(const std::string& instance_path, const std::string& points_path,
                 std::ostream& out, std::ostream& diag) {
  try {
    Instance inst = load_instance(instance_path);
    std::vector<TestPoint> points =
        parse_points(inst.decls, read_file(points_path));
    bool adequate;
    try {
      adequate = is_adequate(inst, points);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::OutsideDomain) throw;
      // A point outside the domain disqualifies the set outright.
      adequate = false;
    }
    out << "adequate: " << (adequate ? "yes" : "no") << "\n";
    if (adequate) {
      NormalizedInstance ni = normalize_instance(inst);
      out << "minimal: " << (is_minimal(ni, points) ? "yes" : "no") << "\n";
    } else {
      out << "minimal: n/a\n";
    }
    return kExitOk;
  } catch (const Error& e) {
    diag << "oracle check: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    diag << "oracle check: " << e.what() << "\n";
    return kExitParse;
  }
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

Graph parse_edge_list(const std::string& text) {
  Graph g;
  std::set<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::uint32_t max_vertex = 0;
  bool any_vertex = false;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& msg) -> Error {
    return Error(ErrorKind::Validation,
                 "graph file line " + std::to_string(lineno) + ": " + msg);
  };
  auto parse_vertex = [&](const std::string& tok) -> std::uint32_t {
    std::size_t pos = 0;
    unsigned long v;
    try {
      v = std::stoul(tok, &pos);
    } catch (...) {
      throw fail("expected a vertex number, got \"" + tok + "\"");
    }
    if (pos != tok.size()) throw fail("expected a vertex number, got \"" + tok + "\"");
    return (std::uint32_t)v;
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks.size() == 1) {
      std::uint32_t v = parse_vertex(toks[0]);
      max_vertex = std::max(max_vertex, v);
      any_vertex = true;
      continue;
    }
    if (toks.size() != 2) throw fail("expected one or two vertex numbers");
    std::uint32_t a = parse_vertex(toks[0]);
    std::uint32_t b = parse_vertex(toks[1]);
    if (a == b) throw fail("self-loops are not allowed");
    if (a > b) std::swap(a, b);
    edges.emplace(a, b);
    max_vertex = std::max(max_vertex, b);
    any_vertex = true;
  }
  g.num_vertices = any_vertex ? max_vertex + 1 : 0;
  g.edges.assign(edges.begin(), edges.end());
  return g;
}

CnfFormula parse_dimacs(const std::string& text) {
  CnfFormula f;
  bool have_header = false;
  std::uint32_t declared_clauses = 0;
  std::uint32_t max_var = 0;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& msg) -> Error {
    return Error(ErrorKind::Validation,
                 "cnf file line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty() || toks[0] == "c") continue;
    if (toks[0] == "p") {
      if (have_header) throw fail("duplicate problem line");
      if (toks.size() != 4 || toks[1] != "cnf")
        throw fail("expected \"p cnf <variables> <clauses>\"");
      try {
        f.num_variables = (std::uint32_t)std::stoul(toks[2]);
        declared_clauses = (std::uint32_t)std::stoul(toks[3]);
      } catch (...) {
        throw fail("expected \"p cnf <variables> <clauses>\"");
      }
      have_header = true;
      continue;
    }
    std::array<std::pair<std::uint32_t, bool>, 3> clause;
    if (toks.size() != 4 || toks.back() != "0")
      throw fail("expected exactly three literals terminated by 0");
    for (int i = 0; i < 3; ++i) {
      long v;
      std::size_t pos = 0;
      try {
        v = std::stol(toks[i], &pos);
      } catch (...) {
        throw fail("expected a literal, got \"" + toks[i] + "\"");
      }
      if (pos != toks[i].size() || v == 0)
        throw fail("expected a non-zero literal, got \"" + toks[i] + "\"");
      std::uint32_t var = (std::uint32_t)(v > 0 ? v : -v) - 1;
      if (have_header && var >= f.num_variables)
        throw fail("literal " + toks[i] + " exceeds the declared variable count");
      max_var = std::max(max_var, var + 1);
      clause[i] = {var, v > 0};
    }
    f.clauses.push_back(clause);
  }
  if (!have_header)
    f.num_variables = max_var;
  else if (declared_clauses != f.clauses.size())
    throw Error(ErrorKind::Validation,
                "cnf file declares " + std::to_string(declared_clauses) +
                    " clauses but contains " + std::to_string(f.clauses.size()));
  return f;
}

}  // namespace

int oracle_from_graph(const std::string& graph_path, std::ostream& out,
                      std::ostream& diag) {
  try {
    Graph g = parse_edge_list(read_file(graph_path));
    Instance inst = graph_to_instance(g);
    out << render_instance(inst);
    return kExitOk;
  } catch (const Error& e) {
    diag << "oracle from-graph: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    diag << "oracle from-graph: " << e.what() << "\n";
    return kExitParse;
  }
}

int oracle_from_cnf(const std::string& cnf_path, bool constraint_side,
                    std::ostream& out, std::ostream& diag) {
  try {
    CnfFormula f = parse_dimacs(read_file(cnf_path));
    Instance inst =
        constraint_side ? cnf_to_constraint_instance(f) : cnf_to_criterion_instance(f);
    out << render_instance(inst);
    return kExitOk;
  } catch (const Error& e) {
    diag << "oracle from-cnf: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    diag << "oracle from-cnf: " << e.what() << "\n";
    return kExitParse;
  }
}

}  // namespace tselect
