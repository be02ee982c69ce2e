// Command line front end: enumeration, operator application, graph export,
// conversion between the realizations, and the cross-validation suite.
//
// Exit codes: 0 success, 1 verification failure or resource overflow,
// 2 malformed input.

#include <CLI11.hpp>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "g2crystal/graph.hpp"
#include "g2crystal/highest_weight.hpp"
#include "g2crystal/text.hpp"

using ojson = nlohmann::ordered_json;

namespace {

using namespace g2;

Monomial highest_mono(Weight lambda) {
  Monomial n;
  n.mul_var(1, 1, lambda.h1);
  n.mul_var(2, 0, lambda.h2);
  return n;
}

std::string coords_str(const UCoords& u) {
  std::ostringstream out;
  out << u.u20 << ',' << u.u11 << ',' << u.u21 << ',' << u.u12 << ','
      << u.u22 << ',' << u.u13;
  return out.str();
}

ojson weight_json(Weight w) { return ojson::array({w.h1, w.h2}); }

ojson graph_json(const CrystalGraph& g, std::optional<Weight> lambda,
                 const std::string& realization) {
  ojson out;
  out["lambda"] = lambda ? weight_json(*lambda) : ojson(nullptr);
  out["realization"] = realization;
  ojson nodes = ojson::array();
  for (const auto& n : g.nodes) {
    ojson node;
    node["id"] = n.id;
    node["repr"] = n.repr;
    node["weight"] = weight_json(n.wt);
    nodes.push_back(std::move(node));
  }
  out["nodes"] = std::move(nodes);
  ojson edges = ojson::array();
  for (const auto& e : g.edges) {
    ojson edge;
    edge["from"] = e.from;
    edge["to"] = e.to;
    edge["label"] = e.label;
    edges.push_back(std::move(edge));
  }
  out["edges"] = std::move(edges);
  return out;
}

void graph_dot(const CrystalGraph& g, std::ostream& out) {
  out << "digraph crystal {\n";
  for (const auto& n : g.nodes) {
    out << "  n" << n.id << " [label=\"" << n.repr << "\"];\n";
  }
  for (const auto& e : g.edges) {
    out << "  n" << e.from << " -> n" << e.to << " [label=\"i=" << e.label
        << "\"];\n";
  }
  out << "}\n";
}

int run_enumerate(Weight lambda, const std::string& realization,
                  const std::string& format) {
  const auto tuples = enumerate_n_lambda(lambda);
  const bool monomial_side = realization == "monomial";
  ojson elements = ojson::array();
  for (const UCoords& u : tuples) {
    std::string repr;
    Weight wt = u_weight(u, lambda);
    if (monomial_side) {
      repr = to_string(monomial_of_u(u, lambda));
    } else {
      repr = to_string(from_counts(u));
    }
    if (format == "lines") {
      std::cout << repr << '\t' << to_string(wt) << '\t' << coords_str(u)
                << '\n';
    } else {
      ojson item;
      item["repr"] = repr;
      item["weight"] = weight_json(wt);
      item["coords"] = ojson::array(
          {u.u20, u.u11, u.u21, u.u12, u.u22, u.u13});
      elements.push_back(std::move(item));
    }
  }
  if (format == "json") {
    ojson out;
    out["lambda"] = weight_json(lambda);
    out["realization"] = realization;
    out["count"] = tuples.size();
    out["elements"] = std::move(elements);
    std::cout << out.dump(2) << '\n';
  }
  return 0;
}

int run_graph(std::optional<Weight> lambda, const std::string& realization,
              const std::string& output, std::optional<int> max_depth,
              std::size_t max_nodes, int jobs) {
  BuildOptions opt;
  opt.max_nodes = max_nodes;
  opt.max_depth = max_depth;
  opt.jobs = jobs;

  CrystalGraph graph;
  if (realization == "binf") {
    if (!max_depth) {
      throw std::invalid_argument(
          "--max-depth is required for the infinite realization binf");
    }
    graph = build_graph<TableauBInfOps>(highest_tableau(), opt).graph;
    lambda.reset();
  } else if (realization == "monomial") {
    if (!lambda) throw std::invalid_argument("--lambda is required");
    graph = build_graph<MonomialOps>(highest_mono(*lambda), opt).graph;
  } else {  // tensor
    if (!lambda) throw std::invalid_argument("--lambda is required");
    graph =
        build_graph<TensorOps>(TensorElement(highest_tableau(), *lambda), opt)
            .graph;
  }
  if (output == "dot") {
    graph_dot(graph, std::cout);
  } else {
    std::cout << graph_json(graph, lambda, realization).dump(2) << '\n';
  }
  return 0;
}

int run_dim(Weight lambda) {
  std::cout << weyl_dim(lambda) << '\n';
  return 0;
}

std::vector<std::pair<bool, int>> parse_ops(const std::string& word) {
  std::vector<std::pair<bool, int>> ops;  // (is_lowering, index)
  std::istringstream in(word);
  std::string tok;
  while (in >> tok) {
    if (tok.size() != 2 || (tok[0] != 'f' && tok[0] != 'e') ||
        (tok[1] != '1' && tok[1] != '2')) {
      throw std::invalid_argument("operator token must be f1, f2, e1 or e2: " +
                                  tok);
    }
    ops.emplace_back(tok[0] == 'f', tok[1] - '0');
  }
  if (ops.empty()) throw std::invalid_argument("empty operator word");
  return ops;
}

// Applies the word left to right, printing each intermediate; stops at zero.
template <typename Elem, typename F, typename E, typename Repr>
int apply_word(Elem x, const std::vector<std::pair<bool, int>>& ops, F f, E e,
               Repr repr) {
  for (auto [is_f, i] : ops) {
    std::optional<Elem> next = is_f ? f(x, i) : e(x, i);
    if (!next) {
      std::cout << "0\n";
      std::cerr << (is_f ? "f" : "e") << i << " annihilates " << repr(x)
                << "; stopping\n";
      return 0;
    }
    x = std::move(*next);
    std::cout << repr(x) << '\n';
  }
  return 0;
}

int run_apply(const std::string& realization, const std::string& element,
              std::optional<Weight> lambda, const std::string& word) {
  const auto ops = parse_ops(word);
  if (realization == "monomial") {
    return apply_word(
        parse_monomial(element), ops,
        [](const Monomial& n, int i) { return lower(n, i); },
        [](const Monomial& n, int i) { return raise(n, i); },
        [](const Monomial& n) { return to_string(n); });
  }
  if (realization == "tableau") {
    return apply_word(
        parse_tableau(element), ops,
        [](const MLTableau& t, int i) {
          return std::optional<MLTableau>(lower(t, i));
        },
        [](const MLTableau& t, int i) { return raise(t, i); },
        [](const MLTableau& t) { return to_string(t); });
  }
  // tensor: the weight may ride along in the element or in --lambda
  TensorElement x = element.find('#') != std::string::npos
                        ? parse_tensor(element)
                        : [&] {
                            if (!lambda) {
                              throw std::invalid_argument(
                                  "tensor elements need '#a,b' or --lambda");
                            }
                            return TensorElement(parse_tableau(element),
                                                 *lambda);
                          }();
  return apply_word(
      std::move(x), ops,
      [](const TensorElement& t, int i) { return lower(t, i); },
      [](const TensorElement& t, int i) { return raise(t, i); },
      [](const TensorElement& t) { return to_string(t); });
}

int run_convert(Weight lambda, const std::string& from,
                const std::string& element) {
  if (from == "monomial") {
    std::cout << to_string(omega(parse_monomial(element), lambda)) << '\n';
  } else if (from == "tableau") {
    std::cout << to_string(
                     omega_inv(TensorElement(parse_tableau(element), lambda)))
              << '\n';
  } else {  // tensor
    std::cout << to_string(omega_inv(parse_tensor(element))) << '\n';
  }
  return 0;
}

struct VerifyContext {
  Weight lambda;
  BuiltCrystal<MonomialOps> gm;
  BuiltCrystal<TensorOps> gt;
};

std::optional<std::string> verify_dim(const VerifyContext& ctx) {
  const auto count = enumerate_n_lambda(ctx.lambda).size();
  const auto dim = static_cast<std::size_t>(weyl_dim(ctx.lambda));
  const auto bfs_m = ctx.gm.graph.nodes.size();
  const auto bfs_t = ctx.gt.graph.nodes.size();
  if (count != dim || bfs_m != dim || bfs_t != dim) {
    std::ostringstream out;
    out << "cardinalities disagree: enumeration " << count << ", monomial BFS "
        << bfs_m << ", tensor BFS " << bfs_t << ", dimension " << dim;
    return out.str();
  }
  return std::nullopt;
}

std::optional<std::string> verify_iso(const VerifyContext& ctx) {
  const auto iso = isomorphic(ctx.gm.graph, ctx.gt.graph);
  if (!iso.ok) return iso.mismatch;
  return std::nullopt;
}

std::optional<std::string> verify_closure(const VerifyContext& ctx) {
  const Weight lambda = ctx.lambda;
  const auto repm = closure_check(ctx.gm, [lambda](const Monomial& n) {
    return in_n_lambda(n, lambda).has_value();
  });
  if (!repm.ok()) return "monomial side: " + repm.violations.front();
  const auto rept = closure_check(ctx.gt, [](const TensorElement& x) {
    return in_t_lambda_set(x.tableau(), x.lambda());
  });
  if (!rept.ok()) return "tensor side: " + rept.violations.front();
  // The root must be the unique maximal element.
  for (std::size_t k = 0; k < ctx.gm.elements.size(); ++k) {
    const auto& n = ctx.gm.elements[k];
    const bool maximal = !raise(n, 1).has_value() && !raise(n, 2).has_value();
    if (maximal != (k == 0)) {
      return "maximal element misplaced at node " + std::to_string(k) + ": " +
             to_string(n);
    }
  }
  return std::nullopt;
}

std::optional<std::string> verify_omega(const VerifyContext& ctx) {
  for (const Monomial& n : ctx.gm.elements) {
    const TensorElement x = omega(n, ctx.lambda);
    if (!ctx.gt.index.contains(x)) {
      return "omega(" + to_string(n) + ") missing from the tensor graph";
    }
    const auto sx = stats(x);
    if (weight(n) != sx.wt) {
      return "omega changes the weight of " + to_string(n);
    }
    for (int i : {1, 2}) {
      const StringData d = string_data(n, i);
      if (d.eps != sx.eps[i - 1] || d.phi != sx.phi[i - 1]) {
        return "omega changes eps/phi of " + to_string(n);
      }
      const auto fn = lower(n, i);
      const auto fx = lower(x, i);
      if (fn.has_value() != fx.has_value()) {
        return "omega breaks f" + std::to_string(i) + " at " + to_string(n);
      }
      if (fn && omega(*fn, ctx.lambda) != *fx) {
        return "omega does not intertwine f" + std::to_string(i) + " at " +
               to_string(n);
      }
      const auto en = raise(n, i);
      const auto ex = raise(x, i);
      if (en.has_value() != ex.has_value()) {
        return "omega breaks e" + std::to_string(i) + " at " + to_string(n);
      }
      if (en && omega(*en, ctx.lambda) != *ex) {
        return "omega does not intertwine e" + std::to_string(i) + " at " +
               to_string(n);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> verify_inverse(const VerifyContext& ctx) {
  for (const Monomial& n : ctx.gm.elements) {
    if (omega_inv(omega(n, ctx.lambda)) != n) {
      return "omega_inv(omega(.)) moves " + to_string(n);
    }
  }
  for (const auto& e : ctx.gm.graph.edges) {
    if (raise(ctx.gm.elements[e.to], e.label) != ctx.gm.elements[e.from]) {
      return "raising fails to invert edge " + std::to_string(e.from) +
             " -> " + std::to_string(e.to);
    }
  }
  for (const auto& e : ctx.gt.graph.edges) {
    if (raise(ctx.gt.elements[e.to], e.label) != ctx.gt.elements[e.from]) {
      return "tensor raising fails to invert edge " + std::to_string(e.from) +
             " -> " + std::to_string(e.to);
    }
  }
  return std::nullopt;
}

int run_verify(Weight lambda, const std::string& checks_csv) {
  VerifyContext ctx{lambda,
                    build_graph<MonomialOps>(highest_mono(lambda)),
                    build_graph<TensorOps>(TensorElement(highest_tableau(),
                                                         lambda))};
  static const std::vector<
      std::pair<std::string,
                std::function<std::optional<std::string>(const VerifyContext&)>>>
      all = {{"dim", verify_dim},
             {"iso", verify_iso},
             {"closure", verify_closure},
             {"omega", verify_omega},
             {"inverse", verify_inverse}};

  std::vector<std::string> wanted;
  std::istringstream in(checks_csv);
  std::string name;
  while (std::getline(in, name, ',')) {
    if (!name.empty()) wanted.push_back(name);
  }
  int failures = 0;
  for (const auto& w : wanted) {
    auto it = std::find_if(all.begin(), all.end(),
                           [&](const auto& c) { return c.first == w; });
    if (it == all.end()) {
      throw std::invalid_argument("unknown check: " + w);
    }
    const auto problem = it->second(ctx);
    if (problem) {
      ++failures;
      std::cout << "check " << w << ": FAIL: " << *problem << '\n';
    } else {
      std::cout << "check " << w << ": ok\n";
    }
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) try {
  CLI::App app{"two realizations of the G2 highest weight crystals"};
  app.require_subcommand(1);

  std::string lambda_str, realization = "monomial", format = "lines",
              output = "dot";
  std::string element, ops_word, from, checks = "dim,iso,closure,omega,inverse";
  std::optional<int> max_depth;
  std::size_t max_nodes = 1'000'000;
  int jobs = 1;

  auto* cmd_enum = app.add_subcommand("enumerate", "list the crystal");
  cmd_enum->add_option("--lambda", lambda_str, "highest weight a,b")
      ->required();
  cmd_enum->add_option("--realization", realization)
      ->check(CLI::IsMember({"monomial", "tableau"}));
  cmd_enum->add_option("--format", format)
      ->check(CLI::IsMember({"lines", "json"}));

  auto* cmd_graph = app.add_subcommand("graph", "emit the crystal graph");
  cmd_graph->add_option("--lambda", lambda_str, "highest weight a,b");
  cmd_graph->add_option("--realization", realization)
      ->check(CLI::IsMember({"monomial", "tensor", "binf"}));
  cmd_graph->add_option("--output", output)
      ->check(CLI::IsMember({"dot", "json"}));
  cmd_graph->add_option("--max-depth", max_depth, "truncation depth");
  cmd_graph->add_option("--max-nodes", max_nodes, "node budget");
  cmd_graph->add_option("--jobs", jobs, "frontier workers")
      ->check(CLI::PositiveNumber);

  auto* cmd_apply = app.add_subcommand("apply", "apply an operator word");
  cmd_apply->add_option("--realization", realization)
      ->check(CLI::IsMember({"monomial", "tableau", "tensor"}))
      ->required();
  cmd_apply->add_option("--element", element)->required();
  cmd_apply->add_option("--lambda", lambda_str);
  cmd_apply->add_option("--ops", ops_word, "e.g. \"f1 f2 e1\"")->required();

  auto* cmd_verify = app.add_subcommand("verify", "cross-validate at lambda");
  cmd_verify->add_option("--lambda", lambda_str)->required();
  cmd_verify->add_option("--checks", checks, "subset of dim,iso,closure,omega,inverse");

  auto* cmd_dim = app.add_subcommand("dim", "module dimension");
  cmd_dim->add_option("--lambda", lambda_str)->required();

  auto* cmd_convert = app.add_subcommand("convert", "map between realizations");
  cmd_convert->add_option("--lambda", lambda_str)->required();
  cmd_convert->add_option("--from", from)
      ->check(CLI::IsMember({"monomial", "tableau", "tensor"}))
      ->required();
  cmd_convert->add_option("--element", element)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    std::optional<Weight> lambda;
    if (!lambda_str.empty()) lambda = g2::parse_weight(lambda_str);
    auto need_lambda = [&]() -> Weight {
      if (!lambda) throw std::invalid_argument("--lambda is required");
      g2::check_dominant(*lambda);
      return *lambda;
    };

    if (*cmd_enum) return run_enumerate(need_lambda(), realization, format);
    if (*cmd_graph) {
      if (lambda) g2::check_dominant(*lambda);
      return run_graph(lambda, realization, output, max_depth, max_nodes,
                       jobs);
    }
    if (*cmd_apply) {
      if (lambda) g2::check_dominant(*lambda);
      return run_apply(realization, element, lambda, ops_word);
    }
    if (*cmd_verify) return run_verify(need_lambda(), checks);
    if (*cmd_dim) return run_dim(need_lambda());
    if (*cmd_convert) return run_convert(need_lambda(), from, element);
  } catch (const g2::ParseError& e) {
    std::cerr << "parse error at position " << e.pos << ": " << e.what()
              << '\n';
    return 2;
  } catch (const g2::NodeBudgetExceeded& e) {
    std::cerr << e.what() << " (visited " << e.partial_count << " nodes)\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
} catch (...) {
  return 1;
}
