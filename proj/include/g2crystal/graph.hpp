#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "g2crystal/highest_weight.hpp"
#include "g2crystal/text.hpp"

namespace g2 {

using NodeId = int;

struct GraphNode {
  NodeId id = 0;
  std::string repr;
  Weight wt;
};

struct GraphEdge {
  NodeId from = 0;
  NodeId to = 0;
  int label = 0;  // 1 or 2
};

// Rooted directed graph with edge labels in {1,2}. Node 0 is the root and
// ids are dense in BFS discovery order: frontier nodes expanded in id
// order, labels tried in order 1 then 2.
struct CrystalGraph {
  std::vector<GraphNode> nodes;
  std::vector<GraphEdge> edges;
  NodeId root = 0;
};

class NodeBudgetExceeded : public std::runtime_error {
 public:
  NodeBudgetExceeded(std::size_t count, std::size_t budget)
      : std::runtime_error("crystal graph exceeds the node budget of " +
                           std::to_string(budget)),
        partial_count(count) {}
  std::size_t partial_count;
};

struct BuildOptions {
  std::size_t max_nodes = 1'000'000;
  std::optional<int> max_depth;  // nodes at BFS distance <= max_depth
  int jobs = 1;                  // frontier expansion workers
};

// Operator suites: a realization plugs in here. f and e return nullopt for
// a vanishing result; elements must be totally ordered for deduplication.
struct MonomialOps {
  using Element = Monomial;
  static std::optional<Element> f(const Element& x, int i) { return lower(x, i); }
  static std::optional<Element> e(const Element& x, int i) { return raise(x, i); }
  static Weight wt(const Element& x) { return weight(x); }
  static std::string repr(const Element& x) { return to_string(x); }
};

// Infinity-crystal structure on monomials (level-floored maxima, total f).
struct MonomialBInfOps {
  using Element = Monomial;
  static std::optional<Element> f(const Element& x, int i) { return binf_lower(x, i); }
  static std::optional<Element> e(const Element& x, int i) { return binf_raise(x, i); }
  static Weight wt(const Element& x) { return weight(x); }
  static std::string repr(const Element& x) { return to_string(x); }
};

// Raw infinity crystal of marginally large tableaux (f total).
struct TableauBInfOps {
  using Element = MLTableau;
  static std::optional<Element> f(const Element& x, int i) { return lower(x, i); }
  static std::optional<Element> e(const Element& x, int i) { return raise(x, i); }
  static Weight wt(const Element& x) { return stats(x).wt; }
  static std::string repr(const Element& x) { return to_string(x); }
};

struct TensorOps {
  using Element = TensorElement;
  static std::optional<Element> f(const Element& x, int i) { return lower(x, i); }
  static std::optional<Element> e(const Element& x, int i) { return raise(x, i); }
  static Weight wt(const Element& x) { return stats(x).wt; }
  static std::string repr(const Element& x) { return to_string(x); }
};

template <typename Ops>
struct BuiltCrystal {
  CrystalGraph graph;
  std::vector<typename Ops::Element> elements;  // indexed by node id
  std::map<typename Ops::Element, NodeId> index;
};

// Breadth-first closure under f~_1, f~_2 from the root. Deterministic: the
// node numbering depends only on the crystal, not on the worker count
// (children are computed per frontier node, possibly in parallel, then
// merged in (parent id, label) order).
template <typename Ops>
BuiltCrystal<Ops> build_graph(typename Ops::Element root,
                              const BuildOptions& opt = {}) {
  using Element = typename Ops::Element;
  BuiltCrystal<Ops> out;
  out.graph.root = 0;
  out.elements.push_back(root);
  out.index.emplace(std::move(root), 0);
  out.graph.nodes.push_back({0, Ops::repr(out.elements[0]), Ops::wt(out.elements[0])});

  std::vector<NodeId> frontier{0};
  int depth = 0;
  while (!frontier.empty() && (!opt.max_depth || depth < *opt.max_depth)) {
    std::vector<std::array<std::optional<Element>, 2>> children(frontier.size());
    auto expand = [&](std::size_t begin, std::size_t end) {
      for (std::size_t k = begin; k < end; ++k) {
        const Element& parent = out.elements[frontier[k]];
        children[k][0] = Ops::f(parent, 1);
        children[k][1] = Ops::f(parent, 2);
      }
    };
    const int jobs = std::max(1, opt.jobs);
    if (jobs == 1 || frontier.size() < 2) {
      expand(0, frontier.size());
    } else {
      std::vector<std::thread> workers;
      const std::size_t chunk = (frontier.size() + jobs - 1) / jobs;
      for (std::size_t begin = 0; begin < frontier.size(); begin += chunk) {
        workers.emplace_back(expand, begin,
                             std::min(begin + chunk, frontier.size()));
      }
      for (auto& w : workers) w.join();
    }

    std::vector<NodeId> next;
    for (std::size_t k = 0; k < frontier.size(); ++k) {
      for (int label : {1, 2}) {
        auto& child = children[k][label - 1];
        if (!child) continue;
        auto it = out.index.find(*child);
        NodeId id;
        if (it != out.index.end()) {
          id = it->second;
        } else {
          if (out.elements.size() >= opt.max_nodes) {
            throw NodeBudgetExceeded(out.elements.size(), opt.max_nodes);
          }
          id = static_cast<NodeId>(out.elements.size());
          out.graph.nodes.push_back({id, Ops::repr(*child), Ops::wt(*child)});
          out.elements.push_back(*child);
          out.index.emplace(std::move(*child), id);
          next.push_back(id);
        }
        out.graph.edges.push_back({frontier[k], id, label});
      }
    }
    frontier = std::move(next);
    ++depth;
  }
  return out;
}

// Forced synchronized walk from the two roots: each node has at most one
// successor per label, so the only candidate bijection is followed and
// checked (labels present, weights equal, consistency). On success the
// node map sends ids of `a` to ids of `b`.
struct IsoResult {
  bool ok = false;
  std::vector<NodeId> node_map;
  std::string mismatch;
};
IsoResult isomorphic(const CrystalGraph& a, const CrystalGraph& b);

std::map<Weight, int> weight_multiplicities(const CrystalGraph& g);

struct ClosureReport {
  std::size_t nodes_checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Applies both operators in both directions to every node and verifies that
// each nonvanishing result satisfies `member` and is already a node.
template <typename Ops, typename Member>
ClosureReport closure_check(const BuiltCrystal<Ops>& g, Member&& member) {
  ClosureReport report;
  for (const auto& elem : g.elements) {
    ++report.nodes_checked;
    for (int i : {1, 2}) {
      const std::array<std::optional<typename Ops::Element>, 2> results = {
          Ops::f(elem, i), Ops::e(elem, i)};
      for (int dir = 0; dir < 2; ++dir) {
        const auto& r = results[dir];
        if (!r) continue;
        const char* op = dir == 0 ? "f" : "e";
        if (!member(*r)) {
          report.violations.push_back(op + std::to_string(i) + "(" +
                                      Ops::repr(elem) +
                                      ") leaves the membership set");
        } else if (!g.index.contains(*r)) {
          report.violations.push_back(op + std::to_string(i) + "(" +
                                      Ops::repr(elem) +
                                      ") is missing from the graph");
        }
      }
    }
  }
  return report;
}

}  // namespace g2
