#include "g2crystal/graph.hpp"

#include <deque>

namespace g2 {

namespace {

// Per-node successor by label, or -1. Fails with a message on a duplicate
// outgoing label, which no well-formed crystal graph contains.
std::optional<std::vector<std::array<NodeId, 2>>> successors(
    const CrystalGraph& g, std::string* error) {
  std::vector<std::array<NodeId, 2>> succ(g.nodes.size(), {-1, -1});
  for (const auto& e : g.edges) {
    if (e.label != 1 && e.label != 2) {
      *error = "edge label out of range";
      return std::nullopt;
    }
    NodeId& slot = succ[e.from][e.label - 1];
    if (slot != -1) {
      *error = "node " + std::to_string(e.from) +
               " has two outgoing edges with label " + std::to_string(e.label);
      return std::nullopt;
    }
    slot = e.to;
  }
  return succ;
}

}  // namespace

IsoResult isomorphic(const CrystalGraph& a, const CrystalGraph& b) {
  IsoResult res;
  if (a.nodes.size() != b.nodes.size()) {
    res.mismatch = "node counts differ: " + std::to_string(a.nodes.size()) +
                   " vs " + std::to_string(b.nodes.size());
    return res;
  }
  if (a.edges.size() != b.edges.size()) {
    res.mismatch = "edge counts differ: " + std::to_string(a.edges.size()) +
                   " vs " + std::to_string(b.edges.size());
    return res;
  }
  auto sa = successors(a, &res.mismatch);
  if (!sa) return res;
  auto sb = successors(b, &res.mismatch);
  if (!sb) return res;

  const NodeId unmapped = -1;
  std::vector<NodeId> fwd(a.nodes.size(), unmapped);
  std::vector<NodeId> bwd(b.nodes.size(), unmapped);
  std::deque<std::pair<NodeId, NodeId>> queue;

  auto pair_up = [&](NodeId x, NodeId y) -> bool {
    if (a.nodes[x].wt != b.nodes[y].wt) {
      res.mismatch = "weights differ at nodes " + std::to_string(x) + " ~ " +
                     std::to_string(y);
      return false;
    }
    fwd[x] = y;
    bwd[y] = x;
    queue.emplace_back(x, y);
    return true;
  };

  if (!pair_up(a.root, b.root)) return res;
  while (!queue.empty()) {
    auto [x, y] = queue.front();
    queue.pop_front();
    for (int label = 1; label <= 2; ++label) {
      NodeId cx = (*sa)[x][label - 1];
      NodeId cy = (*sb)[y][label - 1];
      if ((cx == -1) != (cy == -1)) {
        res.mismatch = "label " + std::to_string(label) +
                       " present on only one side at nodes " +
                       std::to_string(x) + " ~ " + std::to_string(y);
        return res;
      }
      if (cx == -1) continue;
      if (fwd[cx] != unmapped || bwd[cy] != unmapped) {
        if (fwd[cx] != cy) {
          res.mismatch = "forced matching is inconsistent at nodes " +
                         std::to_string(cx) + " ~ " + std::to_string(cy);
          return res;
        }
        continue;
      }
      if (!pair_up(cx, cy)) return res;
    }
  }
  for (NodeId x = 0; x < static_cast<NodeId>(fwd.size()); ++x) {
    if (fwd[x] == unmapped) {
      res.mismatch = "node " + std::to_string(x) +
                     " is unreachable from the root";
      return res;
    }
  }
  res.ok = true;
  res.node_map = std::move(fwd);
  return res;
}

std::map<Weight, int> weight_multiplicities(const CrystalGraph& g) {
  std::map<Weight, int> tally;
  for (const auto& node : g.nodes) ++tally[node.wt];
  return tally;
}

}  // namespace g2
