#pragma once

#include <string>
#include <vector>

#include "perm_group.hpp"

namespace cmtype {

// nodes are all subgroups ordered by (order, element codes); edges are the
// covering containments (maximal-subgroup relations) pointing upward
struct SubgroupLattice {
  std::vector<PermGroup> nodes;
  std::vector<std::pair<int, int>> edges;  // (subgroup, immediate overgroup)
  std::vector<int> conj_class;

  int bottom() const { return 0; }
  int top() const { return (int)nodes.size() - 1; }

  bool has_edge(int i, int j) const {
    for (const auto& [a, b] : edges)
      if (a == i && b == j) return true;
    return false;
  }

  int find_node(const PermGroup& K) const {
    for (size_t i = 0; i < nodes.size(); ++i)
      if (nodes[i].same_elements(K)) return (int)i;
    return -1;
  }

  std::string to_dot() const {
    std::string out = "digraph subgroup_lattice {\n  rankdir=BT;\n";
    for (size_t i = 0; i < nodes.size(); ++i)
      out += "  n" + std::to_string(i) + " [label=\"#" + std::to_string(i) + " order " +
             std::to_string(nodes[i].order()) + " cls " + std::to_string(conj_class[i]) +
             "\"];\n";
    for (const auto& [a, b] : edges)
      out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
    out += "}\n";
    return out;
  }
};

inline SubgroupLattice subgroup_lattice(const PermGroup& G) {
  SubgroupLattice L;
  L.nodes = all_subgroups_cached(G);
  const int n = (int)L.nodes.size();

  L.conj_class.assign(n, -1);
  auto classes = subgroup_conjugacy_classes(G, L.nodes);
  for (size_t ci = 0; ci < classes.size(); ++ci)
    for (int i : classes[ci]) L.conj_class[i] = (int)ci;

  // bitset containment rows: below[j] = strict subgroups of node j, above[i]
  // = strict overgroups of node i
  const int words = (n + 63) / 64;
  std::vector<uint64_t> below((size_t)n * words, 0), above((size_t)n * words, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || L.nodes[i].order() == L.nodes[j].order()) continue;
      if (L.nodes[j].order() % L.nodes[i].order() != 0) continue;
      if (L.nodes[i].is_subgroup_of(L.nodes[j])) {
        below[(size_t)j * words + i / 64] |= 1ull << (i % 64);
        above[(size_t)i * words + j / 64] |= 1ull << (j % 64);
      }
    }

  // covering pair: i strictly below j with nothing strictly between
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!(below[(size_t)j * words + i / 64] >> (i % 64) & 1)) continue;
      bool covering = true;
      for (int w = 0; w < words; ++w)
        if (above[(size_t)i * words + w] & below[(size_t)j * words + w]) {
          covering = false;
          break;
        }
      if (covering) L.edges.emplace_back(i, j);
    }
  return L;
}

}  // namespace cmtype
