#include <catch2/catch_amalgamated.hpp>

#include "cmtype/lattice.hpp"
#include "cmtype/transitive.hpp"

using namespace cmtype;

static Permutation P(int n, const char* s) { return Permutation::parse_cycles(n, s); }

static void check_covering_against_bruteforce(const SubgroupLattice& L) {
  const auto& N = L.nodes;
  for (size_t i = 0; i < N.size(); ++i)
    for (size_t j = 0; j < N.size(); ++j) {
      if (i == j) continue;
      bool contained = N[i].order() < N[j].order() && N[i].is_subgroup_of(N[j]);
      bool covering = contained;
      if (contained)
        for (size_t k = 0; k < N.size() && covering; ++k) {
          if (k == i || k == j) continue;
          if (N[i].order() < N[k].order() && N[k].order() < N[j].order() &&
              N[i].is_subgroup_of(N[k]) && N[k].is_subgroup_of(N[j]))
            covering = false;
        }
      REQUIRE(L.has_edge((int)i, (int)j) == covering);
    }
}

TEST_CASE("trivial group lattice") {
  auto L = subgroup_lattice(PermGroup::trivial(4));
  REQUIRE(L.nodes.size() == 1);
  REQUIRE(L.edges.empty());
  REQUIRE(L.top() == L.bottom());
}

TEST_CASE("D4 lattice matches the 10-node figure") {
  auto D4 = PermGroup::generate({P(4, "(0 1 2 3)"), P(4, "(0 2)")}, 4);
  auto L = subgroup_lattice(D4);
  REQUIRE(L.nodes.size() == 10);
  REQUIRE(L.edges.size() == 15);
  REQUIRE(L.nodes[L.bottom()].order() == 1);
  REQUIRE(L.nodes[L.top()].order() == 8);
  check_covering_against_bruteforce(L);

  // figure spot checks: the center sits under the cyclic four and both
  // klein fours, and each order-4 node is maximal
  auto Z = PermGroup::generate({P(4, "(0 2)(1 3)")}, 4);
  auto C4 = PermGroup::generate({P(4, "(0 1 2 3)")}, 4);
  auto V4a = PermGroup::generate({P(4, "(0 2)"), P(4, "(1 3)")}, 4);
  auto V4b = PermGroup::generate({P(4, "(0 1)(2 3)"), P(4, "(0 3)(1 2)")}, 4);
  int zi = L.find_node(Z);
  REQUIRE(zi >= 0);
  for (const auto& K : {C4, V4a, V4b}) {
    int ki = L.find_node(K);
    REQUIRE(ki >= 0);
    REQUIRE(L.has_edge(zi, ki));
    REQUIRE(L.has_edge(ki, L.top()));
  }
  // the lone reflections are not under the cyclic four
  int ri = L.find_node(PermGroup::generate({P(4, "(0 2)")}, 4));
  REQUIRE(ri >= 0);
  REQUIRE_FALSE(L.has_edge(ri, L.find_node(C4)));
  REQUIRE(L.has_edge(ri, L.find_node(V4a)));
}

TEST_CASE("D6 lattice has 16 nodes and 33 covering edges") {
  const auto& D6 = reference_group("6T3");
  auto L = subgroup_lattice(D6);
  REQUIRE(L.nodes.size() == 16);
  REQUIRE(L.edges.size() == 33);
  check_covering_against_bruteforce(L);

  // order profile 1,2,3,4,6,12 -> 1,7,1,3,3,1
  std::map<long, int> profile;
  for (const auto& K : L.nodes) profile[K.order()]++;
  REQUIRE(profile == std::map<long, int>{{1, 1}, {2, 7}, {3, 1}, {4, 3}, {6, 3}, {12, 1}});

  // the rotation subgroup of order 3 lies under all three order-6 nodes
  auto C3 = PermGroup::generate({P(6, "(0 2 4)(1 3 5)")}, 6);
  int c3i = L.find_node(C3);
  REQUIRE(c3i >= 0);
  int count = 0;
  for (size_t j = 0; j < L.nodes.size(); ++j)
    if (L.nodes[j].order() == 6 && L.has_edge(c3i, (int)j)) ++count;
  REQUIRE(count == 3);
}

TEST_CASE("S4 lattice has 30 nodes; the normal V4 sits under all three D4s") {
  auto S4 = PermGroup::symmetric(4);
  auto L = subgroup_lattice(S4);
  REQUIRE(L.nodes.size() == 30);
  check_covering_against_bruteforce(L);

  auto V4n = PermGroup::generate({P(4, "(0 1)(2 3)"), P(4, "(0 2)(1 3)")}, 4);
  int vi = L.find_node(V4n);
  REQUIRE(vi >= 0);
  std::vector<int> d4s;
  for (size_t j = 0; j < L.nodes.size(); ++j)
    if (L.nodes[j].order() == 8) d4s.push_back((int)j);
  REQUIRE(d4s.size() == 3);
  for (int j : d4s) {
    REQUIRE(L.has_edge(vi, j));
    REQUIRE(L.has_edge(j, L.top()));
  }
  // V4n is also maximal in A4, and A4 in S4
  int ai = -1;
  for (size_t j = 0; j < L.nodes.size(); ++j)
    if (L.nodes[j].order() == 12) ai = (int)j;
  REQUIRE(L.has_edge(vi, ai));
  REQUIRE(L.has_edge(ai, L.top()));
  // each cyclic four is maximal exactly in its dihedral overgroup
  for (size_t j = 0; j < L.nodes.size(); ++j) {
    if (L.nodes[j].order() != 4 || !L.nodes[j].is_abelian()) continue;
    if (!L.nodes[j].has_cycle_type({4})) continue;
    int ups = 0;
    for (int k : d4s)
      if (L.has_edge((int)j, k)) ++ups;
    REQUIRE(ups == 1);
  }
}

TEST_CASE("conjugacy class ids are consistent") {
  auto S4 = PermGroup::symmetric(4);
  auto L = subgroup_lattice(S4);
  std::set<int> ids(L.conj_class.begin(), L.conj_class.end());
  REQUIRE(ids.size() == 11);
  for (size_t i = 0; i < L.nodes.size(); ++i)
    for (size_t j = 0; j < L.nodes.size(); ++j)
      if (L.conj_class[i] == L.conj_class[j])
        REQUIRE(L.nodes[i].order() == L.nodes[j].order());
}

TEST_CASE("edges form a DAG with unique top and bottom") {
  const auto& G = reference_group("6T8");
  auto L = subgroup_lattice(G);
  for (const auto& [a, b] : L.edges) REQUIRE(L.nodes[a].order() < L.nodes[b].order());
  // unique sink and source
  std::vector<int> out_deg(L.nodes.size(), 0), in_deg(L.nodes.size(), 0);
  for (const auto& [a, b] : L.edges) {
    out_deg[a]++;
    in_deg[b]++;
  }
  int sinks = 0, sources = 0;
  for (size_t i = 0; i < L.nodes.size(); ++i) {
    if (out_deg[i] == 0) ++sinks;
    if (in_deg[i] == 0) ++sources;
  }
  REQUIRE(sinks == 1);
  REQUIRE(sources == 1);
  REQUIRE(out_deg[L.top()] == 0);
  REQUIRE(in_deg[L.bottom()] == 0);
}

TEST_CASE("dot output lists every node and edge") {
  auto D4 = PermGroup::generate({P(4, "(0 1 2 3)"), P(4, "(0 2)")}, 4);
  auto L = subgroup_lattice(D4);
  auto dot = L.to_dot();
  REQUIRE(dot.find("digraph") != std::string::npos);
  for (size_t i = 0; i < L.nodes.size(); ++i)
    REQUIRE(dot.find("n" + std::to_string(i) + " ") != std::string::npos);
  REQUIRE(std::count(dot.begin(), dot.end(), '>') == (long)L.edges.size());
}
