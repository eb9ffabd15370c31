#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "renorm/fuzz.hpp"
#include "renorm/random_gen.hpp"
#include "renorm/tcg.hpp"

using namespace renorm;

namespace {

// Brute-force separator set: v separates x from y iff they fall in
// different components after deleting v.
std::set<std::string> brute_separators(const Circuit& c, const std::string& x,
                                       const std::string& y) {
  std::set<std::string> out;
  for (int cand = 0; cand < c.size(); ++cand) {
    const std::string& id = c.id(cand);
    if (id == x || id == y) continue;
    std::vector<std::vector<int>> adj(c.size());
    for (const auto& e : c.edges()) {
      if (e.u == cand || e.v == cand) continue;
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
    std::vector<char> seen(c.size(), 0);
    std::vector<int> stack{c.require_vertex(x)};
    seen[stack[0]] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : adj[u])
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    if (!seen[c.require_vertex(y)]) out.insert(id);
  }
  return out;
}

std::vector<EdgeSpec> clique_edges(const std::vector<std::vector<std::string>>& cliques,
                                   double w = 1.0) {
  std::vector<EdgeSpec> edges;
  for (const auto& cl : cliques)
    for (std::size_t i = 0; i < cl.size(); ++i)
      for (std::size_t j = i + 1; j < cl.size(); ++j) edges.push_back({cl[i], cl[j], w});
  return edges;
}

}  // namespace

TEST_CASE("tcg validation") {
  CHECK_NOTHROW(TcgStructure({{"a", "b", "c"}}));
  CHECK_NOTHROW(TcgStructure({{"a", "b", "c"}, {"c", "d", "e"}}));
  // sharing an edge
  CHECK_THROWS_AS(TcgStructure({{"a", "b", "c"}, {"a", "b", "d"}}), StructuralError);
  // a cycle of three 2-cliques
  CHECK_THROWS_AS(TcgStructure({{"a", "b"}, {"b", "c"}, {"c", "a"}}), StructuralError);
  // disconnected
  CHECK_THROWS_AS(TcgStructure({{"a", "b"}, {"c", "d"}}), StructuralError);
}

TEST_CASE("from_graph recovers blocks and rejects non-TCGs") {
  TcgStructure s = TcgStructure::from_graph(
      {"a", "u", "v", "w", "b"},
      {{"a", "u"}, {"u", "v"}, {"a", "v"}, {"v", "w"}, {"w", "b"}, {"v", "b"}});
  CHECK(s.cliques().size() == 2);
  // 4-cycle is biconnected but not complete
  CHECK_THROWS_AS(
      TcgStructure::from_graph({"a", "b", "c", "d"},
                               {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}}),
      StructuralError);
}

TEST_CASE("chain through two glued triangles") {
  TcgStructure s({{"x", "p", "v"}, {"v", "q", "y"}});
  CHECK(tcg_chain(s, "x", "y") == std::vector<std::string>{"x", "v", "y"});
  CHECK(tcg_chain(s, "x", "p") == std::vector<std::string>{"x", "p"});
  CHECK_THROWS_AS(tcg_chain(s, "x", "x"), std::domain_error);
  CHECK_THROWS_AS(tcg_chain(s, "x", "zz"), std::domain_error);
}

TEST_CASE("chain through three glued cliques") {
  TcgStructure s({{"x", "a1", "v1"}, {"v1", "b1", "v2"}, {"v2", "c1", "y"}});
  CHECK(tcg_chain(s, "x", "y") == std::vector<std::string>{"x", "v1", "v2", "y"});
}

TEST_CASE("chain matches the brute-force separator set") {
  Rng rng(1234);
  for (int i = 0; i < 60; ++i) {
    RandomTcg t = random_tcg(rng);
    std::string a = t.circuit.battery_a(), b = t.circuit.battery_b();
    auto chain = t.structure.chain(a, b);
    std::set<std::string> mid(chain.begin() + 1, chain.end() - 1);
    CHECK(mid == brute_separators(t.circuit, a, b));
    CHECK(chain.front() == a);
    CHECK(chain.back() == b);
    // separation order: distance from a along the chain is its index
    for (std::size_t k = 1; k + 1 < chain.size(); ++k) {
      auto sub = t.structure.chain(a, chain[k]);
      CHECK(sub.size() == k + 1);
    }
  }
}

TEST_CASE("two unit triangles glued at v: bound 4/3 vs actual 3/4") {
  std::vector<std::vector<std::string>> cliques{{"a", "u", "v"}, {"v", "w", "b"}};
  Circuit c({"a", "u", "v", "w", "b"}, {"a", "b"}, clique_edges(cliques));
  TcgStructure s(cliques);
  TcgBoundResult r = tcg_bound(c, s);
  CHECK(r.chain == std::vector<std::string>{"a", "v", "b"});
  CHECK(r.bound == Catch::Approx(4.0 / 3.0));  // 4 (+) 2
  CHECK(total_conductance(c) == Catch::Approx(0.75).margin(1e-12));
  CHECK(r.max_over_d == Catch::Approx(2.0));  // max W|x = 4, d = 2
}

TEST_CASE("single edge: bound equals the local conductance at b") {
  Circuit c({"a", "b"}, {"a", "b"}, {{"a", "b", 7.0}});
  TcgStructure s(std::vector<std::vector<std::string>>{{"a", "b"}});
  TcgBoundResult r = tcg_bound(c, s);
  CHECK(r.bound == Catch::Approx(7.0));
  CHECK(total_conductance(c) <= r.bound + 1e-12);
}

TEST_CASE("path of k unit edges: bound 2/(k+1) vs actual 1/k") {
  for (int k : {2, 3, 5, 9}) {
    std::vector<std::string> ids;
    std::vector<EdgeSpec> edges;
    std::vector<std::vector<std::string>> cliques;
    for (int i = 0; i <= k; ++i) ids.push_back("n" + std::to_string(i));
    for (int i = 0; i < k; ++i) {
      edges.push_back({ids[i], ids[i + 1], 1.0});
      cliques.push_back({ids[i], ids[i + 1]});
    }
    Circuit c(ids, {ids.front(), ids.back()}, edges);
    TcgBoundResult r = tcg_bound(c, TcgStructure(std::move(cliques)));
    CHECK(r.bound == Catch::Approx(2.0 / (k + 1)));
    CHECK(r.bound <= 2.0 / k + 1e-12);
    CHECK(total_conductance(c) == Catch::Approx(1.0 / k).margin(1e-10));
  }
}

TEST_CASE("structure mismatch is rejected") {
  Circuit c({"a", "b", "c"}, {"a", "b"}, {{"a", "b", 1.0}, {"b", "c", 1.0}});
  CHECK_THROWS_AS(tcg_bound(c, TcgStructure({{"a", "b", "c"}})), StructuralError);
}

TEST_CASE("bound fuzz over 100 random TCGs") {
  LawResult r = tcg_bound_fuzz(0xCAB, 100, 1e-9);
  CHECK(r.worst <= 1e-9);
}
