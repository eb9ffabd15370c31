#pragma once

// Trees of complete graphs (TCGs): cliques glued at single vertices in a
// tree pattern. For two vertices x, y the separating set S(x,y) together
// with the endpoints orders uniquely into a chain; the harmonic sum of
// local conductances along that chain bounds the total conductance.

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "renorm/circuit.hpp"
#include "renorm/errors.hpp"
#include "renorm/harmonic.hpp"

namespace renorm {

class TcgStructure {
 public:
  // Explicit clique list. Validates the gluing: any two cliques share at
  // most one vertex and the clique-vertex incidence structure is a tree.
  explicit TcgStructure(std::vector<std::vector<std::string>> cliques)
      : cliques_(std::move(cliques)) {
    if (cliques_.empty()) throw StructuralError("tcg: no cliques");
    for (auto& c : cliques_) {
      std::sort(c.begin(), c.end());
      c.erase(std::unique(c.begin(), c.end()), c.end());
      if (c.size() < 2) throw StructuralError("tcg: clique with fewer than two vertices");
    }
    for (std::size_t k = 0; k < cliques_.size(); ++k)
      for (const auto& v : cliques_[k]) vertex_cliques_[v].push_back(k);
    for (std::size_t i = 0; i < cliques_.size(); ++i)
      for (std::size_t j = i + 1; j < cliques_.size(); ++j) {
        int shared = 0;
        for (const auto& v : cliques_[i])
          if (std::binary_search(cliques_[j].begin(), cliques_[j].end(), v)) ++shared;
        if (shared > 1) throw StructuralError("tcg: two cliques share more than one vertex");
      }
    // Tree condition on the clique-vertex incidence graph: connected with
    // sum |clique_k| = #cliques + #vertices - 1.
    std::size_t incidences = 0;
    for (const auto& c : cliques_) incidences += c.size();
    if (incidences != cliques_.size() + vertex_cliques_.size() - 1)
      throw StructuralError("tcg: clique gluing contains a cycle");
    if (!incidence_connected()) throw StructuralError("tcg: clique gluing is disconnected");
  }

  // Derives the structure from a graph. In a TCG every edge lies in exactly
  // one maximal clique (its block), and the greedy closure of an edge
  // recovers that block; the constructor validation then rejects any graph
  // whose clique cover fails to glue into a tree.
  static TcgStructure from_graph(const std::vector<std::string>& vertices,
                                 const std::vector<std::pair<std::string, std::string>>& edges) {
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
    const int n = static_cast<int>(vertices.size());
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    std::vector<std::pair<int, int>> edge_list;
    for (const auto& e : edges) {
      auto iu = index.find(e.first), iv = index.find(e.second);
      if (iu == index.end() || iv == index.end())
        throw StructuralError("tcg: edge endpoint not in vertex list");
      int u = iu->second, v = iv->second;
      if (u == v) throw StructuralError("tcg: self-loop");
      adj[u][v] = adj[v][u] = 1;
      edge_list.push_back({std::min(u, v), std::max(u, v)});
    }
    std::sort(edge_list.begin(), edge_list.end());
    edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());

    std::set<std::pair<int, int>> covered;
    std::vector<std::vector<std::string>> cliques;
    for (auto [u, v] : edge_list) {
      if (covered.count({u, v})) continue;
      std::vector<int> clique{u, v};
      for (int w = 0; w < n; ++w) {
        if (w == u || w == v) continue;
        bool all = true;
        for (int k : clique)
          if (!adj[w][k]) {
            all = false;
            break;
          }
        if (all) clique.push_back(w);
      }
      std::vector<std::string> named;
      for (std::size_t i = 0; i < clique.size(); ++i) {
        named.push_back(vertices[clique[i]]);
        for (std::size_t j = i + 1; j < clique.size(); ++j)
          covered.insert({std::min(clique[i], clique[j]), std::max(clique[i], clique[j])});
      }
      cliques.push_back(std::move(named));
    }
    if (cliques.empty()) throw StructuralError("tcg: graph has no edges");
    // The cover always spans the edge list and stays inside it; whether the
    // cliques glue into a tree is for the constructor to decide.
    return TcgStructure(std::move(cliques));
  }

  const std::vector<std::vector<std::string>>& cliques() const { return cliques_; }

  bool has_vertex(const std::string& v) const { return vertex_cliques_.count(v) > 0; }

  std::vector<std::string> vertices() const {
    std::vector<std::string> out;
    for (const auto& [v, ks] : vertex_cliques_) out.push_back(v);
    return out;
  }

  // The chain (x = x0, x1, ..., xd = y): x, the separating set S(x,y) in
  // separation order, then y. Consecutive members share a clique.
  std::vector<std::string> chain(const std::string& x, const std::string& y) const {
    if (x == y) throw std::domain_error("tcg chain: endpoints coincide");
    if (!has_vertex(x) || !has_vertex(y)) throw std::domain_error("tcg chain: unknown vertex");
    // BFS in the clique-vertex incidence tree from vertex-node x to y; the
    // vertex-nodes along the unique tree path are exactly the chain.
    std::vector<std::string> vlist;
    std::map<std::string, int> vid;
    for (const auto& [v, ks] : vertex_cliques_) {
      vid[v] = static_cast<int>(vlist.size());
      vlist.push_back(v);
    }
    const int V = static_cast<int>(vlist.size());
    const int C = static_cast<int>(cliques_.size());
    std::vector<std::vector<int>> adj(V + C);
    for (int k = 0; k < C; ++k)
      for (const auto& v : cliques_[k]) {
        adj[vid[v]].push_back(V + k);
        adj[V + k].push_back(vid[v]);
      }
    std::vector<int> prev(V + C, -2);
    std::deque<int> queue{vid.at(x)};
    prev[vid.at(x)] = -1;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : adj[u])
        if (prev[w] == -2) {
          prev[w] = u;
          queue.push_back(w);
        }
    }
    std::vector<std::string> result;
    for (int u = vid.at(y); u != -1; u = prev[u])
      if (u < V) result.push_back(vlist[u]);
    std::reverse(result.begin(), result.end());
    return result;
  }

 private:
  bool incidence_connected() const {
    std::set<std::size_t> seen_cliques{0};
    std::set<std::string> seen_vertices;
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
      std::size_t k = queue.front();
      queue.pop_front();
      for (const auto& v : cliques_[k]) {
        if (!seen_vertices.insert(v).second) continue;
        for (std::size_t k2 : vertex_cliques_.at(v))
          if (seen_cliques.insert(k2).second) queue.push_back(k2);
      }
    }
    return seen_cliques.size() == cliques_.size();
  }

  std::vector<std::vector<std::string>> cliques_;
  std::map<std::string, std::vector<std::size_t>> vertex_cliques_;
};

inline std::vector<std::string> tcg_chain(const TcgStructure& s, const std::string& x,
                                          const std::string& y) {
  return s.chain(x, y);
}

// The circuit's graph must realize the clique structure exactly: every edge
// inside some clique, every clique pair an actual edge.
inline void check_tcg_matches(const Circuit& c, const TcgStructure& s) {
  std::set<std::pair<std::string, std::string>> clique_pairs;
  std::set<std::string> clique_vertices;
  for (const auto& clique : s.cliques()) {
    for (const auto& v : clique) clique_vertices.insert(v);
    for (std::size_t i = 0; i < clique.size(); ++i)
      for (std::size_t j = i + 1; j < clique.size(); ++j)
        clique_pairs.insert({std::min(clique[i], clique[j]), std::max(clique[i], clique[j])});
  }
  if (clique_vertices.size() != static_cast<std::size_t>(c.size()))
    throw StructuralError("tcg: structure vertex set differs from circuit vertex set");
  for (const auto& v : clique_vertices)
    if (c.vertex(v) < 0) throw StructuralError("tcg: structure vertex not in circuit");
  std::set<std::pair<std::string, std::string>> circuit_pairs;
  for (const auto& e : c.edges()) {
    std::string a = c.id(e.u), b = c.id(e.v);
    if (a > b) std::swap(a, b);
    circuit_pairs.insert({a, b});
  }
  if (circuit_pairs != clique_pairs)
    throw StructuralError("tcg: circuit edges do not realize the clique structure");
}

struct TcgBoundResult {
  std::vector<std::string> chain;                // x0 ... xd
  std::vector<double> chain_local_conductances;  // W|x1 ... W|xd
  double bound = 0.0;       // hsum over i = 1..d (pole b included, pole a not)
  double max_over_d = 0.0;  // max_x W|x / d
};

// Harmonic chain bound for a circuit on a TCG:
//   W <= hsum_{i=1..d} W|x_i <= max_x W|x / d.
inline TcgBoundResult tcg_bound(const Circuit& c, const TcgStructure& s) {
  check_tcg_matches(c, s);
  TcgBoundResult r;
  r.chain = s.chain(c.battery_a(), c.battery_b());
  for (std::size_t i = 1; i < r.chain.size(); ++i)
    r.chain_local_conductances.push_back(c.local_conductance(r.chain[i]));
  r.bound = hsum(r.chain_local_conductances);
  double max_local = 0.0;
  for (int v = 0; v < c.size(); ++v) max_local = std::max(max_local, c.local_conductance(v));
  r.max_over_d = max_local / static_cast<double>(r.chain.size() - 1);
  return r;
}

}  // namespace renorm
