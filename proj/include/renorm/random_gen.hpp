#pragma once

// Seeded generators for the fuzz suites: random connected circuits, random
// trees of complete graphs, random lattice sets. All draws go through
// mt19937_64 so a seed pins the whole suite.

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "renorm/circuit.hpp"
#include "renorm/dickson.hpp"
#include "renorm/tcg.hpp"

namespace renorm {

using Rng = std::mt19937_64;

inline double random_weight(Rng& rng, double lo = 1e-2, double hi = 1e2) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  return std::exp(u(rng));
}

// Connected circuit: a random spanning tree over 2..(2+extra) vertices plus
// a few extra edges, log-uniform weights.
inline Circuit random_circuit(Rng& rng, int max_internal = 6) {
  std::uniform_int_distribution<int> nd(0, max_internal);
  int n = 2 + nd(rng);
  std::vector<std::string> ids;
  for (int i = 0; i < n; ++i) ids.push_back("v" + std::to_string(i));
  std::vector<EdgeSpec> edges;
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pd(0, i - 1);
    edges.push_back({ids[pd(rng)], ids[i], random_weight(rng)});
  }
  std::uniform_int_distribution<int> extra(0, n);
  int extras = extra(rng);
  for (int k = 0; k < extras; ++k) {
    std::uniform_int_distribution<int> vd(0, n - 1);
    int u = vd(rng), v = vd(rng);
    if (u == v) continue;
    edges.push_back({ids[u], ids[v], random_weight(rng)});
  }
  return Circuit(std::move(ids), {"v0", "v1"}, edges);
}

struct RandomTcg {
  Circuit circuit;
  TcgStructure structure;
};

// Random tree of complete graphs: cliques of size 2..4 glued one at a time
// at a random vertex of the part already built; every clique pair becomes an
// edge with a random weight. The battery is a random distinct vertex pair.
inline RandomTcg random_tcg(Rng& rng, int max_cliques = 5) {
  std::uniform_int_distribution<int> kd(1, max_cliques);
  int n_cliques = kd(rng);
  std::vector<std::vector<std::string>> cliques;
  std::vector<std::string> all_vertices;
  int next_id = 0;
  auto fresh = [&] { return "t" + std::to_string(next_id++); };
  for (int k = 0; k < n_cliques; ++k) {
    std::uniform_int_distribution<int> sd(2, 4);
    int size = sd(rng);
    std::vector<std::string> clique;
    if (k > 0) {
      std::uniform_int_distribution<std::size_t> vd(0, all_vertices.size() - 1);
      clique.push_back(all_vertices[vd(rng)]);
    }
    while (static_cast<int>(clique.size()) < size) {
      clique.push_back(fresh());
      all_vertices.push_back(clique.back());
    }
    cliques.push_back(clique);
  }
  std::vector<EdgeSpec> edges;
  for (const auto& clique : cliques)
    for (std::size_t i = 0; i < clique.size(); ++i)
      for (std::size_t j = i + 1; j < clique.size(); ++j)
        edges.push_back({clique[i], clique[j], random_weight(rng)});
  std::uniform_int_distribution<std::size_t> vd(0, all_vertices.size() - 1);
  std::size_t a = vd(rng), b = vd(rng);
  while (b == a) b = vd(rng);
  Circuit c(all_vertices, {all_vertices[a], all_vertices[b]}, edges);
  return RandomTcg{std::move(c), TcgStructure(std::move(cliques))};
}

// Random subset of {0..coord_max}^dim with at most max_points elements.
inline std::vector<LatticePoint> random_lattice_set(Rng& rng, int dim = 5, int coord_max = 6,
                                                    int max_points = 40) {
  std::uniform_int_distribution<int> nd(1, max_points);
  std::uniform_int_distribution<int> cd(0, coord_max);
  int n = nd(rng);
  std::vector<LatticePoint> out;
  for (int i = 0; i < n; ++i) {
    LatticePoint p(dim);
    for (int j = 0; j < dim; ++j) p[j] = cd(rng);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace renorm
