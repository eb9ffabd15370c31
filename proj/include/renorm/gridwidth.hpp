#pragma once

// Discrete extremal width on grid networks. A quadrilateral (or annulus) is
// modelled as the unit-conductance cell graph; the width of the family of
// paths joining the two marked sides equals the effective conductance of the
// circuit whose poles short the marked cells (the classical discrete
// width/resistance identity). Each marked cell couples to its pole through a
// half resistor (conductance 2), which makes the uniform m x n quad come out
// at exactly m/n.

#include <cmath>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "renorm/circuit.hpp"
#include "renorm/errors.hpp"

namespace renorm {

// m x n cells; cell (i, j) has column i in [0, m) and row j in [0, n).
// The marked sides are cell ranges [lo_begin, lo_end) on the bottom row
// (j = 0) and [hi_begin, hi_end) on the top row (j = n-1); negative end
// means the whole side. Obstacles remove cells together with their incident
// edges (vertex percolation).
struct GridQuad {
  int m = 1, n = 1;
  int lo_begin = 0, lo_end = -1;
  int hi_begin = 0, hi_end = -1;
  std::set<std::pair<int, int>> obstacles;
};

struct GridAnnulus {
  int m = 3;  // circumference cells (periodic direction)
  int n = 1;  // height cells
};

namespace detail {

inline Circuit grid_circuit(int m, int n, bool periodic, int lo0, int lo1, int hi0, int hi1,
                            const std::set<std::pair<int, int>>& obstacles) {
  auto blocked = [&](int i, int j) { return obstacles.count({i, j}) > 0; };
  std::vector<int> cell_index(static_cast<std::size_t>(m) * n, -1);
  std::vector<std::string> ids;
  ids.reserve(static_cast<std::size_t>(m) * n + 2);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < m; ++i) {
      if (blocked(i, j)) continue;
      cell_index[static_cast<std::size_t>(j) * m + i] = static_cast<int>(ids.size());
      ids.push_back(std::to_string(i) + "," + std::to_string(j));
    }
  const int pole_a = static_cast<int>(ids.size());
  ids.push_back("side:lo");
  const int pole_b = static_cast<int>(ids.size());
  ids.push_back("side:hi");
  auto at = [&](int i, int j) { return cell_index[static_cast<std::size_t>(j) * m + i]; };

  std::vector<Circuit::IndexedEdge> edges;
  edges.reserve(static_cast<std::size_t>(m) * n * 2 + (lo1 - lo0) + (hi1 - hi0));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < m; ++i) {
      int c = at(i, j);
      if (c < 0) continue;
      if (i + 1 < m && at(i + 1, j) >= 0) edges.push_back({c, at(i + 1, j), 1.0});
      if (periodic && i == m - 1 && m > 2 && at(0, j) >= 0) edges.push_back({c, at(0, j), 1.0});
      if (j + 1 < n && at(i, j + 1) >= 0) edges.push_back({c, at(i, j + 1), 1.0});
    }
  bool any_lo = false, any_hi = false;
  for (int i = lo0; i < lo1; ++i)
    if (at(i, 0) >= 0) {
      edges.push_back({at(i, 0), pole_a, 2.0});
      any_lo = true;
    }
  for (int i = hi0; i < hi1; ++i)
    if (at(i, n - 1) >= 0) {
      edges.push_back({at(i, n - 1), pole_b, 2.0});
      any_hi = true;
    }
  if (!any_lo || !any_hi)
    throw StructuralError("grid: a marked side has no remaining cells");

  // Drop cells not connected to the poles (pockets sealed off by obstacles
  // carry no current); if the poles end up in different components the
  // marked sides are disconnected.
  std::vector<std::vector<int>> adj(ids.size());
  for (const auto& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<int> comp(ids.size(), -1);
  int ncomp = 0;
  for (std::size_t s = 0; s < ids.size(); ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> stack{static_cast<int>(s)};
    comp[s] = ncomp;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x])
        if (comp[y] == -1) {
          comp[y] = ncomp;
          stack.push_back(y);
        }
    }
    ++ncomp;
  }
  if (comp[pole_a] != comp[pole_b])
    throw StructuralError("grid: obstacles disconnect the marked sides");
  const int keep = comp[pole_a];
  std::vector<int> remap(ids.size(), -1);
  std::vector<std::string> kept_ids;
  for (std::size_t v = 0; v < ids.size(); ++v)
    if (comp[v] == keep) {
      remap[v] = static_cast<int>(kept_ids.size());
      kept_ids.push_back(std::move(ids[v]));
    }
  std::vector<Circuit::IndexedEdge> kept_edges;
  kept_edges.reserve(edges.size());
  for (const auto& e : edges)
    if (remap[e.u] >= 0 && remap[e.v] >= 0) kept_edges.push_back({remap[e.u], remap[e.v], e.w});
  return Circuit(std::move(kept_ids), remap[pole_a], remap[pole_b], std::move(kept_edges));
}

}  // namespace detail

inline double grid_width(const GridQuad& q, const SolveOptions& opt = {}) {
  if (q.m < 1 || q.n < 1) throw ParameterError("grid_width: m, n must be >= 1");
  int lo1 = q.lo_end < 0 ? q.m : q.lo_end;
  int hi1 = q.hi_end < 0 ? q.m : q.hi_end;
  if (q.lo_begin < 0 || lo1 > q.m || q.lo_begin >= lo1 || q.hi_begin < 0 || hi1 > q.m ||
      q.hi_begin >= hi1)
    throw ParameterError("grid_width: marked side range out of bounds");
  Circuit c = detail::grid_circuit(q.m, q.n, false, q.lo_begin, lo1, q.hi_begin, hi1, q.obstacles);
  return total_conductance(c, opt);
}

inline double annulus_width(const GridAnnulus& a, const SolveOptions& opt = {}) {
  if (a.m < 3 || a.n < 1) throw ParameterError("annulus_width: need m >= 3, n >= 1");
  Circuit c = detail::grid_circuit(a.m, a.n, true, 0, a.m, 0, a.m, {});
  return total_conductance(c, opt);
}

// Convergence targets: a conformal a x 1 rectangle (optionally with a
// corner notch removed, which turns it into an L-shape) or a round annulus
// of modulus mu realized as a periodic grid.
struct RectangleTarget {
  double aspect = 1.0;      // a
  double notch_fx = 1.0;    // cells with i >= fx*m and j >= fy*n are removed
  double notch_fy = 1.0;    // fx, fy = 1 disables the notch
};

struct AnnulusTarget {
  double modulus = 1.0;  // mu = n / m
};

struct ConvergenceRow {
  int resolution = 0;
  double estimate = 0.0;
  double delta = 0.0;  // estimate - previous estimate (0 in the first row)
};

inline std::vector<ConvergenceRow> convergence_check(const RectangleTarget& t,
                                                     const std::vector<int>& resolutions,
                                                     const SolveOptions& opt = {}) {
  if (!std::is_sorted(resolutions.begin(), resolutions.end()))
    throw ParameterError("convergence_check: resolutions must increase");
  std::vector<ConvergenceRow> table;
  for (int r : resolutions) {
    GridQuad q;
    q.m = std::max(1, static_cast<int>(std::lround(t.aspect * r)));
    q.n = r;
    int ix = static_cast<int>(std::lround(t.notch_fx * q.m));
    int iy = static_cast<int>(std::lround(t.notch_fy * q.n));
    for (int i = ix; i < q.m; ++i)
      for (int j = iy; j < q.n; ++j) q.obstacles.insert({i, j});
    double est = grid_width(q, opt);
    double delta = table.empty() ? 0.0 : est - table.back().estimate;
    table.push_back({r, est, delta});
  }
  return table;
}

inline std::vector<ConvergenceRow> convergence_check(const AnnulusTarget& t,
                                                     const std::vector<int>& resolutions,
                                                     const SolveOptions& opt = {}) {
  if (!std::is_sorted(resolutions.begin(), resolutions.end()))
    throw ParameterError("convergence_check: resolutions must increase");
  std::vector<ConvergenceRow> table;
  for (int r : resolutions) {
    GridAnnulus a;
    a.n = r;
    a.m = std::max(3, static_cast<int>(std::lround(r / t.modulus)));
    double est = annulus_width(a, opt);
    double delta = table.empty() ? 0.0 : est - table.back().estimate;
    table.push_back({r, est, delta});
  }
  return table;
}

}  // namespace renorm
