#pragma once

// Electric circuits: finite weighted graphs with a two-vertex battery.
// Equilibrium potentials are obtained by solving the graph-Laplacian system
// restricted to internal vertices; total conductance, composition laws,
// quotients, local conductances and the edge-replacement domination check
// are built on top of that solve.

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "renorm/errors.hpp"
#include "renorm/harmonic.hpp"

namespace renorm {

struct EdgeSpec {
  std::string u, v;
  double w = 0.0;
};

// Immutable weighted graph with battery {a, b}. Vertex ids are opaque
// strings; the constructor interns them and stores edges by index.
// Parallel duplicate edges are collapsed eagerly into a single edge of
// summed weight. The underlying graph must be connected.
class Circuit {
 public:
  struct IndexedEdge {
    int u, v;
    double w;
  };

  Circuit(std::vector<std::string> vertex_ids, std::pair<std::string, std::string> battery,
          const std::vector<EdgeSpec>& edges)
      : ids_(std::move(vertex_ids)) {
    build_index();
    battery_ = {require_vertex(battery.first), require_vertex(battery.second)};
    std::vector<IndexedEdge> indexed;
    indexed.reserve(edges.size());
    for (const auto& e : edges) indexed.push_back({require_vertex(e.u), require_vertex(e.v), e.w});
    finish(std::move(indexed));
  }

  // Fast path for programmatic construction (grids, chains): edges refer to
  // positions in `vertex_ids`.
  Circuit(std::vector<std::string> vertex_ids, int battery_a, int battery_b,
          std::vector<IndexedEdge> edges)
      : ids_(std::move(vertex_ids)) {
    build_index();
    if (battery_a < 0 || battery_b < 0 || battery_a >= size() || battery_b >= size())
      throw StructuralError("circuit: battery index out of range");
    battery_ = {battery_a, battery_b};
    finish(std::move(edges));
  }

  int size() const { return static_cast<int>(ids_.size()); }
  const std::vector<std::string>& vertex_ids() const { return ids_; }
  const std::string& id(int v) const { return ids_[v]; }
  std::pair<int, int> battery() const { return battery_; }
  const std::string& battery_a() const { return ids_[battery_.first]; }
  const std::string& battery_b() const { return ids_[battery_.second]; }
  const std::vector<IndexedEdge>& edges() const { return edges_; }

  int vertex(const std::string& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? -1 : it->second;
  }

  int require_vertex(const std::string& id) const {
    int v = vertex(id);
    if (v < 0) throw std::domain_error("circuit: unknown vertex '" + id + "'");
    return v;
  }

  // Sum of incident edge weights at x.
  double local_conductance(int x) const {
    if (x < 0 || x >= size()) throw std::domain_error("circuit: vertex index out of range");
    double s = 0.0;
    for (const auto& e : edges_)
      if (e.u == x || e.v == x) s += e.w;
    return s;
  }
  double local_conductance(const std::string& id) const {
    return local_conductance(require_vertex(id));
  }

 private:
  void build_index() {
    index_.reserve(ids_.size() * 2);
    for (std::size_t i = 0; i < ids_.size(); ++i) {
      if (!index_.emplace(ids_[i], static_cast<int>(i)).second)
        throw StructuralError("circuit: duplicate vertex id '" + ids_[i] + "'");
    }
  }

  void finish(std::vector<IndexedEdge> edges) {
    if (battery_.first == battery_.second)
      throw StructuralError("circuit: battery poles must be distinct");
    for (auto& e : edges) {
      if (e.u < 0 || e.v < 0 || e.u >= size() || e.v >= size())
        throw StructuralError("circuit: edge endpoint out of range");
      if (e.u == e.v) throw StructuralError("circuit: self-loop at '" + ids_[e.u] + "'");
      if (!(e.w > 0.0)) throw StructuralError("circuit: non-positive edge weight");
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end(), [](const IndexedEdge& a, const IndexedEdge& b) {
      return std::tie(a.u, a.v) < std::tie(b.u, b.v);
    });
    edges_.reserve(edges.size());
    for (const auto& e : edges) {
      if (!edges_.empty() && edges_.back().u == e.u && edges_.back().v == e.v)
        edges_.back().w += e.w;  // parallel duplicates are one resistor
      else
        edges_.push_back(e);
    }
    check_connected();
  }

  void check_connected() const {
    if (size() == 0) throw StructuralError("circuit: no vertices");
    std::vector<int> head(size(), -1), next(edges_.size() * 2, -1), to(edges_.size() * 2, -1);
    int slot = 0;
    for (const auto& e : edges_) {
      to[slot] = e.v; next[slot] = head[e.u]; head[e.u] = slot++;
      to[slot] = e.u; next[slot] = head[e.v]; head[e.v] = slot++;
    }
    std::vector<char> seen(size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int s = head[x]; s != -1; s = next[s]) {
        if (!seen[to[s]]) {
          seen[to[s]] = 1;
          ++count;
          stack.push_back(to[s]);
        }
      }
    }
    if (count != size()) throw StructuralError("circuit: underlying graph is disconnected");
  }

  std::vector<std::string> ids_;
  std::unordered_map<std::string, int> index_;
  std::pair<int, int> battery_{-1, -1};
  std::vector<IndexedEdge> edges_;
};

struct SolveOptions {
  double residual_tol = 1e-9;  // max |dI(x)| over internal x, relative to max local conductance
  int dense_limit = 2000;      // internal-vertex count above which the sparse path is used
};

// Normalized equilibrium state: U(a) = 1, U(b) = 0, current conserved at
// every internal vertex.
struct Equilibrium {
  std::vector<double> potential;  // by vertex index
  double residual = 0.0;          // max |dI(x)| over internal vertices
};

inline Equilibrium equilibrium(const Circuit& c, const SolveOptions& opt = {}) {
  const int n = c.size();
  const auto [a, b] = c.battery();
  std::vector<int> internal_of(n, -1);
  std::vector<int> internal;
  internal.reserve(n);
  for (int v = 0; v < n; ++v) {
    if (v == a || v == b) continue;
    internal_of[v] = static_cast<int>(internal.size());
    internal.push_back(v);
  }
  const int m = static_cast<int>(internal.size());
  std::vector<double> u(n, 0.0);
  u[a] = 1.0;

  if (m > 0) {
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m);
    Eigen::VectorXd x;
    if (m <= opt.dense_limit) {
      Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(m, m);
      for (const auto& e : c.edges()) {
        int iu = internal_of[e.u], iv = internal_of[e.v];
        if (iu >= 0) lap(iu, iu) += e.w;
        if (iv >= 0) lap(iv, iv) += e.w;
        if (iu >= 0 && iv >= 0) {
          lap(iu, iv) -= e.w;
          lap(iv, iu) -= e.w;
        }
        if (iu >= 0 && e.v == a) rhs[iu] += e.w;
        if (iv >= 0 && e.u == a) rhs[iv] += e.w;
      }
      Eigen::LDLT<Eigen::MatrixXd> solver(lap);
      if (solver.info() != Eigen::Success)
        throw NumericalError("equilibrium: dense factorization failed", INFINITY, opt.residual_tol);
      x = solver.solve(rhs);
    } else {
      std::vector<Eigen::Triplet<double>> trips;
      trips.reserve(c.edges().size() * 2 + m);
      std::vector<double> diag(m, 0.0);
      for (const auto& e : c.edges()) {
        int iu = internal_of[e.u], iv = internal_of[e.v];
        if (iu >= 0) diag[iu] += e.w;
        if (iv >= 0) diag[iv] += e.w;
        if (iu >= 0 && iv >= 0) {
          trips.emplace_back(iu, iv, -e.w);
          trips.emplace_back(iv, iu, -e.w);
        }
        if (iu >= 0 && e.v == a) rhs[iu] += e.w;
        if (iv >= 0 && e.u == a) rhs[iv] += e.w;
      }
      for (int i = 0; i < m; ++i) trips.emplace_back(i, i, diag[i]);
      Eigen::SparseMatrix<double> lap(m, m);
      lap.setFromTriplets(trips.begin(), trips.end());
      lap.makeCompressed();
      Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(lap);
      if (solver.info() != Eigen::Success)
        throw NumericalError("equilibrium: sparse factorization failed", INFINITY, opt.residual_tol);
      x = solver.solve(rhs);
    }
    for (int i = 0; i < m; ++i) u[internal[i]] = x[i];
  }

  // Residual check: conservation at internal vertices, scaled by the largest
  // local conductance so the tolerance is weight-independent.
  std::vector<double> dI(n, 0.0), wloc(n, 0.0);
  for (const auto& e : c.edges()) {
    double flow = e.w * (u[e.u] - u[e.v]);
    dI[e.u] += flow;
    dI[e.v] -= flow;
    wloc[e.u] += e.w;
    wloc[e.v] += e.w;
  }
  double scale = *std::max_element(wloc.begin(), wloc.end());
  double res = 0.0;
  bool finite = true;
  for (int v = 0; v < n; ++v) {
    if (!std::isfinite(u[v])) finite = false;
    if (v != a && v != b) res = std::max(res, std::abs(dI[v]));
  }
  res /= std::max(scale, 1e-300);
  if (!finite) res = INFINITY;
  if (!(res <= opt.residual_tol))
    throw NumericalError("equilibrium: residual " + std::to_string(res) +
                             " above tolerance (system likely ill-conditioned)",
                         res, opt.residual_tol);
  return Equilibrium{std::move(u), res};
}

// dI(x) = sum_{y~x} I[x,y] with I[x,y] = W(e) (U(x) - U(y)).
inline double boundary_current(const Circuit& c, const Equilibrium& eq, int x) {
  double s = 0.0;
  for (const auto& e : c.edges()) {
    if (e.u == x) s += e.w * (eq.potential[e.u] - eq.potential[e.v]);
    if (e.v == x) s += e.w * (eq.potential[e.v] - eq.potential[e.u]);
  }
  return s;
}

inline double energy(const Circuit& c, const Equilibrium& eq) {
  double s = 0.0;
  for (const auto& e : c.edges()) {
    double d = eq.potential[e.u] - eq.potential[e.v];
    s += e.w * d * d;
  }
  return s;
}

// Total conductance W = dI(a) at the normalized equilibrium.
inline double total_conductance(const Circuit& c, const SolveOptions& opt = {}) {
  Equilibrium eq = equilibrium(c, opt);
  return boundary_current(c, eq, c.battery().first);
}

enum class ComposeMode { series, parallel };

// Series: identifies b1 = a2, battery (a1, b2); total conductance obeys
// W = W1 (+) W2. Parallel: identifies a1 = a2 and b1 = b2; W = W1 + W2.
// Vertex ids are qualified with "1:" / "2:" so the input id spaces never
// collide; the merged junction keeps the circuit-1 name.
inline Circuit compose(const Circuit& c1, const Circuit& c2, ComposeMode mode) {
  auto q1 = [&](int v) { return "1:" + c1.id(v); };
  auto q2 = [&](int v) { return "2:" + c2.id(v); };
  const int a1 = c1.battery().first, b1 = c1.battery().second;
  const int a2 = c2.battery().first, b2 = c2.battery().second;

  std::vector<std::string> ids;
  std::vector<EdgeSpec> edges;
  std::string a, b;
  if (mode == ComposeMode::series) {
    // c2's initial pole collapses onto c1's terminal pole.
    auto name2 = [&](int v) { return v == a2 ? q1(b1) : q2(v); };
    for (int v = 0; v < c1.size(); ++v) ids.push_back(q1(v));
    for (int v = 0; v < c2.size(); ++v)
      if (v != a2) ids.push_back(q2(v));
    for (const auto& e : c1.edges()) edges.push_back({q1(e.u), q1(e.v), e.w});
    for (const auto& e : c2.edges()) edges.push_back({name2(e.u), name2(e.v), e.w});
    a = q1(a1);
    b = q2(b2);
  } else {
    auto name2 = [&](int v) { return v == a2 ? q1(a1) : (v == b2 ? q1(b1) : q2(v)); };
    for (int v = 0; v < c1.size(); ++v) ids.push_back(q1(v));
    for (int v = 0; v < c2.size(); ++v)
      if (v != a2 && v != b2) ids.push_back(q2(v));
    for (const auto& e : c1.edges()) edges.push_back({q1(e.u), q1(e.v), e.w});
    for (const auto& e : c2.edges()) edges.push_back({name2(e.u), name2(e.v), e.w});
    a = q1(a1);
    b = q1(b1);
  }
  return Circuit(std::move(ids), {a, b}, edges);
}

// A vertex of one of the parts, addressed as (part index, vertex id).
struct VertexRef {
  std::size_t part;
  std::string id;
};

// Quotient of a disjoint union of circuits by a vertex partition. All
// batteries are identified pairwise automatically (a_i ~ a_j, b_i ~ b_j);
// `classes` lists the additional identifications among internal vertices.
// Identifying an internal vertex with a battery vertex is rejected.
// Parallel duplicate edges collapse with summed weight (Circuit ctor).
inline Circuit quotient(const std::vector<Circuit>& parts,
                        const std::vector<std::vector<VertexRef>>& classes = {}) {
  if (parts.empty()) throw StructuralError("quotient: no parts");
  auto qualified = [&](std::size_t p, int v) {
    return "p" + std::to_string(p) + ":" + parts[p].id(v);
  };
  // union-find over qualified names
  std::unordered_map<std::string, std::string> parent;
  std::function<std::string(std::string)> find = [&](std::string x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (int v = 0; v < parts[p].size(); ++v) {
      std::string q = qualified(p, v);
      parent[q] = q;
    }
  auto unite = [&](const std::string& x, const std::string& y) {
    std::string rx = find(x), ry = find(y);
    if (rx != ry) parent[std::max(rx, ry)] = std::min(rx, ry);
  };
  for (std::size_t p = 1; p < parts.size(); ++p) {
    unite(qualified(0, parts[0].battery().first), qualified(p, parts[p].battery().first));
    unite(qualified(0, parts[0].battery().second), qualified(p, parts[p].battery().second));
  }
  for (const auto& cls : classes) {
    for (const auto& ref : cls) {
      if (ref.part >= parts.size()) throw StructuralError("quotient: part index out of range");
      int v = parts[ref.part].require_vertex(ref.id);
      auto bat = parts[ref.part].battery();
      if (v == bat.first || v == bat.second)
        throw StructuralError("quotient: identification touches a battery vertex");
    }
    for (std::size_t i = 1; i < cls.size(); ++i)
      unite(qualified(cls[0].part, parts[cls[0].part].require_vertex(cls[0].id)),
            qualified(cls[i].part, parts[cls[i].part].require_vertex(cls[i].id)));
  }
  // battery class must stay separated from internal classes
  std::string ra = find(qualified(0, parts[0].battery().first));
  std::string rb = find(qualified(0, parts[0].battery().second));
  if (ra == rb) throw StructuralError("quotient: battery poles merged");
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (int v = 0; v < parts[p].size(); ++v) {
      auto bat = parts[p].battery();
      if (v == bat.first || v == bat.second) continue;
      std::string r = find(qualified(p, v));
      if (r == ra || r == rb)
        throw StructuralError("quotient: internal vertex identified with a battery vertex");
    }

  std::vector<std::string> ids;
  std::unordered_map<std::string, bool> emitted;
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (int v = 0; v < parts[p].size(); ++v) {
      std::string r = find(qualified(p, v));
      if (!emitted[r]) {
        emitted[r] = true;
        ids.push_back(r);
      }
    }
  std::vector<EdgeSpec> edges;
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (const auto& e : parts[p].edges())
      edges.push_back({find(qualified(p, e.u)), find(qualified(p, e.v)), e.w});
  return Circuit(std::move(ids), {ra, rb}, edges);
}

// One edge replacement: edge {u, v} of the base circuit is replaced by
// `subgraph`, whose battery must be exactly (u, v); interior vertices of the
// subgraph are fresh.
struct EdgeReplacement {
  std::string u, v;
  std::vector<std::string> interior_ids;  // fresh vertices of the subgraph
  std::vector<EdgeSpec> edges;            // subgraph edges over {u, v} + interior
};

// Builds C' from C by substituting each replaced edge. Interior vertices are
// qualified per replaced edge ("u~v:x") so distinct replacements never clash.
inline Circuit apply_replacements(const Circuit& c, const std::vector<EdgeReplacement>& reps) {
  std::map<std::pair<int, int>, const EdgeReplacement*> by_edge;
  for (const auto& r : reps) {
    int u = c.require_vertex(r.u), v = c.require_vertex(r.v);
    if (u > v) std::swap(u, v);
    if (!by_edge.emplace(std::make_pair(u, v), &r).second)
      throw StructuralError("apply_replacements: edge replaced twice");
  }
  std::vector<std::string> ids = c.vertex_ids();
  std::vector<EdgeSpec> edges;
  for (const auto& e : c.edges()) {
    auto it = by_edge.find({e.u, e.v});
    if (it == by_edge.end()) {
      edges.push_back({c.id(e.u), c.id(e.v), e.w});
      continue;
    }
    const EdgeReplacement& r = *it->second;
    std::string tag = r.u + "~" + r.v + ":";
    for (const auto& x : r.interior_ids) ids.push_back(tag + x);
    auto rewrite = [&](const std::string& x) -> std::string {
      if (x == r.u || x == r.v) return x;
      return tag + x;
    };
    for (const auto& se : r.edges) edges.push_back({rewrite(se.u), rewrite(se.v), se.w});
  }
  return Circuit(std::move(ids), {c.battery_a(), c.battery_b()}, edges);
}

struct EdgeDominationEntry {
  std::string u, v;
  double w_original = 0.0;
  double w_replacement = 0.0;  // total conductance of the replacement with battery {u, v}
  bool ok = false;
};

struct LocalConductanceEntry {
  std::string vertex;
  double original = 0.0;
  double replaced = 0.0;
  bool ok = false;
};

struct CircuitDominationReport {
  bool dominates = false;
  std::vector<EdgeDominationEntry> edges;           // replaced edges only
  std::vector<LocalConductanceEntry> local_checks;  // every vertex of the base circuit
};

// Verifies C' dominated-replaces C: for every replaced edge e, the
// replacement circuit with battery at the old endpoints has total
// conductance >= W(e). On success the report also certifies the
// local-conductance consequence W'|x >= W|x at every vertex of C.
// `c_prime` must be exactly apply_replacements(c, reps); anything else is a
// structural error (replacement not attached at the edge boundary).
inline CircuitDominationReport verify_dominates(const Circuit& c_prime, const Circuit& c,
                                                const std::vector<EdgeReplacement>& reps,
                                                double tol = 1e-9, const SolveOptions& opt = {}) {
  Circuit expected = apply_replacements(c, reps);
  auto signature = [](const Circuit& x) {
    std::vector<std::tuple<std::string, std::string, double>> sig;
    for (const auto& e : x.edges()) {
      std::string a = x.id(e.u), b = x.id(e.v);
      if (a > b) std::swap(a, b);
      sig.emplace_back(a, b, e.w);
    }
    std::sort(sig.begin(), sig.end());
    return sig;
  };
  if (signature(c_prime) != signature(expected) || c_prime.battery_a() != expected.battery_a() ||
      c_prime.battery_b() != expected.battery_b())
    throw StructuralError("verify_dominates: c_prime is not c with the given replacements attached at edge boundaries");

  CircuitDominationReport report;
  report.dominates = true;
  std::map<std::pair<int, int>, double> orig_w;
  for (const auto& e : c.edges()) orig_w[{e.u, e.v}] = e.w;
  for (const auto& r : reps) {
    int u = c.require_vertex(r.u), v = c.require_vertex(r.v);
    if (u > v) std::swap(u, v);
    auto it = orig_w.find({u, v});
    if (it == orig_w.end())
      throw StructuralError("verify_dominates: replacement names a non-edge {" + r.u + "," + r.v + "}");
    std::vector<std::string> ids{r.u, r.v};
    ids.insert(ids.end(), r.interior_ids.begin(), r.interior_ids.end());
    Circuit piece(std::move(ids), {r.u, r.v}, r.edges);
    EdgeDominationEntry entry;
    entry.u = r.u;
    entry.v = r.v;
    entry.w_original = it->second;
    entry.w_replacement = total_conductance(piece, opt);
    entry.ok = entry.w_replacement >= entry.w_original - tol;
    report.dominates = report.dominates && entry.ok;
    report.edges.push_back(entry);
  }
  if (report.dominates) {
    for (int x = 0; x < c.size(); ++x) {
      LocalConductanceEntry lc;
      lc.vertex = c.id(x);
      lc.original = c.local_conductance(x);
      lc.replaced = c_prime.local_conductance(c.id(x));
      lc.ok = lc.replaced >= lc.original - tol;
      report.local_checks.push_back(lc);
    }
  }
  return report;
}

}  // namespace renorm
