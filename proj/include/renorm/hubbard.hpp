#pragma once

// Combinatorial superattracting models: a cycle of disks D0..D_{p-1} (D0
// critical of local degree 2), tree edges between disks, and an
// edge-rewriting substitution describing how each edge subdivides under one
// application of the dynamics. Models are input data validated against the
// axioms; transition matrices, subdivision chains, aligned circuits and the
// entropy constants are derived from them.

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "renorm/circuit.hpp"
#include "renorm/errors.hpp"
#include "renorm/harmonic.hpp"
#include "renorm/tcg.hpp"
#include "renorm/wad.hpp"

namespace renorm {

struct DiskSpec {
  std::string id;
  int deg = 1;  // local mapping degree; exactly one disk has 2
};

struct SubstitutionEntry {
  std::vector<std::string> segment_images;  // ordered F-images of the level-1 segments
  std::vector<std::string> via;             // level-1 disks between consecutive segments
};

struct Level1Disk {
  std::string image;  // original disk the token maps onto under F
};

struct LiftTableEntry {
  int intersections = 0;             // <beta, H>
  std::vector<std::string> lifts;    // tokens of F* beta
  std::string disk;                  // disk the arc lands on
};

struct DiskedTreeModel {
  int period = 2;
  std::vector<DiskSpec> disks;  // dynamical order: F(disks[j]) = disks[(j+1) mod p]
  struct TreeEdge {
    std::string id, from, to;
  };
  std::vector<TreeEdge> edges;
  std::map<std::string, SubstitutionEntry> substitution;
  std::map<std::string, Level1Disk> level1_disks;
  std::map<std::string, LiftTableEntry> lift_table;

  int disk_index(const std::string& id) const {
    for (std::size_t i = 0; i < disks.size(); ++i)
      if (disks[i].id == id) return static_cast<int>(i);
    return -1;
  }
  int edge_index(const std::string& id) const {
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (edges[i].id == id) return static_cast<int>(i);
    return -1;
  }
};

// Wiring-level checks; anything here is malformed input rather than a
// violated model axiom.
inline void check_structure(const DiskedTreeModel& m) {
  if (m.period < 2) throw StructuralError("model: period must be >= 2");
  if (static_cast<int>(m.disks.size()) != m.period)
    throw StructuralError("model: expected one disk per period index");
  std::set<std::string> disk_ids;
  for (const auto& d : m.disks)
    if (!disk_ids.insert(d.id).second) throw StructuralError("model: duplicate disk id '" + d.id + "'");
  std::set<std::string> edge_ids;
  std::set<std::pair<std::string, std::string>> edge_pairs;
  for (const auto& e : m.edges) {
    if (!edge_ids.insert(e.id).second) throw StructuralError("model: duplicate edge id '" + e.id + "'");
    if (!disk_ids.count(e.from) || !disk_ids.count(e.to))
      throw StructuralError("model: edge '" + e.id + "' endpoint is not a disk");
    if (e.from == e.to) throw StructuralError("model: edge '" + e.id + "' is a loop");
    auto pair = std::minmax(e.from, e.to);
    if (!edge_pairs.insert({pair.first, pair.second}).second)
      throw StructuralError("model: parallel tree edges between '" + e.from + "' and '" + e.to + "'");
  }
  if (m.edges.empty()) throw StructuralError("model: no tree edges");
  for (const auto& e : m.edges) {
    auto it = m.substitution.find(e.id);
    if (it == m.substitution.end())
      throw StructuralError("model: edge '" + e.id + "' has no substitution entry");
    const auto& s = it->second;
    if (s.segment_images.empty())
      throw StructuralError("model: substitution for '" + e.id + "' has no segments");
    if (s.via.size() + 1 != s.segment_images.size())
      throw StructuralError("model: substitution for '" + e.id + "' has " +
                            std::to_string(s.segment_images.size()) + " segments but " +
                            std::to_string(s.via.size()) + " intermediate disks");
    for (const auto& img : s.segment_images)
      if (!edge_ids.count(img))
        throw StructuralError("model: substitution image '" + img + "' is not a tree edge");
    for (const auto& v : s.via) {
      auto lt = m.level1_disks.find(v);
      if (lt == m.level1_disks.end())
        throw StructuralError("model: level-1 disk '" + v + "' has no declared image");
      if (!disk_ids.count(lt->second.image))
        throw StructuralError("model: level-1 disk '" + v + "' maps to unknown disk");
      if (disk_ids.count(v))
        throw StructuralError("model: level-1 disk '" + v + "' reuses an original disk id");
    }
  }
  for (const auto& [id, sub] : m.substitution)
    if (!edge_ids.count(id))
      throw StructuralError("model: substitution entry for unknown edge '" + id + "'");
}

using IntMatrix = std::vector<std::vector<long long>>;

inline IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline IntMatrix matrix_multiply(const IntMatrix& a, const IntMatrix& b) {
  std::size_t n = a.size();
  IntMatrix out(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

inline IntMatrix matrix_power(const IntMatrix& m, int k) {
  IntMatrix out = identity_matrix(m.size());
  for (int i = 0; i < k; ++i) out = matrix_multiply(out, m);
  return out;
}

// Transition matrix of the k-th iterate, built by symbolic composition of
// the substitution words (an independent route from integer matrix powers).
inline IntMatrix transition_matrix(const DiskedTreeModel& m, int k) {
  check_structure(m);
  if (k < 0) throw ParameterError("transition_matrix: negative iterate");
  const std::size_t n = m.edges.size();
  if (k == 0) return identity_matrix(n);

  std::vector<std::vector<int>> word(n);
  for (std::size_t e = 0; e < n; ++e) {
    for (const auto& img : m.substitution.at(m.edges[e].id).segment_images)
      word[e].push_back(m.edge_index(img));
  }
  const std::size_t word_cap = std::size_t(1) << 22;
  for (int step = 1; step < k; ++step) {
    std::vector<std::vector<int>> next(n);
    for (std::size_t e = 0; e < n; ++e) {
      const auto& base = m.substitution.at(m.edges[e].id).segment_images;
      for (const auto& img : base) {
        const auto& tail = word[m.edge_index(img)];
        next[e].insert(next[e].end(), tail.begin(), tail.end());
        if (next[e].size() > word_cap)
          throw ResourceError("transition_matrix: substitution words exceed the size cap");
      }
    }
    word = std::move(next);
  }
  IntMatrix out(n, std::vector<long long>(n, 0));
  for (std::size_t e = 0; e < n; ++e)
    for (int img : word[e]) ++out[e][img];
  return out;
}

struct ValidationIssue {
  std::string axiom;
  std::string detail;
};

struct ModelValidation {
  bool valid = false;
  std::vector<ValidationIssue> issues;
  bool violated(const std::string& axiom) const {
    for (const auto& i : issues)
      if (i.axiom == axiom) return true;
    return false;
  }
};

// Axioms: the graph on disks is a tree of complete graphs; every disk has
// tree-valence at most 2; exactly one disk is critical (degree 2, others 1);
// and no edge is fixed by F^p (row sums of M^p at least 2 -- a periodic
// horizontal arc would force a row sum of 1).
inline ModelValidation validate_model(const DiskedTreeModel& m) {
  ModelValidation out;
  try {
    check_structure(m);
  } catch (const StructuralError& e) {
    out.issues.push_back({"structure", e.what()});
    return out;
  }

  std::vector<std::string> disk_ids;
  for (const auto& d : m.disks) disk_ids.push_back(d.id);
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& e : m.edges) pairs.push_back({e.from, e.to});
  try {
    TcgStructure::from_graph(disk_ids, pairs);
  } catch (const StructuralError& e) {
    out.issues.push_back({"tree-of-complete-graphs", e.what()});
  }

  std::map<std::string, int> valence;
  for (const auto& e : m.edges) {
    ++valence[e.from];
    ++valence[e.to];
  }
  for (const auto& d : m.disks)
    if (valence[d.id] > 2)
      out.issues.push_back({"valence", "disk '" + d.id + "' meets " +
                                           std::to_string(valence[d.id]) + " tree edges"});

  int critical = 0;
  for (const auto& d : m.disks) {
    if (d.deg == 2)
      ++critical;
    else if (d.deg != 1)
      out.issues.push_back({"critical-disk", "disk '" + d.id + "' has mapping degree " +
                                                 std::to_string(d.deg)});
  }
  if (critical != 1)
    out.issues.push_back(
        {"critical-disk", std::to_string(critical) + " disks of degree 2 (expected exactly one)"});

  IntMatrix mp = matrix_power(transition_matrix(m, 1), m.period);
  for (std::size_t e = 0; e < m.edges.size(); ++e) {
    long long row = 0;
    for (long long x : mp[e]) row += x;
    if (row == 1)
      out.issues.push_back({"no-periodic-horizontal-arc",
                            "edge '" + m.edges[e].id + "' returns to itself under F^p"});
  }

  out.valid = out.issues.empty();
  return out;
}

struct ExpansionRow {
  std::string edge;
  long long row_sum = 0;
  bool ok = false;
};

struct ExpansionReport {
  bool pass = false;
  std::vector<ExpansionRow> rows;
};

// Row sums of M^p are at least 2 on valid models.
inline ExpansionReport expansion_check(const DiskedTreeModel& m) {
  check_structure(m);
  IntMatrix mp = matrix_power(transition_matrix(m, 1), m.period);
  ExpansionReport out;
  out.pass = true;
  for (std::size_t e = 0; e < m.edges.size(); ++e) {
    long long row = 0;
    for (long long x : mp[e]) row += x;
    ExpansionRow r{m.edges[e].id, row, row >= 2};
    out.pass = out.pass && r.ok;
    out.rows.push_back(r);
  }
  return out;
}

constexpr int kSubdivisionDepthCap = 8;

struct LevelChainDisk {
  std::string id;
  int first_level = 0;    // level at which the disk first appears
  std::string image;      // original disk = F^l(disk)
  bool is_new = false;    // first_level > (r-1) * p
};

struct LevelChain {
  std::string edge;
  std::vector<std::string> segment_images;  // F^l-image edge per chain step
  std::vector<LevelChainDisk> disks;        // intermediate disks, one between steps
};

struct LevelData {
  int r = 0;
  int level = 0;  // r * p
  std::vector<LevelChain> chains;
};

namespace detail {

struct RawChain {
  std::vector<int> seg_image;  // edge indices
  struct Disk {
    int first_level;
    int image_disk;  // index of the original disk under the full iterate
  };
  std::vector<Disk> disks;
};

// Subdivision chains at level `level`, per edge. The recursion replaces each
// level-1 segment by the lifted chain of its image edge: lifted disks gain a
// level and keep their image; the inserted level-1 disks map under the full
// iterate to their declared image shifted along the cycle by the remaining
// iterations.
inline std::vector<RawChain> raw_chains(const DiskedTreeModel& m, int level) {
  const std::size_t n = m.edges.size();
  const int p = m.period;
  std::vector<RawChain> chain(n);
  for (std::size_t e = 0; e < n; ++e) chain[e].seg_image = {static_cast<int>(e)};
  const std::size_t cap = std::size_t(1) << 22;
  for (int lev = 1; lev <= level; ++lev) {
    std::vector<RawChain> next(n);
    for (std::size_t e = 0; e < n; ++e) {
      const auto& sub = m.substitution.at(m.edges[e].id);
      RawChain& nc = next[e];
      for (std::size_t i = 0; i < sub.segment_images.size(); ++i) {
        const RawChain& inner = chain[m.edge_index(sub.segment_images[i])];
        nc.seg_image.insert(nc.seg_image.end(), inner.seg_image.begin(), inner.seg_image.end());
        for (const auto& d : inner.disks) nc.disks.push_back({d.first_level + 1, d.image_disk});
        if (i + 1 < sub.segment_images.size()) {
          int declared = m.disk_index(m.level1_disks.at(sub.via[i]).image);
          nc.disks.push_back({1, (declared + (lev - 1)) % p});
        }
        if (nc.seg_image.size() > cap)
          throw ResourceError("subdivide: chain length exceeds the size cap");
      }
    }
    chain = std::move(next);
  }
  return chain;
}

}  // namespace detail

inline LevelData subdivide(const DiskedTreeModel& m, int r) {
  check_structure(m);
  if (r < 0) throw ParameterError("subdivide: negative depth");
  if (r > kSubdivisionDepthCap)
    throw ResourceError("subdivide: depth " + std::to_string(r) + " above cap " +
                        std::to_string(kSubdivisionDepthCap));
  const int level = r * m.period;
  auto raw = detail::raw_chains(m, level);
  LevelData out;
  out.r = r;
  out.level = level;
  const int old_cut = (r - 1) * m.period;
  for (std::size_t e = 0; e < raw.size(); ++e) {
    LevelChain lc;
    lc.edge = m.edges[e].id;
    for (int img : raw[e].seg_image) lc.segment_images.push_back(m.edges[img].id);
    for (std::size_t k = 0; k < raw[e].disks.size(); ++k) {
      const auto& d = raw[e].disks[k];
      lc.disks.push_back({lc.edge + ":" + std::to_string(level) + ":" + std::to_string(k),
                          d.first_level, m.disks[d.image_disk].id, d.first_level > old_cut});
    }
    out.chains.push_back(std::move(lc));
  }
  return out;
}

// Unplugged circuit on the graph of aligned arcs: conductance of edge e is
// Y(e). The battery is attached per query.
struct UnpluggedCircuit {
  std::vector<std::string> vertices;
  std::vector<EdgeSpec> edges;

  Circuit plug(const std::string& a, const std::string& b) const {
    return Circuit(vertices, {a, b}, edges);
  }
};

inline void require_aligned(const DiskedTreeModel& m, const WadData& y) {
  for (const auto& [arc, w] : y.weights)
    if (m.edge_index(arc) < 0)
      throw StructuralError("aligned wad: arc '" + arc + "' is not a tree edge");
}

inline UnpluggedCircuit aligned_circuit(const DiskedTreeModel& m, const Wad& y) {
  check_structure(m);
  require_aligned(m, y.data());
  UnpluggedCircuit out;
  for (const auto& d : m.disks) out.vertices.push_back(d.id);
  for (const auto& e : m.edges) {
    double w = y.weight(e.id);
    if (w > 0.0) out.edges.push_back({e.from, e.to, w});
  }
  return out;
}

// Local conductance of an aligned diagram at a disk: sum of the weights of
// the incident tree edges.
inline double aligned_local_conductance(const DiskedTreeModel& m, const WadData& y,
                                        const std::string& disk) {
  double s = 0.0;
  for (const auto& e : m.edges)
    if (e.from == disk || e.to == disk) s += y.weight(e.id);
  return s;
}

// Upper bound for the weight any diagram dominated by the level-rp pullback
// of Y can put on `edge`: the harmonic sum, over the new disks of the
// subdivision chain, of twice the local conductance of Y at the disk's image
// (the degree of the full iterate on a new disk is at most 2).
inline double yz_bound(const DiskedTreeModel& m, const Wad& y, int r, const std::string& edge) {
  check_structure(m);
  require_aligned(m, y.data());
  if (r < 1) throw ParameterError("yz_bound: depth must be >= 1");
  if (m.edge_index(edge) < 0) throw std::domain_error("yz_bound: unknown edge '" + edge + "'");
  LevelData data = subdivide(m, r);
  const LevelChain* chain = nullptr;
  for (const auto& c : data.chains)
    if (c.edge == edge) chain = &c;
  std::vector<double> terms;
  for (const auto& d : chain->disks)
    if (d.is_new) terms.push_back(2.0 * aligned_local_conductance(m, y.data(), d.image));
  if (terms.empty())
    throw StructuralError("yz_bound: chain for '" + edge +
                          "' has no new disks (the model fails the expansion axiom)");
  return hsum(terms);
}

// Conductance of the series chain obtained by substituting `edge` at level
// r*p, with each segment carrying the weight Y assigns to its image edge.
// Solved as an actual circuit; returns 0 when a segment weight vanishes.
inline double substituted_chain_conductance(const DiskedTreeModel& m, const Wad& y, int r,
                                            const std::string& edge,
                                            const SolveOptions& opt = {}) {
  check_structure(m);
  require_aligned(m, y.data());
  if (m.edge_index(edge) < 0)
    throw std::domain_error("substituted_chain_conductance: unknown edge");
  LevelData data = subdivide(m, r);
  const LevelChain* chain = nullptr;
  for (const auto& c : data.chains)
    if (c.edge == edge) chain = &c;
  for (const auto& img : chain->segment_images)
    if (y.weight(img) <= 0.0) return 0.0;
  const auto& te = m.edges[m.edge_index(edge)];
  std::vector<std::string> ids{te.from};
  for (const auto& d : chain->disks) ids.push_back(d.id);
  ids.push_back(te.to);
  std::vector<Circuit::IndexedEdge> edges;
  for (std::size_t i = 0; i < chain->segment_images.size(); ++i)
    edges.push_back({static_cast<int>(i), static_cast<int>(i + 1),
                     y.weight(chain->segment_images[i])});
  Circuit c(std::move(ids), 0, static_cast<int>(chain->segment_images.size()), std::move(edges));
  return total_conductance(c, opt);
}

struct EntropyConstants {
  double q_n = 0.0;           // minimal sequence q_0 = 0, q_{k+1} = 3p (q_k + 2)
  double q_10p = 0.0;
  double loss_factor = 3.0 / 8.0;         // constant the loss estimate actually yields
  double loss_factor_stated = 1.0 / 4.0;  // headline constant, surfaced for reference
  double threshold_m = 0.0;               // minimal M with loss_factor*M + 3p*q_{10p} <= M/2
};

inline double entropy_q(int p, int n) {
  if (p < 2) throw ParameterError("entropy_q: period must be >= 2");
  if (n < 0) throw ParameterError("entropy_q: negative index");
  long double q = 0.0L;
  for (int i = 0; i < n; ++i) q = 3.0L * p * (q + 2.0L);
  return static_cast<double>(q);
}

inline EntropyConstants entropy_constants(int p, int n) {
  EntropyConstants out;
  out.q_n = entropy_q(p, n);
  out.q_10p = entropy_q(p, 10 * p);
  out.threshold_m = 24.0 * p * out.q_10p;
  return out;
}

struct LiftTrajectoryReport {
  bool pass = false;
  std::vector<std::string> issues;
  std::vector<std::vector<std::string>> steps;  // tokens reached per depth
  std::set<std::string> periodic;               // tokens on lift cycles
  std::set<std::string> reached_perp;           // reached tokens with intersection 0
  std::set<std::string> declared_perp;          // every table token with intersection 0
  bool covers_perp = false;
};

// Iterates the vertical lift table from `beta` for `n` steps. Intersection
// numbers with the tree must be non-increasing along lifts; tokens on cycles
// must have intersection number 0 (they are the arcs missing the tree), of
// which each disk carries at most 2.
inline LiftTrajectoryReport lift_vertical(const DiskedTreeModel& m, const std::string& beta,
                                          int n) {
  check_structure(m);
  if (m.lift_table.empty()) throw DataError("lift_vertical: model has no lift table");
  auto entry = [&](const std::string& t) -> const LiftTableEntry& {
    auto it = m.lift_table.find(t);
    if (it == m.lift_table.end())
      throw DataError("lift_vertical: table is not closed under lifting (missing '" + t + "')");
    return it->second;
  };
  LiftTrajectoryReport out;
  entry(beta);
  std::set<std::string> reached{beta};
  std::vector<std::string> frontier{beta};
  out.steps.push_back(frontier);
  for (int depth = 1; depth <= n; ++depth) {
    std::set<std::string> next;
    for (const auto& t : frontier) {
      const auto& te = entry(t);
      for (const auto& u : te.lifts) {
        const auto& ue = entry(u);
        if (ue.intersections > te.intersections)
          out.issues.push_back("intersection number increases along lift " + t + " -> " + u);
        next.insert(u);
      }
    }
    frontier.assign(next.begin(), next.end());
    out.steps.push_back(frontier);
    for (const auto& t : next) reached.insert(t);
  }

  // Periodic tokens: reachable from themselves inside the reached set.
  for (const auto& t : reached) {
    std::set<std::string> seen;
    std::vector<std::string> stack(entry(t).lifts.begin(), entry(t).lifts.end());
    bool cycle = false;
    while (!stack.empty() && !cycle) {
      std::string u = stack.back();
      stack.pop_back();
      if (u == t) {
        cycle = true;
        break;
      }
      if (!seen.insert(u).second || !reached.count(u)) continue;
      for (const auto& v : entry(u).lifts) stack.push_back(v);
    }
    if (cycle) {
      out.periodic.insert(t);
      if (entry(t).intersections != 0)
        out.issues.push_back("periodic token '" + t + "' has positive intersection number " +
                             std::to_string(entry(t).intersections));
    }
  }

  std::map<std::string, int> perp_per_disk;
  for (const auto& [t, te] : m.lift_table)
    if (te.intersections == 0) {
      out.declared_perp.insert(t);
      ++perp_per_disk[te.disk];
    }
  for (const auto& [disk, count] : perp_per_disk)
    if (count > 2)
      out.issues.push_back("disk '" + disk + "' carries " + std::to_string(count) +
                           " arcs missing the tree (valence allows at most 2)");
  for (const auto& t : reached)
    if (entry(t).intersections == 0) out.reached_perp.insert(t);
  out.covers_perp = out.reached_perp == out.declared_perp;
  out.pass = out.issues.empty();
  return out;
}

// Arc system of the tree edges: ends are the disks (all proper, the outer
// boundary is the single improper end) and the arcs are the edges of the
// tree, pairwise non-crossing.
inline std::shared_ptr<const ArcSystem> tree_arc_system(const DiskedTreeModel& m) {
  check_structure(m);
  SurfaceSignature sig;
  for (const auto& d : m.disks) {
    sig.ends.push_back(d.id);
    sig.proper_ends.insert(d.id);
  }
  sig.ends.push_back("outer");
  sig.euler_char = 1 - m.period;
  std::vector<Arc> arcs;
  for (const auto& e : m.edges) arcs.push_back({e.id, {e.from, e.to}});
  return std::make_shared<ArcSystem>(std::move(sig), std::move(arcs),
                                     std::vector<std::pair<std::string, std::string>>{});
}

// Arc system for the level-1 segments: ends are the original disks (proper)
// plus the level-1 disks (improper: they surround compact pieces of the
// level-0 surface); arcs are the segments "<edge>.<i>".
inline std::shared_ptr<const ArcSystem> level1_arc_system(const DiskedTreeModel& m) {
  check_structure(m);
  SurfaceSignature sig;
  std::set<std::string> seen;
  for (const auto& d : m.disks) {
    sig.ends.push_back(d.id);
    sig.proper_ends.insert(d.id);
    seen.insert(d.id);
  }
  int n_level1 = m.period;
  for (const auto& e : m.edges)
    for (const auto& v : m.substitution.at(e.id).via)
      if (seen.insert(v).second) {
        sig.ends.push_back(v);
        ++n_level1;
      }
  sig.ends.push_back("outer");
  sig.euler_char = 1 - n_level1;
  std::vector<Arc> arcs;
  for (const auto& e : m.edges) {
    const auto& sub = m.substitution.at(e.id);
    for (std::size_t i = 0; i < sub.segment_images.size(); ++i) {
      std::string a = i == 0 ? e.from : sub.via[i - 1];
      std::string b = i + 1 == sub.segment_images.size() ? e.to : sub.via[i];
      arcs.push_back({e.id + "." + std::to_string(i), {a, b}});
    }
  }
  return std::make_shared<ArcSystem>(std::move(sig), std::move(arcs),
                                     std::vector<std::pair<std::string, std::string>>{});
}

// F*Y on the level-1 segments: each segment carries the weight Y gives its
// image edge.
inline Wad level1_pullback(const DiskedTreeModel& m, const Wad& y) {
  require_aligned(m, y.data());
  auto sys = level1_arc_system(m);
  std::map<std::string, double> w;
  for (const auto& e : m.edges) {
    const auto& sub = m.substitution.at(e.id);
    for (std::size_t i = 0; i < sub.segment_images.size(); ++i) {
      double v = y.weight(sub.segment_images[i]);
      if (v > 0.0) w[e.id + "." + std::to_string(i)] = v;
    }
  }
  return Wad(std::move(sys), std::move(w));
}

}  // namespace renorm
