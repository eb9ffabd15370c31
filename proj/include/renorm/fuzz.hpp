#pragma once

// Seeded law suites: each check runs `count` random instances and records
// the worst violation, so a pass means zero violations at the tolerance.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "renorm/circuit.hpp"
#include "renorm/harmonic.hpp"
#include "renorm/random_gen.hpp"
#include "renorm/tcg.hpp"

namespace renorm {

struct LawResult {
  std::string name;
  std::string law;
  double worst = 0.0;  // max violation seen (0 when the law held everywhere)
  int cases = 0;
};

namespace detail {

inline double rel_gap(double value, double reference) {
  return std::abs(value - reference) / std::max({std::abs(value), std::abs(reference), 1e-12});
}

}  // namespace detail

// Series, parallel, quotient, energy identity, local-conductance bound and
// the edge-replacement domination consequence, each over `count` seeded
// random circuits. Violations are relative.
inline std::vector<LawResult> circuit_law_fuzz(std::uint64_t seed, int count) {
  Rng rng(seed);
  LawResult series{"series-composition", "series-law", 0.0, count};
  LawResult parallel{"parallel-composition", "parallel-law", 0.0, count};
  LawResult quot{"quotient-superadditivity", "quotient-law", 0.0, count};
  LawResult ew{"energy-equals-conductance", "energy-identity", 0.0, count};
  LawResult lc{"pole-local-conductance", "local-conductance-bound", 0.0, count};
  LawResult dlc{"replacement-local-conductance", "domination-local-conductance", 0.0, count};

  for (int i = 0; i < count; ++i) {
    Circuit c1 = random_circuit(rng), c2 = random_circuit(rng);
    double w1 = total_conductance(c1), w2 = total_conductance(c2);
    double ws = total_conductance(compose(c1, c2, ComposeMode::series));
    series.worst = std::max(series.worst, detail::rel_gap(ws, hsum({w1, w2})));
    double wp = total_conductance(compose(c1, c2, ComposeMode::parallel));
    parallel.worst = std::max(parallel.worst, detail::rel_gap(wp, w1 + w2));
  }

  Rng rng_q(seed + 1);
  for (int i = 0; i < count; ++i) {
    Circuit c1 = random_circuit(rng_q), c2 = random_circuit(rng_q);
    std::vector<Circuit> parts{c1, c2};
    std::vector<std::vector<VertexRef>> classes;
    // Merge a random internal vertex of each part, when both have one.
    std::vector<std::string> int1, int2;
    for (int v = 0; v < c1.size(); ++v)
      if (v != c1.battery().first && v != c1.battery().second) int1.push_back(c1.id(v));
    for (int v = 0; v < c2.size(); ++v)
      if (v != c2.battery().first && v != c2.battery().second) int2.push_back(c2.id(v));
    if (!int1.empty() && !int2.empty()) {
      std::uniform_int_distribution<std::size_t> d1(0, int1.size() - 1), d2(0, int2.size() - 1);
      classes.push_back({{0, int1[d1(rng_q)]}, {1, int2[d2(rng_q)]}});
    }
    double wq = total_conductance(quotient(parts, classes));
    double parts_sum = total_conductance(c1) + total_conductance(c2);
    double viol = (parts_sum - wq) / std::max({std::abs(wq), std::abs(parts_sum), 1e-12});
    quot.worst = std::max(quot.worst, viol);
  }

  Rng rng_e(seed + 2);
  for (int i = 0; i < count; ++i) {
    Circuit c = random_circuit(rng_e);
    Equilibrium eq = equilibrium(c);
    double w = boundary_current(c, eq, c.battery().first);
    ew.worst = std::max(ew.worst, detail::rel_gap(energy(c, eq), w));
    double cap = std::min(c.local_conductance(c.battery().first),
                          c.local_conductance(c.battery().second));
    lc.worst = std::max(lc.worst, (w - cap) / std::max({std::abs(w), std::abs(cap), 1e-12}));
  }

  Rng rng_d(seed + 3);
  for (int i = 0; i < count; ++i) {
    Circuit c = random_circuit(rng_d);
    std::vector<EdgeReplacement> reps;
    std::uniform_real_distribution<double> boost(1.0, 4.0);
    std::bernoulli_distribution pick(0.5), mode(0.5);
    int k = 0;
    for (const auto& e : c.edges()) {
      if (!pick(rng_d)) continue;
      EdgeReplacement r;
      r.u = c.id(e.u);
      r.v = c.id(e.v);
      double target = e.w * boost(rng_d);  // replacement conductance >= original
      std::string mid = "m" + std::to_string(k++);
      if (mode(rng_d)) {
        r.interior_ids = {mid};
        r.edges = {{r.u, mid, 2.0 * target}, {mid, r.v, 2.0 * target}};
      } else {
        r.edges = {{r.u, r.v, target / 2.0}, {r.u, r.v, target / 2.0}};
      }
      reps.push_back(std::move(r));
    }
    Circuit c_prime = apply_replacements(c, reps);
    CircuitDominationReport rep = verify_dominates(c_prime, c, reps);
    double viol = rep.dominates ? 0.0 : 1.0;
    for (const auto& entry : rep.local_checks)
      viol = std::max(viol, (entry.original - entry.replaced) /
                                std::max({entry.original, entry.replaced, 1e-12}));
    dlc.worst = std::max(dlc.worst, viol);
  }

  return {series, parallel, quot, ew, lc, dlc};
}

// TCG chain bound: W <= hsum of chain local conductances <= max W|x / d.
inline LawResult tcg_bound_fuzz(std::uint64_t seed, int count, double tol) {
  Rng rng(seed);
  LawResult out{"tcg-chain-bound", "chain-bound", 0.0, count};
  for (int i = 0; i < count; ++i) {
    RandomTcg t = random_tcg(rng);
    TcgBoundResult b = tcg_bound(t.circuit, t.structure);
    double w = total_conductance(t.circuit);
    double scale = std::max({w, b.bound, b.max_over_d});
    out.worst = std::max(out.worst, (w - b.bound) / scale);
    out.worst = std::max(out.worst, (b.bound - b.max_over_d) / scale);
  }
  (void)tol;
  return out;
}

// Shift inequality: whenever hsum(x_i + b_i) >= y, hsum(x) >= max(y - sum b, 0).
inline LawResult harmonic_shift_fuzz(std::uint64_t seed, int count) {
  Rng rng(seed);
  LawResult out{"harmonic-shift", "shift-bound", 0.0, count};
  std::uniform_int_distribution<int> len(1, 6);
  std::uniform_real_distribution<double> frac(0.0, 1.0);
  for (int i = 0; i < count; ++i) {
    int n = len(rng);
    std::vector<double> xs(n), bs(n), sums(n);
    for (int j = 0; j < n; ++j) {
      xs[j] = random_weight(rng, 1e-3, 1e3);
      bs[j] = frac(rng) < 0.2 ? 0.0 : random_weight(rng, 1e-3, 1e2);
      sums[j] = xs[j] + bs[j];
    }
    double y = hsum(sums) * frac(rng);  // any y below hsum(x + b) qualifies
    double lower = shifted_lower_bound(y, bs);
    out.worst = std::max(out.worst, lower - hsum(xs));
  }
  return out;
}

// sum_i hsum_j v_ij <= hsum_j sum_i v_ij over random positive matrices.
inline LawResult interchange_fuzz(std::uint64_t seed, int count) {
  Rng rng(seed);
  LawResult out{"interchange", "interchange-inequality", 0.0, count};
  std::uniform_int_distribution<int> dim(1, 4);
  for (int i = 0; i < count; ++i) {
    int rows = dim(rng), cols = dim(rng);
    std::vector<std::vector<double>> m(rows, std::vector<double>(cols));
    for (auto& row : m)
      for (auto& x : row) x = random_weight(rng, 1e-3, 1e3);
    auto [lhs, rhs] = interchange(m);
    out.worst = std::max(out.worst, lhs - rhs);
  }
  return out;
}

}  // namespace renorm
