#pragma once

// Certificate checker for the domination relation X -o Y between weighted
// arc diagrams. A certificate exhibits Y = sum_i v_i beta_i together with,
// for each group i, an ordered itinerary (alpha_ij, w_ij) arrowing beta_i
// whose weights satisfy hsum_j w_ij >= v_i and assemble inside X. Failures
// are report clauses, never exceptions.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "renorm/errors.hpp"
#include "renorm/harmonic.hpp"
#include "renorm/wad.hpp"

namespace renorm {

struct CertificateGroup {
  std::string beta;  // target arc downstairs
  double v = 0.0;
  std::vector<std::pair<std::string, double>> segments;  // ordered (alpha, w)
  bool arrow_declared = true;
  // Optional itinerary consistency data: the improper end shared by
  // consecutive segments (one entry per adjacent pair). Empty means the
  // witness is accepted as declared.
  std::vector<std::string> via;
};

struct DominationCertificate {
  std::vector<CertificateGroup> groups;
};

// Clauses:
//   a  per-arc totals of the w_ij stay within X
//   b  the v_i per beta sum exactly to Y's weights
//   c  hsum of each group's weights reaches v_i
//   d  an arrow witness is declared (and consistent, when `via` is present)
//   e  supports and certificate arc families are pairwise non-crossing
struct ClauseViolation {
  char clause = '?';
  std::string detail;
};

struct DominationReport {
  bool pass = false;
  std::vector<ClauseViolation> violations;
  bool violated(char clause) const {
    for (const auto& v : violations)
      if (v.clause == clause) return true;
    return false;
  }
};

inline DominationReport verify_domination(const WadData& X, const WadData& Y,
                                          const DominationCertificate& cert, double tol = 1e-12) {
  DominationReport report;
  auto fail = [&](char clause, std::string detail) {
    report.violations.push_back({clause, std::move(detail)});
  };

  // All arc ids must resolve in their systems (precondition).
  for (const auto& g : cert.groups) {
    Y.system->arc(g.beta);
    for (const auto& [alpha, w] : g.segments) X.system->arc(alpha);
  }
  for (const auto& [id, w] : X.weights) X.system->arc(id);
  for (const auto& [id, w] : Y.weights) Y.system->arc(id);

  // (e) non-crossing supports, including the arcs the certificate uses.
  WadData x_used = X;
  for (const auto& g : cert.groups)
    for (const auto& [alpha, w] : g.segments) x_used.weights.emplace(alpha, 0.0);
  if (auto p = find_crossing_pair(x_used))
    fail('e', "arcs '" + p->first + "' and '" + p->second + "' cross on the upstairs surface");
  WadData y_used = Y;
  for (const auto& g : cert.groups) y_used.weights.emplace(g.beta, 0.0);
  if (auto p = find_crossing_pair(y_used))
    fail('e', "arcs '" + p->first + "' and '" + p->second + "' cross on the downstairs surface");

  // (a) per-arc totals within X.
  std::map<std::string, double> demand;
  for (const auto& g : cert.groups)
    for (const auto& [alpha, w] : g.segments) {
      if (w <= 0.0) fail('a', "non-positive segment weight on '" + alpha + "'");
      demand[alpha] += w;
    }
  for (const auto& [alpha, total] : demand) {
    double have = X.weight(alpha);
    if (total > have + tol)
      fail('a', "arc '" + alpha + "': certificate uses " + std::to_string(total) +
                    " but X carries " + std::to_string(have));
  }

  // (b) the v_i per beta sum exactly to Y's weights.
  std::map<std::string, double> v_sums;
  for (const auto& g : cert.groups) {
    if (g.v <= 0.0) fail('b', "group for '" + g.beta + "' has non-positive v");
    v_sums[g.beta] += g.v;
  }
  for (const auto& [beta, total] : v_sums) {
    double want = Y.weight(beta);
    if (std::abs(total - want) > tol)
      fail('b', "arc '" + beta + "': group weights sum to " + std::to_string(total) +
                    " but Y carries " + std::to_string(want));
  }
  for (const auto& [beta, want] : Y.weights)
    if (!v_sums.count(beta))
      fail('b', "arc '" + beta + "' of Y is not covered by any group");

  // (c) harmonic sums reach the v_i.
  for (const auto& g : cert.groups) {
    if (g.segments.empty()) {
      fail('c', "group for '" + g.beta + "' has no segments");
      continue;
    }
    std::vector<double> ws;
    for (const auto& [alpha, w] : g.segments) ws.push_back(std::max(w, 0.0));
    double h = hsum(ws);
    if (h < g.v - tol)
      fail('c', "group for '" + g.beta + "': hsum " + std::to_string(h) + " < v " +
                    std::to_string(g.v));
  }

  // (d) arrow witnesses.
  for (const auto& g : cert.groups) {
    if (!g.arrow_declared) {
      fail('d', "group for '" + g.beta + "' has no arrow witness");
      continue;
    }
    if (g.via.empty()) continue;  // accepted as declared
    if (g.via.size() + 1 != g.segments.size()) {
      fail('d', "group for '" + g.beta + "': itinerary has " + std::to_string(g.segments.size()) +
                    " segments but " + std::to_string(g.via.size()) + " connecting components");
      continue;
    }
    for (std::size_t k = 0; k + 1 < g.segments.size(); ++k) {
      const Arc& a = X.system->arc(g.segments[k].first);
      const Arc& b = X.system->arc(g.segments[k + 1].first);
      const std::string& join = g.via[k];
      auto touches = [&](const Arc& arc) { return arc.ends[0] == join || arc.ends[1] == join; };
      if (!touches(a) || !touches(b))
        fail('d', "group for '" + g.beta + "': consecutive segments do not meet at '" + join + "'");
      else if (X.system->is_proper_end(join))
        fail('d', "group for '" + g.beta + "': connecting end '" + join +
                      "' is proper, so the itinerary could not pass through it");
    }
  }

  report.pass = report.violations.empty();
  return report;
}

inline DominationReport verify_domination(const Wad& X, const Wad& Y,
                                          const DominationCertificate& cert, double tol = 1e-12) {
  return verify_domination(X.data(), Y.data(), cert, tol);
}

struct StripBufferResult {
  Wad y_prime;
  DominationCertificate cert;
};

// Given a certificate for X + B -o Y, produces Y' = Y - ||B||_1 together
// with a certificate for X -o Y'. Each group's weights are split between an
// X part and a B part in proportion to the per-arc totals, the group target
// drops by the group's B mass, and the remaining targets are rescaled per
// beta so they sum exactly to Y'.
inline StripBufferResult strip_buffer(const Wad& X, const Wad& B, const Wad& Y,
                                      const DominationCertificate& cert, double tol = 1e-12) {
  require_same_system(X, B, "strip_buffer");
  DominationReport pre = verify_domination(add(X, B), Y, cert, tol);
  if (!pre.pass) throw std::invalid_argument("strip_buffer: input certificate does not verify");

  double b_total = norm1(B);
  Wad y_prime = scalar_sub(Y, b_total);

  // Per-arc split fractions: of the demand D(alpha), x_share comes out of X
  // and the remainder out of B.
  std::map<std::string, double> demand;
  for (const auto& g : cert.groups)
    for (const auto& [alpha, w] : g.segments) demand[alpha] += w;
  std::map<std::string, double> x_fraction;
  for (const auto& [alpha, total] : demand) {
    double x_share = std::min(X.weight(alpha), total);
    x_fraction[alpha] = total > 0.0 ? x_share / total : 1.0;
  }

  // First pass: lower each v_i by the group's B mass.
  struct Interim {
    CertificateGroup group;
    double v_interim;
  };
  std::vector<Interim> interim;
  std::map<std::string, double> per_beta;
  for (const auto& g : cert.groups) {
    CertificateGroup ng = g;
    double b_mass = 0.0;
    for (auto& [alpha, w] : ng.segments) {
      double keep = w * x_fraction[alpha];
      b_mass += w - keep;
      w = keep;
    }
    double v = std::max(g.v - b_mass, 0.0);
    per_beta[g.beta] += v;
    interim.push_back({std::move(ng), v});
  }

  // Second pass: rescale per beta so group targets sum exactly to Y'.
  StripBufferResult out{y_prime, {}};
  for (auto& it : interim) {
    double target = y_prime.weight(it.group.beta);
    double have = per_beta[it.group.beta];
    if (target <= 0.0 || have <= 0.0 || it.v_interim <= 0.0) continue;  // arc consumed by the buffer
    it.group.v = it.v_interim * (target / have);
    // Drop zero-weight segments (fully attributed to B).
    auto& segs = it.group.segments;
    segs.erase(std::remove_if(segs.begin(), segs.end(),
                              [](const auto& s) { return s.second <= 0.0; }),
               segs.end());
    if (segs.empty()) continue;
    out.cert.groups.push_back(std::move(it.group));
  }

  DominationReport post = verify_domination(X, out.y_prime, out.cert, tol);
  if (!post.pass)
    throw std::logic_error("strip_buffer: produced certificate failed to verify");
  return out;
}

}  // namespace renorm
