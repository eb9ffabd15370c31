#pragma once

// Right-angled hexagon and pair-of-pants calculators, the short-arc diagram,
// the length pairing, and length/width/modulus conversions. Asymptotic O(1)
// statements are never asserted as equalities here; the envelope constants
// are measured over a fixed grid and stored in the fixtures manifest.

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include "renorm/gridwidth.hpp"
#include "renorm/wad.hpp"

namespace renorm {

inline constexpr double kPi = 3.14159265358979323846;

// Sides above this switch the hexagon formula to log-space evaluation.
inline constexpr double kLogSpaceSide = 30.0;

struct HexagonSpec {
  double a = 1.0, b = 1.0, c = 1.0;  // alternating side lengths
};

namespace detail {

inline double log_cosh(double t) { return t + std::log1p(std::exp(-2.0 * t)) - std::log(2.0); }
inline double log_sinh(double t) { return t + std::log1p(-std::exp(-2.0 * t)) - std::log(2.0); }

}  // namespace detail

// The side c' facing c in the right-angled hexagon with alternating sides
// a, b, c:  cosh c' = (cosh c + cosh a cosh b) / (sinh a sinh b).
// Symmetric in a and b. Evaluated through u = cosh c' - 1, which splits as
//   u = cosh c / (sinh a sinh b) + (coth a coth b - 1),
// so no cancellation occurs even when c' is tiny; sides above 30 only make
// the log-space pieces more accurate, never overflow.
inline double hexagon_side(const HexagonSpec& h) {
  if (!(h.a > 0.0) || !(h.b > 0.0) || !(h.c > 0.0))
    throw std::domain_error("hexagon_side: sides must be positive");
  if (std::max({h.a, h.b, h.c}) <= kLogSpaceSide) {
    double x = (std::cosh(h.c) + std::cosh(h.a) * std::cosh(h.b)) /
               (std::sinh(h.a) * std::sinh(h.b));
    return std::acosh(x);
  }
  double log_r = detail::log_cosh(h.c) - detail::log_sinh(h.a) - detail::log_sinh(h.b);
  if (log_r > 700.0) return log_r + std::log(2.0);  // acosh(x) -> log(2x)
  double r = std::exp(log_r);
  // coth t - 1 = 2 / (e^{2t} - 1); expm1 overflow collapses it to 0, which
  // is exact to double precision for t > 355.
  auto coth_minus_1 = [](double t) {
    double e = std::expm1(2.0 * t);
    return std::isinf(e) ? 0.0 : 2.0 / e;
  };
  double ea = coth_minus_1(h.a), eb = coth_minus_1(h.b);
  double u = r + ea + eb + ea * eb;
  if (u > 1e15) return std::log(2.0) + std::log1p(u);  // log(2x) regime
  return std::log1p(u + std::sqrt(u * (2.0 + u)));  // acosh(1 + u)
}

inline double hexagon_side(double a, double b, double c) { return hexagon_side({a, b, c}); }

// Length of the transverse geodesic joining the cuffs of lengths a and b in
// the pair of pants P(a, b, c); exact via the hexagon with sides halved.
// Principal behavior -log a - log b for small cuffs.
inline double pants_transversal(double a, double b, double c) {
  return hexagon_side(a / 2.0, b / 2.0, c / 2.0);
}

// Length of the transverse geodesic returning to the cuff of length a in
// P(a, b, b); principal behavior -2 log a.
inline double pants_self_transversal(double a, double b) {
  return hexagon_side(a / 4.0, a / 4.0, b);
}

// Thresholded -log weights on the short transverse arcs.
struct ShortArcDiagram {
  std::map<std::string, double> weights;
  double epsilon0 = 0.1;
};

inline ShortArcDiagram short_arc_diagram(const std::map<std::string, double>& lengths,
                                         double epsilon0 = 0.1) {
  if (!(epsilon0 > 0.0)) throw std::domain_error("short_arc_diagram: epsilon0 must be positive");
  ShortArcDiagram out;
  out.epsilon0 = epsilon0;
  for (const auto& [arc, len] : lengths) {
    if (!(len > 0.0)) throw std::domain_error("short_arc_diagram: non-positive length");
    if (len < epsilon0 / 2.0) out.weights[arc] = -std::log(len);
  }
  return out;
}

struct IntersectionVector {
  std::map<std::string, int> counts;

  int count(const std::string& arc) const {
    auto it = counts.find(arc);
    return it == counts.end() ? 0 : it->second;
  }
};

// <gamma, W> = sum W(alpha) <gamma, alpha>; arcs missing on either side
// contribute zero.
inline double pairing(const std::map<std::string, double>& weights, const IntersectionVector& iv) {
  double s = 0.0;
  for (const auto& [arc, w] : weights) s += w * iv.count(arc);
  return s;
}

inline double pairing(const Wad& w, const IntersectionVector& iv) {
  return pairing(w.weights(), iv);
}

inline double pairing(const ShortArcDiagram& m, const IntersectionVector& iv) {
  return pairing(m.weights, iv);
}

// Principal terms of the length estimates; each carries an O(1) error
// depending only on the topology, which is never asserted here.
inline double peripheral_length_from_short_arcs(const ShortArcDiagram& m,
                                                const IntersectionVector& iv) {
  return 2.0 * pairing(m, iv);
}

inline double peripheral_length_from_wad(const Wad& w, const IntersectionVector& iv) {
  return kPi * pairing(w, iv);
}

inline double wad_weight_from_short_arc(double m_weight) { return (2.0 / kPi) * m_weight; }

inline double mod_from_length(double length) {
  if (!(length > 0.0)) throw std::domain_error("mod_from_length: length must be positive");
  return kPi / length;
}

// Grid estimate of the width of the quadrilateral cut out of the strip
// {0 < Im z < pi} by the segments J1 = [0,d] x {0} and J2 = [0,d] x {pi},
// truncated at distance T past the segments. The width of that quadrilateral
// equals the extremal length of the family of paths joining J1 to J2, which
// is the reciprocal of the grid conductance between the marked segments; its
// principal term is -(2/pi) log d.
struct StripWidthResult {
  double estimate = 0.0;
  double principal = 0.0;
  double conductance = 0.0;  // grid conductance between J1 and J2
  double effective_d = 0.0;  // marked-cell count / resolution
  int rows = 0, cols = 0;
};

inline StripWidthResult strip_width_check(double d, double truncation, double resolution,
                                          const SolveOptions& opt = {}) {
  if (!(d > 0.0) || d > 0.5) throw ParameterError("strip_width_check: need 0 < d <= 0.5");
  if (truncation < 10.0 * std::max(d, 1.0))
    throw ParameterError("strip_width_check: truncation below 10 * max(d, 1)");
  if (resolution < 64.0) throw ParameterError("strip_width_check: resolution below 64 per unit");
  StripWidthResult out;
  out.rows = static_cast<int>(std::lround(kPi * resolution));
  out.cols = static_cast<int>(std::lround((2.0 * truncation + d) * resolution));
  int seg_begin = static_cast<int>(std::lround(truncation * resolution));
  int seg_end = static_cast<int>(std::lround((truncation + d) * resolution));
  if (seg_end <= seg_begin) seg_end = seg_begin + 1;
  GridQuad q;
  q.m = out.cols;
  q.n = out.rows;
  q.lo_begin = q.hi_begin = seg_begin;
  q.lo_end = q.hi_end = seg_end;
  out.conductance = grid_width(q, opt);
  out.estimate = 1.0 / out.conductance;
  out.effective_d = static_cast<double>(seg_end - seg_begin) / resolution;
  out.principal = -(2.0 / kPi) * std::log(d);
  return out;
}

// Measured suprema of |transversal + log a + log b| over (a,b,c) and of
// |self-transversal + 2 log a| over (a,b), on a log-spaced grid in
// [lo, hi]^k. These are the empirical constants behind the O(1) claims.
struct EnvelopeMeasurement {
  double transversal = 0.0;
  double self_transversal = 0.0;
  double lo = 1e-6, hi = 1.0;
  int samples = 0;
};

inline EnvelopeMeasurement measure_envelopes(double lo = 1e-6, double hi = 1.0, int samples = 25) {
  if (!(lo > 0.0) || !(hi > lo) || samples < 2)
    throw ParameterError("measure_envelopes: bad grid");
  EnvelopeMeasurement out;
  out.lo = lo;
  out.hi = hi;
  out.samples = samples;
  std::vector<double> grid(samples);
  double step = (std::log(hi) - std::log(lo)) / (samples - 1);
  for (int i = 0; i < samples; ++i) grid[i] = std::exp(std::log(lo) + i * step);
  for (double a : grid)
    for (double b : grid) {
      for (double c : grid) {
        double v = std::abs(pants_transversal(a, b, c) + std::log(a) + std::log(b));
        out.transversal = std::max(out.transversal, v);
      }
      double s = std::abs(pants_self_transversal(a, b) + 2.0 * std::log(a));
      out.self_transversal = std::max(out.self_transversal, s);
    }
  return out;
}

}  // namespace renorm
