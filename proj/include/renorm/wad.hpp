#pragma once

// Weighted arc diagrams over a surface signature. Arcs are abstract tokens:
// endpoints, properness and crossings are declared by model files, never
// computed from geometry. A WAD assigns positive weights to a pairwise
// non-crossing arc family of size at most 3|chi|.

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "renorm/errors.hpp"

namespace renorm {

struct SurfaceSignature {
  std::vector<std::string> ends;
  std::set<std::string> proper_ends;
  int euler_char = -1;  // chi < 0
};

enum class ArcKind { horizontal, vertical, other };

struct Arc {
  std::string id;
  std::array<std::string, 2> ends;
};

// Surface + arc vocabulary + declared crossing relation.
class ArcSystem {
 public:
  ArcSystem(SurfaceSignature surface, std::vector<Arc> arcs,
            std::vector<std::pair<std::string, std::string>> crossings)
      : surface_(std::move(surface)) {
    if (surface_.euler_char >= 0) throw StructuralError("arc system: euler characteristic must be negative");
    std::set<std::string> end_set(surface_.ends.begin(), surface_.ends.end());
    if (end_set.size() != surface_.ends.size())
      throw StructuralError("arc system: duplicate end id");
    for (const auto& p : surface_.proper_ends)
      if (!end_set.count(p)) throw StructuralError("arc system: proper end '" + p + "' not among ends");
    for (auto& a : arcs) {
      if (!end_set.count(a.ends[0]) || !end_set.count(a.ends[1]))
        throw StructuralError("arc '" + a.id + "': endpoint not among surface ends");
      if (!arcs_.emplace(a.id, a).second) throw StructuralError("arc system: duplicate arc id '" + a.id + "'");
    }
    for (auto& [x, y] : crossings) {
      if (!arcs_.count(x) || !arcs_.count(y))
        throw StructuralError("arc system: crossing references unknown arc");
      if (x == y) throw StructuralError("arc system: arc declared to cross itself");
      crossings_.insert(normalized(x, y));
    }
  }

  const SurfaceSignature& surface() const { return surface_; }
  bool has_arc(const std::string& id) const { return arcs_.count(id) > 0; }
  const Arc& arc(const std::string& id) const {
    auto it = arcs_.find(id);
    if (it == arcs_.end()) throw MappingError("unknown arc '" + id + "'");
    return it->second;
  }
  const std::map<std::string, Arc>& arcs() const { return arcs_; }

  bool is_proper_end(const std::string& e) const { return surface_.proper_ends.count(e) > 0; }

  ArcKind kind(const std::string& id) const {
    const Arc& a = arc(id);
    int proper = (is_proper_end(a.ends[0]) ? 1 : 0) + (is_proper_end(a.ends[1]) ? 1 : 0);
    if (proper == 2) return ArcKind::horizontal;
    if (proper == 1) return ArcKind::vertical;
    return ArcKind::other;
  }

  bool cross(const std::string& x, const std::string& y) const {
    return crossings_.count(normalized(x, y)) > 0;
  }

  std::size_t max_support() const { return 3 * static_cast<std::size_t>(-surface_.euler_char); }

 private:
  static std::pair<std::string, std::string> normalized(const std::string& x, const std::string& y) {
    return x < y ? std::make_pair(x, y) : std::make_pair(y, x);
  }

  SurfaceSignature surface_;
  std::map<std::string, Arc> arcs_;
  std::set<std::pair<std::string, std::string>> crossings_;
};

// Raw weight assignment, prior to validation. The domination checker takes
// this form so that invalid supports surface as report clauses instead of
// exceptions.
struct WadData {
  std::shared_ptr<const ArcSystem> system;
  std::map<std::string, double> weights;

  double weight(const std::string& arc) const {
    auto it = weights.find(arc);
    return it == weights.end() ? 0.0 : it->second;
  }
};

// Returns a crossing pair within the support, if any.
inline std::optional<std::pair<std::string, std::string>> find_crossing_pair(const WadData& d) {
  std::vector<const std::string*> ids;
  for (const auto& [id, w] : d.weights) ids.push_back(&id);
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j)
      if (d.system->cross(*ids[i], *ids[j])) return std::make_pair(*ids[i], *ids[j]);
  return std::nullopt;
}

class Wad {
 public:
  explicit Wad(WadData data) : data_(std::move(data)) {
    if (!data_.system) throw StructuralError("wad: missing arc system");
    for (auto it = data_.weights.begin(); it != data_.weights.end();) {
      if (!data_.system->has_arc(it->first)) throw MappingError("wad: unknown arc '" + it->first + "'");
      if (it->second < 0.0) throw StructuralError("wad: negative weight on '" + it->first + "'");
      if (it->second == 0.0)
        it = data_.weights.erase(it);  // zero-weight arcs leave the support
      else
        ++it;
    }
    if (auto pair = find_crossing_pair(data_))
      throw StructuralError("wad: support arcs '" + pair->first + "' and '" + pair->second + "' cross");
    if (data_.weights.size() > data_.system->max_support())
      throw StructuralError("wad: support exceeds 3|chi| = " + std::to_string(data_.system->max_support()));
  }

  Wad(std::shared_ptr<const ArcSystem> system, std::map<std::string, double> weights)
      : Wad(WadData{std::move(system), std::move(weights)}) {}

  const WadData& data() const { return data_; }
  const std::shared_ptr<const ArcSystem>& system() const { return data_.system; }
  const std::map<std::string, double>& weights() const { return data_.weights; }
  double weight(const std::string& arc) const { return data_.weight(arc); }
  bool empty() const { return data_.weights.empty(); }

 private:
  WadData data_;
};

inline void require_same_system(const Wad& x, const Wad& y, const char* op) {
  if (x.system().get() != y.system().get())
    throw StructuralError(std::string(op) + ": operands live on different arc systems");
}

// X + Y; the combined support must still be pairwise non-crossing.
inline Wad add(const Wad& x, const Wad& y) {
  require_same_system(x, y, "wad add");
  std::map<std::string, double> w = x.weights();
  for (const auto& [id, v] : y.weights()) w[id] += v;
  WadData d{x.system(), std::move(w)};
  if (auto pair = find_crossing_pair(d))
    throw StructuralError("wad add: supports cross ('" + pair->first + "' vs '" + pair->second + "')");
  return Wad(std::move(d));
}

// X - Y clamped at zero; arcs driven to zero drop out of the support.
inline Wad sub(const Wad& x, const Wad& y) {
  require_same_system(x, y, "wad sub");
  std::map<std::string, double> w;
  for (const auto& [id, v] : x.weights()) {
    double r = v - y.weight(id);
    if (r > 0.0) w[id] = r;
  }
  return Wad(x.system(), std::move(w));
}

// X - c on every supported arc, clamped at zero.
inline Wad scalar_sub(const Wad& x, double c) {
  if (c < 0.0) throw std::domain_error("wad scalar_sub: negative constant");
  std::map<std::string, double> w;
  for (const auto& [id, v] : x.weights())
    if (v - c > 0.0) w[id] = v - c;
  return Wad(x.system(), std::move(w));
}

inline double norm1(const Wad& x) {
  double s = 0.0;
  for (const auto& [id, v] : x.weights()) s += v;
  return s;
}

inline double norm_inf(const Wad& x) {
  double s = 0.0;
  for (const auto& [id, v] : x.weights()) s = std::max(s, v);
  return s;
}

inline Wad restrict_kind(const Wad& x, ArcKind kind) {
  std::map<std::string, double> w;
  for (const auto& [id, v] : x.weights())
    if (x.system()->kind(id) == kind) w[id] = v;
  return Wad(x.system(), std::move(w));
}

inline Wad restrict_horizontal(const Wad& x) { return restrict_kind(x, ArcKind::horizontal); }
inline Wad restrict_vertical(const Wad& x) { return restrict_kind(x, ArcKind::vertical); }

// Correspondence data for a pullback: each upstairs arc is assigned the
// downstairs arc it maps onto. For coverings the fixture may also declare
// how many lifts each downstairs arc has, which is then checked against the
// correspondence.
struct ArcCorrespondence {
  std::map<std::string, std::string> image;       // upstairs arc -> downstairs arc
  std::map<std::string, int> declared_lifts;      // optional, per downstairs arc
};

// e*(Y)(alpha) = Y(e_* alpha). Weight-zero pullbacks drop out; the upstairs
// support is re-checked for crossings by the Wad constructor.
inline Wad pullback(const Wad& downstairs, const ArcCorrespondence& corr,
                    std::shared_ptr<const ArcSystem> upstairs) {
  std::map<std::string, int> lift_count;
  std::map<std::string, double> w;
  for (const auto& [up, down] : corr.image) {
    if (!upstairs->has_arc(up)) throw MappingError("pullback: unknown upstairs arc '" + up + "'");
    if (!downstairs.system()->has_arc(down))
      throw MappingError("pullback: image arc '" + down + "' absent downstairs");
    ++lift_count[down];
    double v = downstairs.weight(down);
    if (v > 0.0) w[up] = v;
  }
  for (const auto& [down, n] : corr.declared_lifts) {
    auto it = lift_count.find(down);
    int actual = it == lift_count.end() ? 0 : it->second;
    if (actual != n)
      throw MappingError("pullback: arc '" + down + "' declared " + std::to_string(n) +
                         " lifts but correspondence supplies " + std::to_string(actual));
  }
  return Wad(std::move(upstairs), std::move(w));
}

// Composition of correspondences (upstairs of `inner` maps through `outer`).
inline ArcCorrespondence compose(const ArcCorrespondence& outer, const ArcCorrespondence& inner) {
  ArcCorrespondence out;
  for (const auto& [up, mid] : inner.image) {
    auto it = outer.image.find(mid);
    if (it == outer.image.end())
      throw MappingError("compose: arc '" + mid + "' has no image in the outer correspondence");
    out.image[up] = it->second;
  }
  return out;
}

}  // namespace renorm
