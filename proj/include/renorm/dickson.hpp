#pragma once

// Minimal elements of a finite subset of Z^n_+ under the coordinatewise
// order. The recursive construction slices the set along coordinate
// hyperplanes below a pivot element and is cross-checked against a direct
// pairwise scan.

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

namespace renorm {

using LatticePoint = std::vector<int>;

namespace detail {

inline bool leq(const LatticePoint& a, const LatticePoint& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// Covering basis per the slice recursion: pick a pivot a; every point not
// above a has some coordinate i with t_i = k < a_i, and those slices recurse.
inline void cover_basis(const std::vector<LatticePoint>& t, std::set<LatticePoint>& out) {
  if (t.empty()) return;
  const LatticePoint& pivot = t.front();
  out.insert(pivot);
  const std::size_t n = pivot.size();
  for (std::size_t i = 0; i < n; ++i)
    for (int k = 0; k < pivot[i]; ++k) {
      std::vector<LatticePoint> slice;
      for (const auto& p : t)
        if (p[i] == k) slice.push_back(p);
      cover_basis(slice, out);
    }
}

inline std::vector<LatticePoint> minimal_scan(const std::vector<LatticePoint>& t) {
  std::vector<LatticePoint> out;
  for (const auto& p : t) {
    bool minimal = true;
    for (const auto& q : t)
      if (q != p && leq(q, p)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detail

// The set of minimal elements of T: every t in T dominates some basis
// element and no two basis elements are comparable.
inline std::vector<LatticePoint> dickson_basis(const std::vector<LatticePoint>& points) {
  if (points.empty()) return {};
  const std::size_t n = points.front().size();
  for (const auto& p : points) {
    if (p.size() != n) throw std::domain_error("dickson_basis: mixed dimensions");
    for (int c : p)
      if (c < 0) throw std::domain_error("dickson_basis: negative coordinate");
  }
  std::vector<LatticePoint> t(points);
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());

  std::set<LatticePoint> cover;
  detail::cover_basis(t, cover);
  // The cover contains every minimal element; pruning it to its own minimal
  // elements yields exactly the minimal elements of T.
  std::vector<LatticePoint> pruned =
      detail::minimal_scan(std::vector<LatticePoint>(cover.begin(), cover.end()));

  std::vector<LatticePoint> direct = detail::minimal_scan(t);
  if (pruned != direct)
    throw std::logic_error("dickson_basis: slice construction disagrees with the direct scan");
  return direct;
}

}  // namespace renorm
