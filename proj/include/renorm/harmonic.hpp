#pragma once

// Harmonic-sum algebra: x1 (+) x2 = (1/x1 + 1/x2)^-1, the conductance of
// resistors plugged in series, together with the two elementary inequalities
// the rest of the library leans on.

#include <algorithm>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace renorm {

// Conductance value. Nonnegative; zero acts as an absorbing element of the
// harmonic sum (a fully blocking resistor in series).
using Weight = double;

// (sum 1/x_i)^-1 over a non-empty list of nonnegative values.
// Returns 0 if any entry is 0. Result never exceeds min(xs).
inline Weight hsum(std::span<const Weight> xs) {
  if (xs.empty()) throw std::domain_error("hsum: empty list");
  double acc = 0.0;
  for (double x : xs) {
    if (x < 0.0) throw std::domain_error("hsum: negative entry");
    if (x == 0.0) return 0.0;
    acc += 1.0 / x;
  }
  if (xs.size() == 1) return xs[0];  // exact identity, no reciprocal rounding
  return 1.0 / acc;
}

inline Weight hsum(std::initializer_list<Weight> xs) {
  return hsum(std::span<const Weight>(xs.begin(), xs.size()));
}

inline Weight hsum(const std::vector<Weight>& xs) {
  return hsum(std::span<const Weight>(xs.data(), xs.size()));
}

// max(y - sum b_i, 0). Whenever hsum(x_i + b_i) >= y, the harmonic sum of the
// x_i alone is bounded below by this value; the 1-Lipschitz dependence of the
// harmonic sum on each coordinate is what makes the shift legitimate.
inline Weight shifted_lower_bound(Weight y, std::span<const Weight> bs) {
  if (y < 0.0) throw std::domain_error("shifted_lower_bound: negative y");
  double shift = 0.0;
  for (double b : bs) {
    if (b < 0.0) throw std::domain_error("shifted_lower_bound: negative shift entry");
    shift += b;
  }
  return std::max(y - shift, 0.0);
}

inline Weight shifted_lower_bound(Weight y, std::initializer_list<Weight> bs) {
  return shifted_lower_bound(y, std::span<const Weight>(bs.begin(), bs.size()));
}

inline Weight shifted_lower_bound(Weight y, const std::vector<Weight>& bs) {
  return shifted_lower_bound(y, std::span<const Weight>(bs.data(), bs.size()));
}

// Both sides of the interchange inequality
//   sum_i hsum_j v_ij  <=  hsum_j sum_i v_ij.
// Plugging each row in series and the rows together in parallel can only
// lose conductance compared with merging the columns first.
struct InterchangeSides {
  Weight lhs;  // sum over rows of per-row harmonic sums
  Weight rhs;  // harmonic sum of column sums
};

inline InterchangeSides interchange(const std::vector<std::vector<Weight>>& v) {
  if (v.empty() || v.front().empty()) throw std::domain_error("interchange: empty matrix");
  const std::size_t cols = v.front().size();
  std::vector<Weight> col_sums(cols, 0.0);
  double lhs = 0.0;
  for (const auto& row : v) {
    if (row.size() != cols) throw std::domain_error("interchange: ragged matrix");
    lhs += hsum(row);
    for (std::size_t j = 0; j < cols; ++j) {
      if (row[j] < 0.0) throw std::domain_error("interchange: negative entry");
      col_sums[j] += row[j];
    }
  }
  return {lhs, hsum(col_sums)};
}

}  // namespace renorm
