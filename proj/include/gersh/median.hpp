#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gersh/matrix.hpp"

namespace gersh {

enum class MedianVariant { WithZero, WithoutZero };

/// Row median and the radius of the corresponding reduced disk. The median of
/// an even-count multiset is an interval [median_lo, median_hi]; the radius is
/// constant on it (evaluated at the better endpoint for the WithZero variant,
/// where the objective carries the extra |t| term).
struct RowMedianSummary {
  std::size_t row_index = 0;
  double median_lo = 0.0;
  double median_hi = 0.0;
  double radius = 0.0;
  MedianVariant variant = MedianVariant::WithoutZero;
};

namespace detail {

inline std::vector<double> sorted_offdiag_row(const DenseMatrix& a, std::size_t i) {
  std::vector<double> vals;
  vals.reserve(a.cols() - 1);
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (j != i) vals.push_back(a.at(i, j).real());
  std::stable_sort(vals.begin(), vals.end());
  return vals;
}

// Median interval of a sorted multiset: a single point for odd counts,
// [b_{m}, b_{m+1}] for even counts.
inline std::pair<double, double> median_interval(const std::vector<double>& sorted_vals) {
  const std::size_t n = sorted_vals.size();
  if (n % 2 == 1) {
    double m = sorted_vals[n / 2];
    return {m, m};
  }
  return {sorted_vals[n / 2 - 1], sorted_vals[n / 2]};
}

inline double sum_abs_dev(const std::vector<double>& vals, double t) {
  double s = 0.0;
  for (double v : vals) s += std::abs(v - t);
  return s;
}

inline void require_reduced_input(const DenseMatrix& a, std::size_t i, const char* who) {
  require_square(a, who);
  require_real(a, who);
  require_row(a, i, who);
  if (a.rows() < 2) throw precondition_error(std::string(who) + ": n >= 2 required");
}

}  // namespace detail

/// Median t_i of the row with a_ii replaced by zero, and
/// r_i = |t_i| + sum_{j!=i} |a_ij - t_i|. On an interval median the objective
/// is minimized at an endpoint; both are tried and the smaller radius kept.
inline RowMedianSummary row_median_with_zero(const DenseMatrix& a, std::size_t i) {
  detail::require_reduced_input(a, i, "row_median_with_zero");
  std::vector<double> offdiag = detail::sorted_offdiag_row(a, i);
  std::vector<double> multiset = offdiag;
  multiset.insert(std::lower_bound(multiset.begin(), multiset.end(), 0.0), 0.0);
  auto [lo, hi] = detail::median_interval(multiset);
  const double r_lo = std::abs(lo) + detail::sum_abs_dev(offdiag, lo);
  const double r_hi = std::abs(hi) + detail::sum_abs_dev(offdiag, hi);
  return RowMedianSummary{i, lo, hi, std::min(r_lo, r_hi), MedianVariant::WithZero};
}

/// Median t_i* of the n-1 off-diagonal entries and r_i* = sum |a_ij - t_i*|.
/// For n even the median is unique; for n odd it is the interval J, on which
/// r_i* is constant.
inline RowMedianSummary row_median_without_zero(const DenseMatrix& a, std::size_t i) {
  detail::require_reduced_input(a, i, "row_median_without_zero");
  std::vector<double> offdiag = detail::sorted_offdiag_row(a, i);
  auto [lo, hi] = detail::median_interval(offdiag);
  return RowMedianSummary{i, lo, hi, detail::sum_abs_dev(offdiag, lo),
                          MedianVariant::WithoutZero};
}

}  // namespace gersh
