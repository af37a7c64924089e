#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "gersh/certificate.hpp"
#include "gersh/disk.hpp"
#include "gersh/median.hpp"

namespace gersh {

/// Reduced disks D(a_ii, r_i) with r_i from the zero-inserted row median.
/// Valid container for eigenvalues of geometric multiplicity >= 2.
inline DiskUnion reduced_disks_thm12(const DenseMatrix& a) {
  require_square(a, "reduced_disks_thm12");
  require_real(a, "reduced_disks_thm12");
  if (a.rows() < 2) throw precondition_error("reduced_disks_thm12: n >= 2 required");
  std::vector<Disk> disks;
  disks.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    RowMedianSummary m = row_median_with_zero(a, i);
    disks.push_back(Disk{a.at(i, i), m.radius});
  }
  return make_disk_union(std::move(disks));
}

/// Shifted reduced disks D(a_ii - t_i*, r_i*). For n odd the row median is an
/// interval and the row contributes the intersection of the two endpoint
/// disks: a multiple eigenvalue must survive both.
inline DiskUnion reduced_disks_cor14(const DenseMatrix& a) {
  require_square(a, "reduced_disks_cor14");
  require_real(a, "reduced_disks_cor14");
  if (a.rows() < 2) throw precondition_error("reduced_disks_cor14: n >= 2 required");
  DiskUnion u;
  u.rows.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    RowMedianSummary m = row_median_without_zero(a, i);
    RowRegion region{Disk{a.at(i, i) - m.median_lo, m.radius}, std::nullopt};
    if (m.median_hi != m.median_lo)
      region.secondary = Disk{a.at(i, i) - m.median_hi, m.radius};
    u.rows.push_back(region);
  }
  return u;
}

/// Comparison variant keeping the original centers a_ii: radius grows to
/// min over tested medians of |t| + r_i*, by the triangle inequality.
inline DiskUnion reduced_disks_cor14_centered(const DenseMatrix& a) {
  require_square(a, "reduced_disks_cor14_centered");
  require_real(a, "reduced_disks_cor14_centered");
  if (a.rows() < 2) throw precondition_error("reduced_disks_cor14_centered: n >= 2 required");
  std::vector<Disk> disks;
  disks.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    RowMedianSummary m = row_median_without_zero(a, i);
    const double t = std::min(std::abs(m.median_lo), std::abs(m.median_hi));
    disks.push_back(Disk{a.at(i, i), t + m.radius});
  }
  return make_disk_union(std::move(disks));
}

/// Exact real-shift test of the dominance condition
/// |a_ii - c_i - lambda| > sum_{j!=i} |a_ij - c_i|: a real c_i satisfying it
/// exists iff the row median (n even) or one of the interval endpoints
/// (n odd) does. Margins report the best tested point per row. n = 2 is
/// accepted, but the rank >= n-1 conclusion is vacuous there for nonzero
/// matrices (every row has a single off-diagonal entry and r* = 0).
inline Certificate check_condition3_real(const DenseMatrix& a, double lambda) {
  require_square(a, "check_condition3_real");
  require_real(a, "check_condition3_real");
  const std::size_t n = a.rows();
  if (n < 2) throw precondition_error("check_condition3_real: n >= 2 required");

  std::vector<double> margins(n);
  ShiftVector shifts = ShiftVector::zeros(n);
  for (std::size_t i = 0; i < n; ++i) {
    RowMedianSummary m = row_median_without_zero(a, i);
    const double diag = a.at(i, i).real();
    auto margin_at = [&](double c) {
      double rhs = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) rhs += std::abs(a.at(i, j).real() - c);
      return std::abs(diag - c - lambda) - rhs;
    };
    double best_c = m.median_lo;
    double best = margin_at(m.median_lo);
    if (m.median_hi != m.median_lo) {
      const double hi = margin_at(m.median_hi);
      if (hi > best) {
        best = hi;
        best_c = m.median_hi;
      }
    }
    margins[i] = best;
    shifts.row_shifts[i] = best_c;
  }
  return make_certificate(std::move(margins), std::move(shifts), Complex{lambda, 0.0},
                          static_cast<int>(n) - 1);
}

}  // namespace gersh
