#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "gersh/certificate.hpp"
#include "gersh/disk.hpp"
#include "gersh/median.hpp"
#include "gersh/weiszfeld.hpp"

namespace gersh {

namespace detail {

inline std::vector<Complex> offdiag_row_points(const DenseMatrix& a, std::size_t i) {
  std::vector<Complex> pts;
  pts.reserve(a.cols() - 1);
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (j != i) pts.push_back(a.at(i, j));
  return pts;
}

inline bool row_is_real(const DenseMatrix& a, std::size_t i) {
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (a.at(i, j).imag() != 0.0) return false;
  return true;
}

// Dominance margin of row i of A - lambda*I after shifting the row by c.
inline double shifted_row_margin(const DenseMatrix& a, std::size_t i, Complex lambda,
                                 Complex c) {
  double rhs = 0.0;
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (j != i) rhs += std::abs(a.at(i, j) - c);
  return std::abs(a.at(i, i) - c - lambda) - rhs;
}

}  // namespace detail

/// Heuristic test of condition |a_ii - c_i - lambda| > sum_{j!=i} |a_ij - c_i|
/// over complex shifts. Candidates per row: zero, every off-diagonal entry,
/// the Weiszfeld minimizer, and (for real rows) the median endpoints, which
/// make the test exact over real shifts. A true verdict certifies
/// rank(A - lambda*I) >= n-1; a false verdict is conservative for genuinely
/// complex rows.
inline Certificate check_condition3(const DenseMatrix& a, Complex lambda) {
  require_square(a, "check_condition3");
  const std::size_t n = a.rows();
  if (n < 2) throw precondition_error("check_condition3: n >= 2 required");

  std::vector<double> margins(n);
  ShiftVector shifts = ShiftVector::zeros(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Complex> candidates = detail::offdiag_row_points(a, i);
    const std::vector<Complex> row_points = candidates;
    candidates.push_back(Complex{});
    candidates.push_back(geometric_median(row_points).minimizer);
    if (detail::row_is_real(a, i)) {
      std::vector<double> sorted(row_points.size());
      for (std::size_t j = 0; j < row_points.size(); ++j) sorted[j] = row_points[j].real();
      std::stable_sort(sorted.begin(), sorted.end());
      auto [lo, hi] = detail::median_interval(sorted);
      candidates.push_back(Complex{lo, 0.0});
      candidates.push_back(Complex{hi, 0.0});
    }

    double best = -std::numeric_limits<double>::infinity();
    Complex best_c{};
    for (Complex c : candidates) {
      const double m = detail::shifted_row_margin(a, i, lambda, c);
      if (m > best) {
        best = m;
        best_c = c;
      }
    }
    margins[i] = best;
    shifts.row_shifts[i] = best_c;
  }
  return make_certificate(std::move(margins), std::move(shifts), lambda,
                          static_cast<int>(n) - 1);
}

/// Disks D(a_ii - c_i, rho_i) with rho_i = sum_{j!=i} |a_ij - c_i| for a fixed
/// shift choice. Any lambda with rank(A - lambda*I) <= n-2 lies in this union,
/// whatever the shifts.
inline DiskUnion localization_union(const DenseMatrix& a, const ShiftVector& shifts) {
  require_square(a, "localization_union");
  const std::size_t n = a.rows();
  if (n < 2) throw precondition_error("localization_union: n >= 2 required");
  validate_shifts(shifts, n, false, "localization_union");
  std::vector<Disk> disks;
  disks.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Complex c = shifts.row_shifts[i];
    double rho = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) rho += std::abs(a.at(i, j) - c);
    disks.push_back(Disk{a.at(i, i) - c, rho});
  }
  return make_disk_union(std::move(disks));
}

/// Same, with c_i fixed to the per-row Weiszfeld minimizer: the smallest
/// radii this construction can certify.
inline DiskUnion localization_union(const DenseMatrix& a) {
  require_square(a, "localization_union");
  const std::size_t n = a.rows();
  if (n < 2) throw precondition_error("localization_union: n >= 2 required");
  ShiftVector shifts = ShiftVector::zeros(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Complex> pts = detail::offdiag_row_points(a, i);
    shifts.row_shifts[i] = geometric_median(pts).minimizer;
  }
  return localization_union(a, shifts);
}

/// Dominance of D with d_ij = a_ij - lambda*[i==j] - c_i - e_j. Success
/// certifies rank(A - lambda*I) >= n-2 (row shifts cost one rank, column
/// shifts another).
inline Certificate verify_two_sided(const DenseMatrix& a, const ShiftVector& shifts,
                                    Complex lambda) {
  require_square(a, "verify_two_sided");
  const std::size_t n = a.rows();
  validate_shifts(shifts, n, true, "verify_two_sided");
  const std::vector<Complex>& c = shifts.row_shifts;
  const std::vector<Complex>& e = *shifts.col_shifts;
  std::vector<double> margins(n);
  for (std::size_t i = 0; i < n; ++i) {
    double rhs = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) rhs += std::abs(a.at(i, j) - c[i] - e[j]);
    margins[i] = std::abs(a.at(i, i) - lambda - c[i] - e[i]) - rhs;
  }
  return make_certificate(std::move(margins), shifts, lambda,
                          std::max(0, static_cast<int>(n) - 2));
}

/// Alternating search for two-sided shifts: rows take the Weiszfeld median of
/// the column-corrected entries, then columns take the median of the
/// row-corrected entries, starting from e = 0 and keeping the best
/// certificate seen. The one-sided candidate shifts are evaluated first, so
/// the result is never worse than check_condition3's choice.
inline Certificate search_two_sided(const DenseMatrix& a, Complex lambda,
                                    int rounds = 8) {
  require_square(a, "search_two_sided");
  const std::size_t n = a.rows();
  if (n < 2) throw precondition_error("search_two_sided: n >= 2 required");

  Certificate one_sided = check_condition3(a, lambda);
  ShiftVector seed = one_sided.shifts;
  seed.col_shifts = std::vector<Complex>(n, Complex{});
  Certificate best = verify_two_sided(a, seed, lambda);

  std::vector<Complex> c(n, Complex{}), e(n, Complex{});
  double prev = best.min_margin();
  for (int round = 0; round < rounds; ++round) {
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Complex> pts;
      pts.reserve(n - 1);
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) pts.push_back(a.at(i, j) - e[j]);
      c[i] = geometric_median(pts).minimizer;
    }
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Complex> pts;
      pts.reserve(n - 1);
      for (std::size_t i = 0; i < n; ++i)
        if (i != j) pts.push_back(a.at(i, j) - c[i]);
      e[j] = geometric_median(pts).minimizer;
    }
    ShiftVector current{c, e};
    Certificate cert = verify_two_sided(a, current, lambda);
    if (cert.min_margin() > best.min_margin()) best = cert;
    if (round > 0 && cert.min_margin() - prev < 1e-12) break;
    prev = cert.min_margin();
  }
  return best;
}

}  // namespace gersh
