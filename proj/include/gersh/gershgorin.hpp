#pragma once

#include <cmath>
#include <cstddef>

#include "gersh/certificate.hpp"
#include "gersh/disk.hpp"
#include "gersh/matrix.hpp"

namespace gersh {

/// Absolute off-diagonal row sum R_i.
inline double offdiag_abs_sum(const DenseMatrix& a, std::size_t i) {
  double s = 0.0;
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (j != i) s += std::abs(a.at(i, j));
  return s;
}

/// Classical Gershgorin disks D(a_ii, R_i); every eigenvalue lies in their union.
inline DiskUnion classical_disks(const DenseMatrix& a) {
  require_square(a, "classical_disks");
  std::vector<Disk> disks;
  disks.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    disks.push_back(Disk{a.at(i, i), offdiag_abs_sum(a, i)});
  return make_disk_union(std::move(disks));
}

/// Strict row dominance |a_ii| > sum_{j!=i} |a_ij|. On success the certified
/// rank bound is n (a dominant matrix has full rank).
inline Certificate is_diagonally_dominant(const DenseMatrix& a) {
  require_square(a, "is_diagonally_dominant");
  const std::size_t n = a.rows();
  std::vector<double> margins(n);
  for (std::size_t i = 0; i < n; ++i)
    margins[i] = std::abs(a.at(i, i)) - offdiag_abs_sum(a, i);
  return make_certificate(std::move(margins), ShiftVector::zeros(n), Complex{},
                          static_cast<int>(n));
}

}  // namespace gersh
