#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "gersh/disk.hpp"
#include "gersh/median.hpp"

namespace gersh {

/// Delta(A) = max_i |row sum - column sum|; zero for symmetric and doubly
/// stochastic matrices.
struct SymmetryDefect {
  double value = 0.0;
  std::size_t argmax_row = 0;
};

inline SymmetryDefect symmetry_defect(const DenseMatrix& a) {
  require_square(a, "symmetry_defect");
  require_real(a, "symmetry_defect");
  SymmetryDefect d;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j)
      s += a.at(i, j).real() - a.at(j, i).real();
    if (std::abs(s) > d.value) {
      d.value = std::abs(s);
      d.argmax_row = i;
    }
  }
  return d;
}

/// Commutator-based normality test: ||A A^T - A^T A||_max against a scale-
/// relative threshold, equivalent to orthogonality of eigenvectors for real A.
inline double commutator_defect(const DenseMatrix& a) {
  require_square(a, "commutator_defect");
  require_real(a, "commutator_defect");
  const DenseMatrix at = a.transpose();
  const DenseMatrix left = multiply(a, at);
  const DenseMatrix right = multiply(at, a);
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      m = std::max(m, std::abs(left.at(i, j) - right.at(i, j)));
  return m;
}

inline bool is_normal(const DenseMatrix& a) {
  const double scale = 1.0 + a.max_abs();
  return commutator_defect(a) <= 1e-8 * scale * scale;
}

/// Enlarged disks containing a pair of eigenvalues. witness_row, when
/// present, is a row whose disk holds both within the tolerance the caller
/// supplied.
struct PairDiskReport {
  Complex lambda;
  Complex mu;
  DiskUnion disks;
  std::optional<std::size_t> witness_row;
  std::optional<double> delta;  // symmetry defect, almost-symmetric mode only
};

namespace detail {

inline PairDiskReport pair_disks(const DenseMatrix& a, Complex lambda, Complex mu,
                                 double enlargement, double tol) {
  PairDiskReport report;
  report.lambda = lambda;
  report.mu = mu;
  std::vector<Disk> disks;
  disks.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    RowMedianSummary m = row_median_with_zero(a, i);
    disks.push_back(Disk{a.at(i, i), m.radius + enlargement});
  }
  report.disks = make_disk_union(std::move(disks));
  for (std::size_t i = 0; i < report.disks.size(); ++i) {
    const Disk& d = report.disks.disk(i);
    if (d.contains(lambda, tol) && d.contains(mu, tol)) {
      report.witness_row = i;
      break;
    }
  }
  return report;
}

}  // namespace detail

/// Disks D(a_ii, r_i + sqrt(n)|lambda - mu|) for a real normal matrix: some
/// row disk contains both eigenvalues of a distinct pair.
inline PairDiskReport normal_pair_disks(const DenseMatrix& a, Complex lambda, Complex mu,
                                        double tol = 1e-8) {
  require_square(a, "normal_pair_disks");
  require_real(a, "normal_pair_disks");
  if (a.rows() < 3) throw precondition_error("normal_pair_disks: n >= 3 required");
  if (lambda == mu) throw precondition_error("normal_pair_disks: lambda and mu must differ");
  if (!is_normal(a)) throw precondition_error("normal_pair_disks: matrix is not normal");
  const double enlargement = std::sqrt(static_cast<double>(a.rows())) * std::abs(lambda - mu);
  return detail::pair_disks(a, lambda, mu, enlargement, tol);
}

/// Disks D(a_ii, r_i + sqrt(n)(Delta + |lambda - mu|)) for any real matrix.
inline PairDiskReport almost_symmetric_pair_disks(const DenseMatrix& a, Complex lambda,
                                                  Complex mu, double tol = 1e-8) {
  require_square(a, "almost_symmetric_pair_disks");
  require_real(a, "almost_symmetric_pair_disks");
  if (a.rows() < 3) throw precondition_error("almost_symmetric_pair_disks: n >= 3 required");
  if (lambda == mu)
    throw precondition_error("almost_symmetric_pair_disks: lambda and mu must differ");
  const double delta = symmetry_defect(a).value;
  const double enlargement =
      std::sqrt(static_cast<double>(a.rows())) * (delta + std::abs(lambda - mu));
  PairDiskReport report = detail::pair_disks(a, lambda, mu, enlargement, tol);
  report.delta = delta;
  return report;
}

/// Zero-sum weight vector with a unit pivot coordinate; the combination
/// vector behind the |S| <= r_i inequality.
struct ZeroSumWeightVector {
  std::vector<Complex> weights;
  std::size_t pivot = 0;
};

inline void validate_weights(const ZeroSumWeightVector& t, std::size_t n, const char* who) {
  if (t.weights.size() != n)
    throw precondition_error(std::string(who) + ": weight count != n");
  if (t.pivot >= n) throw precondition_error(std::string(who) + ": pivot out of range");
  Complex sum{};
  for (Complex w : t.weights) {
    if (!is_finite(w)) throw precondition_error(std::string(who) + ": non-finite weight");
    if (std::abs(w) > 1.0 + 1e-12)
      throw precondition_error(std::string(who) + ": weight modulus exceeds 1");
    sum += w;
  }
  if (std::abs(sum) > 1e-12)
    throw precondition_error(std::string(who) + ": weights do not sum to zero");
  if (std::abs(t.weights[t.pivot] - Complex{1.0, 0.0}) > 1e-12)
    throw precondition_error(std::string(who) + ": pivot weight must be 1");
}

/// |S| with S = sum_{j!=pivot} a_{i,j} t_j, paired with r_i. The contract
/// |S| <= r_i holds for every admissible weight vector.
inline std::pair<double, double> lemma52_bound(const DenseMatrix& a, std::size_t i,
                                               const ZeroSumWeightVector& t) {
  require_square(a, "lemma52_bound");
  require_real(a, "lemma52_bound");
  require_row(a, i, "lemma52_bound");
  if (a.rows() < 2) throw precondition_error("lemma52_bound: n >= 2 required");
  if (t.pivot != i) throw precondition_error("lemma52_bound: pivot must equal the row index");
  validate_weights(t, a.rows(), "lemma52_bound");
  Complex s{};
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (j != i) s += a.at(i, j) * t.weights[j];
  return {std::abs(s), row_median_with_zero(a, i).radius};
}

/// Random admissible weight vector: unit-disk draws, centered to zero sum,
/// rescaled and rotated so the max-modulus coordinate is exactly 1, then
/// swapped into the pivot slot.
inline ZeroSumWeightVector random_zero_sum_weights(std::size_t n, std::size_t pivot,
                                                   std::mt19937_64& rng) {
  if (n < 2) throw precondition_error("random_zero_sum_weights: n >= 2 required");
  if (pivot >= n) throw precondition_error("random_zero_sum_weights: pivot out of range");
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (;;) {
    std::vector<Complex> w(n);
    for (Complex& z : w) {
      do {
        z = Complex{unit(rng), unit(rng)};
      } while (std::abs(z) > 1.0);
    }
    Complex mean{};
    for (Complex z : w) mean += z;
    mean /= static_cast<double>(n);
    std::size_t argmax = 0;
    double max_abs = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      w[j] -= mean;
      if (std::abs(w[j]) > max_abs) {
        max_abs = std::abs(w[j]);
        argmax = j;
      }
    }
    if (max_abs < 0.05) continue;  // degenerate draw, retry
    const Complex top = w[argmax];
    for (Complex& z : w) z /= top;  // rescales and rotates in one step
    w[argmax] = Complex{1.0, 0.0};
    std::swap(w[argmax], w[pivot]);
    ZeroSumWeightVector t{std::move(w), pivot};
    validate_weights(t, n, "random_zero_sum_weights");
    return t;
  }
}

}  // namespace gersh
