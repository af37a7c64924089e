#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "gersh/certificate.hpp"
#include "gersh/matrix.hpp"

namespace gersh::oracle {

/// Full spectrum with algebraic multiplicity, plus single-linkage clusters of
/// nearby eigenvalues. residual is a backward-error proxy from the computed
/// eigenpairs. Verification-only: the certificate layer never calls this.
struct EigenSolution {
  struct Cluster {
    Complex representative;
    std::size_t multiplicity;
  };
  std::vector<Complex> eigenvalues;  // sorted by (re, im)
  std::vector<Cluster> clusters;     // sorted by representative (re, im)
  double residual = 0.0;
};

namespace detail {

inline Eigen::MatrixXcd to_eigen(const DenseMatrix& a) {
  Eigen::MatrixXcd m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a.at(i, j);
  return m;
}

inline bool complex_less(Complex a, Complex b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

}  // namespace detail

/// Dense spectrum via Hessenberg + shifted QR (Eigen's complex Schur path).
/// cluster_tol <= 0 selects the default 1e-6 * (1 + spectral radius).
inline EigenSolution eigenvalues(const DenseMatrix& a, double cluster_tol = -1.0) {
  require_square(a, "eigenvalues");
  if (a.rows() > 64) throw precondition_error("eigenvalues: n <= 64 required");
  const Eigen::MatrixXcd m = detail::to_eigen(a);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, /*computeEigenvectors=*/true);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigenvalues: QR iteration failed to converge");

  EigenSolution sol;
  const auto& vals = solver.eigenvalues();
  const auto& vecs = solver.eigenvectors();
  const std::size_t n = a.rows();
  sol.eigenvalues.reserve(n);
  double residual = 0.0;
  const double scale = 1.0 + a.max_abs();
  for (std::size_t k = 0; k < n; ++k) {
    const auto idx = static_cast<Eigen::Index>(k);
    sol.eigenvalues.push_back(vals(idx));
    const Eigen::VectorXcd r = m * vecs.col(idx) - vals(idx) * vecs.col(idx);
    residual = std::max(residual, r.cwiseAbs().maxCoeff() / scale);
  }
  sol.residual = residual;
  std::sort(sol.eigenvalues.begin(), sol.eigenvalues.end(), detail::complex_less);

  double rho = 0.0;
  for (Complex z : sol.eigenvalues) rho = std::max(rho, std::abs(z));
  const double tol = cluster_tol > 0.0 ? cluster_tol : 1e-6 * (1.0 + rho);

  // Single-linkage clustering: connected components of the tol-threshold graph.
  std::vector<int> comp(n, -1);
  int n_comp = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (comp[i] >= 0) continue;
    comp[i] = n_comp;
    std::vector<std::size_t> stack{i};
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < n; ++v)
        if (comp[v] < 0 && std::abs(sol.eigenvalues[u] - sol.eigenvalues[v]) <= tol) {
          comp[v] = n_comp;
          stack.push_back(v);
        }
    }
    ++n_comp;
  }
  sol.clusters.resize(static_cast<std::size_t>(n_comp));
  for (std::size_t i = 0; i < n; ++i) {
    auto& c = sol.clusters[static_cast<std::size_t>(comp[i])];
    c.representative += sol.eigenvalues[i];
    c.multiplicity += 1;
  }
  for (auto& c : sol.clusters) c.representative /= static_cast<double>(c.multiplicity);
  std::sort(sol.clusters.begin(), sol.clusters.end(),
            [](const EigenSolution::Cluster& x, const EigenSolution::Cluster& y) {
              return detail::complex_less(x.representative, y.representative);
            });
  return sol;
}

/// Singular values above rel_tol times the largest one.
inline std::size_t numerical_rank(const DenseMatrix& a, double rel_tol = 1e-10) {
  if (a.rows() > 64 || a.cols() > 64) throw precondition_error("numerical_rank: dims <= 64 required");
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(detail::to_eigen(a));
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return 0;
  const double cutoff = rel_tol * sv(0);
  std::size_t rank = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k)
    if (sv(k) > cutoff) ++rank;
  return rank;
}

/// Monic characteristic polynomial coefficients [1, c_1, ..., c_n] via the
/// Faddeev-LeVerrier trace recurrence. Desk scale only; feeds the root-finder
/// cross-check of the QR spectrum.
inline std::vector<Complex> characteristic_polynomial(const DenseMatrix& a) {
  require_square(a, "characteristic_polynomial");
  if (a.rows() > 12) throw precondition_error("characteristic_polynomial: n <= 12 required");
  const std::size_t n = a.rows();
  const Eigen::MatrixXcd m = detail::to_eigen(a);
  std::vector<Complex> coeffs(n + 1);
  coeffs[0] = 1.0;
  Eigen::MatrixXcd mk = Eigen::MatrixXcd::Zero(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * (mk + coeffs[k - 1] * Eigen::MatrixXcd::Identity(n, n));
    coeffs[k] = -mk.trace() / static_cast<double>(k);
  }
  return coeffs;
}

/// Durand-Kerner simultaneous iteration on a monic polynomial. Roots are
/// returned sorted by (re, im).
inline std::vector<Complex> durand_kerner_roots(const std::vector<Complex>& monic_coeffs,
                                                double tol = 1e-13, int max_iter = 500) {
  if (monic_coeffs.size() < 2 || monic_coeffs[0] != Complex{1.0, 0.0})
    throw precondition_error("durand_kerner_roots: monic polynomial of degree >= 1 required");
  const std::size_t degree = monic_coeffs.size() - 1;
  auto eval = [&](Complex z) {
    Complex r = monic_coeffs[0];
    for (std::size_t k = 1; k < monic_coeffs.size(); ++k) r = r * z + monic_coeffs[k];
    return r;
  };
  double scale = 0.0;
  for (Complex c : monic_coeffs) scale = std::max(scale, std::abs(c));

  std::vector<Complex> roots(degree);
  const Complex seed{0.4, 0.9};
  Complex power = seed;
  for (auto& r : roots) {
    r = power;
    power *= seed;
  }
  for (int iter = 0; iter < max_iter; ++iter) {
    double shift = 0.0;
    for (std::size_t k = 0; k < degree; ++k) {
      Complex denom{1.0, 0.0};
      for (std::size_t j = 0; j < degree; ++j)
        if (j != k) denom *= roots[k] - roots[j];
      if (denom == Complex{}) {
        roots[k] += Complex{1e-8, 1e-8};  // nudge coincident iterates apart
        shift = 1.0;
        continue;
      }
      const Complex delta = eval(roots[k]) / denom;
      roots[k] -= delta;
      shift = std::max(shift, std::abs(delta));
    }
    double spread = 0.0;
    for (Complex r : roots) spread = std::max(spread, std::abs(r));
    if (shift <= tol * (1.0 + std::max(scale, spread))) break;
  }
  std::sort(roots.begin(), roots.end(), detail::complex_less);
  return roots;
}

enum class PlantKind {
  SimilarityDiagonalizable,
  JordanBlock,
  DominantPlusRowConstant,
  DominantPlusRowAndColumnConstant,
};

struct PlantedInstance {
  DenseMatrix matrix;
  Complex planted_lambda;
  std::size_t geometric_multiplicity = 0;
  PlantKind construction = PlantKind::SimilarityDiagonalizable;
  std::optional<ShiftVector> planted_shifts;
};

namespace detail {

// Random unimodular integer matrix built from elementary row operations,
// tracked together with its exact integer inverse. Entries stay bounded so
// the double conversion is exact.
inline void random_unimodular(std::size_t n, std::mt19937_64& rng,
                              std::vector<std::vector<long long>>& p,
                              std::vector<std::vector<long long>>& p_inv) {
  p.assign(n, std::vector<long long>(n, 0));
  p_inv.assign(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) p[i][i] = p_inv[i][i] = 1;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> coeff(-2, 2);
  const long long limit = 32;
  const std::size_t ops = 2 * n;
  for (std::size_t op = 0; op < ops; ++op) {
    const std::size_t i = pick(rng);
    std::size_t j = pick(rng);
    if (i == j) continue;
    const int s = coeff(rng);
    if (s == 0) continue;
    bool fits = true;
    for (std::size_t k = 0; k < n; ++k) {
      if (std::abs(p[i][k] + s * p[j][k]) > limit) fits = false;
      if (std::abs(p_inv[k][j] - s * p_inv[k][i]) > limit) fits = false;
    }
    if (!fits) continue;
    // P <- E P with E = I + s e_i e_j^T; P^-1 <- P^-1 E^-1.
    for (std::size_t k = 0; k < n; ++k) p[i][k] += s * p[j][k];
    for (std::size_t k = 0; k < n; ++k) p_inv[k][j] -= s * p_inv[k][i];
  }
}

// Exact integer conjugation P * M * P^-1; entries stay far below 2^53.
inline std::vector<std::vector<long long>> conjugate_integer(
    const std::vector<std::vector<long long>>& p,
    const std::vector<std::vector<long long>>& p_inv,
    const std::vector<std::vector<long long>>& middle) {
  const std::size_t n = p.size();
  std::vector<std::vector<long long>> out(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      long long s = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (p[i][k] == 0) continue;
        for (std::size_t l = 0; l < n; ++l) s += p[i][k] * middle[k][l] * p_inv[l][j];
      }
      out[i][j] = s;
    }
  return out;
}

// Rounding lambda to a 2^-32 grid makes every sum (conjugated integer +
// lambda) exactly representable in binary64, so the planted eigenvalue is
// exact for the stored matrix rather than drifting by an ulp through the
// similarity products. Integer entries stay below 2^19, leaving headroom.
inline Complex snap_to_grid(Complex lambda) {
  const double scale = 4294967296.0;  // 2^32
  return Complex{std::round(lambda.real() * scale) / scale,
                 std::round(lambda.imag() * scale) / scale};
}

}  // namespace detail

/// A = P D P^-1 with lambda planted at the requested multiplicity. P is a
/// random unimodular integer matrix with exact integer inverse, and the
/// conjugation is carried out on the all-integer D - lambda*I, so the stored
/// matrix has lambda (snapped to a 2^-40 grid, see planted_lambda) as an
/// exact eigenvalue. The construction is verified against numerical_rank
/// before returning. The JordanBlock kind plants a single Jordan block
/// instead (geometric multiplicity 1).
inline PlantedInstance plant_multiple_eigenvalue(std::size_t n, std::size_t multiplicity,
                                                 Complex lambda, std::uint64_t seed,
                                                 PlantKind kind = PlantKind::SimilarityDiagonalizable) {
  if (multiplicity < 2 || multiplicity > n || n > 16)
    throw precondition_error("plant_multiple_eigenvalue: need 2 <= multiplicity <= n <= 16");
  if (kind != PlantKind::SimilarityDiagonalizable && kind != PlantKind::JordanBlock)
    throw precondition_error("plant_multiple_eigenvalue: unsupported construction");
  if (!is_finite(lambda) || std::abs(lambda) > 100.0)
    throw precondition_error("plant_multiple_eigenvalue: lambda must be finite and desk-scale");
  std::mt19937_64 rng(seed);
  lambda = detail::snap_to_grid(lambda);
  // callers must localize at the snapped planted_lambda, not their request

  // D - lambda*I: zeros in the planted slots, separations >= 1 elsewhere.
  std::vector<std::vector<long long>> shifted_diag(n, std::vector<long long>(n, 0));
  for (std::size_t i = multiplicity; i < n; ++i)
    shifted_diag[i][i] = static_cast<long long>(i - multiplicity + 1);
  if (kind == PlantKind::JordanBlock)
    for (std::size_t i = 0; i + 1 < multiplicity; ++i) shifted_diag[i][i + 1] = 1;

  PlantedInstance inst;
  inst.planted_lambda = lambda;
  inst.geometric_multiplicity = kind == PlantKind::JordanBlock ? 1 : multiplicity;
  inst.construction = kind;

  // The rank check below guards against the rare ill-conditioned similarity;
  // a failed draw is discarded and redrawn.
  const std::size_t expected = n - inst.geometric_multiplicity;
  for (int attempt = 0; attempt < 16; ++attempt) {
    std::vector<std::vector<long long>> p, p_inv;
    detail::random_unimodular(n, rng, p, p_inv);
    const auto core = detail::conjugate_integer(p, p_inv, shifted_diag);
    DenseMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Complex v{static_cast<double>(core[i][j]), 0.0};
        if (i == j) v += lambda;
        a.set(i, j, v);
      }
    inst.matrix = std::move(a);
    if (numerical_rank(subtract_scaled_identity(inst.matrix, lambda)) == expected)
      return inst;
  }
  throw std::runtime_error("plant_multiple_eigenvalue: construction failed rank check");
}

/// A = D0 + C (+ E): a diagonally dominant core with per-row margin at least
/// `margin`, masked by row-constant (and optionally column-constant) shifts.
/// Off-diagonals of D0 are kept small relative to the margin so the planted
/// structure is recoverable by the median heuristics.
inline PlantedInstance plant_shifted_dominant(std::size_t n, bool two_sided, double margin,
                                              std::uint64_t seed) {
  if (n < 2 || n > 64) throw precondition_error("plant_shifted_dominant: need 2 <= n <= 64");
  if (!(margin > 0.0)) throw precondition_error("plant_shifted_dominant: margin must be > 0");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979323846);
  auto random_in_disk = [&](double radius) {
    const double r = radius * std::sqrt(uni(rng));
    const double th = angle(rng);
    return Complex{r * std::cos(th), r * std::sin(th)};
  };

  const double offdiag_scale = margin / (8.0 * static_cast<double>(n));
  DenseMatrix core(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    double rowsum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Complex z = random_in_disk(offdiag_scale);
      core.set(i, j, z);
      rowsum += std::abs(z);
    }
    const double mag = rowsum + margin + margin * uni(rng);
    const double th = angle(rng);
    core.set(i, i, Complex{mag * std::cos(th), mag * std::sin(th)});
  }

  ShiftVector shifts = ShiftVector::zeros(n, two_sided);
  for (std::size_t i = 0; i < n; ++i) shifts.row_shifts[i] = random_in_disk(2.0);
  if (two_sided)
    for (std::size_t j = 0; j < n; ++j) (*shifts.col_shifts)[j] = random_in_disk(2.0);

  DenseMatrix a = core;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex v = a.at(i, j) + shifts.row_shifts[i];
      if (two_sided) v += (*shifts.col_shifts)[j];
      a.set(i, j, v);
    }

  PlantedInstance inst;
  inst.matrix = std::move(a);
  inst.planted_lambda = Complex{};
  inst.geometric_multiplicity = 0;  // not applicable to this construction
  inst.construction = two_sided ? PlantKind::DominantPlusRowAndColumnConstant
                                : PlantKind::DominantPlusRowConstant;
  inst.planted_shifts = std::move(shifts);
  return inst;
}

}  // namespace gersh::oracle
