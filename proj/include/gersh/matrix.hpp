#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gersh {

using Complex = std::complex<double>;

/// Violated operation precondition (non-square input, bad row index, ...).
/// The CLI maps this to exit code 3.
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed input file. The CLI maps this to exit code 2.
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Row-major dense complex matrix. NaN/inf never enter: every entry is
/// validated at construction and on mutation.
class DenseMatrix {
 public:
  DenseMatrix() = default;

  DenseMatrix(std::size_t n_rows, std::size_t n_cols)
      : rows_(n_rows), cols_(n_cols), entries_(n_rows * n_cols) {
    if (n_rows == 0 || n_cols == 0)
      throw precondition_error("DenseMatrix: dimensions must be positive");
  }

  DenseMatrix(std::size_t n_rows, std::size_t n_cols, std::vector<Complex> entries)
      : rows_(n_rows), cols_(n_cols), entries_(std::move(entries)) {
    if (n_rows == 0 || n_cols == 0)
      throw precondition_error("DenseMatrix: dimensions must be positive");
    if (entries_.size() != rows_ * cols_)
      throw precondition_error("DenseMatrix: entry count does not match dimensions");
    for (const Complex& z : entries_)
      if (!is_finite(z)) throw precondition_error("DenseMatrix: non-finite entry");
  }

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = 1.0;
    return m;
  }

  /// Build from nested real rows; ragged input is rejected.
  static DenseMatrix from_real(const std::vector<std::vector<double>>& rows) {
    if (rows.empty() || rows.front().empty())
      throw precondition_error("DenseMatrix: empty input");
    const std::size_t cols = rows.front().size();
    std::vector<Complex> entries;
    entries.reserve(rows.size() * cols);
    for (const auto& r : rows) {
      if (r.size() != cols) throw precondition_error("DenseMatrix: ragged rows");
      for (double x : r) entries.emplace_back(x, 0.0);
    }
    return DenseMatrix(rows.size(), cols, std::move(entries));
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_ && rows_ > 0; }

  const Complex& at(std::size_t i, std::size_t j) const {
    check_index(i, j);
    return entries_[i * cols_ + j];
  }

  void set(std::size_t i, std::size_t j, Complex value) {
    check_index(i, j);
    if (!is_finite(value)) throw precondition_error("DenseMatrix: non-finite entry");
    entries_[i * cols_ + j] = value;
  }

  const std::vector<Complex>& entries() const { return entries_; }

  bool is_real() const {
    for (const Complex& z : entries_)
      if (z.imag() != 0.0) return false;
    return true;
  }

  double max_abs() const {
    double m = 0.0;
    for (const Complex& z : entries_) m = std::max(m, std::abs(z));
    return m;
  }

  DenseMatrix transpose() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.entries_[j * rows_ + i] = at(i, j);
    return t;
  }

  DenseMatrix scaled(Complex s) const {
    DenseMatrix r = *this;
    for (Complex& z : r.entries_) {
      z *= s;
      if (!is_finite(z)) throw precondition_error("DenseMatrix: scaling overflow");
    }
    return r;
  }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  void check_index(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw precondition_error("DenseMatrix: index out of range");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

inline DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) throw precondition_error("multiply: inner dimensions differ");
  DenseMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a.at(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        c.set(i, j, c.at(i, j) + aik * b.at(k, j));
    }
  return c;
}

/// a - lambda*I.
inline DenseMatrix subtract_scaled_identity(const DenseMatrix& a, Complex lambda) {
  if (!a.is_square()) throw precondition_error("subtract_scaled_identity: square matrix required");
  DenseMatrix r = a;
  for (std::size_t i = 0; i < a.rows(); ++i) r.set(i, i, a.at(i, i) - lambda);
  return r;
}

inline void require_square(const DenseMatrix& a, const char* who) {
  if (!a.is_square()) throw precondition_error(std::string(who) + ": square matrix required");
}

inline void require_real(const DenseMatrix& a, const char* who) {
  if (!a.is_real()) throw precondition_error(std::string(who) + ": real matrix required");
}

inline void require_row(const DenseMatrix& a, std::size_t i, const char* who) {
  if (i >= a.rows()) throw precondition_error(std::string(who) + ": row index out of range");
}

}  // namespace gersh
