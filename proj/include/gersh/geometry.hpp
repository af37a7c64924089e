#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gersh/certificate.hpp"
#include "gersh/matrix.hpp"

namespace gersh {

/// k point pairs (p_i, q_i) in R^d claiming the approximate cross-polytope
/// distance pattern at slack epsilon.
struct PointPairSet {
  std::size_t dimension = 0;
  std::vector<std::pair<std::vector<double>, std::vector<double>>> pairs;
  double epsilon = 0.0;
};

inline void validate_point_pairs(const PointPairSet& s, const char* who) {
  if (s.dimension == 0) throw precondition_error(std::string(who) + ": dimension must be positive");
  if (s.pairs.empty()) throw precondition_error(std::string(who) + ": at least one pair required");
  if (!(s.epsilon >= 0.0)) throw precondition_error(std::string(who) + ": epsilon must be >= 0");
  for (const auto& [p, q] : s.pairs) {
    if (p.size() != s.dimension || q.size() != s.dimension)
      throw precondition_error(std::string(who) + ": point dimension mismatch");
    for (double x : p)
      if (!std::isfinite(x)) throw precondition_error(std::string(who) + ": non-finite coordinate");
    for (double x : q)
      if (!std::isfinite(x)) throw precondition_error(std::string(who) + ": non-finite coordinate");
  }
}

namespace detail {

inline double squared_distance(const std::vector<double>& x, const std::vector<double>& y) {
  double s = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double d = x[k] - y[k];
    s += d * d;
  }
  return s;
}

inline double dot_diff(const std::vector<double>& x, const std::vector<double>& y,
                       const std::vector<double>& base) {
  double s = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) s += (x[k] - base[k]) * (y[k] - base[k]);
  return s;
}

}  // namespace detail

struct ConstraintResidual {
  enum class Kind { Antipodal, CrossPQ, CrossPP, CrossQQ };
  Kind kind;
  std::size_t i;
  std::size_t j;
  double residual;  // |squared distance - target|
  double limit;
};

struct ConstraintReport {
  bool ok = true;
  double max_excess = -std::numeric_limits<double>::infinity();  // residual - limit
  std::vector<ConstraintResidual> violations;
};

/// Distance constraints: antipodal (p_i - q_i)^2 = 4 (within 1e-9, or within
/// epsilon in relaxed mode) and all cross squared distances within epsilon
/// of 2. Limits carry a 1e-12 absolute slack so configurations that meet a
/// bound exactly (the Hadamard construction) survive rounding.
inline ConstraintReport check_distance_constraints(const PointPairSet& s, bool relaxed) {
  validate_point_pairs(s, "check_distance_constraints");
  ConstraintReport report;
  const double anti_limit = relaxed ? s.epsilon : 1e-9;
  auto record = [&](ConstraintResidual::Kind kind, std::size_t i, std::size_t j,
                    double residual, double limit) {
    report.max_excess = std::max(report.max_excess, residual - limit);
    if (residual > limit + 1e-12) {
      report.ok = false;
      report.violations.push_back(ConstraintResidual{kind, i, j, residual, limit});
    }
  };
  const std::size_t k = s.pairs.size();
  for (std::size_t i = 0; i < k; ++i) {
    record(ConstraintResidual::Kind::Antipodal, i, i,
           std::abs(detail::squared_distance(s.pairs[i].first, s.pairs[i].second) - 4.0),
           anti_limit);
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      record(ConstraintResidual::Kind::CrossPQ, i, j,
             std::abs(detail::squared_distance(s.pairs[i].first, s.pairs[j].second) - 2.0),
             s.epsilon);
      if (i < j) {
        record(ConstraintResidual::Kind::CrossPP, i, j,
               std::abs(detail::squared_distance(s.pairs[i].first, s.pairs[j].first) - 2.0),
               s.epsilon);
        record(ConstraintResidual::Kind::CrossQQ, i, j,
               std::abs(detail::squared_distance(s.pairs[i].second, s.pairs[j].second) - 2.0),
               s.epsilon);
      }
    }
  }
  return report;
}

/// Gram-style matrix m_{i,j} = (p_i - p_1) . (q_j - p_1) over pairs
/// 2..d+3 of the first d+3 pairs; (d+2)x(d+2), rank at most d when the
/// points genuinely live in R^d.
inline DenseMatrix build_gram(const PointPairSet& s) {
  validate_point_pairs(s, "build_gram");
  const std::size_t d = s.dimension;
  if (s.pairs.size() < d + 3) throw precondition_error("build_gram: k >= d+3 required");
  const std::vector<double>& base = s.pairs[0].first;
  const std::size_t m = d + 2;
  DenseMatrix gram(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      gram.set(i, j, Complex{detail::dot_diff(s.pairs[i + 1].first, s.pairs[j + 1].second, base), 0.0});
  return gram;
}

/// Unit-shift dominance certificate |m_ii - 1| > sum_{j!=i} |m_ij - 1|;
/// success proves rank(M) >= size - 1.
inline Certificate gram_rank_certificate(const DenseMatrix& m) {
  require_square(m, "gram_rank_certificate");
  const std::size_t n = m.rows();
  std::vector<double> margins(n);
  ShiftVector shifts;
  shifts.row_shifts.assign(n, Complex{1.0, 0.0});
  for (std::size_t i = 0; i < n; ++i) {
    double rhs = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) rhs += std::abs(m.at(i, j) - 1.0);
    margins[i] = std::abs(m.at(i, i) - 1.0) - rhs;
  }
  return make_certificate(std::move(margins), std::move(shifts), Complex{},
                          static_cast<int>(n) - 1);
}

enum class OctahedronConclusion { WithinBound, InfeasibleByRank, NotApplicable };

inline const char* to_string(OctahedronConclusion c) {
  switch (c) {
    case OctahedronConclusion::WithinBound: return "WithinBound";
    case OctahedronConclusion::InfeasibleByRank: return "InfeasibleByRank";
    default: return "NotApplicable";
  }
}

struct FeasibilityVerdict {
  bool constraints_ok = false;
  bool bound_applicable = false;
  std::optional<DenseMatrix> gram;
  std::optional<Certificate> certificate;
  OctahedronConclusion conclusion = OctahedronConclusion::NotApplicable;
  double bound = 0.0;
  double epsilon = 0.0;
  std::size_t dimension = 0;
  std::size_t k = 0;
  bool relaxed = false;
  double max_constraint_excess = 0.0;
};

inline double octahedron_epsilon_bound(std::size_t d, bool relaxed) {
  return 2.0 / static_cast<double>(relaxed ? 3 * d + 6 : 3 * d + 5);
}

/// Feasibility check: k <= d+2 needs no certificate; k >= d+3
/// with epsilon under the bound runs the unit-shift certificate on the Gram
/// matrix, whose success contradicts rank(M) <= d. Above the bound the result
/// says nothing.
inline FeasibilityVerdict octahedron_verdict(const PointPairSet& s, bool relaxed) {
  validate_point_pairs(s, "octahedron_verdict");
  FeasibilityVerdict v;
  v.dimension = s.dimension;
  v.k = s.pairs.size();
  v.epsilon = s.epsilon;
  v.relaxed = relaxed;
  v.bound = octahedron_epsilon_bound(s.dimension, relaxed);
  v.bound_applicable = s.epsilon < v.bound;
  const ConstraintReport constraints = check_distance_constraints(s, relaxed);
  v.constraints_ok = constraints.ok;
  v.max_constraint_excess = constraints.max_excess;
  if (v.k <= s.dimension + 2) {
    v.conclusion = OctahedronConclusion::WithinBound;
    return v;
  }
  v.gram = build_gram(s);
  if (!v.bound_applicable) {
    v.conclusion = OctahedronConclusion::NotApplicable;
    return v;
  }
  v.certificate = gram_rank_certificate(*v.gram);
  v.conclusion = v.certificate->verdict ? OctahedronConclusion::InfeasibleByRank
                                        : OctahedronConclusion::NotApplicable;
  return v;
}

/// Gram-level variant for synthetic matrices that respect the proof's entry
/// bounds; constraints_ok reports those bounds instead of point distances.
inline FeasibilityVerdict octahedron_verdict_gram(const DenseMatrix& gram,
                                                  std::size_t dimension, double epsilon,
                                                  bool relaxed) {
  require_square(gram, "octahedron_verdict_gram");
  if (gram.rows() != dimension + 2)
    throw precondition_error("octahedron_verdict_gram: gram must be (d+2)x(d+2)");
  FeasibilityVerdict v;
  v.dimension = dimension;
  v.k = dimension + 3;  // a Gram matrix of this shape presumes d+3 pairs
  v.epsilon = epsilon;
  v.relaxed = relaxed;
  v.bound = octahedron_epsilon_bound(dimension, relaxed);
  v.bound_applicable = epsilon < v.bound;
  bool entry_bounds_ok = true;
  double excess = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < gram.rows(); ++i)
    for (std::size_t j = 0; j < gram.cols(); ++j) {
      const double dev = std::abs(gram.at(i, j) - 1.0);
      if (i == j) {
        entry_bounds_ok = entry_bounds_ok && dev >= 1.0 - epsilon;
        excess = std::max(excess, (1.0 - epsilon) - dev);
      } else {
        entry_bounds_ok = entry_bounds_ok && dev <= 1.5 * epsilon;
        excess = std::max(excess, dev - 1.5 * epsilon);
      }
    }
  v.constraints_ok = entry_bounds_ok;
  v.max_constraint_excess = excess;
  v.gram = gram;
  if (!v.bound_applicable) {
    v.conclusion = OctahedronConclusion::NotApplicable;
    return v;
  }
  v.certificate = gram_rank_certificate(gram);
  v.conclusion = v.certificate->verdict ? OctahedronConclusion::InfeasibleByRank
                                        : OctahedronConclusion::NotApplicable;
  return v;
}

/// Sylvester Hadamard matrix of power-of-two order, entries +-1.
inline std::vector<std::vector<int>> hadamard_matrix(std::size_t order) {
  if (order == 0 || (order & (order - 1)) != 0)
    throw precondition_error("hadamard_matrix: order must be a power of two");
  std::vector<std::vector<int>> h{{1}};
  for (std::size_t n = 1; n < order; n *= 2) {
    std::vector<std::vector<int>> next(2 * n, std::vector<int>(2 * n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        next[i][j] = h[i][j];
        next[i][j + n] = h[i][j];
        next[i + n][j] = h[i][j];
        next[i + n][j + n] = -h[i][j];
      }
    h = std::move(next);
  }
  return h;
}

/// Near-extremal configuration: rows of +-H_n / sqrt(d) with the last two
/// coordinates deleted, d = n-2. Antipodal squared distances are exactly 4;
/// the others land in [2 - 4/d, 2 + 4/d], so epsilon is set to 4/d.
inline PointPairSet hadamard_octahedron(std::size_t order) {
  if (order < 4 || (order & (order - 1)) != 0)
    throw precondition_error("hadamard_octahedron: order must be a power of two >= 4");
  const std::size_t d = order - 2;
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  const auto h = hadamard_matrix(order);
  PointPairSet s;
  s.dimension = d;
  s.epsilon = 4.0 / static_cast<double>(d);
  s.pairs.reserve(order);
  for (std::size_t i = 0; i < order; ++i) {
    std::vector<double> p(d), q(d);
    for (std::size_t j = 0; j < d; ++j) {
      p[j] = scale * h[i][j];
      q[j] = -p[j];
    }
    s.pairs.emplace_back(std::move(p), std::move(q));
  }
  return s;
}

}  // namespace gersh
