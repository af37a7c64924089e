#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "gersh/matrix.hpp"

namespace gersh {

/// Result of minimizing f(t) = sum_j |p_j - t| over the complex plane.
struct WeiszfeldResult {
  Complex minimizer;
  double objective = 0.0;
  int iterations = 0;
  bool converged = false;
  bool collinear_case = false;
};

namespace detail {

inline double fermat_objective(std::span<const Complex> pts, Complex t) {
  double s = 0.0;
  for (Complex p : pts) s += std::abs(p - t);
  return s;
}

inline double point_diameter(std::span<const Complex> pts) {
  double d = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      d = std::max(d, std::abs(pts[i] - pts[j]));
  return d;
}

// Collinearity via the largest normalized triangle area over all triples:
// |sin| of the angle at the first vertex. Uniqueness of the minimizer fails
// exactly in the collinear case, which then reduces to the 1-D median.
inline bool points_collinear(std::span<const Complex> pts) {
  const std::size_t k = pts.size();
  if (k <= 2) return true;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      for (std::size_t l = j + 1; l < k; ++l) {
        const Complex u = pts[j] - pts[i];
        const Complex v = pts[l] - pts[i];
        const double du = std::abs(u), dv = std::abs(v);
        if (du == 0.0 || dv == 0.0) continue;
        const double area = std::abs(u.real() * v.imag() - u.imag() * v.real());
        if (area / (du * dv) > 1e-12) return false;
      }
  return true;
}

inline WeiszfeldResult collinear_median(std::span<const Complex> pts) {
  WeiszfeldResult r;
  r.collinear_case = true;
  r.converged = true;
  // Direction along the farthest pair; all points project onto this line.
  std::size_t a = 0, b = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const double d = std::abs(pts[i] - pts[j]);
      if (d > best) {
        best = d;
        a = i;
        b = j;
      }
    }
  if (best <= 0.0) {  // all points coincide
    r.minimizer = pts[0];
    r.objective = 0.0;
    return r;
  }
  const Complex origin = pts[a];
  const Complex dir = (pts[b] - pts[a]) / best;
  std::vector<double> coords;
  coords.reserve(pts.size());
  for (Complex p : pts)
    coords.push_back((std::conj(dir) * (p - origin)).real());
  std::stable_sort(coords.begin(), coords.end());
  const std::size_t n = coords.size();
  const double mid = (n % 2 == 1) ? coords[n / 2]
                                  : 0.5 * (coords[n / 2 - 1] + coords[n / 2]);
  r.minimizer = origin + dir * mid;
  r.objective = fermat_objective(pts, r.minimizer);
  return r;
}

}  // namespace detail

/// Weiszfeld iteration for the geometric median (Fermat-Weber point).
/// Converged means the first-order residual is <= tol: the gradient norm away
/// from the input points, or the excess of the pulled subgradient over the
/// anchor's multiplicity at an input point. Collinear inputs take the exact
/// 1-D median path instead.
inline WeiszfeldResult geometric_median(std::span<const Complex> points,
                                        double tol = 1e-10, int max_iter = 1000) {
  if (points.empty()) throw precondition_error("geometric_median: at least one point required");
  if (!(tol > 0.0)) throw precondition_error("geometric_median: tol must be positive");
  for (Complex p : points)
    if (!is_finite(p)) throw precondition_error("geometric_median: non-finite point");

  if (detail::points_collinear(points)) return detail::collinear_median(points);

  const double diameter = detail::point_diameter(points);
  const double anchor_eps = 1e-14 * (1.0 + diameter);

  // The minimizer sits at an input point iff the pulled subgradient there is
  // covered by the point's multiplicity. Checking that exactly up front
  // avoids the classic Weiszfeld stall of crawling toward an anchor.
  for (Complex p : points) {
    Complex pull{};
    double multiplicity = 0.0;
    for (Complex q : points) {
      const double d = std::abs(p - q);
      if (d <= anchor_eps) {
        multiplicity += 1.0;
        continue;
      }
      pull += (p - q) / d;
    }
    if (std::abs(pull) - multiplicity <= tol) {
      WeiszfeldResult r;
      r.minimizer = p;
      r.objective = detail::fermat_objective(points, p);
      r.converged = true;
      return r;
    }
  }

  // Start from the input point with the smallest objective.
  Complex t = points[0];
  double t_obj = detail::fermat_objective(points, t);
  for (Complex p : points) {
    const double o = detail::fermat_objective(points, p);
    if (o < t_obj) {
      t_obj = o;
      t = p;
    }
  }

  WeiszfeldResult result;
  Complex best = t;
  double best_obj = t_obj;

  int iter = 0;
  for (; iter < max_iter; ++iter) {
    // Anchor handling: sitting on an input point, optimality is a
    // subgradient condition, and the descent step must step off the anchor.
    std::ptrdiff_t anchor = -1;
    for (std::size_t j = 0; j < points.size(); ++j)
      if (std::abs(points[j] - t) <= anchor_eps) {
        anchor = static_cast<std::ptrdiff_t>(j);
        break;
      }

    Complex next;
    if (anchor >= 0) {
      const Complex p = points[static_cast<std::size_t>(anchor)];
      Complex pull{};       // sum of unit vectors from the other points
      double inv_sum = 0.0;
      double multiplicity = 0.0;
      for (Complex q : points) {
        const double d = std::abs(p - q);
        if (d <= anchor_eps) {
          multiplicity += 1.0;
          continue;
        }
        pull += (p - q) / d;
        inv_sum += 1.0 / d;
      }
      const double residual = std::abs(pull) - multiplicity;
      if (residual <= tol) {
        result.converged = true;
        best = p;
        best_obj = detail::fermat_objective(points, p);
        break;
      }
      next = p - (residual / inv_sum) * (pull / std::abs(pull));
    } else {
      Complex num{};
      double den = 0.0;
      Complex grad{};
      double hxx = 0.0, hxy = 0.0, hyy = 0.0;
      for (Complex q : points) {
        const Complex r = t - q;
        const double d = std::abs(r);
        num += q / d;
        den += 1.0 / d;
        grad += r / d;
        const double d3 = d * d * d;
        hxx += 1.0 / d - r.real() * r.real() / d3;
        hxy += -r.real() * r.imag() / d3;
        hyy += 1.0 / d - r.imag() * r.imag() / d3;
      }
      if (std::abs(grad) <= tol) {
        result.converged = true;
        // Prefer the certified point over an earlier objective tie.
        best = t;
        best_obj = detail::fermat_objective(points, t);
        break;
      }
      next = num / den;
      // Newton polish for the smooth regime: plain Weiszfeld crawls along
      // nearly flat valleys (near-coincident point clusters). The step is
      // taken only when it actually improves on the Weiszfeld update, which
      // keeps the objective monotone.
      const double det = hxx * hyy - hxy * hxy;
      if (std::abs(det) > 1e-30) {
        const Complex newton =
            t - Complex{(hyy * grad.real() - hxy * grad.imag()) / det,
                        (hxx * grad.imag() - hxy * grad.real()) / det};
        if (is_finite(newton) && detail::fermat_objective(points, newton) <
                                     detail::fermat_objective(points, next))
          next = newton;
      }
    }

    t = next;
    const double obj = detail::fermat_objective(points, t);
    if (obj < best_obj) {
      best_obj = obj;
      best = t;
    }
  }

  result.minimizer = best;
  result.objective = best_obj;
  result.iterations = iter;
  return result;
}

inline WeiszfeldResult geometric_median(const std::vector<Complex>& points,
                                        double tol = 1e-10, int max_iter = 1000) {
  return geometric_median(std::span<const Complex>(points), tol, max_iter);
}

}  // namespace gersh
