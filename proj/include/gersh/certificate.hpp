#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "gersh/matrix.hpp"

namespace gersh {

/// Per-row shifts c_i, optionally paired with per-column shifts e_j.
struct ShiftVector {
  std::vector<Complex> row_shifts;
  std::optional<std::vector<Complex>> col_shifts;

  static ShiftVector zeros(std::size_t n, bool with_cols = false) {
    ShiftVector s;
    s.row_shifts.assign(n, Complex{});
    if (with_cols) s.col_shifts = std::vector<Complex>(n, Complex{});
    return s;
  }
};

inline void validate_shifts(const ShiftVector& s, std::size_t n, bool need_cols,
                            const char* who) {
  if (s.row_shifts.size() != n)
    throw precondition_error(std::string(who) + ": row_shifts length != n");
  for (Complex c : s.row_shifts)
    if (!is_finite(c)) throw precondition_error(std::string(who) + ": non-finite shift");
  if (need_cols && !s.col_shifts)
    throw precondition_error(std::string(who) + ": col_shifts required");
  if (s.col_shifts) {
    if (s.col_shifts->size() != n)
      throw precondition_error(std::string(who) + ": col_shifts length != n");
    for (Complex e : *s.col_shifts)
      if (!is_finite(e)) throw precondition_error(std::string(who) + ": non-finite shift");
  }
}

/// Outcome of a shifted-dominance check. rank_lower_bound is the certified
/// tier: n with zero shifts, n-1 with row shifts, n-2 with row+column shifts,
/// and 0 when the verdict is false (no bound certified).
struct Certificate {
  bool verdict = false;
  std::vector<double> row_margins;  // LHS - RHS per row; verdict iff all > 0
  ShiftVector shifts;
  int rank_lower_bound = 0;
  Complex lambda;

  double min_margin() const {
    double m = std::numeric_limits<double>::infinity();
    for (double x : row_margins) m = std::min(m, x);
    return m;
  }
};

inline Certificate make_certificate(std::vector<double> margins, ShiftVector shifts,
                                    Complex lambda, int tier_on_success) {
  Certificate c;
  c.row_margins = std::move(margins);
  c.shifts = std::move(shifts);
  c.lambda = lambda;
  c.verdict = !c.row_margins.empty() &&
              std::all_of(c.row_margins.begin(), c.row_margins.end(),
                          [](double m) { return m > 0.0; });
  c.rank_lower_bound = c.verdict ? tier_on_success : 0;
  return c;
}

}  // namespace gersh
