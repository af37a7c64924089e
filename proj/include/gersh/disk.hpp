#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

#include "gersh/matrix.hpp"

namespace gersh {

/// Closed disk in the complex plane; membership includes the boundary.
struct Disk {
  Complex center;
  double radius = 0.0;

  bool contains(Complex z, double tol = 0.0) const {
    return std::abs(z - center) <= radius + tol;
  }
};

inline bool disk_contains(const Disk& d, Complex z, double tol) {
  return d.contains(z, tol);
}

/// Localization region contributed by a single matrix row: the intersection
/// of one or two disks. Two disks appear only in the odd-n reduced family,
/// where a point is localized by the row only if both endpoint disks hold.
struct RowRegion {
  Disk primary;
  std::optional<Disk> secondary;

  bool contains(Complex z, double tol = 0.0) const {
    if (!primary.contains(z, tol)) return false;
    return !secondary || secondary->contains(z, tol);
  }
};

/// One region per row of the source matrix, in row order. A point is in the
/// union if some row's region contains it.
struct DiskUnion {
  std::vector<RowRegion> rows;

  std::size_t size() const { return rows.size(); }

  const Disk& disk(std::size_t i) const { return rows.at(i).primary; }

  bool contains(Complex z, double tol = 0.0) const {
    for (const RowRegion& r : rows)
      if (r.contains(z, tol)) return true;
    return false;
  }
};

inline DiskUnion make_disk_union(std::vector<Disk> disks) {
  DiskUnion u;
  u.rows.reserve(disks.size());
  for (Disk& d : disks) u.rows.push_back(RowRegion{d, std::nullopt});
  return u;
}

}  // namespace gersh
