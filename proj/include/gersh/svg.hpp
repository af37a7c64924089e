#pragma once

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "gersh/disk.hpp"

namespace gersh::svg {

namespace detail {

inline std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", x);
  return buf;
}

}  // namespace detail

/// Deterministic SVG of a disk union in the complex plane (imaginary axis
/// up), optionally with eigenvalue markers. The viewBox is the disk bounding
/// box plus a 10% margin; no timestamps or other varying content.
inline std::string disks_svg(const DiskUnion& disks,
                             const std::vector<Complex>& markers = {}) {
  double min_x = 0.0, max_x = 0.0, min_y = 0.0, max_y = 0.0;
  bool first = true;
  auto grow = [&](double x, double y, double r) {
    if (first) {
      min_x = x - r;
      max_x = x + r;
      min_y = y - r;
      max_y = y + r;
      first = false;
      return;
    }
    min_x = std::min(min_x, x - r);
    max_x = std::max(max_x, x + r);
    min_y = std::min(min_y, y - r);
    max_y = std::max(max_y, y + r);
  };
  auto each_disk = [&](auto&& fn) {
    for (const RowRegion& row : disks.rows) {
      fn(row.primary);
      if (row.secondary) fn(*row.secondary);
    }
  };
  each_disk([&](const Disk& d) { grow(d.center.real(), -d.center.imag(), d.radius); });
  for (Complex z : markers) grow(z.real(), -z.imag(), 0.0);
  if (first) grow(0.0, 0.0, 1.0);

  double extent = std::max({max_x - min_x, max_y - min_y, 1e-9});
  // degenerate content (all point disks at one spot) still gets a visible frame
  const double pad = extent < 1e-6 ? 0.5 : 0.1 * extent;
  min_x -= pad;
  max_x += pad;
  min_y -= pad;
  max_y += pad;
  extent = std::max(max_x - min_x, max_y - min_y);
  const double stroke = extent / 300.0;
  const double marker_r = extent / 80.0;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" viewBox=\"";
  out += detail::num(min_x) + " " + detail::num(min_y) + " " +
         detail::num(max_x - min_x) + " " + detail::num(max_y - min_y) + "\">\n";
  each_disk([&](const Disk& d) {
    out += "  <circle cx=\"" + detail::num(d.center.real()) + "\" cy=\"" +
           detail::num(-d.center.imag()) + "\" r=\"" + detail::num(d.radius) +
           "\" fill=\"#1f6feb\" fill-opacity=\"0.06\" stroke=\"#1f6feb\" stroke-width=\"" +
           detail::num(stroke) + "\"/>\n";
    out += "  <circle cx=\"" + detail::num(d.center.real()) + "\" cy=\"" +
           detail::num(-d.center.imag()) + "\" r=\"" + detail::num(stroke * 1.5) +
           "\" fill=\"#1f6feb\"/>\n";
  });
  for (Complex z : markers) {
    out += "  <circle cx=\"" + detail::num(z.real()) + "\" cy=\"" + detail::num(-z.imag()) +
           "\" r=\"" + detail::num(marker_r) +
           "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"" + detail::num(stroke) +
           "\"/>\n";
    out += "  <circle cx=\"" + detail::num(z.real()) + "\" cy=\"" + detail::num(-z.imag()) +
           "\" r=\"" + detail::num(stroke) + "\" fill=\"#d62728\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace gersh::svg
