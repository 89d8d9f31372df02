#pragma once

// Brute-force geometric cofacet counter. Places the labeled points on the
// unit circle and decides origin containment with orientation predicates,
// independently of the combinatorial gap rule in gale_diagram.hpp.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>

#include "neighborly/error.hpp"
#include "neighborly/gale_diagram.hpp"

namespace neighborly::oracle {

/// Largest n and label sum the oracle accepts. The cost is O(n^3) in the
/// positions; the label guard only keeps the products in a sane range.
inline constexpr std::size_t kMaxDiameters = 10;
inline constexpr Count kMaxLabelSum = 80;

/// Orientation magnitudes below this are treated as collinear. At n <= 10
/// the true nonzero orientations of regular-polygon vertices with the
/// origin are above 0.3, so the threshold is far from both sides.
inline constexpr double kOrientationEps = 1e-9;

struct PlanarPoint {
  double x = 0;
  double y = 0;
};

/// Vertex `position` of the regular 2n-gon of radius 1, numbered clockwise.
inline PlanarPoint polygon_vertex(std::size_t position, std::size_t n) {
  const double angle = std::numbers::pi * static_cast<double>(position) / static_cast<double>(n);
  return {std::cos(angle), -std::sin(angle)};
}

/// Twice the signed area of (p, q, r); positive for counter-clockwise.
inline double orientation(const PlanarPoint& p, const PlanarPoint& q, const PlanarPoint& r) {
  return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

/// True iff the origin lies strictly inside the triangle on polygon
/// positions a, b, c. Triangles with O on an edge return false.
inline bool triangle_contains_origin(std::size_t a, std::size_t b, std::size_t c, std::size_t n) {
  const PlanarPoint o{0.0, 0.0};
  const PlanarPoint pa = polygon_vertex(a, n), pb = polygon_vertex(b, n), pc = polygon_vertex(c, n);
  const double s1 = orientation(pa, pb, o);
  const double s2 = orientation(pb, pc, o);
  const double s3 = orientation(pc, pa, o);
  const bool all_pos = s1 > kOrientationEps && s2 > kOrientationEps && s3 > kOrientationEps;
  const bool all_neg = s1 < -kOrientationEps && s2 < -kOrientationEps && s3 < -kOrientationEps;
  return all_pos || all_neg;
}

/// Definitional cofacet count: center points, antipodal pairs (detected by
/// index), and every distinct position triple whose triangle contains O.
inline Count oracle_count_cofacets(const GaleDiagram& d) {
  const std::size_t n = d.diameters();
  if (n > kMaxDiameters || d.label_sum() > kMaxLabelSum)
    throw OracleTooLarge("oracle accepts n <= " + std::to_string(kMaxDiameters) + " and label sum <= " +
                         std::to_string(kMaxLabelSum) + "; got n = " + std::to_string(n) +
                         ", sum = " + std::to_string(d.label_sum()));
  const std::size_t len = d.positions();
  const auto m = d.labels();
  Count total = d.center();
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = i + 1; j < len; ++j)
      if (j == i + n) total += Count{m[i]} * m[j];
  for (std::size_t a = 0; a < len; ++a)
    for (std::size_t b = a + 1; b < len; ++b)
      for (std::size_t c = b + 1; c < len; ++c)
        if (triangle_contains_origin(a, b, c, n)) total += Count{m[a]} * m[b] * m[c];
  return total;
}

}  // namespace neighborly::oracle
