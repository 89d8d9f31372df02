#pragma once

// (dimension, vertices, facets) bookkeeping for pyramids, joins and the
// iterated self-join family, plus builders for three reference diagrams.

#include <cstdint>
#include <string>
#include <vector>

#include "neighborly/binomial.hpp"
#include "neighborly/error.hpp"
#include "neighborly/gale_diagram.hpp"

namespace neighborly::constructions {

using Int = std::int64_t;

/// Dimension, vertex count and facet count of a polytope.
struct VFPair {
  Int d = 0;
  Int vertices = 0;
  Int facets = 0;

  /// facets - vertices
  Int gap() const noexcept { return facets - vertices; }

  friend bool operator==(const VFPair&, const VFPair&) = default;
};

inline VFPair make_vfpair(Int d, Int vertices, Int facets) {
  if (d < 1) throw DomainError("polytope dimension must be >= 1");
  if (vertices < d + 1) throw DomainError("a d-polytope has at least d+1 vertices");
  if (facets < d + 1) throw DomainError("a d-polytope has at least d+1 facets");
  return {d, vertices, facets};
}

/// Pyramid over p: one more dimension, vertex and facet.
inline VFPair pyramid(const VFPair& p) { return {p.d + 1, p.vertices + 1, p.facets + 1}; }

/// Join p * q: dimension d + d' + 1, vertex and facet counts add.
inline VFPair join(const VFPair& p, const VFPair& q) {
  return {p.d + q.d + 1, p.vertices + q.vertices, p.facets + q.facets};
}

/// P_m for a 2-neighborly 4-polytope P_0 on n >= 5 vertices, with
/// P_{m+1} = P_m * P_m: d = 5*2^m - 1, 2^m n vertices, 2^{m-1} n (n-3) facets.
inline VFPair recursive_family(Int m, Int n) {
  if (m < 0) throw DomainError("recursive_family: m >= 0 required");
  if (n < 5) throw DomainError("recursive_family: n >= 5 required");
  if (m > 40) throw ArithmeticOverflow("recursive_family: m too large for 64-bit counts");
  const Int base_facets = n * (n - 3) / 2;  // n(n-3) is always even
  if (m == 0) return {4, n, base_facets};
  const Int pow = Int{1} << m;
  return {5 * pow - 1, neighborly::detail::narrow(static_cast<Wide>(pow) * n),
          neighborly::detail::narrow(static_cast<Wide>(pow / 2) * n * (n - 3))};
}

/// Exact test of f - f0 < f0 (f0 - d - 1) / (0.4 d), i.e.
/// 2 d (f - f0) < 5 f0 (f0 - d - 1).
inline bool below_join_family_gap_bound(const VFPair& p) {
  const Wide lhs = static_cast<Wide>(2) * p.d * p.gap();
  const Wide rhs = static_cast<Wide>(5) * p.vertices * (p.vertices - p.d - 1);
  return lhs < rhs;
}

// ---------------------------------------------------------------------------
// Reference diagrams, all with center 0.

/// n = 2, every label k+1: 4(k+1) vertices, 2(k+1)^2 facets.
inline GaleDiagram build_example1(unsigned k) {
  if (k < 2) throw DomainError("example diagrams need k >= 2");
  return GaleDiagram(std::vector<Label>(4, k + 1));
}

/// n = k+2, every label 1: 2k+4 vertices, 2 C(k+2,3) + k+2 facets.
inline GaleDiagram build_example2(unsigned k) {
  if (k < 2) throw DomainError("example diagrams need k >= 2");
  return GaleDiagram(std::vector<Label>(2 * (k + 2), 1));
}

/// n = 2k+3, m_{2i} = 0, m_{2i-1} = 1: simplicial, 2k+3 vertices,
/// (2k+3)(k+2)(k+1)/6 facets.
inline GaleDiagram build_example3(unsigned k) {
  if (k < 2) throw DomainError("example diagrams need k >= 2");
  std::vector<Label> labels(2 * (2 * k + 3));
  for (std::size_t p = 0; p < labels.size(); ++p) labels[p] = p % 2;
  return GaleDiagram(std::move(labels));
}

inline GaleDiagram build_example(int which, unsigned k) {
  switch (which) {
    case 1: return build_example1(k);
    case 2: return build_example2(k);
    case 3: return build_example3(k);
    default: throw DomainError("example index must be 1, 2 or 3");
  }
}

/// Facet counts the three examples are known to have, as closed forms in k.
inline Int example_facets_closed_form(int which, Int k) {
  switch (which) {
    case 1: return 2 * (k + 1) * (k + 1);
    case 2: return 2 * binomial(k + 2, 3) + k + 2;
    case 3: return (2 * k + 3) * (k + 2) * (k + 1) / 6;
    default: throw DomainError("example index must be 1, 2 or 3");
  }
}

inline Int example_vertices_closed_form(int which, Int k) {
  switch (which) {
    case 1: return 4 * (k + 1);
    case 2: return 2 * k + 4;
    case 3: return 2 * k + 3;
    default: throw DomainError("example index must be 1, 2 or 3");
  }
}

}  // namespace neighborly::constructions
