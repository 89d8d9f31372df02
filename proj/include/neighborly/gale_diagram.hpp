#pragma once

// Reduced Gale diagrams of d-polytopes with d+3 vertices.
//
// A diagram is a labeled regular 2n-gon plus a labeled center point O.
// Positions are 0-based, 0..2n-1 clockwise, with all index arithmetic taken
// mod 2n; position i and position i+n form a diameter.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "neighborly/error.hpp"

namespace neighborly {

using Label = std::uint32_t;
using Count = std::uint64_t;

class GaleDiagram {
 public:
  /// Throws MalformedDiagram unless `labels` has even length >= 4.
  explicit GaleDiagram(std::vector<Label> labels, Label center = 0)
      : labels_(std::move(labels)), center_(center) {
    if (labels_.size() % 2 != 0)
      throw MalformedDiagram("label sequence must have even length 2n, got " + std::to_string(labels_.size()));
    if (labels_.size() < 4)
      throw MalformedDiagram("a reduced Gale diagram needs n >= 2 diameters, got " +
                             std::to_string(labels_.size() / 2));
  }

  /// Number of diameters n.
  std::size_t diameters() const noexcept { return labels_.size() / 2; }
  /// Number of polygon positions 2n.
  std::size_t positions() const noexcept { return labels_.size(); }

  /// Label at position i, wrapping mod 2n in both directions.
  Label operator[](std::ptrdiff_t i) const noexcept { return labels_[wrap(i)]; }
  std::span<const Label> labels() const noexcept { return labels_; }
  Label center() const noexcept { return center_; }

  Count label_sum() const noexcept { return std::accumulate(labels_.begin(), labels_.end(), Count{0}); }
  /// center + sum of labels; the polytope has dimension vertex_count() - 3.
  Count vertex_count() const noexcept { return center_ + label_sum(); }

  std::size_t wrap(std::ptrdiff_t i) const noexcept {
    const auto len = static_cast<std::ptrdiff_t>(labels_.size());
    return static_cast<std::size_t>(((i % len) + len) % len);
  }

  GaleDiagram with_center(Label c) const { return GaleDiagram(labels_, c); }

  friend bool operator==(const GaleDiagram&, const GaleDiagram&) = default;

 private:
  std::vector<Label> labels_;
  Label center_ = 0;
};

// ---------------------------------------------------------------------------
// Dihedral action on positions

/// Labels rotated so that new position p holds old position p + shift.
inline GaleDiagram rotated(const GaleDiagram& d, std::ptrdiff_t shift) {
  std::vector<Label> out(d.positions());
  for (std::size_t p = 0; p < out.size(); ++p) out[p] = d[static_cast<std::ptrdiff_t>(p) + shift];
  return GaleDiagram(std::move(out), d.center());
}

/// Labels reflected so that new position p holds old position axis - p.
inline GaleDiagram reflected(const GaleDiagram& d, std::ptrdiff_t axis = 0) {
  std::vector<Label> out(d.positions());
  for (std::size_t p = 0; p < out.size(); ++p) out[p] = d[axis - static_cast<std::ptrdiff_t>(p)];
  return GaleDiagram(std::move(out), d.center());
}

/// Lexicographically least label sequence over all 4n rotations and
/// reflections of the index cycle. The center is unchanged.
inline GaleDiagram canonical_form(const GaleDiagram& d) {
  const std::size_t len = d.positions();
  std::vector<Label> best(d.labels().begin(), d.labels().end());
  std::vector<Label> cand(len);
  for (std::size_t r = 0; r < len; ++r) {
    for (int flip = 0; flip < 2; ++flip) {
      for (std::size_t p = 0; p < len; ++p) {
        const auto ip = static_cast<std::ptrdiff_t>(p);
        const auto ir = static_cast<std::ptrdiff_t>(r);
        cand[p] = flip ? d[ir - ip] : d[ir + ip];
      }
      if (cand < best) best = cand;
    }
  }
  return GaleDiagram(std::move(best), d.center());
}

// ---------------------------------------------------------------------------
// Semicircles and neighborliness

/// Entry i is the sum of the n-1 labels strictly between position i and its
/// antipode i+n (the open semicircle clockwise from i).
inline std::vector<Count> semicircle_sums(const GaleDiagram& d) {
  const std::size_t len = d.positions();
  const auto n = static_cast<std::ptrdiff_t>(d.diameters());
  std::vector<Count> out(len);
  Count window = 0;
  for (std::ptrdiff_t j = 1; j < n; ++j) window += d[j];
  for (std::size_t i = 0; i < len; ++i) {
    out[i] = window;
    const auto ii = static_cast<std::ptrdiff_t>(i);
    window = window - d[ii + 1] + d[ii + n];
  }
  return out;
}

inline Count min_semicircle_sum(const GaleDiagram& d) {
  const auto s = semicircle_sums(d);
  return *std::min_element(s.begin(), s.end());
}

/// Every open semicircle carries at least k+1 points.
inline bool is_k_neighborly(const GaleDiagram& d, unsigned k) { return min_semicircle_sum(d) >= Count{k} + 1; }

/// Every positive label sits in an open semicircle of sum exactly k+1, so no
/// single decrement keeps the diagram k-neighborly. False for diagrams that
/// are not k-neighborly in the first place.
inline bool is_minimal(const GaleDiagram& d, unsigned k) {
  const auto sums = semicircle_sums(d);
  const Count need = Count{k} + 1;
  if (*std::min_element(sums.begin(), sums.end()) < need) return false;
  const auto n = static_cast<std::ptrdiff_t>(d.diameters());
  const auto len = static_cast<std::ptrdiff_t>(d.positions());
  for (std::ptrdiff_t i = 0; i < len; ++i) {
    if (d[i] == 0) continue;
    // windows containing i start at i-n+1 .. i-1
    bool tight = false;
    for (std::ptrdiff_t s = i - n + 1; s < i && !tight; ++s) tight = sums[d.wrap(s)] == need;
    if (!tight) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Validation

struct PropertyCheck {
  bool pass = true;
  /// First violating index; meaning depends on the property.
  std::optional<std::size_t> at;
};

/// Properties of a diagram against neighborliness target k.
///  p1:  vertex count >= 4, i.e. the polytope dimension d >= 1.
///  p2:  every diameter has positive label sum (`at` = diameter index).
///  p3:  no two adjacent zero labels (`at` = first p with m_p = m_{p+1} = 0).
///  p4:  every open semicircle sums to at least 2 (`at` = semicircle start).
///  n_k: every open semicircle sums to at least k+1.
///  s:   center is 0 and no diameter is complete (`at` = diameter index;
///       unset when only the center fails).
struct ValidationReport {
  unsigned k = 0;
  std::int64_t dimension = 0;
  PropertyCheck p1, p2, p3, p4, n_k, s;

  /// P2 and P3 hold.
  bool reduced() const noexcept { return p2.pass && p3.pass; }
  bool simplicial() const noexcept { return s.pass; }
};

inline ValidationReport validate(const GaleDiagram& d, unsigned k) {
  ValidationReport r;
  r.k = k;
  r.dimension = static_cast<std::int64_t>(d.vertex_count()) - 3;
  r.p1.pass = r.dimension >= 1;

  const std::size_t n = d.diameters();
  const std::size_t len = d.positions();
  const auto at = [&](std::size_t i) { return d[static_cast<std::ptrdiff_t>(i)]; };

  for (std::size_t i = 0; i < n && r.p2.pass; ++i)
    if (at(i) + at(i + n) == 0) r.p2 = {false, i};
  for (std::size_t p = 0; p < len && r.p3.pass; ++p)
    if (at(p) == 0 && at(p + 1) == 0) r.p3 = {false, p};

  const auto sums = semicircle_sums(d);
  for (std::size_t i = 0; i < len; ++i) {
    if (r.p4.pass && sums[i] < 2) r.p4 = {false, i};
    if (r.n_k.pass && sums[i] < Count{k} + 1) r.n_k = {false, i};
  }

  if (d.center() != 0) r.s.pass = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (at(i) > 0 && at(i + n) > 0) {
      r.s = {false, i};
      break;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Cofacets

struct CenterCofacet {
  friend bool operator==(const CenterCofacet&, const CenterCofacet&) = default;
};
struct PairCofacet {
  std::size_t i;  // i < n; partner is i+n
  friend bool operator==(const PairCofacet&, const PairCofacet&) = default;
};
struct TriangleCofacet {
  std::size_t a, b, c;  // ascending positions
  friend bool operator==(const TriangleCofacet&, const TriangleCofacet&) = default;
};

/// One structural cofacet shape with its multiplicity: the product of the
/// labels involved, or m(O) for the center.
struct Cofacet {
  std::variant<CenterCofacet, PairCofacet, TriangleCofacet> shape;
  Count multiplicity = 0;
  friend bool operator==(const Cofacet&, const Cofacet&) = default;
};

/// Positions a < b < c enclose O strictly iff all three circular gaps are
/// shorter than n. A gap of exactly n puts O on an edge.
inline bool encloses_origin(std::size_t a, std::size_t b, std::size_t c, std::size_t n) noexcept {
  return b - a < n && c - b < n && 2 * n - (c - a) < n;
}

inline std::vector<Cofacet> list_cofacets(const GaleDiagram& d) {
  std::vector<Cofacet> out;
  if (d.center() > 0) out.push_back({CenterCofacet{}, d.center()});
  const std::size_t n = d.diameters();
  const std::size_t len = d.positions();
  const auto m = d.labels();
  for (std::size_t i = 0; i < n; ++i)
    if (m[i] > 0 && m[i + n] > 0) out.push_back({PairCofacet{i}, Count{m[i]} * m[i + n]});
  for (std::size_t a = 0; a < len; ++a) {
    if (m[a] == 0) continue;
    for (std::size_t b = a + 1; b < len && b - a < n; ++b) {
      if (m[b] == 0) continue;
      for (std::size_t c = a + n + 1; c < len && c < b + n; ++c) {
        if (m[c] == 0) continue;
        out.push_back({TriangleCofacet{a, b, c}, Count{m[a]} * m[b] * m[c]});
      }
    }
  }
  return out;
}

/// Number of cofacets (= facets of the polytope), counting multiplicities:
/// m(O) + sum_i m_i m_{i+n} + sum over origin-enclosing triangles of the
/// label products. O(n^2) via prefix sums over the third vertex.
inline Count count_cofacets(const GaleDiagram& d) {
  const std::size_t n = d.diameters();
  const std::size_t len = d.positions();
  const auto m = d.labels();
  std::vector<Count> prefix(len + 1, 0);
  for (std::size_t p = 0; p < len; ++p) prefix[p + 1] = prefix[p] + m[p];

  Count total = d.center();
  for (std::size_t i = 0; i < n; ++i) total += Count{m[i]} * m[i + n];
  for (std::size_t a = 0; a < len; ++a) {
    if (m[a] == 0) continue;
    for (std::size_t b = a + 1; b < len && b - a < n; ++b) {
      if (m[b] == 0) continue;
      // third vertex c in (a+n, b+n), ascending so c < 2n
      const std::size_t lo = a + n + 1;
      const std::size_t hi = std::min(b + n, len);
      if (lo >= hi) continue;
      total += Count{m[a]} * m[b] * (prefix[hi] - prefix[lo]);
    }
  }
  return total;
}

/// cofacets - vertices, the quantity minimized by the search.
inline std::int64_t facet_vertex_gap(const GaleDiagram& d) {
  return static_cast<std::int64_t>(count_cofacets(d)) - static_cast<std::int64_t>(d.vertex_count());
}

// ---------------------------------------------------------------------------
// Standard operations and the displace move

namespace detail {

/// Drops positions p and p+n (mod 2n).
inline GaleDiagram drop_diameter(const GaleDiagram& d, std::size_t p) {
  const std::size_t n = d.diameters();
  if (n <= 2) throw DegenerateDiagram("reduction would leave fewer than two diameters");
  const std::size_t q = (p + n) % d.positions();
  std::vector<Label> out;
  out.reserve(d.positions() - 2);
  for (std::size_t i = 0; i < d.positions(); ++i)
    if (i != p && i != q) out.push_back(d.labels()[i]);
  return GaleDiagram(std::move(out), d.center());
}

}  // namespace detail

/// One D-step: delete the first empty diameter. nullopt if none exists.
inline std::optional<GaleDiagram> delete_step(const GaleDiagram& d) {
  const std::size_t n = d.diameters();
  for (std::size_t i = 0; i < n; ++i)
    if (d.labels()[i] == 0 && d.labels()[i + n] == 0) return detail::drop_diameter(d, i);
  return std::nullopt;
}

/// One G-step: for the first p with m_p = m_{p+1} = 0, glue p with p+1 and
/// p+n with p+n+1 (labels add). nullopt if no adjacent zeros exist.
inline std::optional<GaleDiagram> glue_step(const GaleDiagram& d) {
  const std::size_t n = d.diameters();
  const std::size_t len = d.positions();
  for (std::size_t p = 0; p < len; ++p) {
    if (d[static_cast<std::ptrdiff_t>(p)] != 0 || d[static_cast<std::ptrdiff_t>(p + 1)] != 0) continue;
    std::vector<Label> merged(d.labels().begin(), d.labels().end());
    const std::size_t q = (p + n) % len;
    const std::size_t q1 = (q + 1) % len;
    merged[q] += merged[q1];
    merged[q1] = 0;
    return detail::drop_diameter(GaleDiagram(std::move(merged), d.center()), (p + 1) % len);
  }
  return std::nullopt;
}

/// Applies D-steps, then G-steps, repeating until P2 and P3 hold. Preserves
/// the cofacet count and k-neighborliness for every k. Throws
/// DegenerateDiagram if a needed step would drop below two diameters.
inline GaleDiagram reduce(GaleDiagram d) {
  for (;;) {
    if (auto next = delete_step(d)) {
      d = std::move(*next);
      continue;
    }
    if (auto next = glue_step(d)) {
      d = std::move(*next);
      continue;
    }
    return d;
  }
}

/// Moves one point from position i to i-1. Requires m_i > 0, m_{i+n} = 0
/// and m_{i+n-1} > 0; throws InvalidMove otherwise. On a k-neighborly input
/// the cofacet count drops by at least k, and the result stays k-neighborly
/// when sum_{j=i}^{i+n-2} m_j >= k+2.
inline GaleDiagram displace(const GaleDiagram& d, std::ptrdiff_t i) {
  const auto n = static_cast<std::ptrdiff_t>(d.diameters());
  if (d[i] == 0) throw InvalidMove("displace: label at position " + std::to_string(d.wrap(i)) + " is zero");
  if (d[i + n] != 0) throw InvalidMove("displace: antipode of position " + std::to_string(d.wrap(i)) + " is nonzero");
  if (d[i + n - 1] == 0) throw InvalidMove("displace: label at position " + std::to_string(d.wrap(i + n - 1)) + " is zero");
  std::vector<Label> out(d.labels().begin(), d.labels().end());
  out[d.wrap(i)] -= 1;
  out[d.wrap(i - 1)] += 1;
  return GaleDiagram(std::move(out), d.center());
}

/// The sum sum_{j=i}^{i+n-2} m_j that displace(d, i) lowers by one.
inline Count displaced_semicircle_sum(const GaleDiagram& d, std::ptrdiff_t i) {
  const auto n = static_cast<std::ptrdiff_t>(d.diameters());
  Count s = 0;
  for (std::ptrdiff_t j = i; j <= i + n - 2; ++j) s += d[j];
  return s;
}

}  // namespace neighborly
