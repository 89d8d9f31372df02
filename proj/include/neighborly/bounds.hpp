#pragma once

// Closed-form facet bounds and f-vector utilities. Everything is exact
// integer arithmetic; intermediate values use 128-bit checked operations and
// results that do not fit 64 bits raise ArithmeticOverflow.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "neighborly/binomial.hpp"
#include "neighborly/error.hpp"

namespace neighborly::bounds {

using Int = std::int64_t;

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

inline Int exact_div(Wide num, Wide den, const char* what) {
  if (den == 0 || num % den != 0) throw InexactDivision(std::string(what) + ": division is not exact");
  return neighborly::detail::narrow(num / den);
}

}  // namespace detail

// ---------------------------------------------------------------------------

/// f-vector (f_{-1}, f_0, ..., f_{d-1}) of a d-polytope. entries[0] is f_{-1}.
class FVector {
 public:
  FVector(Int d, std::vector<Int> entries) : d_(d), entries_(std::move(entries)) {
    detail::require(d_ >= 0, "f-vector dimension must be nonnegative");
    detail::require(entries_.size() == static_cast<std::size_t>(d_) + 1,
                    "f-vector of a " + std::to_string(d_) + "-polytope needs " + std::to_string(d_ + 1) + " entries");
    detail::require(entries_[0] == 1, "f_{-1} must be 1");
    for (Int e : entries_) detail::require(e >= 0, "f-vector entries must be nonnegative");
  }

  Int dimension() const noexcept { return d_; }
  /// f_j for -1 <= j <= d-1.
  Int f(Int j) const { return entries_.at(static_cast<std::size_t>(j + 1)); }
  const std::vector<Int>& entries() const noexcept { return entries_; }

 private:
  Int d_;
  std::vector<Int> entries_;
};

/// Euler-Poincare relation sum_{i=0}^{d-1} (-1)^i f_i == 1 - (-1)^d.
inline bool euler_check(const FVector& f) {
  Wide alt = 0;
  for (Int i = 0; i < f.dimension(); ++i) alt += (i % 2 == 0 ? 1 : -1) * static_cast<Wide>(f.f(i));
  const Wide rhs = (f.dimension() % 2 == 0) ? 0 : 2;
  return alt == rhs;
}

// ---------------------------------------------------------------------------

/// Facet lower bound for simplicial d-polytopes with n vertices.
inline Int simplicial_lbt(Int d, Int n) {
  detail::require(d >= 2, "simplicial_lbt: d >= 2 required");
  detail::require(n >= d + 1, "simplicial_lbt: n >= d+1 required");
  return neighborly::detail::narrow(static_cast<Wide>(d - 1) * (n - d) + 2);
}

/// Facets of a neighborly 2k-polytope with n vertices: n/(n-k) * C(n-k, k).
inline Int neighborly_facets(Int k, Int n) {
  detail::require(k >= 2, "neighborly_facets: k >= 2 required");
  detail::require(n > 2 * k, "neighborly_facets: n > 2k required");
  const Wide num = neighborly::detail::checked_mul(n, binomial_wide(n - k, k));
  return detail::exact_div(num, n - k, "neighborly_facets");
}

/// Entry m_{i,j} = C(d+1-i, d+1-j) - C(i, d+1-j) of the g-theorem matrix M_d,
/// 0 <= i <= floor(d/2), 0 <= j <= d.
inline Int gmatrix_entry(Int d, Int i, Int j) {
  detail::require(d >= 1, "gmatrix_entry: d >= 1 required");
  detail::require(i >= 0 && i <= d / 2, "gmatrix_entry: row index out of range");
  detail::require(j >= 0 && j <= d, "gmatrix_entry: column index out of range");
  return neighborly::detail::narrow(binomial_wide(d + 1 - i, d + 1 - j) - binomial_wide(i, d + 1 - j));
}

/// g_0..g_k of a simplicial k-neighborly d-polytope with n vertices:
/// g_j = C(n-d-2+j, j).
inline std::vector<Int> g_vector_kneighborly(Int d, Int n, Int k) {
  detail::require(n >= d + 2, "g_vector_kneighborly: n >= d+2 required");
  detail::require(k >= 1 && k <= d / 2, "g_vector_kneighborly: 1 <= k <= floor(d/2) required");
  std::vector<Int> g;
  g.reserve(static_cast<std::size_t>(k) + 1);
  for (Int j = 0; j <= k; ++j) g.push_back(binomial(n - d - 2 + j, j));
  return g;
}

/// f_j = sum_i g_i m_{i,j+1}, with the g-vector truncated (g_i = 0 past its
/// end). -1 <= j <= d-1.
inline Int f_from_g(Int d, const std::vector<Int>& g, Int j) {
  detail::require(j >= -1 && j <= d - 1, "f_from_g: j out of range");
  Wide sum = 0;
  const Int rows = std::min<Int>(static_cast<Int>(g.size()) - 1, d / 2);
  for (Int i = 0; i <= rows; ++i)
    sum = neighborly::detail::checked_add(sum, neighborly::detail::checked_mul(g[static_cast<std::size_t>(i)],
                                                                               gmatrix_entry(d, i, j + 1)));
  return neighborly::detail::narrow(sum);
}

/// Lower bound on f_j of a simplicial k-neighborly d-polytope with n >= d+2
/// vertices: sum_{i=0}^{k} (C(d+1-i, d-j) - C(i, d-j)) C(n-d-2+i, i).
inline Int fj_lower_bound(Int d, Int n, Int k, Int j) {
  detail::require(n >= d + 2, "fj_lower_bound: n >= d+2 required");
  detail::require(k >= 1 && 2 * k <= d, "fj_lower_bound: 1 <= k <= d/2 required");
  detail::require(j >= 0 && j <= d - 1, "fj_lower_bound: 0 <= j <= d-1 required");
  Wide sum = 0;
  for (Int i = 0; i <= k; ++i) {
    const Wide coeff = binomial_wide(d + 1 - i, d - j) - binomial_wide(i, d - j);
    sum = neighborly::detail::checked_add(sum, neighborly::detail::checked_mul(coeff, binomial_wide(n - d - 2 + i, i)));
  }
  return neighborly::detail::narrow(sum);
}

/// d + 1 + k^2, the facet lower bound for non-simplex k-neighborly d-polytopes.
inline Int smallvert_bound(Int d, Int k) {
  detail::require(k >= 2, "smallvert_bound: k >= 2 required");
  detail::require(d >= 2 * k, "smallvert_bound: d >= 2k required");
  return d + 1 + k * k;
}

/// (k+1)(k+2)(3d+3-4k)/6: facet lower bound for simplicial k-neighborly
/// d-polytopes with d+3 vertices.
inline Int corollary2_bound(Int d, Int k) {
  detail::require(k >= 1, "corollary2_bound: k >= 1 required");
  detail::require(d >= 2 * k, "corollary2_bound: d >= 2k required");
  const Wide num = static_cast<Wide>(k + 1) * (k + 2) * (3 * d + 3 - 4 * k);
  return detail::exact_div(num, 6, "corollary2_bound");
}

/// D_k(n) = sum_{i=1}^{k} (-1)^i C(n, i).
inline Int d_k(Int k, Int n) {
  detail::require(k >= 1, "d_k: k >= 1 required");
  detail::require(n >= 2 * k, "d_k: n >= 2k required");
  Wide sum = 0;
  for (Int i = 1; i <= k; ++i) sum += (i % 2 == 0 ? 1 : -1) * binomial_wide(n, i);
  return neighborly::detail::narrow(sum);
}

// ---------------------------------------------------------------------------
// Named registry used by the CLI.

struct BoundParams {
  std::optional<Int> d, n, k, j;
};

struct BoundReport {
  std::string name;
  BoundParams params;
  Int value = 0;
  std::string citation;
};

inline const std::vector<std::string>& bound_names() {
  static const std::vector<std::string> names{"lbt", "ubt", "gtheorem", "smallvert", "corollary2"};
  return names;
}

inline BoundReport evaluate_bound(const std::string& name, const BoundParams& p) {
  const auto need = [&](const std::optional<Int>& v, const char* flag) -> Int {
    if (!v) throw DomainError("bound '" + name + "' requires --" + flag);
    return *v;
  };
  BoundReport r{name, p, 0, {}};
  if (name == "lbt") {
    r.value = simplicial_lbt(need(p.d, "d"), need(p.n, "n"));
    r.citation = "Barnette lower bound theorem, simplicial d-polytopes: (d-1)(n-d)+2";
  } else if (name == "ubt") {
    r.value = neighborly_facets(need(p.k, "k"), need(p.n, "n"));
    r.params.d = 2 * *p.k;
    r.citation = "McMullen upper bound theorem, neighborly 2k-polytope: n/(n-k) C(n-k,k)";
  } else if (name == "gtheorem") {
    const Int d = need(p.d, "d");
    const Int j = p.j.value_or(d - 1);
    r.params.j = j;
    r.value = fj_lower_bound(d, need(p.n, "n"), need(p.k, "k"), j);
    r.citation = "g-theorem, simplicial k-neighborly: sum_i (C(d+1-i,d-j) - C(i,d-j)) C(n-d-2+i,i)";
  } else if (name == "smallvert") {
    r.value = smallvert_bound(need(p.d, "d"), need(p.k, "k"));
    r.citation = "non-simplex k-neighborly d-polytope: d+1+k^2";
  } else if (name == "corollary2") {
    r.value = corollary2_bound(need(p.d, "d"), need(p.k, "k"));
    r.params.n = *p.d + 3;
    r.citation = "simplicial k-neighborly, n = d+3: (k+1)(k+2)(3d+3-4k)/6";
  } else {
    throw DomainError("unknown bound '" + name + "'");
  }
  return r;
}

}  // namespace neighborly::bounds
