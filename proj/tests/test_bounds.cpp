#include <gtest/gtest.h>

#include "neighborly/neighborly.hpp"

using namespace neighborly;
using namespace neighborly::bounds;

TEST(Binomial, Values) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(5, 0), 1);
  EXPECT_EQ(binomial(2, 5), 0);
  EXPECT_EQ(binomial(5, -1), 0);
  EXPECT_EQ(binomial(60, 30), 118264581564861424LL);
  EXPECT_THROW(binomial(80, 40), ArithmeticOverflow);
}

TEST(Lbt, Values) {
  EXPECT_EQ(simplicial_lbt(4, 5), 5);
  EXPECT_EQ(simplicial_lbt(4, 7), 11);
  EXPECT_EQ(simplicial_lbt(3, 8), 12);
  EXPECT_THROW(simplicial_lbt(4, 4), DomainError);
}

TEST(NeighborlyFacets, Values) {
  EXPECT_EQ(neighborly_facets(2, 6), 9);
  EXPECT_EQ(neighborly_facets(2, 7), 14);
  EXPECT_EQ(neighborly_facets(2, 12), 54);
  EXPECT_EQ(neighborly_facets(3, 8), 16);
  EXPECT_THROW(neighborly_facets(2, 4), DomainError);
}

TEST(GMatrix, Entries) {
  for (Int d = 1; d <= 12; ++d)
    for (Int i = 0; i <= d / 2; ++i) {
      EXPECT_EQ(gmatrix_entry(d, i, i), 1);
      EXPECT_EQ(gmatrix_entry(d, i, d), d + 1 - 2 * i);
      for (Int j = 0; j < i; ++j) EXPECT_EQ(gmatrix_entry(d, i, j), 0);
    }
  EXPECT_EQ(gmatrix_entry(4, 1, 2), 4);
  EXPECT_EQ(gmatrix_entry(4, 0, 4), 5);
  EXPECT_THROW(gmatrix_entry(4, 3, 0), DomainError);
}

TEST(GVector, Values) {
  EXPECT_EQ(g_vector_kneighborly(4, 6, 2), (std::vector<Int>{1, 1, 1}));
  EXPECT_EQ(g_vector_kneighborly(4, 7, 2), (std::vector<Int>{1, 2, 3}));
  EXPECT_EQ(g_vector_kneighborly(6, 10, 3), (std::vector<Int>{1, 3, 6, 10}));
  EXPECT_EQ(f_from_g(4, {1, 2, 3}, 1), 21);
}

// f_j = C(n, j+1) for j < k must come out of the g-vector for every
// small simplicial k-neighborly parameter set.
TEST(GVector, ReproducesNeighborlyFaceCounts) {
  for (Int d = 2; d <= 12; ++d)
    for (Int n = d + 2; n <= d + 6; ++n)
      for (Int k = 1; k <= d / 2; ++k) {
        const auto g = g_vector_kneighborly(d, n, k);
        EXPECT_EQ(f_from_g(d, g, -1), 1);
        for (Int j = 0; j < k; ++j) EXPECT_EQ(f_from_g(d, g, j), binomial(n, j + 1)) << d << " " << n << " " << k;
      }
}

TEST(FjLowerBound, Values) {
  EXPECT_EQ(fj_lower_bound(4, 7, 2, 3), 14);
  EXPECT_EQ(fj_lower_bound(4, 6, 2, 3), 9);
  for (Int d = 2; d <= 12; ++d)
    for (Int k = 1; 2 * k <= d; ++k) EXPECT_EQ(fj_lower_bound(d, d + 2, k, d - 1), (k + 1) * (d + 1 - k));
  for (Int d = 2; d <= 12; ++d)
    for (Int n = d + 2; n <= d + 6; ++n)
      for (Int k = 1; 2 * k <= d; ++k)
        EXPECT_EQ(fj_lower_bound(d, n, k, d - 1), f_from_g(d, g_vector_kneighborly(d, n, k), d - 1));
}

TEST(SmallVert, Values) {
  EXPECT_EQ(smallvert_bound(4, 2), 9);
  EXPECT_EQ(smallvert_bound(6, 2), 11);
  EXPECT_EQ(smallvert_bound(6, 3), 16);
  EXPECT_EQ(smallvert_bound(4, 2), neighborly_facets(2, 6));
  EXPECT_EQ(smallvert_bound(6, 3), neighborly_facets(3, 8));
  EXPECT_THROW(smallvert_bound(4, 1), DomainError);
}

TEST(Corollary2, Values) {
  EXPECT_EQ(corollary2_bound(4, 2), 14);
  EXPECT_EQ(corollary2_bound(6, 3), 30);
  EXPECT_EQ(corollary2_bound(4, 2), count_cofacets(constructions::build_example3(2)));
  for (Int k = 1; k <= 8; ++k)
    for (Int d = 2 * k; d <= 24; ++d) EXPECT_EQ(corollary2_bound(d, k), fj_lower_bound(d, d + 3, k, d - 1));
}

TEST(Corollary2, StrictlyAboveOptimumGap) {
  for (Int k = 2; k <= 6; ++k)
    for (Int d = 2 * k; d <= 20; ++d) EXPECT_GT(corollary2_bound(d, k) - (d + 3), 2 * (k * k - 1)) << d << " " << k;
}

TEST(BoundOrdering, SimplicialChain) {
  // LBT <= g-theorem bound for k-neighborly, and d+1+k^2 below both on n = d+3
  for (Int k = 2; k <= 5; ++k)
    for (Int d = 2 * k; d <= 16; ++d) {
      const Int g = fj_lower_bound(d, d + 3, k, d - 1);
      EXPECT_LE(simplicial_lbt(d, d + 3), g);
      EXPECT_LE(smallvert_bound(d, k), g);
    }
}

TEST(DK, Values) {
  EXPECT_EQ(d_k(1, 5), -5);
  EXPECT_EQ(d_k(2, 7), 14);
  EXPECT_EQ(d_k(2, 8), 20);
}

TEST(DK, IncreasingInNForEvenK) {
  for (Int k = 2; k <= 8; k += 2)
    for (Int n = 2 * k; n < 40; ++n) EXPECT_LT(d_k(k, n), d_k(k, n + 1)) << k << " " << n;
  // odd k: the leading term is negative
  for (Int k = 1; k <= 7; k += 2)
    for (Int n = 2 * k; n < 40; ++n) EXPECT_GT(d_k(k, n), d_k(k, n + 1)) << k << " " << n;
}

TEST(Euler, Checks) {
  EXPECT_TRUE(euler_check(FVector(3, {1, 4, 6, 4})));
  EXPECT_TRUE(euler_check(FVector(4, {1, 6, 15, 18, 9})));
  EXPECT_FALSE(euler_check(FVector(3, {1, 4, 6, 5})));
  EXPECT_FALSE(euler_check(FVector(4, {1, 6, 15, 19, 9})));
  EXPECT_THROW(FVector(3, {1, 4, 6}), DomainError);
  EXPECT_THROW(FVector(3, {2, 4, 6, 4}), DomainError);
}

TEST(Euler, HoldsForNeighborlyFVectorsFromG) {
  for (Int d = 2; d <= 12; ++d)
    for (Int n = d + 2; n <= d + 6; ++n) {
      // a simplicial neighborly polytope has g_i = C(n-d-2+i, i) for all i <= d/2
      const auto g = g_vector_kneighborly(d, n, d / 2);
      std::vector<Int> f;
      for (Int j = -1; j <= d - 1; ++j) f.push_back(f_from_g(d, g, j));
      const FVector fv(d, f);
      EXPECT_TRUE(euler_check(fv)) << d << " " << n;
      auto broken = f;
      broken[1] += 1;
      EXPECT_FALSE(euler_check(FVector(d, broken)));
    }
}

TEST(EvaluateBound, Registry) {
  EXPECT_EQ(evaluate_bound("corollary2", {4, {}, 2, {}}).value, 14);
  EXPECT_EQ(*evaluate_bound("corollary2", {4, {}, 2, {}}).params.n, 7);
  EXPECT_EQ(evaluate_bound("lbt", {4, 7, {}, {}}).value, 11);
  EXPECT_EQ(evaluate_bound("ubt", {{}, 7, 2, {}}).value, 14);
  EXPECT_EQ(*evaluate_bound("ubt", {{}, 7, 2, {}}).params.d, 4);
  EXPECT_EQ(evaluate_bound("gtheorem", {4, 7, 2, {}}).value, 14);
  EXPECT_EQ(evaluate_bound("gtheorem", {4, 7, 2, 0}).value, 7);
  EXPECT_EQ(evaluate_bound("smallvert", {6, {}, 3, {}}).value, 16);
  EXPECT_THROW(evaluate_bound("lbt", {4, {}, {}, {}}), DomainError);
  EXPECT_THROW(evaluate_bound("nope", {4, 7, 2, {}}), DomainError);
  for (const auto& name : bound_names()) EXPECT_FALSE(evaluate_bound(name, {6, 9, 2, {}}).citation.empty());
}

TEST(Overflow, RaisesInsteadOfWrapping) {
  EXPECT_THROW(neighborly_facets(40, 200), ArithmeticOverflow);
  EXPECT_THROW(fj_lower_bound(120, 200, 60, 119), ArithmeticOverflow);
}
