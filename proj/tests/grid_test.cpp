#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"
#include "twosig/grid.hpp"

namespace twosig {
namespace {

using Z = EvZeroGrid<Integer>;
using C = EvConstGrid<Integer>;

TEST(EvZeroGrid, TrimsToSupport) {
  auto z = Z::from_rows({{1, 0, 0}, {0, 2, 0}, {0, 0, 0}});
  EXPECT_EQ(z.size(), std::make_pair(std::size_t{2}, std::size_t{2}));
  EXPECT_EQ(z.value(2, 2), 2);
  EXPECT_EQ(z.value(3, 7), 0);
  EXPECT_EQ(z.value(0, 1), 0);
  auto zero = Z::from_rows({{0, 0}, {0, 0}});
  EXPECT_TRUE(zero.is_zero());
  EXPECT_EQ(zero, Z::zeros(1));
  EXPECT_EQ(zero.size(), std::make_pair(std::size_t{1}, std::size_t{1}));
}

TEST(EvZeroGrid, MultiChannel) {
  Z z(2, 1, 2, {Integer(1), Integer(0), Integer(0), Integer(3)});
  EXPECT_EQ(z.value(1, 2, 1), 3);
  EXPECT_EQ(z.value(1, 2, 0), 0);
  EXPECT_THROW(Z(2, 1, 2, {Integer(1)}), DimensionMismatch);
  EXPECT_THROW(Z(0, 1, 1, {}), DimensionMismatch);
}

TEST(EvConstGrid, BorderMustBeTheLimit) {
  EXPECT_THROW(C::from_rows({{1, 2}, {3, 4}}), InvariantViolation);
  EXPECT_THROW(C::from_rows({{1, 4}, {3, 4}}), InvariantViolation);
  auto x = C::from_rows({{7, 3, 2, 2}, {5, 3, 2, 2}, {2, 2, 2, 2}});
  EXPECT_EQ(x, C::from_rows({{7, 3, 2}, {5, 3, 2}, {2, 2, 2}}));
  EXPECT_EQ(x.size(), std::make_pair(std::size_t{2}, std::size_t{2}));
  EXPECT_EQ(x.value(100, 1), 2);
  EXPECT_EQ(x.value(1, 1), 7);
  auto c = C::constant({Integer(5)});
  EXPECT_TRUE(c.is_constant());
  EXPECT_EQ(c.size(), std::make_pair(std::size_t{1}, std::size_t{1}));
  EXPECT_EQ(C::from_rows({{5, 5}, {5, 5}}), c);
}

TEST(EvConstGrid, PaddedAndFromZero) {
  auto x = C::padded(1, 2, 2, {Integer(5), Integer(1), Integer(3), Integer(1)}, {Integer(0)});
  EXPECT_EQ(x, C::from_rows({{5, 1, 0}, {3, 1, 0}, {0, 0, 0}}));
  EXPECT_EQ(C::from_ev_zero(Z::from_rows({{5, 1}, {3, 1}})), x);
  EXPECT_THROW(C::padded(1, 1, 1, {Integer(1)}, {}), DimensionMismatch);
}

TEST(Calculus, DifferenceAndSumsOfDisplayedGrid) {
  auto x = C::from_rows({{7, 3, 2, 2}, {5, 3, 2, 2}, {2, 2, 2, 2}});
  auto d = delta(x);
  EXPECT_EQ(d, Z::from_rows({{2, 0}, {2, 1}}));
  EXPECT_EQ(varsigma(d), Z::from_rows({{5, 1}, {3, 1}}));
  EXPECT_EQ(nf_const(x), Z::from_rows({{5, 1}, {3, 1}}));
}

TEST(Calculus, WarpDisplays) {
  auto x = C::from_rows({{2, 1, 3, 1, 1}, {3, 2, 5, 1, 1}, {1, 1, 1, 1, 1}});
  EXPECT_EQ(warp(1, 2, x), C::from_rows({{2, 1, 3, 1, 1}, {3, 2, 5, 1, 1}, {3, 2, 5, 1, 1}, {1, 1, 1, 1, 1}}));
  auto y = C::from_rows({{2, 1, 3, 2, 2}, {3, 0, 5, 2, 2}, {2, 2, 2, 2, 2}});
  EXPECT_EQ(warp(2, 2, y), C::from_rows({{2, 1, 1, 3, 2, 2}, {3, 0, 0, 5, 2, 2}, {2, 2, 2, 2, 2, 2}}));
  EXPECT_EQ(warp(1, 3, x), x);
  EXPECT_THROW(warp(1, 0, x), DimensionMismatch);
  EXPECT_THROW(warp(3, 1, x), DimensionMismatch);
}

TEST(Calculus, ZeroInsertDisplay) {
  auto z = Z::from_rows({{5, 1}, {3, 1}});
  EXPECT_EQ(zero_insert(2, 2, zero_insert(1, 2, z)), Z::from_rows({{5, 0, 1}, {0, 0, 0}, {3, 0, 1}}));
  EXPECT_EQ(zero_insert(1, 3, z), z);
  EXPECT_EQ(zero_insert(1, 1, z), Z::from_rows({{0, 0}, {5, 1}, {3, 1}}));
}

TEST(Calculus, StutterEquivalentGrids) {
  auto x = C::from_rows({{7, 3, 2, 2}, {5, 3, 2, 2}, {2, 2, 2, 2}});
  auto y = C::from_rows({{5, 1, 0}, {3, 1, 0}, {0, 0, 0}});
  auto w = C::from_rows({{5, 5, 1, 0}, {3, 3, 1, 0}, {3, 3, 1, 0}, {0, 0, 0, 0}});
  EXPECT_EQ(nf_warp(w), y);
  EXPECT_EQ(nf_sim(x), nf_sim(y));
  EXPECT_EQ(nf_sim(y), nf_sim(w));
}

TEST(Calculus, Concatenations) {
  auto a = Z::from_rows({{2, 7}, {2, 5}}), b = Z::from_rows({{2, 2}, {1, 4}});
  EXPECT_EQ(diag_concat(a, b), Z::from_rows({{2, 7, 0, 0}, {2, 5, 0, 0}, {0, 0, 2, 2}, {0, 0, 1, 4}}));
  auto x = C::from_rows({{2, 7, 2}, {2, 5, 2}, {2, 2, 2}});
  auto y = C::from_rows({{2, 2, 0}, {1, 4, 0}, {0, 0, 0}});
  EXPECT_EQ(box_concat(x, y), C::from_rows({{2, 7, 2, 2, 0},
                                           {2, 5, 2, 2, 0},
                                           {2, 2, 2, 2, 0},
                                           {1, 1, 1, 4, 0},
                                           {0, 0, 0, 0, 0}}));
  EXPECT_EQ(diag_concat(Z::zeros(1), b), Z::from_rows({{0, 0, 0}, {0, 2, 2}, {0, 1, 4}}));
  EXPECT_THROW(diag_concat(a, Z::zeros(2)), DimensionMismatch);
}

TEST(Calculus, CumulativeSums) {
  Matrix<Integer> m(2, 3);
  int v = 1;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = v++;
  }
  auto both = cumsum(0, m);
  EXPECT_EQ(both, cumsum(1, cumsum(2, m)));
  EXPECT_EQ(both, cumsum(2, cumsum(1, m)));
  EXPECT_EQ(both(1, 2), 21);
  EXPECT_EQ(cumsum(1, m)(1, 0), 5);
  EXPECT_EQ(cumsum(2, m)(0, 2), 6);
  auto s = shift_zero(1, m);
  EXPECT_EQ(s(0, 0), 0);
  EXPECT_EQ(s(1, 2), 3);
}

class CalculusLaws : public ::testing::Test {
 protected:
  std::mt19937_64 rng{2024};
  C rand_const() { return testing::random_ev_const<Integer>(rng, 1 + rng() % 2, 4, 4, -2, 2); }
  Z rand_zero() { return testing::random_ev_zero<Integer>(rng, 1 + rng() % 2, 4, 4, -2, 2); }
  int axis() { return 1 + static_cast<int>(rng() % 2); }
  std::size_t pos(std::size_t hi) { return 1 + rng() % hi; }
};

TEST_F(CalculusLaws, DifferenceAndSumsAreInverse) {
  for (int n = 0; n < 300; ++n) {
    auto z = rand_zero();
    ASSERT_EQ(delta(C::from_ev_zero(varsigma(z))), z);
    ASSERT_EQ(varsigma(delta(C::from_ev_zero(z))), z);
    auto x = rand_const();
    ASSERT_EQ(delta(add_constant(x, std::vector<Integer>(x.d(), Integer(3)))), delta(x));
  }
}

TEST_F(CalculusLaws, DifferenceIntertwinesNormalForms) {
  for (int n = 0; n < 300; ++n) {
    auto x = rand_const();
    for (int k = 0; k < 3; ++k) x = warp(axis(), pos(4), x);
    ASSERT_EQ(delta(nf_warp(x)), nf_zero(delta(x))) << x.to_string();
    ASSERT_EQ(nf_warp(nf_warp(x)), nf_warp(x));
  }
}

TEST_F(CalculusLaws, ReindexingOfInsertions) {
  for (int n = 0; n < 300; ++n) {
    auto x = rand_const();
    auto z = rand_zero();
    const int a = axis();
    const std::size_t j = pos(5), k = j + pos(5);
    ASSERT_EQ(warp(a, k, warp(a, j, x)), warp(a, j, warp(a, k - 1, x)));
    ASSERT_EQ(zero_insert(a, k, zero_insert(a, j, z)), zero_insert(a, j, zero_insert(a, k - 1, z)));
  }
}

TEST_F(CalculusLaws, Intertwining) {
  for (int n = 0; n < 300; ++n) {
    auto x = rand_const();
    auto z = rand_zero();
    const int a = axis();
    const std::size_t k = pos(5);
    ASSERT_EQ(delta(warp(a, k, x)), zero_insert(a, k, delta(x)));
    ASSERT_EQ(C::from_ev_zero(varsigma(zero_insert(a, k, z))), warp(a, k, C::from_ev_zero(varsigma(z))));
  }
}

TEST_F(CalculusLaws, SizeLaws) {
  for (int n = 0; n < 300; ++n) {
    auto x = rand_const();
    auto z = rand_zero();
    const int a = axis();
    const auto [xr, xc] = x.size();
    const auto [zr, zc] = z.size();
    if (!x.is_constant()) {
      const std::size_t k = pos(a == 1 ? xr : xc);
      auto s = warp(a, k, x).size();
      EXPECT_EQ(s.first, xr + (a == 1 ? 1 : 0));
      EXPECT_EQ(s.second, xc + (a == 2 ? 1 : 0));
    }
    if (!z.is_zero()) {
      const std::size_t k = pos(a == 1 ? zr : zc);
      auto s = zero_insert(a, k, z).size();
      EXPECT_EQ(s.first, zr + (a == 1 ? 1 : 0));
      EXPECT_EQ(s.second, zc + (a == 2 ? 1 : 0));
    }
    auto z2 = testing::random_ev_zero<Integer>(rng, z.d(), 3, 3, 1, 2);
    if (!z.is_zero()) {
      auto s = diag_concat(z, z2).size();
      EXPECT_EQ(s.first, zr + z2.rows());
      EXPECT_EQ(s.second, zc + z2.cols());
    }
    EXPECT_EQ(delta(x).size(), x.is_constant() ? std::make_pair(std::size_t{1}, std::size_t{1}) : x.size());
  }
}

TEST_F(CalculusLaws, BoxConcatDifferencesConcatenate) {
  for (int n = 0; n < 300; ++n) {
    auto x = rand_const();
    auto y = testing::random_ev_const<Integer>(rng, x.d(), 4, 4, -2, 2);
    ASSERT_EQ(delta(box_concat(x, y)), diag_concat(delta(x), delta(y)))
        << x.to_string() << " / " << y.to_string();
  }
}

TEST_F(CalculusLaws, NormalFormIsInvariant) {
  for (int n = 0; n < 200; ++n) {
    auto x = rand_const();
    auto y = add_constant(x, std::vector<Integer>(x.d(), Integer(static_cast<int>(rng() % 7) - 3)));
    for (int k = 0; k < 4; ++k) y = warp(axis(), pos(5), y);
    ASSERT_EQ(nf_sim(x), nf_sim(y));
    auto z = rand_zero();
    auto z2 = z;
    for (int k = 0; k < 4; ++k) z2 = zero_insert(axis(), pos(5), z2);
    ASSERT_EQ(nf_zero(z), nf_zero(z2));
  }
}

}  // namespace
}  // namespace twosig
