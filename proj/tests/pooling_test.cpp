// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavecloud Authors

#include "wavecloud/pooling.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "oracle.hpp"

namespace wavecloud {
namespace {

FeatureMap random_map(Rng& rng, std::size_t c, std::size_t h, std::size_t w) {
  return FeatureMap(c, h, w, oracle::random_signal(rng, c * h * w, 4.0));
}

TEST(Pooling, TwoByTwoByHand) {
  const FeatureMap m(1, 2, 2, std::vector<double>{1, 3, 5, 7});
  EXPECT_EQ(avg_pool2(m).data()[0], 4.0);
  EXPECT_EQ(max_pool2(m).data()[0], 7.0);
  const auto up = upsample_nearest2(avg_pool2(m));
  EXPECT_EQ(up, FeatureMap(1, 2, 2, 4.0));
}

TEST(Pooling, ConstantMap) {
  const FeatureMap m(3, 4, 6, 2.5);
  EXPECT_EQ(avg_pool2(m), FeatureMap(3, 2, 3, 2.5));
  EXPECT_EQ(max_pool2(m), FeatureMap(3, 2, 3, 2.5));
  const auto d = dwt_pool(m, haar());
  ASSERT_EQ(d.channels(), 12u);
  for (std::size_t c = 0; c < 12; ++c)
    for (std::size_t y = 0; y < 2; ++y)
      for (std::size_t x = 0; x < 3; ++x) EXPECT_NEAR(d(c, y, x), c % 4 == 0 ? 5.0 : 0.0, 1e-14);
  const auto back = dwt_unpool(d, haar());
  EXPECT_LT(oracle::max_abs_diff(back.data(), m.data()), 1e-14);
  for (const auto& r : info_loss_report(m, haar())) EXPECT_LT(r.reconstruction_rmse, 1e-10);
}

TEST(Pooling, HaarLlIsTwiceAverage) {
  Rng rng(1);
  const auto m = random_map(rng, 2, 8, 8);
  const auto d = dwt_pool(m, haar());
  const auto a = avg_pool2(m);
  for (std::size_t c = 0; c < 2; ++c) {
    const Image2D ll = d.channel(4 * c);
    const Image2D avg = a.channel(c);
    for (std::size_t i = 0; i < ll.size(); ++i) EXPECT_NEAR(ll.pixels()[i], 2.0 * avg.pixels()[i], 1e-12);
  }
}

TEST(Pooling, ChannelsMatchTwoDimensionalTransform) {
  Rng rng(2);
  const auto m = random_map(rng, 1, 8, 8);
  const Wavelet w = daubechies(2);
  const auto d = dwt_pool(m, w);
  const auto q = oracle::analysis_2d(w, m.channel(0));
  EXPECT_EQ(d.size(), m.size());
  EXPECT_LT(oracle::max_abs_diff(d.channel(0).pixels(), q.ll.pixels()), 1e-12);
  EXPECT_LT(oracle::max_abs_diff(d.channel(1).pixels(), q.lh.pixels()), 1e-12);
  EXPECT_LT(oracle::max_abs_diff(d.channel(2).pixels(), q.hl.pixels()), 1e-12);
  EXPECT_LT(oracle::max_abs_diff(d.channel(3).pixels(), q.hh.pixels()), 1e-12);
}

TEST(Pooling, RoundTripEnergyAndComposition) {
  Rng rng(3);
  for (const auto& w : {haar(), daubechies(2), daubechies(5)}) {
    const auto m = random_map(rng, 3, 16, 8);
    const auto once = dwt_pool(m, w);
    EXPECT_LT(rmse(dwt_unpool(once, w).data(), m.data()), 1e-10);
    const double e = oracle::energy(m.data());
    EXPECT_NEAR(oracle::energy(once.data()), e, 1e-9 * e);
    const auto twice = dwt_pool(once, w);
    EXPECT_EQ(twice.channels(), 48u);
    EXPECT_LT(rmse(dwt_unpool(dwt_unpool(twice, w), w).data(), m.data()), 1e-10);
  }
}

TEST(Pooling, Linearity) {
  Rng rng(4);
  const auto x = random_map(rng, 2, 8, 8);
  const auto y = random_map(rng, 2, 8, 8);
  const double a = 1.7, b = -0.4;
  FeatureMap combo(2, 8, 8);
  for (std::size_t i = 0; i < combo.size(); ++i) combo.data()[i] = a * x.data()[i] + b * y.data()[i];
  const Wavelet w = daubechies(3);
  const auto lhs = dwt_pool(combo, w);
  const auto px = dwt_pool(x, w), py = dwt_pool(y, w);
  for (std::size_t i = 0; i < lhs.size(); ++i)
    EXPECT_NEAR(lhs.data()[i], a * px.data()[i] + b * py.data()[i], 1e-10);
  // max pooling is not linear: max(x + y) != max(x) + max(y).
  const FeatureMap p(1, 2, 2, std::vector<double>{1, 0, 0, 0});
  const FeatureMap q(1, 2, 2, std::vector<double>{0, 1, 0, 0});
  const FeatureMap pq(1, 2, 2, std::vector<double>{1, 1, 0, 0});
  EXPECT_EQ(max_pool2(pq).data()[0], 1.0);
  EXPECT_EQ(max_pool2(p).data()[0] + max_pool2(q).data()[0], 2.0);
}

TEST(Pooling, InfoLossReport) {
  Rng rng(5);
  const auto m = random_map(rng, 2, 8, 8);
  const auto reports = info_loss_report(m, haar());
  ASSERT_EQ(reports.size(), 3u);
  EXPECT_EQ(reports[0].method, PoolMethod::avg);
  EXPECT_EQ(reports[1].method, PoolMethod::max);
  EXPECT_EQ(reports[2].method, PoolMethod::dwt);
  EXPECT_GT(reports[0].reconstruction_rmse, 0.0);
  EXPECT_GT(reports[1].reconstruction_rmse, 0.0);
  EXPECT_LT(reports[2].reconstruction_rmse, 1e-10);
  EXPECT_EQ(reports[0].channels, 2u);
  EXPECT_EQ(reports[0].height, 4u);
  EXPECT_EQ(reports[2].channels, 8u);
  EXPECT_EQ(pool_method_name(PoolMethod::dwt), "dwt");
}

TEST(Pooling, RampAverageResidual) {
  // v = a*y + b*x: each 2x2 block deviates from its mean by (+-a +-b)/2, so the
  // residual rmse is sqrt(a^2 + b^2) / 2.
  const double a = 3.0, b = 1.0;
  FeatureMap m(1, 8, 8);
  for (std::size_t y = 0; y < 8; ++y)
    for (std::size_t x = 0; x < 8; ++x) m(0, y, x) = a * y + b * x;
  const auto reports = info_loss_report(m, haar());
  EXPECT_NEAR(reports[0].reconstruction_rmse, std::sqrt(a * a + b * b) / 2.0, 1e-12);
}

TEST(Pooling, Errors) {
  EXPECT_THROW(avg_pool2(FeatureMap(1, 3, 4)), std::invalid_argument);
  EXPECT_THROW(max_pool2(FeatureMap(1, 4, 5)), std::invalid_argument);
  EXPECT_THROW(dwt_pool(FeatureMap(1, 5, 4), haar()), std::invalid_argument);
  EXPECT_THROW(dwt_unpool(FeatureMap(6, 2, 2), haar()), std::invalid_argument);
  EXPECT_THROW(FeatureMap(1, 2, 2, std::vector<double>{1, 2, 3}), std::invalid_argument);
}

}  // namespace
}  // namespace wavecloud
