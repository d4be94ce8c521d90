// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavecloud Authors

// Brute-force reference implementations shared by the unit and acceptance
// tests. Nothing here calls the filter-bank code under test.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "wavecloud/image.hpp"
#include "wavecloud/rng.hpp"
#include "wavecloud/wavelet.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<double>>;

inline Matrix identity(std::size_t n) {
  Matrix m(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1.0;
  return m;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.front().size();
  Matrix out(n, std::vector<double>(m, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t p = 0; p < k; ++p)
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][p] * b[p][j];
  return out;
}

inline std::vector<double> apply(const Matrix& a, std::span<const double> x) {
  std::vector<double> y(a.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  return y;
}

// One periodic analysis level as an n x n matrix: rows 0..n/2-1 produce the
// approximation, rows n/2..n-1 the detail. The high-pass is rebuilt here from
// the low-pass taps by the alternating flip.
inline Matrix analysis_matrix(std::span<const double> low, std::size_t n) {
  const std::size_t len = low.size();
  Matrix m(n, std::vector<double>(n, 0.0));
  for (std::size_t k = 0; k < n / 2; ++k) {
    for (std::size_t t = 0; t < len; ++t) {
      const double g = (t % 2 == 0 ? 1.0 : -1.0) * low[len - 1 - t];
      m[k][(2 * k + t) % n] += low[t];
      m[n / 2 + k][(2 * k + t) % n] += g;
    }
  }
  return m;
}

inline Matrix analysis_matrix(const wavecloud::Wavelet& w, std::size_t n) {
  return analysis_matrix(w.analysis_low(), n);
}

// J-level transform matrix whose output is ordered details level 1..J, then
// the level-J approximation.
inline Matrix multilevel_matrix(const wavecloud::Wavelet& w, std::size_t n, std::size_t levels) {
  // Cascade in [approx | detail_J | ... | detail_1] order, then permute.
  Matrix total = identity(n);
  for (std::size_t j = 0; j < levels; ++j) {
    const std::size_t m = n >> j;
    Matrix step = identity(n);
    const Matrix a = analysis_matrix(w, m);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) step[r][c] = a[r][c];
    total = multiply(step, total);
  }
  Matrix ordered;
  for (std::size_t j = 1; j <= levels; ++j) {
    const std::size_t lo = n >> j, hi = n >> (j - 1);
    for (std::size_t r = lo; r < hi; ++r) ordered.push_back(total[r]);
  }
  for (std::size_t r = 0; r < (n >> levels); ++r) ordered.push_back(total[r]);
  return ordered;
}

// Single 2D level: Y = A_rows * X * A_cols^T, quadrants [ll lh; hl hh].
struct Quadrants {
  wavecloud::Image2D ll, lh, hl, hh;
};

inline Quadrants analysis_2d(const wavecloud::Wavelet& w, const wavecloud::Image2D& x) {
  const std::size_t r = x.rows(), c = x.cols();
  const Matrix ar = analysis_matrix(w, r), ac = analysis_matrix(w, c);
  Matrix xm(r, std::vector<double>(c));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) xm[i][j] = x(i, j);
  Matrix act(c, std::vector<double>(c));
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 0; j < c; ++j) act[i][j] = ac[j][i];
  const Matrix y = multiply(multiply(ar, xm), act);
  Quadrants q{wavecloud::Image2D(r / 2, c / 2), wavecloud::Image2D(r / 2, c / 2),
              wavecloud::Image2D(r / 2, c / 2), wavecloud::Image2D(r / 2, c / 2)};
  for (std::size_t i = 0; i < r / 2; ++i) {
    for (std::size_t j = 0; j < c / 2; ++j) {
      q.ll(i, j) = y[i][j];
      q.lh(i, j) = y[i][c / 2 + j];
      q.hl(i, j) = y[r / 2 + i][j];
      q.hh(i, j) = y[r / 2 + i][c / 2 + j];
    }
  }
  return q;
}

inline std::vector<double> random_signal(wavecloud::Rng& rng, std::size_t n, double scale = 1.0) {
  std::vector<double> x(n);
  for (auto& v : x) v = rng.uniform(-scale, scale);
  return x;
}

inline wavecloud::Image2D random_image(wavecloud::Rng& rng, std::size_t rows, std::size_t cols,
                                       double scale = 1.0) {
  return wavecloud::Image2D(rows, cols, random_signal(rng, rows * cols, scale));
}

inline double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double worst = a.size() == b.size() ? 0.0 : INFINITY;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
    worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

inline double energy(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return s;
}

inline std::vector<double> rotate(std::span<const double> x, std::size_t shift) {
  std::vector<double> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[(i + shift) % x.size()] = x[i];
  return y;
}

// Exact 2-means in the plane: the optimal split is linear, so try every line
// through two samples (with both assignments of on-line points).
inline std::vector<int> two_means_2d(const std::vector<std::vector<double>>& pts) {
  const std::size_t n = pts.size();
  double best = INFINITY;
  std::vector<int> best_split;
  std::vector<int> split(n);
  const auto cost = [&] {
    double sum[2][2] = {{0, 0}, {0, 0}};
    double count[2] = {0, 0};
    for (std::size_t i = 0; i < n; ++i) {
      count[split[i]] += 1;
      sum[split[i]][0] += pts[i][0];
      sum[split[i]][1] += pts[i][1];
    }
    if (count[0] == 0 || count[1] == 0) return static_cast<double>(INFINITY);
    double sse = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const int k = split[i];
      sse += std::pow(pts[i][0] - sum[k][0] / count[k], 2) + std::pow(pts[i][1] - sum[k][1] / count[k], 2);
    }
    return sse;
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const double dx = pts[b][0] - pts[a][0], dy = pts[b][1] - pts[a][1];
      for (int on_line = 0; on_line < 2; ++on_line) {
        for (std::size_t i = 0; i < n; ++i) {
          const double side = dx * (pts[i][1] - pts[a][1]) - dy * (pts[i][0] - pts[a][0]);
          split[i] = side > 0 ? 1 : side < 0 ? 0 : on_line;
        }
        const double c = cost();
        if (c < best) {
          best = c;
          best_split = split;
        }
      }
    }
  }
  return best_split;
}

}  // namespace oracle
