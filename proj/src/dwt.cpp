// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavecloud Authors

#include "wavecloud/dwt.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace wavecloud {

namespace {

std::string feasible_levels_hint(std::size_t n, std::size_t levels) {
  return "length " + std::to_string(n) + " is not divisible by 2^" + std::to_string(levels) +
         "; maximum feasible levels is " + std::to_string(max_dyadic_levels(n)) +
         " (or zero-pad with pad_to_multiple)";
}

void check_levels(const char* op, std::size_t n, std::size_t levels) {
  if (levels == 0) throw std::invalid_argument(std::string(op) + ": levels must be >= 1");
  if (levels >= 63 || n % (std::size_t{1} << levels) != 0) {
    throw std::invalid_argument(std::string(op) + ": " + feasible_levels_hint(n, levels));
  }
}

}  // namespace

Subbands1D dwt1d_single(std::span<const double> signal, const Wavelet& w) {
  const std::size_t n = signal.size();
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("dwt1d_single: signal length " + std::to_string(n) +
                                " must be even and >= 2; zero-pad with pad_to_multiple");
  }
  require_finite(signal, "dwt1d_single");
  const auto low = w.analysis_low();
  const auto high = w.analysis_high();
  const std::size_t half = n / 2;
  Subbands1D out{std::vector<double>(half, 0.0), std::vector<double>(half, 0.0)};
  for (std::size_t k = 0; k < half; ++k) {
    double a = 0.0;
    double d = 0.0;
    for (std::size_t t = 0; t < low.size(); ++t) {
      const double x = signal[(2 * k + t) % n];
      a += low[t] * x;
      d += high[t] * x;
    }
    out.approx[k] = a;
    out.detail[k] = d;
  }
  return out;
}

std::vector<double> idwt1d_single(std::span<const double> approx, std::span<const double> detail,
                                  const Wavelet& w) {
  if (approx.size() != detail.size()) {
    throw std::invalid_argument("idwt1d_single: approx has " + std::to_string(approx.size()) +
                                " coefficients but detail has " + std::to_string(detail.size()));
  }
  if (approx.empty()) throw std::invalid_argument("idwt1d_single: empty subbands");
  const std::size_t n = 2 * approx.size();
  const auto low = w.analysis_low();
  const auto high = w.analysis_high();
  std::vector<double> out(n, 0.0);
  for (std::size_t k = 0; k < approx.size(); ++k) {
    for (std::size_t t = 0; t < low.size(); ++t) {
      out[(2 * k + t) % n] += low[t] * approx[k] + high[t] * detail[k];
    }
  }
  return out;
}

std::size_t SubbandDecomposition1D::coefficient_count() const {
  std::size_t count = approx.size();
  for (const auto& d : details) count += d.size();
  return count;
}

std::vector<double> SubbandDecomposition1D::flatten() const {
  std::vector<double> flat;
  flat.reserve(coefficient_count());
  for (const auto& d : details) flat.insert(flat.end(), d.begin(), d.end());
  flat.insert(flat.end(), approx.begin(), approx.end());
  return flat;
}

void SubbandDecomposition1D::assign_flat(std::span<const double> flat) {
  if (flat.size() != coefficient_count())
    throw std::invalid_argument("SubbandDecomposition1D::assign_flat: size mismatch");
  std::size_t pos = 0;
  for (auto& d : details)
    for (double& v : d) v = flat[pos++];
  for (double& v : approx) v = flat[pos++];
}

std::size_t max_dyadic_levels(std::size_t n) {
  if (n == 0) return 0;
  std::size_t levels = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++levels;
  }
  return levels;
}

SubbandDecomposition1D dwt1d_multi(std::span<const double> signal, const Wavelet& w,
                                   std::size_t levels) {
  check_levels("dwt1d_multi", signal.size(), levels);
  SubbandDecomposition1D dec;
  dec.levels = levels;
  dec.original_length = signal.size();
  dec.approx.assign(signal.begin(), signal.end());
  for (std::size_t j = 0; j < levels; ++j) {
    Subbands1D stage = dwt1d_single(dec.approx, w);
    dec.approx = std::move(stage.approx);
    dec.details.push_back(std::move(stage.detail));
  }
  return dec;
}

std::vector<double> idwt1d_multi(const SubbandDecomposition1D& dec, const Wavelet& w) {
  if (dec.details.size() != dec.levels || dec.levels == 0)
    throw std::invalid_argument("idwt1d_multi: decomposition has inconsistent level count");
  std::vector<double> approx = dec.approx;
  for (std::size_t j = dec.levels; j-- > 0;) {
    approx = idwt1d_single(approx, dec.details[j], w);
  }
  return approx;
}

std::string_view band_name(Band b) {
  switch (b) {
    case Band::lh:
      return "lh";
    case Band::hl:
      return "hl";
    case Band::hh:
      return "hh";
  }
  return "?";
}

const Image2D& Subbands2D::band(Band b) const {
  switch (b) {
    case Band::lh:
      return lh;
    case Band::hl:
      return hl;
    case Band::hh:
      break;
  }
  return hh;
}

const Image2D& DetailBands::band(Band b) const {
  switch (b) {
    case Band::lh:
      return lh;
    case Band::hl:
      return hl;
    case Band::hh:
      break;
  }
  return hh;
}

Image2D& DetailBands::band(Band b) {
  return const_cast<Image2D&>(std::as_const(*this).band(b));
}

Subbands2D dwt2d_single(const Image2D& img, const Wavelet& w) {
  const std::size_t rows = img.rows();
  const std::size_t cols = img.cols();
  if (rows < 2 || cols < 2 || rows % 2 != 0 || cols % 2 != 0) {
    throw std::invalid_argument("dwt2d_single: image " + std::to_string(rows) + "x" +
                                std::to_string(cols) +
                                " must have even dimensions; zero-pad with pad_to_multiple");
  }
  require_finite(img.pixels(), "dwt2d_single");

  // Columns: low half on top, high half below.
  Image2D vertical(rows, cols);
  for (std::size_t c = 0; c < cols; ++c) {
    const auto col = img.column(c);
    const auto stage = dwt1d_single(col, w);
    for (std::size_t r = 0; r < rows / 2; ++r) {
      vertical(r, c) = stage.approx[r];
      vertical(rows / 2 + r, c) = stage.detail[r];
    }
  }

  const std::size_t hr = rows / 2;
  const std::size_t hc = cols / 2;
  Subbands2D out{Image2D(hr, hc), Image2D(hr, hc), Image2D(hr, hc), Image2D(hr, hc)};
  for (std::size_t r = 0; r < hr; ++r) {
    const auto top = dwt1d_single(vertical.row(r), w);
    const auto bottom = dwt1d_single(vertical.row(hr + r), w);
    for (std::size_t c = 0; c < hc; ++c) {
      out.ll(r, c) = top.approx[c];
      out.lh(r, c) = top.detail[c];
      out.hl(r, c) = bottom.approx[c];
      out.hh(r, c) = bottom.detail[c];
    }
  }
  return out;
}

Image2D idwt2d_single(const Subbands2D& bands, const Wavelet& w) {
  const std::size_t hr = bands.ll.rows();
  const std::size_t hc = bands.ll.cols();
  for (const Image2D* b : {&bands.lh, &bands.hl, &bands.hh}) {
    if (b->rows() != hr || b->cols() != hc)
      throw std::invalid_argument("idwt2d_single: subbands have mismatched dimensions");
  }
  if (hr == 0 || hc == 0) throw std::invalid_argument("idwt2d_single: empty subbands");

  const std::size_t rows = 2 * hr;
  const std::size_t cols = 2 * hc;
  Image2D vertical(rows, cols);
  for (std::size_t r = 0; r < hr; ++r) {
    const auto top = idwt1d_single(bands.ll.row(r), bands.lh.row(r), w);
    const auto bottom = idwt1d_single(bands.hl.row(r), bands.hh.row(r), w);
    std::copy(top.begin(), top.end(), vertical.row(r).begin());
    std::copy(bottom.begin(), bottom.end(), vertical.row(hr + r).begin());
  }

  Image2D out(rows, cols);
  std::vector<double> low(hr);
  std::vector<double> high(hr);
  for (std::size_t c = 0; c < cols; ++c) {
    for (std::size_t r = 0; r < hr; ++r) {
      low[r] = vertical(r, c);
      high[r] = vertical(hr + r, c);
    }
    out.set_column(c, idwt1d_single(low, high, w));
  }
  return out;
}

std::size_t SubbandPyramid2D::coefficient_count() const {
  std::size_t count = ll.size();
  for (const auto& level : bands) count += level.lh.size() + level.hl.size() + level.hh.size();
  return count;
}

std::vector<double> SubbandPyramid2D::flatten() const {
  std::vector<double> flat;
  flat.reserve(coefficient_count());
  for (const auto& level : bands) {
    for (Band b : kDetailBands) {
      const auto px = level.band(b).pixels();
      flat.insert(flat.end(), px.begin(), px.end());
    }
  }
  flat.insert(flat.end(), ll.pixels().begin(), ll.pixels().end());
  return flat;
}

void SubbandPyramid2D::assign_flat(std::span<const double> flat) {
  if (flat.size() != coefficient_count())
    throw std::invalid_argument("SubbandPyramid2D::assign_flat: size mismatch");
  std::size_t pos = 0;
  for (auto& level : bands) {
    for (Band b : kDetailBands)
      for (double& v : level.band(b).pixels()) v = flat[pos++];
  }
  for (double& v : ll.pixels()) v = flat[pos++];
}

SubbandPyramid2D dwt2d_multi(const Image2D& img, const Wavelet& w, std::size_t levels) {
  check_levels("dwt2d_multi (rows)", img.rows(), levels);
  check_levels("dwt2d_multi (cols)", img.cols(), levels);
  SubbandPyramid2D pyr;
  pyr.levels = levels;
  pyr.original_rows = img.rows();
  pyr.original_cols = img.cols();
  pyr.ll = img;
  for (std::size_t j = 0; j < levels; ++j) {
    Subbands2D stage = dwt2d_single(pyr.ll, w);
    pyr.ll = std::move(stage.ll);
    pyr.bands.push_back({std::move(stage.lh), std::move(stage.hl), std::move(stage.hh)});
  }
  return pyr;
}

Image2D idwt2d_multi(const SubbandPyramid2D& pyr, const Wavelet& w) {
  if (pyr.bands.size() != pyr.levels || pyr.levels == 0)
    throw std::invalid_argument("idwt2d_multi: pyramid has inconsistent level count");
  Image2D ll = pyr.ll;
  for (std::size_t j = pyr.levels; j-- > 0;) {
    const auto& level = pyr.bands[j];
    ll = idwt2d_single({std::move(ll), level.lh, level.hl, level.hh}, w);
  }
  return ll;
}

}  // namespace wavecloud
