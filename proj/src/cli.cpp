// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavecloud Authors

#include "wavecloud/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "wavecloud/compress.hpp"
#include "wavecloud/csv.hpp"
#include "wavecloud/dwt.hpp"
#include "wavecloud/evaluate.hpp"
#include "wavecloud/features.hpp"
#include "wavecloud/model_io.hpp"
#include "wavecloud/pgm.hpp"
#include "wavecloud/pipeline.hpp"
#include "wavecloud/pooling.hpp"
#include "wavecloud/scattering.hpp"
#include "wavecloud/stft.hpp"
#include "wavecloud/synth.hpp"

namespace wavecloud {

namespace fs = std::filesystem;

namespace {

constexpr std::string_view kCoeffTag = "wavecloud-coefficients";

// ---------------------------------------------------------------------------
// Coefficient CSV

std::string coefficients_csv(const SubbandPyramid2D& pyr, const Wavelet& w) {
  std::ostringstream out;
  out << '#' << kCoeffTag << " wavelet=" << w.name() << " levels=" << pyr.levels
      << " rows=" << pyr.original_rows << " cols=" << pyr.original_cols << '\n';
  out << "level,band,row,col,value\n";
  const auto emit = [&](std::size_t level, std::string_view band, const Image2D& grid) {
    for (std::size_t r = 0; r < grid.rows(); ++r)
      for (std::size_t c = 0; c < grid.cols(); ++c)
        out << level << ',' << band << ',' << r << ',' << c << ',' << format_double(grid(r, c)) << '\n';
  };
  for (std::size_t j = 0; j < pyr.levels; ++j)
    for (Band b : kDetailBands) emit(j + 1, band_name(b), pyr.bands[j].band(b));
  emit(pyr.levels, "ll", pyr.ll);
  return out.str();
}

std::map<std::string, std::string> parse_tags(std::string_view comment) {
  std::map<std::string, std::string> tags;
  for (const auto& field : split_fields(comment, ' ')) {
    const auto eq = field.find('=');
    if (eq != std::string::npos) tags[field.substr(0, eq)] = field.substr(eq + 1);
  }
  return tags;
}

struct CoefficientFile {
  Wavelet wavelet = haar();
  SubbandPyramid2D pyramid;
};

CoefficientFile parse_coefficients(std::string_view text) {
  const CsvTable table = parse_csv(text);
  std::optional<std::map<std::string, std::string>> tags;
  for (const auto& c : table.comments)
    if (c.rfind(kCoeffTag, 0) == 0) tags = parse_tags(c);
  if (!tags) throw ParseError("coefficient file lacks the '#" + std::string(kCoeffTag) + "' line");
  const auto tag = [&](const char* key) {
    const auto it = tags->find(key);
    if (it == tags->end()) throw ParseError(std::string("coefficient file lacks '") + key + "='");
    return it->second;
  };
  CoefficientFile file{wavelet_by_name(tag("wavelet")), {}};
  auto& pyr = file.pyramid;
  pyr.levels = static_cast<std::size_t>(parse_integer(tag("levels"), "levels"));
  pyr.original_rows = static_cast<std::size_t>(parse_integer(tag("rows"), "rows"));
  pyr.original_cols = static_cast<std::size_t>(parse_integer(tag("cols"), "cols"));
  if (pyr.levels == 0 || pyr.levels > 30) throw ParseError("coefficient file: bad level count");
  const std::size_t block = std::size_t{1} << pyr.levels;
  if (pyr.original_rows == 0 || pyr.original_cols == 0 || pyr.original_rows % block != 0 ||
      pyr.original_cols % block != 0)
    throw ParseError("coefficient file: dimensions incompatible with level count");

  for (std::size_t j = 1; j <= pyr.levels; ++j) {
    const std::size_t r = pyr.original_rows >> j;
    const std::size_t c = pyr.original_cols >> j;
    pyr.bands.push_back({Image2D(r, c), Image2D(r, c), Image2D(r, c)});
  }
  pyr.ll = Image2D(pyr.original_rows >> pyr.levels, pyr.original_cols >> pyr.levels);

  const std::size_t col_level = table.column("level");
  const std::size_t col_band = table.column("band");
  const std::size_t col_row = table.column("row");
  const std::size_t col_col = table.column("col");
  const std::size_t col_value = table.column("value");
  std::vector<char> seen(pyr.coefficient_count(), 0);
  std::size_t filled = 0;
  for (const auto& row : table.rows) {
    const auto level = static_cast<std::size_t>(parse_integer(row[col_level], "level"));
    const std::string& band = row[col_band];
    const auto r = static_cast<std::size_t>(parse_integer(row[col_row], "row"));
    const auto c = static_cast<std::size_t>(parse_integer(row[col_col], "col"));
    Image2D* grid = nullptr;
    std::size_t offset = 0;
    if (band == "ll") {
      if (level != pyr.levels) throw ParseError("coefficient file: ll must be at the deepest level");
      grid = &pyr.ll;
      offset = pyr.coefficient_count() - pyr.ll.size();
    } else {
      if (level == 0 || level > pyr.levels) throw ParseError("coefficient file: level out of range");
      for (std::size_t j = 1; j < level; ++j) offset += 3 * pyr.bands[j - 1].lh.size();
      Band b;
      if (band == "lh") {
        b = Band::lh;
      } else if (band == "hl") {
        b = Band::hl;
      } else if (band == "hh") {
        b = Band::hh;
      } else {
        throw ParseError("coefficient file: unknown band '" + band + "'");
      }
      grid = &pyr.bands[level - 1].band(b);
      offset += static_cast<std::size_t>(b) * grid->size();
    }
    if (r >= grid->rows() || c >= grid->cols()) throw ParseError("coefficient file: index out of range");
    const std::size_t flat = offset + r * grid->cols() + c;
    if (seen[flat]) throw ParseError("coefficient file: duplicate coefficient");
    seen[flat] = 1;
    ++filled;
    (*grid)(r, c) = parse_double(row[col_value], "coefficient");
  }
  if (filled != pyr.coefficient_count()) {
    throw ParseError("coefficient file: expected " + std::to_string(pyr.coefficient_count()) +
                     " coefficients, found " + std::to_string(filled));
  }
  return file;
}

// ---------------------------------------------------------------------------
// Feature / label CSVs

struct NamedFeatures {
  std::vector<std::string> names;
  std::vector<FeatureVector> vectors;
};

constexpr std::string_view kSchemaTag = "schema=";

std::string features_csv(const NamedFeatures& f, const std::vector<std::string>& fields,
                         const std::string& schema) {
  std::string out = "#" + std::string(kSchemaTag) + schema + "\n";
  out += "name";
  for (const auto& name : fields) out += "," + name;
  out += "\n";
  for (std::size_t i = 0; i < f.vectors.size(); ++i) {
    out += f.names[i];
    for (double v : f.vectors[i].values) out += "," + format_double(v);
    out += "\n";
  }
  return out;
}

NamedFeatures parse_features(std::string_view text) {
  const CsvTable table = parse_csv(text);
  std::string schema;
  for (const auto& c : table.comments)
    if (c.rfind(kSchemaTag, 0) == 0) schema = c.substr(kSchemaTag.size());
  if (schema.empty()) throw ParseError("features CSV lacks a '#schema=' line");
  if (table.header.empty() || table.header.front() != "name")
    throw ParseError("features CSV must start with a 'name' column");
  NamedFeatures out;
  for (const auto& row : table.rows) {
    out.names.push_back(row.front());
    FeatureVector v{{}, schema};
    for (std::size_t i = 1; i < row.size(); ++i) v.values.push_back(parse_double(row[i], "feature"));
    out.vectors.push_back(std::move(v));
  }
  return out;
}

std::map<std::string, int> parse_labels(std::string_view text) {
  const CsvTable table = parse_csv(text);
  const std::size_t col_name = table.column("name");
  const std::size_t col_label = table.column("label");
  std::map<std::string, int> labels;
  for (const auto& row : table.rows)
    labels[row[col_name]] = static_cast<int>(parse_integer(row[col_label], "label"));
  return labels;
}

// Tile names look like "file.pgm" or "file.pgm#r_c"; labels may be per file.
int lookup_label(const std::map<std::string, int>& labels, const std::string& name) {
  if (auto it = labels.find(name); it != labels.end()) return it->second;
  const auto hash = name.find('#');
  if (hash != std::string::npos) {
    if (auto it = labels.find(name.substr(0, hash)); it != labels.end()) return it->second;
  }
  throw ParseError("no label for '" + name + "'");
}

LabeledDataset join_labels(const NamedFeatures& f, const std::map<std::string, int>& labels) {
  LabeledDataset data;
  for (std::size_t i = 0; i < f.vectors.size(); ++i) data.add(f.vectors[i], lookup_label(labels, f.names[i]));
  return data;
}

std::string normalizer_csv(const NormalizationState& s) {
  std::string out = "#" + std::string(kSchemaTag) + s.schema_id + "\nmean,std\n";
  for (std::size_t d = 0; d < s.mean.size(); ++d)
    out += format_double(s.mean[d]) + "," + format_double(s.stddev[d]) + "\n";
  return out;
}

NormalizationState parse_normalizer(std::string_view text) {
  const CsvTable table = parse_csv(text);
  NormalizationState s;
  for (const auto& c : table.comments)
    if (c.rfind(kSchemaTag, 0) == 0) s.schema_id = c.substr(kSchemaTag.size());
  const std::size_t col_mean = table.column("mean");
  const std::size_t col_std = table.column("std");
  for (const auto& row : table.rows) {
    s.mean.push_back(parse_double(row[col_mean], "mean"));
    s.stddev.push_back(parse_double(row[col_std], "std"));
    if (!(s.stddev.back() > 0.0)) throw ParseError("normalizer std must be positive");
  }
  return s;
}

std::vector<double> parse_signal(std::string_view text) {
  const CsvTable table = parse_csv(text);
  std::vector<double> signal;
  // A purely numeric first line is data, not a header.
  bool header_is_data = true;
  try {
    parse_double(table.header.front());
  } catch (const ParseError&) {
    header_is_data = false;
  }
  if (header_is_data) signal.push_back(parse_double(table.header.front(), "sample"));
  for (const auto& row : table.rows) signal.push_back(parse_double(row.front(), "sample"));
  return signal;
}

std::vector<fs::path> pgm_files(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw std::runtime_error("'" + dir.string() + "' is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".pgm") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw std::runtime_error("no .pgm files in '" + dir.string() + "'");
  return files;
}

// ---------------------------------------------------------------------------
// Subcommand options

struct Options {
  std::string input, out, coeffs, report, model_path, features, labels, norm_in, norm_out;
  std::string wavelet = "haar";
  std::string stats = "energy,mean_abs,std";
  std::string source = "dwt-stats";
  std::string model_kind;
  std::string grid = "3x3";
  std::string variant = "p5";
  std::size_t levels = 1;
  std::size_t tile = 32;
  std::size_t count = 50;
  std::size_t window = 0;
  std::size_t hop = 0;
  std::size_t epochs = 0;
  int order = 2;
  std::uint64_t seed = 7;
  double keep = 1.0;
  double lambda = 1e-2;
  double sigma = 1.0;
  double lr0 = 0.5, lr_final = 0.01, r0 = 1.5, r_final = 0.3;
  double blob_scale = 0.18, noise = 20.0;
  bool normalize = false;
  bool hann = false;
};

PgmVariant parse_variant(const std::string& v) {
  if (v == "p2") return PgmVariant::ascii_p2;
  if (v == "p5") return PgmVariant::binary_p5;
  throw std::invalid_argument("unknown PGM variant '" + v + "' (expected p2 or p5)");
}

int cmd_transform(const Options& o, std::ostream& out) {
  const Image2D img = load_pgm(o.input);
  const Wavelet w = wavelet_by_name(o.wavelet);
  const auto pyr = dwt2d_multi(img, w, o.levels);
  write_file(o.out, coefficients_csv(pyr, w));
  out << "wrote " << pyr.coefficient_count() << " coefficients to " << o.out << '\n';
  return kExitSuccess;
}

int cmd_reconstruct(const Options& o, std::ostream& out) {
  const auto file = parse_coefficients(read_file(o.coeffs));
  const Image2D img = idwt2d_multi(file.pyramid, file.wavelet);
  save_pgm(o.out, img, parse_variant(o.variant));
  out << "wrote " << img.rows() << "x" << img.cols() << " image to " << o.out << '\n';
  return kExitSuccess;
}

int cmd_compress(const Options& o, std::ostream& out) {
  const Image2D img = load_pgm(o.input);
  const Wavelet w = wavelet_by_name(o.wavelet);
  const auto result = compress_threshold(dwt2d_multi(img, w, o.levels), w, o.keep);
  save_pgm(o.out, idwt2d_multi(result.decomposition, w), parse_variant(o.variant));
  const auto& r = result.report;
  if (!o.report.empty()) {
    write_file(o.report, "kept_count,total_count,keep_fraction,peak,psnr_db\n" +
                             std::to_string(r.kept_count) + "," + std::to_string(r.total_count) +
                             "," + format_double(r.keep_fraction) + "," + format_double(r.peak) +
                             "," + format_double(r.psnr_db) + "\n");
  }
  out << "kept " << r.kept_count << " of " << r.total_count << " coefficients, psnr "
      << format_double(r.psnr_db) << " dB\n";
  return kExitSuccess;
}

int cmd_scatter(const Options& o, std::ostream& out) {
  const Image2D img = load_pgm(o.input);
  const ScatteringConfig cfg{o.levels, o.order, wavelet_by_name(o.wavelet)};
  const auto feature = scatter2d(img, cfg);
  FeatureSpec spec;
  spec.source = FeatureSource::scattering;
  spec.levels = o.levels;
  spec.scattering_order = o.order;
  std::vector<std::string> fields;
  for (const auto& p : feature.paths) fields.push_back(p.label());
  NamedFeatures named;
  named.names.push_back(fs::path(o.input).filename().string());
  named.vectors.push_back(FeatureVector{feature.values, spec.schema_id()});
  write_file(o.out, features_csv(named, fields, spec.schema_id()));
  out << "wrote " << feature.values.size() << " scattering values to " << o.out << '\n';
  return kExitSuccess;
}

int cmd_extract(const Options& o, std::ostream& out) {
  const Wavelet w = wavelet_by_name(o.wavelet);
  FeatureSpec spec;
  spec.levels = o.levels;
  if (o.source == "scattering") {
    spec.source = FeatureSource::scattering;
    spec.scattering_order = o.order;
  } else if (o.source == "dwt-stats") {
    spec.stats = parse_stats(o.stats);
  } else {
    throw std::invalid_argument("unknown feature source '" + o.source + "'");
  }

  NamedFeatures features;
  for (const auto& path : pgm_files(o.input)) {
    const Image2D img = load_pgm(path);
    const auto tiles = tile_image(img, o.tile);
    const std::string base = path.filename().string();
    for (const auto& t : tiles) {
      features.names.push_back(tiles.size() == 1 ? base
                                                 : base + "#" + std::to_string(t.grid_row) + "_" +
                                                       std::to_string(t.grid_col));
      features.vectors.push_back(extract_features(t.image, w, spec));
    }
  }

  if (!o.norm_in.empty()) {
    const auto state = parse_normalizer(read_file(o.norm_in));
    for (auto& v : features.vectors) v = apply_normalizer(state, v);
  } else if (o.normalize) {
    const auto state = fit_normalizer(features.vectors);
    for (auto& v : features.vectors) v = apply_normalizer(state, v);
    if (!o.norm_out.empty()) write_file(o.norm_out, normalizer_csv(state));
  }
  write_file(o.out, features_csv(features, spec.field_names(), spec.schema_id()));
  out << "wrote " << features.vectors.size() << " feature vectors (" << spec.dimension()
      << " values each) to " << o.out << '\n';
  return kExitSuccess;
}

int cmd_synth(const Options& o, std::ostream& out) {
  const SynthConfig cfg{o.seed, o.tile, o.count, o.blob_scale, o.noise};
  const auto set = synth_tiles(cfg);
  fs::create_directories(o.out);
  std::string labels = "name,label\n";
  for (std::size_t i = 0; i < set.tiles.size(); ++i) {
    std::ostringstream name;
    name << "tile_" << std::setw(5) << std::setfill('0') << i << ".pgm";
    save_pgm(fs::path(o.out) / name.str(), set.tiles[i], parse_variant(o.variant));
    labels += name.str() + "," + std::to_string(set.labels[i]) + "\n";
  }
  write_file(fs::path(o.out) / "labels.csv", labels);
  out << "wrote " << set.tiles.size() << " tiles to " << o.out << '\n';
  return kExitSuccess;
}

std::pair<std::size_t, std::size_t> parse_grid(const std::string& g) {
  const auto x = g.find('x');
  if (x == std::string::npos) throw std::invalid_argument("grid must look like WxH, got '" + g + "'");
  const auto w = parse_integer(g.substr(0, x), "grid width");
  const auto h = parse_integer(g.substr(x + 1), "grid height");
  if (w <= 0 || h <= 0) throw std::invalid_argument("grid dims must be positive");
  return {static_cast<std::size_t>(w), static_cast<std::size_t>(h)};
}

int cmd_train(const Options& o, std::ostream& out) {
  const auto features = parse_features(read_file(o.features));
  const LabeledDataset data = join_labels(features, parse_labels(read_file(o.labels)));
  std::optional<NormalizationState> norm;
  if (o.normalize) norm = fit_normalizer(data.vectors);

  ModelFile model;
  if (o.model_kind == "svm") {
    model = train_svm_model(data, SvmConfig{o.lambda, o.epochs == 0 ? 50 : o.epochs, o.seed}, norm);
  } else if (o.model_kind == "som") {
    const auto [gw, gh] = parse_grid(o.grid);
    const SomConfig cfg{gw, gh, o.lr0, o.lr_final, o.r0, o.r_final, o.epochs == 0 ? 20 : o.epochs, o.seed};
    model = train_som_model(data, cfg, norm);
  } else if (o.model_kind == "pnn") {
    model = train_pnn_model(data, norm);
  } else {
    throw std::invalid_argument("unknown model '" + o.model_kind + "' (expected svm, som or pnn)");
  }
  save_model(o.out, model);
  out << "trained " << model.kind() << " on " << data.size() << " vectors, wrote " << o.out << '\n';
  return kExitSuccess;
}

int cmd_predict(const Options& o, std::ostream& out) {
  const ModelFile model = load_model(o.model_path);
  const auto features = parse_features(read_file(o.features));
  std::string csv = "name,prediction\n";
  std::vector<int> predictions;
  for (std::size_t i = 0; i < features.vectors.size(); ++i) {
    predictions.push_back(model.predict(features.vectors[i], o.sigma));
    csv += features.names[i] + "," + std::to_string(predictions.back()) + "\n";
  }
  write_file(o.out, csv);
  out << "wrote " << predictions.size() << " predictions to " << o.out << '\n';
  if (!o.labels.empty()) {
    const LabeledDataset data = join_labels(features, parse_labels(read_file(o.labels)));
    const auto report = evaluate_model(model, data, o.sigma);
    out << "accuracy " << format_double(report.accuracy) << '\n';
    if (!o.report.empty()) write_file(o.report, evaluation_csv(report));
  }
  return kExitSuccess;
}

int cmd_pool_demo(const Options& o, std::ostream& out) {
  const FeatureMap map = FeatureMap::from_image(load_pgm(o.input));
  const auto reports = info_loss_report(map, wavelet_by_name(o.wavelet));
  std::string csv = "method,channels,height,width,reconstruction_rmse\n";
  for (const auto& r : reports) {
    csv += std::string(pool_method_name(r.method)) + "," + std::to_string(r.channels) + "," +
           std::to_string(r.height) + "," + std::to_string(r.width) + "," +
           format_double(r.reconstruction_rmse) + "\n";
    out << pool_method_name(r.method) << " rmse " << format_double(r.reconstruction_rmse) << '\n';
  }
  write_file(o.out, csv);
  return kExitSuccess;
}

int cmd_stft(const Options& o, std::ostream& out) {
  const auto signal = parse_signal(read_file(o.input));
  const auto spec = stft_spectrogram(signal, o.window, o.hop,
                                     o.hann ? WindowKind::hann : WindowKind::rectangular);
  std::string csv = "frame,bin,magnitude\n";
  for (std::size_t f = 0; f < spec.frames; ++f)
    for (std::size_t k = 0; k < spec.bins; ++k)
      csv += std::to_string(f) + "," + std::to_string(k) + "," + format_double(spec.at(f, k)) + "\n";
  write_file(o.out, csv);
  out << "wrote " << spec.frames << " frames x " << spec.bins << " bins to " << o.out << '\n';
  return kExitSuccess;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"wavecloud: wavelet features and lightweight classifiers for cloud detection", "wavecloud"};
  app.require_subcommand(1);
  Options o;

  const auto wavelet_opt = [&](CLI::App* sub) {
    sub->add_option("--wavelet", o.wavelet, "haar or db2..db10")->capture_default_str();
  };
  const auto levels_opt = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--levels", o.levels, "decomposition depth J")->check(CLI::Range(1, 30));
    if (required) opt->required();
  };

  auto* transform = app.add_subcommand("transform", "multi-level 2D DWT of a PGM to a coefficient CSV");
  transform->add_option("--input", o.input, "input PGM")->required();
  wavelet_opt(transform);
  levels_opt(transform, true);
  transform->add_option("--out", o.out, "coefficient CSV")->required();

  auto* reconstruct = app.add_subcommand("reconstruct", "inverse DWT of a coefficient CSV to a PGM");
  reconstruct->add_option("--coeffs", o.coeffs, "coefficient CSV")->required();
  reconstruct->add_option("--out", o.out, "output PGM")->required();
  reconstruct->add_option("--variant", o.variant, "p2 or p5")->capture_default_str();

  auto* compress = app.add_subcommand("compress", "keep the largest DWT coefficients and reconstruct");
  compress->add_option("--input", o.input, "input PGM")->required();
  wavelet_opt(compress);
  levels_opt(compress, true);
  compress->add_option("--keep", o.keep, "fraction of coefficients kept")->required();
  compress->add_option("--out", o.out, "output PGM")->required();
  compress->add_option("--report", o.report, "report CSV");
  compress->add_option("--variant", o.variant, "p2 or p5")->capture_default_str();

  auto* scatter = app.add_subcommand("scatter", "2D scattering features of a PGM");
  scatter->add_option("--input", o.input, "input PGM")->required();
  levels_opt(scatter, true);
  scatter->add_option("--order", o.order, "0, 1 or 2")->check(CLI::Range(0, 2))->capture_default_str();
  wavelet_opt(scatter);
  scatter->add_option("--out", o.out, "features CSV")->required();

  auto* extract = app.add_subcommand("extract", "feature vectors for every tile of every PGM in a directory");
  extract->add_option("--input", o.input, "directory of PGMs")->required();
  extract->add_option("--tile", o.tile, "tile size (even, divides image dims)")->capture_default_str();
  wavelet_opt(extract);
  levels_opt(extract, true);
  extract->add_option("--stats", o.stats, "comma list of energy,mean_abs,std")->capture_default_str();
  extract->add_option("--source", o.source, "dwt-stats or scattering")->capture_default_str();
  extract->add_option("--order", o.order, "scattering order")->check(CLI::Range(0, 2));
  extract->add_flag("--normalize", o.normalize, "z-score the extracted vectors");
  extract->add_option("--norm-out", o.norm_out, "write the fitted normalizer CSV");
  extract->add_option("--norm-in", o.norm_in, "apply a saved normalizer instead of fitting");
  extract->add_option("--out", o.out, "features CSV")->required();

  auto* synth = app.add_subcommand("synth", "generate seeded cloud/ground PGM tiles");
  synth->add_option("--seed", o.seed, "generator seed")->capture_default_str();
  synth->add_option("--tile", o.tile, "tile size")->capture_default_str();
  synth->add_option("--count", o.count, "tiles per class")->capture_default_str();
  synth->add_option("--blob-scale", o.blob_scale, "cloud blob width / tile size")->capture_default_str();
  synth->add_option("--noise", o.noise, "ground noise amplitude")->capture_default_str();
  synth->add_option("--variant", o.variant, "p2 or p5")->capture_default_str();
  synth->add_option("--out", o.out, "output directory")->required();

  auto* train = app.add_subcommand("train", "train svm, som or pnn on a features CSV");
  train->add_option("--model", o.model_kind, "svm, som or pnn")->required();
  train->add_option("--features", o.features, "features CSV")->required();
  train->add_option("--labels", o.labels, "labels CSV (name,label)")->required();
  train->add_option("--seed", o.seed, "training seed")->capture_default_str();
  train->add_option("--out", o.out, "model file")->required();
  train->add_option("--lambda", o.lambda, "svm regularization")->capture_default_str();
  train->add_option("--epochs", o.epochs, "epochs (svm default 50, som default 20)");
  train->add_option("--grid", o.grid, "som grid WxH")->capture_default_str();
  train->add_option("--lr0", o.lr0, "som initial learning rate")->capture_default_str();
  train->add_option("--lr-final", o.lr_final, "som final learning rate")->capture_default_str();
  train->add_option("--r0", o.r0, "som initial radius")->capture_default_str();
  train->add_option("--r-final", o.r_final, "som final radius")->capture_default_str();
  train->add_flag("--normalize", o.normalize, "fit a z-score normalizer and store it in the model");

  auto* predict = app.add_subcommand("predict", "apply a model file to a features CSV");
  predict->add_option("--model", o.model_path, "model file")->required();
  predict->add_option("--features", o.features, "features CSV")->required();
  predict->add_option("--sigma", o.sigma, "pnn bandwidth")->capture_default_str();
  predict->add_option("--labels", o.labels, "labels CSV; prints accuracy when given");
  predict->add_option("--report", o.report, "confusion matrix CSV (needs --labels)");
  predict->add_option("--out", o.out, "predictions CSV")->required();

  auto* pool = app.add_subcommand("pool-demo", "information loss of avg/max/dwt pooling on a PGM");
  pool->add_option("--input", o.input, "input PGM")->required();
  wavelet_opt(pool);
  pool->add_option("--out", o.out, "report CSV")->required();

  auto* stft = app.add_subcommand("stft", "magnitude spectrogram of a one-column signal CSV");
  stft->add_option("--input", o.input, "signal CSV")->required();
  stft->add_option("--window", o.window, "window length (even)")->required();
  stft->add_option("--hop", o.hop, "hop size")->required();
  stft->add_flag("--hann", o.hann, "Hann window instead of rectangular");
  stft->add_option("--out", o.out, "spectrogram CSV")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitSuccess;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitSuccess;
    }
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  const std::vector<std::pair<CLI::App*, int (*)(const Options&, std::ostream&)>> handlers = {
      {transform, cmd_transform}, {reconstruct, cmd_reconstruct}, {compress, cmd_compress},
      {scatter, cmd_scatter},     {extract, cmd_extract},         {synth, cmd_synth},
      {train, cmd_train},         {predict, cmd_predict},         {pool, cmd_pool_demo},
      {stft, cmd_stft}};
  for (const auto& [sub, handler] : handlers) {
    if (!sub->parsed()) continue;
    try {
      return handler(o, out);
    } catch (const std::exception& e) {
      err << sub->get_name() << ": " << e.what() << '\n';
      return kExitData;
    }
  }
  err << "usage error: no subcommand\n";
  return kExitUsage;
}

}  // namespace wavecloud
