// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavecloud Authors

#include "wavecloud/model_io.hpp"

#include <stdexcept>

#include "wavecloud/csv.hpp"

namespace wavecloud {

int SomClassifier::predict(std::span<const double> v) const {
  const std::size_t bmu = som_assign(grid, v);
  if (unit_labels.empty()) return static_cast<int>(bmu);
  return unit_labels[bmu];
}

std::string_view ModelFile::kind() const {
  switch (model.index()) {
    case 0:
      return "svm";
    case 1:
      return "som";
    default:
      return "pnn";
  }
}

std::size_t ModelFile::dimension() const {
  if (const auto* svm = std::get_if<SvmModel>(&model)) return svm->weights.size();
  if (const auto* som = std::get_if<SomClassifier>(&model)) return som->grid.dim;
  return std::get<PnnModel>(model).dim;
}

int ModelFile::predict(const FeatureVector& v, double sigma) const {
  if (v.schema_id != schema_id) {
    throw std::invalid_argument("predict: feature schema '" + v.schema_id +
                                "' does not match model schema '" + schema_id + "'");
  }
  const FeatureVector input = normalizer ? apply_normalizer(*normalizer, v) : v;
  if (const auto* svm = std::get_if<SvmModel>(&model))
    return svm_predict(*svm, input.values) > 0 ? svm_classes[1] : svm_classes[0];
  if (const auto* som = std::get_if<SomClassifier>(&model)) return som->predict(input.values);
  return pnn_predict(std::get<PnnModel>(model), input.values, sigma);
}

namespace {

void line(std::string& out, std::string_view key, const std::vector<std::string>& fields = {}) {
  out += key;
  for (const auto& f : fields) {
    out += ' ';
    out += f;
  }
  out += '\n';
}

void append_values(std::vector<std::string>& fields, std::span<const double> values) {
  for (double v : values) fields.push_back(format_double(v));
}

class Reader {
 public:
  explicit Reader(std::string_view text) {
    std::size_t start = 0;
    while (start < text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view l = text.substr(start, end - start);
      if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
      lines_.emplace_back(l);
      start = end + 1;
    }
  }

  std::string_view raw() {
    if (pos_ >= lines_.size()) fail("unexpected end of model file");
    return lines_[pos_++];
  }

  /// Next record, checking its key and field count (npos = any count).
  std::vector<std::string> expect(std::string_view key, std::size_t nfields) {
    const auto fields = split_fields(raw(), ' ');
    if (fields.front() != key) fail("expected '" + std::string(key) + "', found '" + fields.front() + "'");
    if (nfields != std::string::npos && fields.size() != nfields + 1)
      fail("record '" + std::string(key) + "' has the wrong number of fields");
    return {fields.begin() + 1, fields.end()};
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("model file line " + std::to_string(pos_) + ": " + what);
  }

 private:
  std::vector<std::string> lines_;
  std::size_t pos_ = 0;
};

std::size_t to_size(Reader& rd, const std::string& token, std::string_view what) {
  const long long v = parse_integer(token, what);
  if (v < 0) rd.fail(std::string(what) + " must be non-negative");
  return static_cast<std::size_t>(v);
}

}  // namespace

std::string serialize_model(const ModelFile& model) {
  const std::size_t dim = model.dimension();
  std::string out;
  line(out, kModelMagic);
  line(out, "kind", {std::string(model.kind())});
  line(out, "dim", {std::to_string(dim)});
  line(out, "schema", {model.schema_id});
  if (model.normalizer) {
    line(out, "normalizer", {"zscore"});
    for (std::size_t d = 0; d < dim; ++d)
      line(out, "norm", {format_double(model.normalizer->mean[d]), format_double(model.normalizer->stddev[d])});
  } else {
    line(out, "normalizer", {"none"});
  }

  if (const auto* svm = std::get_if<SvmModel>(&model.model)) {
    line(out, "classes", {std::to_string(model.svm_classes[0]), std::to_string(model.svm_classes[1])});
    line(out, "lambda", {format_double(svm->lambda)});
    line(out, "bias", {format_double(svm->bias)});
    for (double w : svm->weights) line(out, "weight", {format_double(w)});
  } else if (const auto* som = std::get_if<SomClassifier>(&model.model)) {
    const auto& g = som->grid;
    line(out, "grid", {std::to_string(g.width), std::to_string(g.height)});
    line(out, "lr0", {format_double(g.config.lr0)});
    line(out, "lr_final", {format_double(g.config.lr_final)});
    line(out, "r0", {format_double(g.config.r0)});
    line(out, "r_final", {format_double(g.config.r_final)});
    line(out, "epochs", {std::to_string(g.config.epochs)});
    line(out, "seed", {std::to_string(g.config.seed)});
    for (std::size_t u = 0; u < g.units(); ++u) {
      std::vector<std::string> fields{std::to_string(som->unit_labels.empty() ? -1 : som->unit_labels[u])};
      append_values(fields, g.unit(u));
      line(out, "unit", fields);
    }
  } else {
    const auto& pnn = std::get<PnnModel>(model.model);
    for (const auto& [label, members] : pnn.classes) {
      for (const auto& x : members) {
        std::vector<std::string> fields{std::to_string(label)};
        append_values(fields, x);
        line(out, "sample", fields);
      }
    }
  }
  line(out, "end");
  return out;
}

ModelFile parse_model(std::string_view text) {
  Reader rd(text);
  if (rd.raw() != kModelMagic) rd.fail("missing '" + std::string(kModelMagic) + "' header");
  const std::string kind = rd.expect("kind", 1)[0];
  const std::size_t dim = to_size(rd, rd.expect("dim", 1)[0], "dim");
  if (dim == 0) rd.fail("dim must be positive");
  ModelFile model;
  model.schema_id = rd.expect("schema", 1)[0];

  const std::string norm = rd.expect("normalizer", 1)[0];
  if (norm == "zscore") {
    NormalizationState state{model.schema_id, {}, {}};
    for (std::size_t d = 0; d < dim; ++d) {
      const auto f = rd.expect("norm", 2);
      state.mean.push_back(parse_double(f[0], "normalizer mean"));
      state.stddev.push_back(parse_double(f[1], "normalizer std"));
      if (!(state.stddev.back() > 0.0)) rd.fail("normalizer std must be positive");
    }
    model.normalizer = std::move(state);
  } else if (norm != "none") {
    rd.fail("unknown normalizer '" + norm + "'");
  }

  if (kind == "svm") {
    SvmModel svm;
    const auto classes = rd.expect("classes", 2);
    model.svm_classes = {static_cast<int>(parse_integer(classes[0], "svm class")),
                         static_cast<int>(parse_integer(classes[1], "svm class"))};
    svm.lambda = parse_double(rd.expect("lambda", 1)[0], "lambda");
    svm.bias = parse_double(rd.expect("bias", 1)[0], "bias");
    for (std::size_t d = 0; d < dim; ++d) svm.weights.push_back(parse_double(rd.expect("weight", 1)[0], "weight"));
    model.model = std::move(svm);
    rd.expect("end", 0);
  } else if (kind == "som") {
    SomClassifier som;
    auto& g = som.grid;
    const auto dims = rd.expect("grid", 2);
    g.width = to_size(rd, dims[0], "grid width");
    g.height = to_size(rd, dims[1], "grid height");
    if (g.width == 0 || g.height == 0) rd.fail("grid dims must be positive");
    g.dim = dim;
    g.config.width = g.width;
    g.config.height = g.height;
    g.config.lr0 = parse_double(rd.expect("lr0", 1)[0], "lr0");
    g.config.lr_final = parse_double(rd.expect("lr_final", 1)[0], "lr_final");
    g.config.r0 = parse_double(rd.expect("r0", 1)[0], "r0");
    g.config.r_final = parse_double(rd.expect("r_final", 1)[0], "r_final");
    g.config.epochs = to_size(rd, rd.expect("epochs", 1)[0], "epochs");
    g.config.seed = static_cast<std::uint64_t>(parse_integer(rd.expect("seed", 1)[0], "seed"));
    bool any_label = false;
    std::vector<int> labels;
    for (std::size_t u = 0; u < g.units(); ++u) {
      const auto f = rd.expect("unit", dim + 1);
      labels.push_back(static_cast<int>(parse_integer(f[0], "unit label")));
      any_label = any_label || labels.back() >= 0;
      for (std::size_t d = 0; d < dim; ++d) g.weights.push_back(parse_double(f[d + 1], "unit weight"));
    }
    if (any_label) som.unit_labels = std::move(labels);
    model.model = std::move(som);
    rd.expect("end", 0);
  } else if (kind == "pnn") {
    PnnModel pnn;
    pnn.dim = dim;
    while (true) {
      const auto f = split_fields(rd.raw(), ' ');
      if (f.front() == "end" && f.size() == 1) break;
      if (f.front() != "sample" || f.size() != dim + 2) rd.fail("expected 'sample' record or 'end'");
      std::vector<double> x;
      for (std::size_t d = 0; d < dim; ++d) x.push_back(parse_double(f[d + 2], "sample value"));
      pnn.classes[static_cast<int>(parse_integer(f[1], "sample label"))].push_back(std::move(x));
    }
    if (pnn.classes.empty()) rd.fail("pnn model has no samples");
    model.model = std::move(pnn);
  } else {
    rd.fail("unknown model kind '" + kind + "'");
  }
  return model;
}

void save_model(const std::filesystem::path& path, const ModelFile& model) {
  write_file(path, serialize_model(model));
}

ModelFile load_model(const std::filesystem::path& path) { return parse_model(read_file(path)); }

}  // namespace wavecloud
