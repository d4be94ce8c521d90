// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavecloud Authors

#include "wavecloud/evaluate.hpp"

#include <algorithm>
#include <stdexcept>

#include "wavecloud/csv.hpp"

namespace wavecloud {

EvaluationReport evaluate(const PredictFn& predict, const LabeledDataset& data) {
  if (data.empty()) throw std::invalid_argument("evaluate: empty dataset");
  data.validate("evaluate", /*allow_negative=*/true);
  EvaluationReport r;
  r.total = data.size();
  r.predictions.reserve(data.size());
  for (const auto& v : data.vectors) r.predictions.push_back(predict(v.values));

  r.classes = data.labels;
  r.classes.insert(r.classes.end(), r.predictions.begin(), r.predictions.end());
  std::sort(r.classes.begin(), r.classes.end());
  r.classes.erase(std::unique(r.classes.begin(), r.classes.end()), r.classes.end());
  const auto index_of = [&](int label) {
    return static_cast<std::size_t>(std::lower_bound(r.classes.begin(), r.classes.end(), label) -
                                    r.classes.begin());
  };
  r.confusion.assign(r.classes.size(), std::vector<std::size_t>(r.classes.size(), 0));
  for (std::size_t i = 0; i < data.size(); ++i) {
    ++r.confusion[index_of(data.labels[i])][index_of(r.predictions[i])];
    if (data.labels[i] == r.predictions[i]) ++r.correct;
  }
  r.accuracy = static_cast<double>(r.correct) / static_cast<double>(r.total);
  return r;
}

std::string evaluation_csv(const EvaluationReport& report) {
  std::string out = "true\\predicted";
  for (int c : report.classes) out += "," + std::to_string(c);
  out += "\n";
  for (std::size_t i = 0; i < report.classes.size(); ++i) {
    out += std::to_string(report.classes[i]);
    for (std::size_t count : report.confusion[i]) out += "," + std::to_string(count);
    out += "\n";
  }
  out += "accuracy," + format_double(report.accuracy) + "\n";
  return out;
}

}  // namespace wavecloud
