// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavecloud Authors

#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wavecloud {

/// Malformed text input (CSV, model file, coefficient file).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Decimal text with 17 significant digits, which round-trips every double
/// exactly; "inf", "-inf", "nan" for non-finite values.
std::string format_double(double v);
/// Strict parse of a whole token; throws ParseError naming `what`.
double parse_double(std::string_view token, std::string_view what = "number");
long long parse_integer(std::string_view token, std::string_view what = "integer");

/// Minimal comma-separated table: no quoting, LF line endings (CR tolerated),
/// lines starting with '#' collected as comments, blank lines skipped.
struct CsvTable {
  std::vector<std::string> comments;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Index of a header column; throws ParseError if absent.
  std::size_t column(std::string_view name) const;
};

std::vector<std::string> split_fields(std::string_view line, char sep = ',');
CsvTable parse_csv(std::string_view text);
std::string join_fields(const std::vector<std::string>& fields, char sep = ',');

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace wavecloud
