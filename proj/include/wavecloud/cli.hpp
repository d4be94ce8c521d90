// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavecloud Authors

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wavecloud {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

/// Runs the batch CLI. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wavecloud
