// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shearbeam::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitSolver = 4;

/// Overrides the output directory of every subcommand unless --output_dir is given.
inline constexpr const char* kOutputDirEnv = "SHEARBEAM_OUTPUT_DIR";

/// Entry point for `shearbeam <subcommand> ...`. args excludes the program name.
/// Failures print one line `<Kind>: <message>` to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shearbeam::cli
