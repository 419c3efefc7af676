/*
   Copyright 2026 The vanet-outage Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include "vanet/experiments.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace vanet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitNonConvergence = 2;

inline constexpr const char* kSeedEnvVar = "VANET_OUTAGE_SEED";

/// Fully resolved invocation: JSON config values with command-line flags
/// layered on top.
struct RunConfig
{
    std::string command;
    std::optional<std::string> scenario;
    std::optional<ModelSpec> inline_model;
    std::string inline_name = "inline";
    std::optional<std::string> engine;
    QuadratureSettings quadrature;
    TrialConfig trials;
    bool seed_given = false;
    CachingParams params = CachingParams::defaults();
    TauGrid grid = TauGrid::default_grid();
    std::filesystem::path out_dir = "out";
};

struct ConfigError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

/// Parses argv-style arguments (without the program name) into a RunConfig.
/// Throws ConfigError on invalid input.
RunConfig parse_args(const std::vector<std::string>& args);

int cmd_analyze(const RunConfig& cfg, std::ostream& out);
int cmd_simulate(const RunConfig& cfg, std::ostream& out);
int cmd_compare(const RunConfig& cfg, std::ostream& out);
int cmd_list_scenarios(std::ostream& out);

/// Entry point shared by the executable and the tests. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace vanet::cli
