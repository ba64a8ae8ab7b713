// Copyright 2026 The qdiner Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command implementations behind the `qdiner` executable. Each run_* renders
// its report to a string so it can be tested without a process boundary.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qdiner/equilibrium.hpp"
#include "qdiner/game.hpp"

namespace qdiner::cli {

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

enum class Command { Simulate, Table, Analyze, Sweep, ExportQasm };
enum class Format { Text, Json, Csv };

Format parse_format(std::string_view text);

struct SweepGrid {
    Player player = Player::Doug;
    std::optional<Opponents> others;
    std::size_t theta_steps = 0;
    std::size_t phi_steps = 0;
};

struct RunConfig {
    Command command = Command::Simulate;
    Model model = Model::Quantum;
    std::optional<StrategyProfile> profile;
    std::optional<std::string> payoff_path;  // builtin table when empty
    Format format = Format::Text;
    std::optional<std::string> out_path;
    std::optional<std::uint64_t> shots;
    std::optional<std::uint64_t> seed;
    SweepGrid sweep;
};

/// "C,E,C,E" or per-player "theta=<t>:phi=<p>", mixed freely.
/// UsageError names the offending token.
StrategyProfile parse_profile(std::string_view text);

/// Three letters from {C, E, A}: the other players' moves in player order.
Opponents parse_opponents(std::string_view letters);

PayoffTable load_payoffs(const RunConfig &cfg);

std::string run_simulate(const RunConfig &cfg);
std::string run_table(const RunConfig &cfg);
std::string run_analyze(const RunConfig &cfg);
std::string run_sweep(const RunConfig &cfg);
std::string run_export_qasm(const RunConfig &cfg);

/// Dispatches on cfg.command.
std::string run(const RunConfig &cfg);

/// Writes to cfg.out_path, or stdout when unset. Throws IoError.
void emit(const RunConfig &cfg, const std::string &text);

/// Parses argv, runs, and returns the process exit status:
/// 0 success, 2 usage, 3 validation/parse, 4 I/O.
int main_entry(int argc, const char *const *argv);

}  // namespace qdiner::cli
