// Copyright 2026 The Discordium Authors
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

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "discordium/discord.hpp"
#include "discordium/entangle.hpp"
#include "discordium/verify.hpp"

namespace discordium {

using Json = nlohmann::ordered_json;

struct StateFile {
  BipartiteState state;
  std::string label;
};

/// Rows of [re, im] pairs.
Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

/// {"dims": [n_A, n_B], "matrix": ..., "label": ...}; the label is omitted when empty.
Json state_to_json(const BipartiteState& rho, std::string_view label = {});
/// Throws DimensionError("dims/matrix mismatch") when the dims do not multiply to the
/// matrix size, InvariantViolation for an invalid density matrix, and
/// std::invalid_argument for any other malformed field.
StateFile state_from_json(const Json& j);

StateFile load_state(const std::filesystem::path& path);
/// Pretty form with one matrix row per line; parses back to the same state.
std::string format_state(const BipartiteState& rho, std::string_view label = {});
void save_state(const std::filesystem::path& path, const BipartiteState& rho, std::string_view label = {});

/// Lower-case hex SHA-256 digest.
std::string sha256_hex(std::string_view bytes);
/// Digest of the canonical (compact) serialization, independent of file formatting.
std::string state_digest(const BipartiteState& rho);
/// {"label", "dims", "sha256"} identifying a report's input.
Json input_json(const StateFile& input);

/// Rounds to 12 significant digits; +infinity becomes the string "inf".
Json bits_to_json(double value);
double bits_from_json(const Json& j);

Json measurement_to_json(const OptimalMeasurement& m);
OptimalMeasurement measurement_from_json(const Json& j);

Json config_to_json(const OptimizerConfig& cfg);
OptimizerConfig config_from_json(const Json& j);

Json discord_report(const StateFile& input, const DiscordResult& result, const OptimizerConfig& cfg);
Json eof_report(const StateFile& input, const EntanglementResult& result, const OptimizerConfig& cfg);
Json battery_to_json(const BatteryReport& report);

std::string_view library_version();

}  // namespace discordium
