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

#include "discordium/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <openssl/evp.h>

namespace discordium {

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) {
      row.push_back({m(i, j).real(), m(i, j).imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j.front().is_array()) {
    throw std::invalid_argument("matrix must be a non-empty array of rows");
  }
  const auto rows = static_cast<Index>(j.size());
  const auto cols = static_cast<Index>(j.front().size());
  ComplexMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
      throw std::invalid_argument("matrix rows differ in length");
    }
    for (Index k = 0; k < cols; ++k) {
      const Json& e = row[static_cast<std::size_t>(k)];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
        throw std::invalid_argument("matrix entries must be [re, im] pairs");
      }
      m(i, k) = Complex(e[0].get<double>(), e[1].get<double>());
    }
  }
  return m;
}

Json state_to_json(const BipartiteState& rho, std::string_view label) {
  Json j{{"dims", {rho.n_a(), rho.n_b()}}, {"matrix", matrix_to_json(rho.matrix())}};
  if (!label.empty()) {
    j["label"] = std::string(label);
  }
  return j;
}

StateFile state_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dims") || !j.contains("matrix")) {
    throw std::invalid_argument("state file needs \"dims\" and \"matrix\"");
  }
  const Json& dims = j.at("dims");
  if (!dims.is_array() || dims.size() != 2 || !dims[0].is_number_integer() || !dims[1].is_number_integer()) {
    throw std::invalid_argument("\"dims\" must be two integers");
  }
  const auto n_a = dims[0].get<Index>();
  const auto n_b = dims[1].get<Index>();
  const ComplexMatrix m = matrix_from_json(j.at("matrix"));
  if (m.rows() != m.cols() || n_a < 1 || n_b < 1 || n_a * n_b != m.rows()) {
    throw DimensionError("dims/matrix mismatch");
  }
  std::string label;
  if (j.contains("label")) {
    label = j.at("label").get<std::string>();
  }
  return StateFile{BipartiteState(n_a, n_b, m), std::move(label)};
}

StateFile load_state(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open " + path.string());
  }
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("parse error in " + path.string() + ": " + e.what());
  }
  return state_from_json(j);
}

void save_state(const std::filesystem::path& path, const BipartiteState& rho, std::string_view label) {
  std::ofstream out(path);
  if (!out) {
    throw std::invalid_argument("cannot write " + path.string());
  }
  out << format_state(rho, label);
}

std::string format_state(const BipartiteState& rho, std::string_view label) {
  const Json j = state_to_json(rho, label);
  std::string text = "{\n  \"dims\": " + j["dims"].dump() + ",\n  \"matrix\": [\n";
  const Json& rows = j["matrix"];
  for (std::size_t i = 0; i < rows.size(); ++i) {
    text += "    " + rows[i].dump() + (i + 1 < rows.size() ? ",\n" : "\n");
  }
  text += "  ]";
  if (j.contains("label")) {
    text += ",\n  \"label\": " + j["label"].dump();
  }
  return text + "\n}\n";
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  std::string hex;
  hex.reserve(2 * len);
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

std::string state_digest(const BipartiteState& rho) { return sha256_hex(state_to_json(rho).dump()); }

Json input_json(const StateFile& input) {
  return Json{{"label", input.label},
              {"dims", {input.state.n_a(), input.state.n_b()}},
              {"sha256", state_digest(input.state)}};
}

Json bits_to_json(double value) {
  if (std::isinf(value) && value > 0) {
    return "inf";
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return std::strtod(buf, nullptr);
}

double bits_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") {
    return std::numeric_limits<double>::infinity();
  }
  return j.get<double>();
}

Json measurement_to_json(const OptimalMeasurement& m) {
  Json bases = Json::array();
  for (const auto& b : m.bases) {
    bases.push_back(matrix_to_json(b));
  }
  return Json{{"bases", std::move(bases)}};
}

OptimalMeasurement measurement_from_json(const Json& j) {
  OptimalMeasurement m;
  for (const auto& b : j.at("bases")) {
    m.bases.push_back(matrix_from_json(b));
  }
  return m;
}

Json config_to_json(const OptimizerConfig& cfg) {
  return Json{{"restarts", cfg.restarts},
              {"max_iters", cfg.max_iters},
              {"f_tol", cfg.f_tol},
              {"x_tol", cfg.x_tol},
              {"seed", cfg.seed}};
}

OptimizerConfig config_from_json(const Json& j) {
  OptimizerConfig cfg;
  cfg.restarts = j.at("restarts").get<int>();
  cfg.max_iters = j.at("max_iters").get<int>();
  cfg.f_tol = j.at("f_tol").get<double>();
  cfg.x_tol = j.at("x_tol").get<double>();
  cfg.seed = j.at("seed").get<std::uint64_t>();
  cfg.validate();
  return cfg;
}

Json discord_report(const StateFile& input, const DiscordResult& result, const OptimizerConfig& cfg) {
  return Json{{"input", input_json(input)},
              {"quantity", "discord"},
              {"variant", result.variant.label()},
              {"value_bits", bits_to_json(result.value.value)},
              {"measurement", measurement_to_json(result.measurement)},
              {"config", config_to_json(cfg)},
              {"optimizer",
               {{"evaluations", result.outcome.evaluations},
                {"best_restart", result.outcome.best_restart},
                {"converged", result.outcome.converged}}},
              {"library_version", library_version()}};
}

Json eof_report(const StateFile& input, const EntanglementResult& result, const OptimizerConfig& cfg) {
  Json j{{"input", input_json(input)},
         {"quantity", "entanglement_of_formation"},
         {"variant", result.method == EofMethod::Wootters ? "wootters" : "decomposition"},
         {"value_bits", bits_to_json(result.eof.value)}};
  if (result.concurrence) {
    j["concurrence"] = bits_to_json(*result.concurrence);
  }
  if (result.method == EofMethod::Decomposition) {
    j["measurement"] = Json{{"bases", Json::array({matrix_to_json(result.decomposition)})}};
    j["config"] = config_to_json(cfg);
  }
  j["library_version"] = library_version();
  return j;
}

Json battery_to_json(const BatteryReport& report) {
  return Json{{"name", report.name},
              {"trials", report.trials},
              {"failures", report.failures},
              {"worst_violation", report.worst_violation},
              {"tolerance", report.tolerance},
              {"seeds_of_failures", report.seeds_of_failures}};
}

std::string_view library_version() { return DISCORDIUM_VERSION; }

}  // namespace discordium
