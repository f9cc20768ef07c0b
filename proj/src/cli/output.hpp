// Copyright 2026 The PTM-QC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace ptm::cli {

using Json = nlohmann::ordered_json;

std::string format_real(double x);
Json complex_json(std::complex<double> z);

/// {op, params, values, pass, error_bound}; a missing pass or bound is written as null.
Json report(const std::string &op, Json params, Json values, std::optional<bool> pass,
            std::optional<double> error_bound = std::nullopt);

void write_json(std::ostream &out, const Json &doc);

/// Accepts "a", "a+bi", "a-bi", "bi" and "re,im".
std::complex<double> parse_complex(const std::string &text);

std::string sha256_file(const std::filesystem::path &path);

/// Writes <data>.manifest.json listing the checksums of `outputs`; returns its path.
std::filesystem::path write_manifest(const std::filesystem::path &data, const std::string &subcommand,
                                     const Json &params, std::uint64_t seed,
                                     const std::vector<std::filesystem::path> &outputs);

/// Opens a file for writing, throwing std::runtime_error on failure.
std::ofstream open_output(const std::filesystem::path &path);

}  // namespace ptm::cli
