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

#include "output.hpp"

#include <algorithm>
#include <array>
#include <regex>
#include <stdexcept>

#include <fmt/format.h>
#include <openssl/evp.h>

#include "ptm/cli.hpp"

namespace ptm::cli {

std::string format_real(double x) { return fmt::format("{:.17g}", x); }

Json complex_json(std::complex<double> z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json report(const std::string &op, Json params, Json values, std::optional<bool> pass,
            std::optional<double> error_bound) {
    Json doc;
    doc["op"] = op;
    doc["params"] = std::move(params);
    doc["values"] = std::move(values);
    doc["pass"] = pass ? Json(*pass) : Json(nullptr);
    doc["error_bound"] = error_bound ? Json(*error_bound) : Json(nullptr);
    return doc;
}

void write_json(std::ostream &out, const Json &doc) { out << doc.dump(2) << '\n'; }

std::complex<double> parse_complex(const std::string &text) {
    static const std::regex pair(R"(^\s*([^,]+),([^,]+)\s*$)");
    static const std::regex algebraic(
        R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*(?:([+-]\s*(?:\d+\.?\d*|\.\d+)?(?:[eE][+-]?\d+)?)\s*[ij])?\s*$)");
    static const std::regex imaginary_only(R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)?(?:[eE][+-]?\d+)?)\s*[ij]\s*$)");
    auto to_double = [&](std::string s) {
        s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
        if (s.empty() || s == "+") {
            return 1.0;
        }
        if (s == "-") {
            return -1.0;
        }
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) {
            throw std::invalid_argument("trailing characters");
        }
        return v;
    };
    std::smatch m;
    try {
        if (std::regex_match(text, m, pair)) {
            return {to_double(m[1].str()), to_double(m[2].str())};
        }
        if (std::regex_match(text, m, imaginary_only)) {
            return {0.0, to_double(m[1].str())};
        }
        if (std::regex_match(text, m, algebraic) && m[1].matched) {
            return {to_double(m[1].str()), m[2].matched ? to_double(m[2].str()) : 0.0};
        }
    } catch (const std::logic_error &) {
    }
    throw std::invalid_argument(fmt::format("cannot parse '{}' as a complex number", text));
}

std::string sha256_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error(fmt::format("cannot read {}", path.string()));
    }
    EVP_MD_CTX *ctx = EVP_MD_CTX_new();
    EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
    std::array<char, 1 << 16> buf{};
    while (in) {
        in.read(buf.data(), buf.size());
        EVP_DigestUpdate(ctx, buf.data(), static_cast<std::size_t>(in.gcount()));
    }
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx, digest.data(), &len);
    EVP_MD_CTX_free(ctx);
    std::string hex;
    for (unsigned int i = 0; i < len; ++i) {
        hex += fmt::format("{:02x}", digest[i]);
    }
    return hex;
}

std::filesystem::path write_manifest(const std::filesystem::path &data, const std::string &subcommand,
                                     const Json &params, std::uint64_t seed,
                                     const std::vector<std::filesystem::path> &outputs) {
    Json manifest;
    manifest["subcommand"] = subcommand;
    manifest["params"] = params;
    manifest["seed"] = seed;
    manifest["version"] = tool_version();
    Json sums = Json::array();
    for (const auto &p : outputs) {
        sums.push_back(Json{{"path", p.string()}, {"sha256", sha256_file(p)}});
    }
    manifest["outputs"] = std::move(sums);
    std::filesystem::path path = data;
    path += ".manifest.json";
    std::ofstream out = open_output(path);
    write_json(out, manifest);
    return path;
}

std::ofstream open_output(const std::filesystem::path &path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error(fmt::format("cannot open {} for writing", path.string()));
    }
    return out;
}

}  // namespace ptm::cli
