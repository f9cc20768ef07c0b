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

#include "ptm/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

#include <fmt/format.h>

namespace ptm {

Limits limits_from_env(const char *env_value) {
    Limits limits;
    if (env_value == nullptr || *env_value == '\0') {
        return limits;
    }
    int value = 0;
    const char *end = env_value + std::strlen(env_value);
    auto [ptr, ec] = std::from_chars(env_value, end, value);
    if (ec != std::errc() || ptr != end || value < 1 || value > 30) {
        throw std::invalid_argument(fmt::format("PTM_MAX_QUBITS must be an integer in [1, 30], got '{}'", env_value));
    }
    limits.state_qubits = value;
    limits.operator_qubits = value;
    limits.density_qubits = value;
    return limits;
}

const Limits &default_limits() {
    static const Limits limits = limits_from_env(std::getenv("PTM_MAX_QUBITS"));
    return limits;
}

void require_capacity(int qubits, int limit, const std::string &what) {
    if (qubits > limit) {
        throw CapacityError(fmt::format("{}: {} qubits exceeds the configured limit of {}", what, qubits, limit));
    }
}

}  // namespace ptm
