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

#include <stdexcept>
#include <string>

namespace ptm {

/// Thrown when a requested size exceeds a configured capacity limit.
class CapacityError : public std::length_error {
 public:
    using std::length_error::length_error;
};

/// Thrown when operand dimensions do not agree.
class DimensionError : public std::invalid_argument {
 public:
    using std::invalid_argument::invalid_argument;
};

/// Size limits for dense storage. Qubit counts are log2 of the dimension.
struct Limits {
    int block_order = 30;
    int state_qubits = 14;
    int operator_qubits = 10;
    int density_qubits = 7;
};

/// Process-wide defaults. PTM_MAX_QUBITS, when set, overrides every qubit
/// limit (not the sequence block order). Read once on first use.
const Limits &default_limits();

/// Parses the override value; returns defaults when `env_value` is null.
Limits limits_from_env(const char *env_value);

void require_capacity(int qubits, int limit, const std::string &what);

}  // namespace ptm
