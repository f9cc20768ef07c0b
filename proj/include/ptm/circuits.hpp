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

#include <array>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "ptm/hilbert.hpp"
#include "ptm/limits.hpp"

namespace ptm {

// Qubits are 1-based; qubit 1 is the most significant bit of the basis index.
// Register qubits come first, ancillas follow.

struct HGate {
    int qubit = 1;
};

struct PauliGate {
    Axis axis = Axis::x;
    int qubit = 1;
};

struct CnotGate {
    int control = 1;
    int target = 2;
};

/// Controlled-Z; symmetric in its two qubits.
struct CzGate {
    int control = 1;
    int target = 2;
};

/// Dense unitary on `qubits`, the first listed qubit being the most significant.
struct UnitaryGate {
    std::vector<int> qubits;
    CMatrix matrix;
    std::string label = "U";
};

/// Projective Z measurement of `qubit`, outcome stored in classical bit `cbit`.
struct MeasureGate {
    int qubit = 1;
    int cbit = 0;
};

/// Reads `cbits` as a big-endian integer i; applies sigma_axis to qubit i when
/// i != 0 and does nothing otherwise.
struct CorrectionGate {
    std::vector<int> cbits;
    Axis axis = Axis::x;
};

using Gate = std::variant<HGate, PauliGate, CnotGate, CzGate, UnitaryGate, MeasureGate, CorrectionGate>;

std::string gate_name(const Gate &gate);
bool is_unitary_gate(const Gate &gate);

struct CircuitProgram {
    int register_qubits = 1;
    int ancilla_qubits = 0;
    int classical_bits = 0;
    std::vector<Gate> gates;

    int total_qubits() const { return register_qubits + ancilla_qubits; }
    /// Throws std::invalid_argument on out-of-range sites, malformed gates, or
    /// a classical read that no earlier measurement wrote.
    void validate() const;
};

struct RunResult {
    StateVector output;
    std::vector<int> classical;
    /// Probability of the observed outcome, one entry per measurement in program order.
    std::vector<double> measurement_probabilities;
};

/// Outcomes whose probability is within 1e-12 of 0 or 1 are taken
/// deterministically; otherwise they are sampled from a generator seeded with `seed`.
RunResult run(const CircuitProgram &program, const StateVector &input, std::uint64_t seed = 0);

/// Dense unitary of a program made only of unitary gates.
CMatrix circuit_unitary(const CircuitProgram &program, const Limits &limits = default_limits());

/// H on qubit 1, CNOT 1->k for k = 2..N, then H on every qubit.
CircuitProgram ptm_encoder(int num_qubits);

/// Entries exp(+2 pi i jk / 2^N) / sqrt(2^N).
OperatorSpec qft(int num_qubits, const Limits &limits = default_limits());

/// QFT(N)^-1 . blockdiag(QFT(N-1), QFT(N-1)).
OperatorSpec baker_map(int num_qubits, const Limits &limits = default_limits());

struct BakerDiagnostic {
    int num_qubits = 0;
    double unitarity_error = 0.0;
    /// |<psi|B|psi>| and |B psi - <psi|B|psi> psi| for psi = (|0_TM> - |1_TM>)/sqrt2.
    double overlap = 0.0;
    double residual = 0.0;
};

BakerDiagnostic baker_eigen_quality(int num_qubits, const Limits &limits = default_limits());

/// exp(i theta sigma_x^(a) sigma_x^(b)) v.
CVector apply_xx_rotation(const CVector &v, int num_qubits, int site_a, int site_b, double theta);

struct XxPhaseReport {
    int num_qubits = 0;
    int site_a = 1;
    int site_b = 1;
    double theta = 0.0;
    /// <b_TM| exp(i theta XX) |b_TM> for b = 0, 1.
    std::array<Complex, 2> phase{};
    /// Largest amplitude deviation from exp(i theta)|b_TM>.
    std::array<double, 2> max_deviation{};
    bool pass = false;
};

XxPhaseReport xx_rotation_phase_check(int num_qubits, int site_a, int site_b, double theta,
                                      const Limits &limits = default_limits());

/// Error sites are 1..3 for a single phase flip on that data qubit, 0 for none.
constexpr std::array<int, 4> kErrorSites{0, 1, 2, 3};

/// The correction block shared by both codes: H on data, two parity checks
/// onto ancillas 4 and 5, measurement into c0 c1, and the X correction.
CircuitProgram qec_block();

/// Hadamard encoding, phase-flip error, then the correction block.
CircuitProgram shor3_program(int error_site);

/// Phase-flip error on the logical PTM state, correction block, final H layer.
CircuitProgram ptm_qec_program(int error_site);

struct QecResult {
    StateVector recovered;
    std::array<int, 2> syndrome{};
    double fidelity = 0.0;
    std::vector<double> measurement_probabilities;
};

/// Recovers alpha|000> + beta|111> after a single phase flip.
QecResult shor3_run(Complex alpha, Complex beta, int error_site, std::uint64_t seed = 0);

/// Recovers alpha|0_TM> + beta|1_TM> (3 qubits) after a single phase flip.
QecResult ptm_qec_run(Complex alpha, Complex beta, int error_site, std::uint64_t seed = 0);

/// Data-register state once every ancilla holds a definite value.
StateVector extract_register(const StateVector &full, int register_qubits, int ancilla_qubits);

}  // namespace ptm
