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

// Independent reference implementations used only by the tests. They favour
// the most literal construction over speed.

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// T_N by the substitution 0 -> 01, 1 -> 10 applied N times to "0".
std::string thue_morse_substitution(int order);

/// Parity of the number of set bits, by repeated division.
int digit_parity(std::uint64_t n);

CMatrix pauli(char axis);
CMatrix identity(int dim);
CMatrix kron(const CMatrix &a, const CMatrix &b);

/// sigma_axis on `site` (1 = leftmost factor) of an N-qubit register, built from Kronecker products.
CMatrix pauli_on(char axis, int site, int num_qubits);

/// sum_k sigma_axis^(k).
CMatrix collective(char axis, int num_qubits);

/// Dense H^{(x)N} as repeated Kronecker products.
CMatrix hadamard_all(int num_qubits);

/// The logical PTM state with equal amplitudes on the digit-parity class `b`.
CVector ptm_state(int num_qubits, int b);

/// Entries exp(2 pi i jk / 2^N) / sqrt(2^N), with the angle taken straight from jk.
CMatrix dft_matrix(int num_qubits);

/// O(n^2) DFT with kernel exp(+2 pi i jk/n)/sqrt(n).
std::vector<Complex> naive_dft(const std::vector<Complex> &x);

/// exp(-i H t) via a truncated Taylor series with scaling and squaring.
CMatrix expm_i(const CMatrix &h, double t);

/// Lindblad right-hand side with dense L_k = sigma_z^(k)/2.
CMatrix lindblad_rhs(const CMatrix &h, const std::vector<double> &gamma, const CMatrix &rho, int num_qubits);

/// Riemann zeta for Re(s) > 0, s != 1, by Euler-Maclaurin summation.
Complex zeta(Complex s);

/// Applies a gate given as a dense matrix on `qubits` (listed MSB first) to a state.
CVector apply_on(const CMatrix &gate, const std::vector<int> &qubits, int num_qubits, const CVector &v);

}  // namespace oracle
