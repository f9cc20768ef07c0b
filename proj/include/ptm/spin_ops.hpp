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
#include <vector>

#include "ptm/hilbert.hpp"
#include "ptm/limits.hpp"
#include "ptm/ptm_seq.hpp"
#include "ptm/ptm_states.hpp"

namespace ptm {

CMatrix pauli_matrix(Axis axis);
CMatrix hadamard_matrix();

/// sigma_axis acting on qubit `site` (1-based) of an N-qubit register.
OperatorSpec pauli_on(Axis axis, int site, int num_qubits);

/// Dense H^{(x)N}.
OperatorSpec hadamard_all(int num_qubits, const Limits &limits = default_limits());

/// H^{(x)N} v by an in-place fast Walsh-Hadamard transform.
CVector apply_hadamard_all(CVector v);

enum class SpinScale { pauli, spin_half };

/// Sum over sites of sigma_axis, optionally halved.
struct CollectiveOp {
    Axis axis = Axis::z;
    int num_qubits = 1;
    SpinScale scale = SpinScale::pauli;

    CVector apply(const CVector &v) const;
    CMatrix materialize(const Limits &limits = default_limits()) const;
};

/// Spin-(d-1)/2 J_z with diagonal entries (d-1-2k)/2.
struct QuditJz {
    std::size_t dim = 2;
    std::vector<Rational> diagonal;
};

QuditJz qudit_jz(std::size_t d);

struct FirstMomentReport {
    int num_qubits = 0;
    Logical which = Logical::zero;
    /// <which_TM| S_axis |which_TM> for x, y, z.
    std::array<Complex, 3> values{};
    bool pass = false;
};

FirstMomentReport verify_first_moment(int num_qubits, Logical which, const Limits &limits = default_limits());

/// Whether the checked identity is predicted to hold for the given parameters.
enum class Claim { holds, fails, none };

struct ZProductReport {
    int num_qubits = 0;
    std::vector<int> sites;
    /// Sites that appear an odd number of times; the operator only depends on these.
    std::vector<int> effective_sites;
    /// Unnormalized sums of prod (-1)^{bit} over E(N) and O(N).
    BigInt raw_zero = 0;
    BigInt raw_one = 0;
    double value_zero = 0.0;
    double value_one = 0.0;
    double offdiag = 0.0;
    bool diag_equal = false;
    bool offdiag_zero = false;
    Claim claim = Claim::holds;
    bool pass = false;
};

ZProductReport verify_z_products(int num_qubits, const std::vector<int> &sites);

struct PowerMomentReport {
    int num_qubits = 0;
    Axis axis = Axis::z;
    int power = 0;
    Rational diag_zero = 0;
    Rational diag_one = 0;
    /// <1_TM| S^j |0_TM>, exact real and imaginary parts.
    Rational cross_re = 0;
    Rational cross_im = 0;
    bool diag_equal = false;
    bool cross_zero = false;
    Claim claim = Claim::holds;
    bool pass = false;
};

/// Moments of (sum_k sigma_axis^(k))^power for axis y or z, computed exactly
/// (diagonal arithmetic for z, Gaussian-integer arithmetic for y).
PowerMomentReport verify_power_moments(int num_qubits, Axis axis, int power, const Limits &limits = default_limits());

struct XxStabilizerReport {
    int num_qubits = 0;
    int site_a = 1;
    int site_b = 1;
    /// Largest amplitude deviation of sigma_x sigma_x |b_TM> from |b_TM>, for b = 0, 1.
    std::array<double, 2> max_deviation{};
    std::array<double, 2> fidelity{};
    bool pass = false;
};

XxStabilizerReport verify_xx_stabilizer(int num_qubits, int site_a, int site_b, const Limits &limits = default_limits());

struct SxReciprocityReport {
    int num_qubits = 0;
    /// |S_x|0_TM> - N|1_TM>| and |S_x|1_TM> - N|0_TM>|.
    std::array<double, 2> swap_residual{};
    /// |S_x v_pm -/+ N v_pm| for v_pm = (|0_TM> +/- |1_TM>)/sqrt2.
    std::array<double, 2> eigen_residual{};
    std::array<double, 2> eigenvalue{};
    bool pass = false;
};

SxReciprocityReport sx_reciprocity(int num_qubits, const Limits &limits = default_limits());

/// S_x, S_y, S_z restricted to span{|0_TM>, |1_TM>} (Pauli scale, unnormalized).
struct MemoryForms {
    int num_qubits = 0;
    std::array<Eigen::Matrix2cd, 3> blocks{};
    bool pass = false;
};

MemoryForms memory_matrix_forms(int num_qubits, const Limits &limits = default_limits());

struct JzMomentReport {
    std::size_t dim = 2;
    int power = 0;
    Rational diag_zero = 0;
    Rational diag_one = 0;
    Rational cross = 0;
    bool diag_equal = false;
    Claim claim = Claim::holds;
    bool pass = false;
};

/// Requires d = 2^N; equality is predicted for power < N and failure at power = N.
JzMomentReport verify_jz_moments(std::size_t d, int power);

const char *claim_name(Claim claim);

}  // namespace ptm
