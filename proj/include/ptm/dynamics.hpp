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
#include <vector>

#include "ptm/hilbert.hpp"
#include "ptm/limits.hpp"

namespace ptm {

/// Thrown when the integrator's local error estimate exceeds its tolerance.
class StepSizeError : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

/// Nearest-neighbour X-X chain with single-site dephasing, hbar = 1.
struct ChainConfig {
    int num_qubits = 2;
    double g = 1.0;
    /// Dephasing rate per site; must have num_qubits entries.
    std::vector<double> gamma;
    double dt = 0.01;
    double t_final = 1.0;
    /// Keep every k-th step of the trajectory (the final state is always kept).
    int save_every = 1;
    double local_tolerance = 1e-8;

    void validate() const;
};

/// Config with every gamma_k = 0.1 g.
ChainConfig default_chain(int num_qubits, double g = 1.0);

/// g sum_k (sigma_x^(k)/2)(sigma_x^(k+1)/2), dense.
OperatorSpec xx_hamiltonian(int num_qubits, double g, const Limits &limits = default_limits());

struct Trajectory {
    std::vector<double> times;
    std::vector<DensityMatrix> states;
    int steps = 0;
    double dt = 0.0;
    /// Largest step-halving error estimate seen.
    double max_local_error = 0.0;
};

/// RK4 integration of the Lindblad equation for the chain with L_k = sigma_z^(k)/2.
/// The step is shrunk so that t_final is a whole number of steps.
Trajectory lindblad_evolve(const ChainConfig &config, const DensityMatrix &rho0,
                           const Limits &limits = default_limits());

/// Right-hand side of the master equation; exposed for testing.
CMatrix lindblad_rhs(const ChainConfig &config, const CMatrix &rho);

struct TrajectoryDiagnostics {
    double max_trace_drift = 0.0;
    double max_hermiticity_error = 0.0;
    double min_eigenvalue = 0.0;
};

TrajectoryDiagnostics diagnose(const Trajectory &trajectory);

/// exp(-i H t) from the eigendecomposition of a Hermitian H.
CMatrix evolution_operator(const CMatrix &hamiltonian, double t);

/// Closed-system evolution of the chain (gamma ignored) via exp(-i H t).
DensityMatrix closed_evolve(const ChainConfig &config, const DensityMatrix &rho0, double t,
                            const Limits &limits = default_limits());

enum class SupportClass { even_only, odd_only, mixed, empty };

const char *support_class_name(SupportClass c);

struct SupportReport {
    SupportClass cls = SupportClass::empty;
    /// Diagonal weight on E(N) and O(N).
    double pop_even = 0.0;
    double pop_odd = 0.0;
    /// Population outside the dominant class, min(pop_even, pop_odd).
    double off_class_population = 0.0;
    /// Largest |rho_ik| with i and k in different classes.
    double max_cross_coherence = 0.0;
};

/// Classifies entries above `threshold` by the PTM class of their row and column.
SupportReport support_class(const DensityMatrix &rho, int num_qubits, double threshold = 1e-10);

StateVector ghz_state(int num_qubits, const Limits &limits = default_limits());

/// (|0...0> + sign |1...1>)/sqrt2.
StateVector ghz_pair(int num_qubits, int sign, const Limits &limits = default_limits());

/// Applies exp(-i pi/(2 sqrt2) (sigma_z + sigma_x) t) to every qubit, t in [0, 1].
StateVector hadamard_hamiltonian_evolve(int num_qubits, double t, const StateVector &psi0);

struct PopulationTrace {
    int num_qubits = 0;
    int sign = 1;
    std::vector<double> times;
    /// populations[m][k] = |<k|psi(t_m)>|^2.
    std::vector<std::vector<double>> populations;
};

/// Populations under hadamard_hamiltonian_evolve from ghz_pair(N, sign) on a
/// uniform grid of `steps` points in [0, 1].
PopulationTrace population_trace(int num_qubits, int sign, int steps, const Limits &limits = default_limits());

}  // namespace ptm
