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

#include "ptm/dynamics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "ptm/ptm_seq.hpp"

namespace ptm {

void ChainConfig::validate() const {
    if (num_qubits < 2) {
        throw std::invalid_argument("ChainConfig: the chain needs at least 2 qubits");
    }
    if (gamma.size() != static_cast<std::size_t>(num_qubits)) {
        throw std::invalid_argument(
            fmt::format("ChainConfig: expected {} dephasing rates, got {}", num_qubits, gamma.size()));
    }
    for (double r : gamma) {
        if (!(r >= 0.0) || !std::isfinite(r)) {
            throw std::invalid_argument("ChainConfig: dephasing rates must be finite and non-negative");
        }
    }
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw std::invalid_argument("ChainConfig: dt must be positive");
    }
    if (!(t_final >= 0.0) || !std::isfinite(t_final)) {
        throw std::invalid_argument("ChainConfig: t_final must be non-negative");
    }
    if (!std::isfinite(g)) {
        throw std::invalid_argument("ChainConfig: coupling must be finite");
    }
    if (save_every < 1) {
        throw std::invalid_argument("ChainConfig: save_every must be at least 1");
    }
    if (!(local_tolerance > 0.0)) {
        throw std::invalid_argument("ChainConfig: local_tolerance must be positive");
    }
}

ChainConfig default_chain(int num_qubits, double g) {
    ChainConfig c;
    c.num_qubits = num_qubits;
    c.g = g;
    c.gamma.assign(static_cast<std::size_t>(std::max(num_qubits, 0)), 0.1 * g);
    return c;
}

OperatorSpec xx_hamiltonian(int num_qubits, double g, const Limits &limits) {
    if (num_qubits < 2) {
        throw std::invalid_argument("xx_hamiltonian: requires at least 2 qubits");
    }
    require_capacity(num_qubits, limits.operator_qubits, "xx_hamiltonian");
    const auto dim = Eigen::Index{1} << num_qubits;
    CMatrix h = CMatrix::Zero(dim, dim);
    for (int k = 1; k < num_qubits; ++k) {
        const std::uint64_t flip = site_mask(k, num_qubits) | site_mask(k + 1, num_qubits);
        for (Eigen::Index i = 0; i < dim; ++i) {
            h(static_cast<Eigen::Index>(static_cast<std::uint64_t>(i) ^ flip), i) += 0.25 * g;
        }
    }
    return OperatorSpec(std::move(h));
}

CMatrix lindblad_rhs(const ChainConfig &config, const CMatrix &rho) {
    const int n = config.num_qubits;
    const Eigen::Index dim = rho.rows();
    const Complex coupling(0.0, -0.25 * config.g);
    CMatrix out = CMatrix::Zero(dim, dim);
    // -i[H, rho] with each X_k X_{k+1} acting as an index flip on rows or columns.
    for (int k = 1; k < n; ++k) {
        const std::uint64_t flip = site_mask(k, n) | site_mask(k + 1, n);
        for (Eigen::Index c = 0; c < dim; ++c) {
            const auto cf = static_cast<Eigen::Index>(static_cast<std::uint64_t>(c) ^ flip);
            for (Eigen::Index r = 0; r < dim; ++r) {
                const auto rf = static_cast<Eigen::Index>(static_cast<std::uint64_t>(r) ^ flip);
                out(r, c) += coupling * (rho(rf, c) - rho(r, cf));
            }
        }
    }
    // L = sigma_z/2 gives (Z rho Z - rho)/4: entries whose row and column differ
    // on site k decay at rate gamma_k/2.
    for (Eigen::Index c = 0; c < dim; ++c) {
        for (Eigen::Index r = 0; r < dim; ++r) {
            const auto diff = static_cast<std::uint64_t>(r ^ c);
            double rate = 0.0;
            for (int k = 1; k <= n; ++k) {
                if (diff & site_mask(k, n)) {
                    rate += config.gamma[static_cast<std::size_t>(k - 1)];
                }
            }
            out(r, c) -= 0.5 * rate * rho(r, c);
        }
    }
    return out;
}

namespace {

CMatrix rk4_step(const ChainConfig &config, const CMatrix &rho, double h) {
    const CMatrix k1 = lindblad_rhs(config, rho);
    const CMatrix k2 = lindblad_rhs(config, rho + (0.5 * h) * k1);
    const CMatrix k3 = lindblad_rhs(config, rho + (0.5 * h) * k2);
    const CMatrix k4 = lindblad_rhs(config, rho + h * k3);
    return rho + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace

Trajectory lindblad_evolve(const ChainConfig &config, const DensityMatrix &rho0, const Limits &limits) {
    config.validate();
    require_capacity(config.num_qubits, limits.density_qubits, "lindblad_evolve");
    if (rho0.dim() != (std::size_t{1} << config.num_qubits)) {
        throw DimensionError(fmt::format("lindblad_evolve: initial state has dimension {}, expected 2^{}",
                                         rho0.dim(), config.num_qubits));
    }
    Trajectory traj;
    const int steps = config.t_final == 0.0 ? 0 : static_cast<int>(std::ceil(config.t_final / config.dt - 1e-9));
    traj.steps = steps;
    traj.dt = steps == 0 ? 0.0 : config.t_final / steps;
    CMatrix rho = rho0.entries();
    traj.times.push_back(0.0);
    traj.states.push_back(rho0);
    for (int s = 1; s <= steps; ++s) {
        const CMatrix full = rk4_step(config, rho, traj.dt);
        const CMatrix half = rk4_step(config, rk4_step(config, rho, 0.5 * traj.dt), 0.5 * traj.dt);
        const double err = (full - half).cwiseAbs().maxCoeff();
        traj.max_local_error = std::max(traj.max_local_error, err);
        if (err > config.local_tolerance) {
            throw StepSizeError(fmt::format("lindblad_evolve: local error {:.3e} exceeds {:.1e} at t = {}; reduce dt",
                                            err, config.local_tolerance, (s - 1) * traj.dt));
        }
        rho = half;
        if (s % config.save_every == 0 || s == steps) {
            traj.times.push_back(s * traj.dt);
            traj.states.emplace_back(rho, Validation::off);
        }
    }
    return traj;
}

TrajectoryDiagnostics diagnose(const Trajectory &trajectory) {
    TrajectoryDiagnostics d;
    d.min_eigenvalue = 1.0;
    for (const DensityMatrix &rho : trajectory.states) {
        d.max_trace_drift = std::max(d.max_trace_drift, std::abs(rho.trace() - 1.0));
        d.max_hermiticity_error = std::max(d.max_hermiticity_error, rho.hermiticity_error());
        d.min_eigenvalue = std::min(d.min_eigenvalue, rho.min_eigenvalue());
    }
    return d;
}

CMatrix evolution_operator(const CMatrix &hamiltonian, double t) {
    if (hermiticity_error(hamiltonian) > 1e-12) {
        throw std::invalid_argument("evolution_operator: Hamiltonian is not Hermitian");
    }
    const CMatrix sym = 0.5 * (hamiltonian + hamiltonian.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym);
    const Eigen::VectorXd &w = solver.eigenvalues();
    CVector phases(w.size());
    for (Eigen::Index i = 0; i < w.size(); ++i) {
        phases[i] = std::polar(1.0, -w[i] * t);
    }
    const CMatrix &v = solver.eigenvectors();
    return v * phases.asDiagonal() * v.adjoint();
}

DensityMatrix closed_evolve(const ChainConfig &config, const DensityMatrix &rho0, double t, const Limits &limits) {
    config.validate();
    require_capacity(config.num_qubits, limits.density_qubits, "closed_evolve");
    if (rho0.dim() != (std::size_t{1} << config.num_qubits)) {
        throw DimensionError("closed_evolve: initial state dimension does not match the chain");
    }
    const CMatrix u = evolution_operator(xx_hamiltonian(config.num_qubits, config.g, limits).materialize(limits), t);
    return DensityMatrix(u * rho0.entries() * u.adjoint(), Validation::off);
}

const char *support_class_name(SupportClass c) {
    switch (c) {
        case SupportClass::even_only:
            return "E-only";
        case SupportClass::odd_only:
            return "O-only";
        case SupportClass::mixed:
            return "mixed";
        case SupportClass::empty:
            return "empty";
    }
    return "unknown";
}

SupportReport support_class(const DensityMatrix &rho, int num_qubits, double threshold) {
    if (num_qubits < 1 || rho.dim() != (std::size_t{1} << num_qubits)) {
        throw DimensionError("support_class: density matrix dimension is not 2^N");
    }
    SupportReport report;
    bool touches_even = false;
    bool touches_odd = false;
    const std::size_t dim = rho.dim();
    for (std::size_t i = 0; i < dim; ++i) {
        const double p = rho(i, i).real();
        (ptm_digit_sum(i) ? report.pop_odd : report.pop_even) += p;
        for (std::size_t k = 0; k < dim; ++k) {
            const double mag = std::abs(rho(i, k));
            const bool ti = ptm_digit_sum(i);
            const bool tk = ptm_digit_sum(k);
            if (ti != tk) {
                report.max_cross_coherence = std::max(report.max_cross_coherence, mag);
            }
            if (mag > threshold) {
                touches_even = touches_even || !ti || !tk;
                touches_odd = touches_odd || ti || tk;
            }
        }
    }
    report.off_class_population = std::min(report.pop_even, report.pop_odd);
    if (touches_even && touches_odd) {
        report.cls = SupportClass::mixed;
    } else if (touches_even) {
        report.cls = SupportClass::even_only;
    } else if (touches_odd) {
        report.cls = SupportClass::odd_only;
    }
    return report;
}

StateVector ghz_pair(int num_qubits, int sign, const Limits &limits) {
    if (num_qubits < 1) {
        throw std::invalid_argument("ghz_pair: requires at least 1 qubit");
    }
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("ghz_pair: sign must be +1 or -1");
    }
    require_capacity(num_qubits, limits.state_qubits, "ghz_pair");
    const auto dim = Eigen::Index{1} << num_qubits;
    CVector v = CVector::Zero(dim);
    v[0] = std::numbers::sqrt2 / 2.0;
    v[dim - 1] = sign * std::numbers::sqrt2 / 2.0;
    return StateVector(std::move(v));
}

StateVector ghz_state(int num_qubits, const Limits &limits) { return ghz_pair(num_qubits, 1, limits); }

StateVector hadamard_hamiltonian_evolve(int num_qubits, double t, const StateVector &psi0) {
    if (num_qubits < 1) {
        throw std::invalid_argument("hadamard_hamiltonian_evolve: requires at least 1 qubit");
    }
    if (!(t >= 0.0 && t <= 1.0)) {
        throw std::invalid_argument(fmt::format("hadamard_hamiltonian_evolve: t = {} is outside [0, 1]", t));
    }
    if (psi0.dim() != (std::size_t{1} << num_qubits)) {
        throw DimensionError("hadamard_hamiltonian_evolve: state dimension is not 2^N");
    }
    // sigma_z + sigma_x = sqrt2 H and H^2 = 1, so the single-qubit propagator is
    // cos(pi t/2) - i sin(pi t/2) H.
    const double c = std::cos(0.5 * std::numbers::pi * t);
    const double s = std::sin(0.5 * std::numbers::pi * t) / std::numbers::sqrt2;
    const Complex u00(c, -s);
    const Complex u01(0.0, -s);
    const Complex u11(c, s);
    CVector v = psi0.amplitudes();
    for (int q = 1; q <= num_qubits; ++q) {
        const std::uint64_t mask = site_mask(q, num_qubits);
        for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(v.size()); ++i) {
            if (i & mask) {
                continue;
            }
            const auto lo = static_cast<Eigen::Index>(i);
            const auto hi = static_cast<Eigen::Index>(i | mask);
            const Complex a = v[lo];
            const Complex b = v[hi];
            v[lo] = u00 * a + u01 * b;
            v[hi] = u01 * a + u11 * b;
        }
    }
    return StateVector::normalized(std::move(v));
}

PopulationTrace population_trace(int num_qubits, int sign, int steps, const Limits &limits) {
    if (steps < 2) {
        throw std::invalid_argument("population_trace: steps must be at least 2");
    }
    const StateVector psi0 = ghz_pair(num_qubits, sign, limits);
    PopulationTrace trace;
    trace.num_qubits = num_qubits;
    trace.sign = sign;
    for (int m = 0; m < steps; ++m) {
        const double t = m == steps - 1 ? 1.0 : static_cast<double>(m) / (steps - 1);
        const StateVector psi = hadamard_hamiltonian_evolve(num_qubits, t, psi0);
        std::vector<double> pops(psi.dim());
        for (std::size_t k = 0; k < psi.dim(); ++k) {
            pops[k] = std::norm(psi[k]);
        }
        trace.times.push_back(t);
        trace.populations.push_back(std::move(pops));
    }
    return trace;
}

}  // namespace ptm
