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

#include "ptm/circuits.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>

#include <fmt/format.h>

#include "ptm/ptm_states.hpp"
#include "ptm/spin_ops.hpp"

namespace ptm {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr double kDeterministicTol = 1e-12;

void check_qubit(int qubit, int total, const char *what) {
    if (qubit < 1 || qubit > total) {
        throw std::invalid_argument(fmt::format("{}: qubit {} outside 1..{}", what, qubit, total));
    }
}

void check_pair(int a, int b, int total, const char *what) {
    check_qubit(a, total, what);
    check_qubit(b, total, what);
    if (a == b) {
        throw std::invalid_argument(fmt::format("{}: control and target must differ", what));
    }
}

void apply_single(CVector &v, int qubit, int total, const Eigen::Matrix2cd &u) {
    const std::uint64_t mask = site_mask(qubit, total);
    for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(v.size()); ++i) {
        if (i & mask) {
            continue;
        }
        const auto lo = static_cast<Eigen::Index>(i);
        const auto hi = static_cast<Eigen::Index>(i | mask);
        const Complex a = v[lo];
        const Complex b = v[hi];
        v[lo] = u(0, 0) * a + u(0, 1) * b;
        v[hi] = u(1, 0) * a + u(1, 1) * b;
    }
}

void apply_pauli(CVector &v, Axis axis, int qubit, int total) {
    const Eigen::Matrix2cd p = pauli_matrix(axis);
    apply_single(v, qubit, total, p);
}

void apply_dense(CVector &v, const UnitaryGate &g, int total) {
    const int k = static_cast<int>(g.qubits.size());
    const std::uint64_t sub = std::uint64_t{1} << k;
    std::uint64_t gate_mask = 0;
    for (int q : g.qubits) {
        gate_mask |= site_mask(q, total);
    }
    CVector local(static_cast<Eigen::Index>(sub));
    for (std::uint64_t base = 0; base < static_cast<std::uint64_t>(v.size()); ++base) {
        if (base & gate_mask) {
            continue;
        }
        auto index_of = [&](std::uint64_t local_index) {
            std::uint64_t idx = base;
            for (int b = 0; b < k; ++b) {
                if ((local_index >> (k - 1 - b)) & 1U) {
                    idx |= site_mask(g.qubits[static_cast<std::size_t>(b)], total);
                }
            }
            return static_cast<Eigen::Index>(idx);
        };
        for (std::uint64_t l = 0; l < sub; ++l) {
            local[static_cast<Eigen::Index>(l)] = v[index_of(l)];
        }
        const CVector mixed = g.matrix * local;
        for (std::uint64_t l = 0; l < sub; ++l) {
            v[index_of(l)] = mixed[static_cast<Eigen::Index>(l)];
        }
    }
}

void apply_unitary_gate(CVector &v, const Gate &gate, int total) {
    std::visit(Overloaded{
                   [&](const HGate &g) {
                       const Eigen::Matrix2cd h = hadamard_matrix();
                       apply_single(v, g.qubit, total, h);
                   },
                   [&](const PauliGate &g) { apply_pauli(v, g.axis, g.qubit, total); },
                   [&](const CnotGate &g) {
                       const std::uint64_t c = site_mask(g.control, total);
                       const std::uint64_t t = site_mask(g.target, total);
                       for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(v.size()); ++i) {
                           if ((i & c) && !(i & t)) {
                               std::swap(v[static_cast<Eigen::Index>(i)], v[static_cast<Eigen::Index>(i | t)]);
                           }
                       }
                   },
                   [&](const CzGate &g) {
                       const std::uint64_t both = site_mask(g.control, total) | site_mask(g.target, total);
                       for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(v.size()); ++i) {
                           if ((i & both) == both) {
                               v[static_cast<Eigen::Index>(i)] = -v[static_cast<Eigen::Index>(i)];
                           }
                       }
                   },
                   [&](const UnitaryGate &g) { apply_dense(v, g, total); },
                   [&](const MeasureGate &) { throw std::logic_error("measurement is not a unitary gate"); },
                   [&](const CorrectionGate &) { throw std::logic_error("classical control is not a unitary gate"); },
               },
               gate);
}

}  // namespace

std::string gate_name(const Gate &gate) {
    return std::visit(Overloaded{
                          [](const HGate &) -> std::string { return "H"; },
                          [](const PauliGate &g) -> std::string { return std::string(1, static_cast<char>(axis_name(g.axis) - 'a' + 'A')); },
                          [](const CnotGate &) -> std::string { return "CNOT"; },
                          [](const CzGate &) -> std::string { return "CZ"; },
                          [](const UnitaryGate &g) -> std::string { return g.label; },
                          [](const MeasureGate &) -> std::string { return "MEASURE"; },
                          [](const CorrectionGate &) -> std::string { return "CORR"; },
                      },
                      gate);
}

bool is_unitary_gate(const Gate &gate) {
    return !std::holds_alternative<MeasureGate>(gate) && !std::holds_alternative<CorrectionGate>(gate);
}

void CircuitProgram::validate() const {
    if (register_qubits < 1 || ancilla_qubits < 0 || classical_bits < 0) {
        throw std::invalid_argument("CircuitProgram: invalid register sizes");
    }
    const int total = total_qubits();
    std::set<int> written;
    for (const Gate &gate : gates) {
        std::visit(Overloaded{
                       [&](const HGate &g) { check_qubit(g.qubit, total, "H"); },
                       [&](const PauliGate &g) { check_qubit(g.qubit, total, "Pauli"); },
                       [&](const CnotGate &g) { check_pair(g.control, g.target, total, "CNOT"); },
                       [&](const CzGate &g) { check_pair(g.control, g.target, total, "CZ"); },
                       [&](const UnitaryGate &g) {
                           if (g.qubits.empty()) {
                               throw std::invalid_argument("UnitaryGate: no qubits");
                           }
                           std::set<int> seen;
                           for (int q : g.qubits) {
                               check_qubit(q, total, "UnitaryGate");
                               if (!seen.insert(q).second) {
                                   throw std::invalid_argument("UnitaryGate: repeated qubit");
                               }
                           }
                           const auto sub = Eigen::Index{1} << g.qubits.size();
                           if (g.matrix.rows() != sub || g.matrix.cols() != sub) {
                               throw DimensionError("UnitaryGate: matrix size does not match its qubit count");
                           }
                           if (unitarity_error(g.matrix) > 1e-12) {
                               throw std::invalid_argument("UnitaryGate: matrix is not unitary");
                           }
                       },
                       [&](const MeasureGate &g) {
                           check_qubit(g.qubit, total, "MEASURE");
                           if (g.cbit < 0 || g.cbit >= classical_bits) {
                               throw std::invalid_argument(fmt::format("MEASURE: classical bit {} out of range", g.cbit));
                           }
                           written.insert(g.cbit);
                       },
                       [&](const CorrectionGate &g) {
                           if (g.cbits.empty() || g.cbits.size() > 16) {
                               throw std::invalid_argument("CORR: needs between 1 and 16 classical bits");
                           }
                           for (int c : g.cbits) {
                               if (c < 0 || c >= classical_bits) {
                                   throw std::invalid_argument(fmt::format("CORR: classical bit {} out of range", c));
                               }
                               if (!written.contains(c)) {
                                   throw std::invalid_argument(
                                       fmt::format("CORR: classical bit {} is read before any measurement writes it", c));
                               }
                           }
                           const int max_index = (1 << g.cbits.size()) - 1;
                           if (max_index > total) {
                               throw std::invalid_argument("CORR: classical register can address qubits outside the circuit");
                           }
                       },
                   },
                   gate);
    }
}

RunResult run(const CircuitProgram &program, const StateVector &input, std::uint64_t seed) {
    program.validate();
    const int total = program.total_qubits();
    if (input.dim() != (std::size_t{1} << total)) {
        throw DimensionError(
            fmt::format("run: input dimension {} does not match {} register+ancilla qubits", input.dim(), total));
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    CVector v = input.amplitudes();
    RunResult result;
    result.classical.assign(static_cast<std::size_t>(program.classical_bits), 0);
    for (const Gate &gate : program.gates) {
        if (const auto *m = std::get_if<MeasureGate>(&gate)) {
            const std::uint64_t mask = site_mask(m->qubit, total);
            double p1 = 0.0;
            for (Eigen::Index i = 0; i < v.size(); ++i) {
                if (static_cast<std::uint64_t>(i) & mask) {
                    p1 += std::norm(v[i]);
                }
            }
            p1 /= v.squaredNorm();
            int outcome = 0;
            if (p1 >= 1.0 - kDeterministicTol) {
                outcome = 1;
            } else if (p1 > kDeterministicTol) {
                outcome = uniform(rng) < p1 ? 1 : 0;
            }
            for (Eigen::Index i = 0; i < v.size(); ++i) {
                const int bit = (static_cast<std::uint64_t>(i) & mask) ? 1 : 0;
                if (bit != outcome) {
                    v[i] = 0.0;
                }
            }
            v.normalize();
            result.classical[static_cast<std::size_t>(m->cbit)] = outcome;
            result.measurement_probabilities.push_back(outcome ? p1 : 1.0 - p1);
        } else if (const auto *c = std::get_if<CorrectionGate>(&gate)) {
            int index = 0;
            for (int bit : c->cbits) {
                index = (index << 1) | result.classical[static_cast<std::size_t>(bit)];
            }
            if (index != 0) {
                apply_pauli(v, c->axis, index, total);
            }
        } else {
            apply_unitary_gate(v, gate, total);
        }
    }
    result.output = StateVector::normalized(std::move(v));
    return result;
}

CMatrix circuit_unitary(const CircuitProgram &program, const Limits &limits) {
    program.validate();
    const int total = program.total_qubits();
    require_capacity(total, limits.operator_qubits, "circuit_unitary");
    for (const Gate &gate : program.gates) {
        if (!is_unitary_gate(gate)) {
            throw std::invalid_argument("circuit_unitary: program contains a non-unitary step");
        }
    }
    const auto dim = Eigen::Index{1} << total;
    CMatrix u(dim, dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
        CVector v = CVector::Zero(dim);
        v[col] = 1.0;
        for (const Gate &gate : program.gates) {
            apply_unitary_gate(v, gate, total);
        }
        u.col(col) = v;
    }
    return u;
}

CircuitProgram ptm_encoder(int num_qubits) {
    if (num_qubits < 2) {
        throw std::invalid_argument("ptm_encoder: requires at least 2 qubits");
    }
    CircuitProgram p;
    p.register_qubits = num_qubits;
    p.gates.emplace_back(HGate{1});
    for (int k = 2; k <= num_qubits; ++k) {
        p.gates.emplace_back(CnotGate{1, k});
    }
    for (int k = 1; k <= num_qubits; ++k) {
        p.gates.emplace_back(HGate{k});
    }
    return p;
}

OperatorSpec qft(int num_qubits, const Limits &limits) {
    if (num_qubits < 1) {
        throw std::invalid_argument("qft: requires at least 1 qubit");
    }
    require_capacity(num_qubits, limits.operator_qubits, "qft");
    const std::uint64_t dim = std::uint64_t{1} << num_qubits;
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    // Phases depend only on jk mod 2^N; tabulate them once.
    std::vector<Complex> roots(dim);
    for (std::uint64_t m = 0; m < dim; ++m) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(dim);
        roots[m] = scale * Complex(std::cos(angle), std::sin(angle));
    }
    CMatrix f(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::uint64_t j = 0; j < dim; ++j) {
        for (std::uint64_t k = 0; k < dim; ++k) {
            f(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) = roots[(j * k) & (dim - 1)];
        }
    }
    return OperatorSpec(std::move(f));
}

OperatorSpec baker_map(int num_qubits, const Limits &limits) {
    if (num_qubits < 2) {
        throw std::invalid_argument("baker_map: requires at least 2 qubits");
    }
    const CMatrix full = qft(num_qubits, limits).materialize(limits);
    const CMatrix half = qft(num_qubits - 1, limits).materialize(limits);
    const Eigen::Index h = half.rows();
    CMatrix block = CMatrix::Zero(2 * h, 2 * h);
    block.topLeftCorner(h, h) = half;
    block.bottomRightCorner(h, h) = half;
    return OperatorSpec(CMatrix(full.adjoint() * block));
}

BakerDiagnostic baker_eigen_quality(int num_qubits, const Limits &limits) {
    const CMatrix b = baker_map(num_qubits, limits).materialize(limits);
    const CVector psi = encode_logical(1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), num_qubits, limits).amplitudes();
    const CVector image = b * psi;
    const Complex overlap = inner(psi, image);
    return {num_qubits, unitarity_error(b), std::abs(overlap), (image - overlap * psi).norm()};
}

CVector apply_xx_rotation(const CVector &v, int num_qubits, int site_a, int site_b, double theta) {
    // (XX)^2 = 1, so exp(i theta XX) = cos(theta) + i sin(theta) XX.
    const OperatorSpec xx(PauliString{num_qubits, {{site_a, Axis::x}, {site_b, Axis::x}}});
    return std::cos(theta) * v + Complex(0.0, std::sin(theta)) * xx.apply(v);
}

XxPhaseReport xx_rotation_phase_check(int num_qubits, int site_a, int site_b, double theta, const Limits &limits) {
    if (site_a < 1 || site_a > num_qubits || site_b < 1 || site_b > num_qubits) {
        throw std::out_of_range("xx_rotation_phase_check: site outside the register");
    }
    XxPhaseReport report{num_qubits, site_a, site_b, theta, {}, {}, true};
    const Complex expected_phase = std::polar(1.0, theta);
    for (int b = 0; b < 2; ++b) {
        const CVector psi = ptm_state(num_qubits, b == 0 ? Logical::zero : Logical::one, limits).state.amplitudes();
        const CVector out = apply_xx_rotation(psi, num_qubits, site_a, site_b, theta);
        report.phase[b] = inner(psi, out);
        report.max_deviation[b] = (out - expected_phase * psi).cwiseAbs().maxCoeff();
        report.pass = report.pass && report.max_deviation[b] <= 1e-12;
    }
    return report;
}

CircuitProgram qec_block() {
    CircuitProgram p;
    p.register_qubits = 3;
    p.ancilla_qubits = 2;
    p.classical_bits = 2;
    for (int q = 1; q <= 3; ++q) {
        p.gates.emplace_back(HGate{q});
    }
    // Ancilla 4 holds q2 xor q3, ancilla 5 holds q1 xor q3.
    p.gates.emplace_back(CnotGate{3, 4});
    p.gates.emplace_back(CnotGate{2, 4});
    p.gates.emplace_back(MeasureGate{4, 0});
    p.gates.emplace_back(CnotGate{3, 5});
    p.gates.emplace_back(CnotGate{1, 5});
    p.gates.emplace_back(MeasureGate{5, 1});
    p.gates.emplace_back(CorrectionGate{{0, 1}, Axis::x});
    return p;
}

namespace {

void check_error_site(int error_site) {
    if (error_site < 0 || error_site > 3) {
        throw std::invalid_argument(fmt::format("error site must be 0 (none) or 1..3, got {}", error_site));
    }
}

void append_error(CircuitProgram &p, int error_site) {
    if (error_site != 0) {
        p.gates.emplace_back(PauliGate{Axis::z, error_site});
    }
}

void append_block(CircuitProgram &p) {
    CircuitProgram block = qec_block();
    p.gates.insert(p.gates.end(), block.gates.begin(), block.gates.end());
}

CircuitProgram qec_frame() {
    CircuitProgram p;
    p.register_qubits = 3;
    p.ancilla_qubits = 2;
    p.classical_bits = 2;
    return p;
}

QecResult finish(const RunResult &r, const StateVector &target) {
    QecResult out;
    out.recovered = extract_register(r.output, 3, 2);
    out.syndrome = {r.classical[0], r.classical[1]};
    out.fidelity = fidelity_up_to_phase(out.recovered, target);
    out.measurement_probabilities = r.measurement_probabilities;
    return out;
}

}  // namespace

CircuitProgram shor3_program(int error_site) {
    check_error_site(error_site);
    CircuitProgram p = qec_frame();
    for (int q = 1; q <= 3; ++q) {
        p.gates.emplace_back(HGate{q});
    }
    append_error(p, error_site);
    append_block(p);
    return p;
}

CircuitProgram ptm_qec_program(int error_site) {
    check_error_site(error_site);
    CircuitProgram p = qec_frame();
    append_error(p, error_site);
    append_block(p);
    for (int q = 1; q <= 3; ++q) {
        p.gates.emplace_back(HGate{q});
    }
    return p;
}

QecResult shor3_run(Complex alpha, Complex beta, int error_site, std::uint64_t seed) {
    const double weight = std::norm(alpha) + std::norm(beta);
    if (std::abs(weight - 1.0) > 1e-12) {
        throw std::invalid_argument(fmt::format("shor3_run: |alpha|^2 + |beta|^2 = {} is not 1", weight));
    }
    CVector data = CVector::Zero(8);
    data[0] = alpha;
    data[7] = beta;
    const StateVector logical(data);
    const StateVector input = kron(logical, StateVector::basis(4, 0));
    return finish(run(shor3_program(error_site), input, seed), logical);
}

QecResult ptm_qec_run(Complex alpha, Complex beta, int error_site, std::uint64_t seed) {
    const StateVector logical = encode_logical(alpha, beta, 3);
    const StateVector input = kron(logical, StateVector::basis(4, 0));
    return finish(run(ptm_qec_program(error_site), input, seed), logical);
}

StateVector extract_register(const StateVector &full, int register_qubits, int ancilla_qubits) {
    const std::size_t reg_dim = std::size_t{1} << register_qubits;
    const std::size_t anc_dim = std::size_t{1} << ancilla_qubits;
    if (full.dim() != reg_dim * anc_dim) {
        throw DimensionError("extract_register: dimension does not match register and ancilla sizes");
    }
    // Find the ancilla value carrying the weight and require it to carry all of it.
    std::size_t best = 0;
    double best_weight = -1.0;
    for (std::size_t a = 0; a < anc_dim; ++a) {
        double w = 0.0;
        for (std::size_t r = 0; r < reg_dim; ++r) {
            w += std::norm(full[r * anc_dim + a]);
        }
        if (w > best_weight) {
            best_weight = w;
            best = a;
        }
    }
    if (std::abs(best_weight - 1.0) > 1e-10) {
        throw std::invalid_argument("extract_register: ancillas are not in a definite basis state");
    }
    CVector out(static_cast<Eigen::Index>(reg_dim));
    for (std::size_t r = 0; r < reg_dim; ++r) {
        out[static_cast<Eigen::Index>(r)] = full[r * anc_dim + best];
    }
    return StateVector::normalized(std::move(out));
}

}  // namespace ptm
