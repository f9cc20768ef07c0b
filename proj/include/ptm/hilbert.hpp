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
#include <cstdint>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "ptm/limits.hpp"

namespace ptm {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

enum class Axis { x, y, z };

char axis_name(Axis axis);
Axis parse_axis(char name);

/// Qubit `site` (1-based) of an `num_qubits` register is the most significant
/// bit for site 1 and the least significant for site `num_qubits`.
constexpr int site_bit(std::uint64_t index, int site, int num_qubits) {
    return static_cast<int>((index >> (num_qubits - site)) & 1U);
}

constexpr std::uint64_t site_mask(int site, int num_qubits) {
    return std::uint64_t{1} << (num_qubits - site);
}

/// Returns log2(dim), throwing DimensionError if dim is not a power of two.
int qubits_for_dim(std::size_t dim);

/// Normalized complex amplitude vector.
class StateVector {
 public:
    StateVector() = default;

    /// Requires unit norm within `tolerance`.
    explicit StateVector(CVector amps, double tolerance = 1e-12);

    /// Rescales `amps` to unit norm; throws on a zero vector.
    static StateVector normalized(CVector amps);
    static StateVector basis(std::size_t dim, std::size_t index);

    std::size_t dim() const { return static_cast<std::size_t>(amps_.size()); }
    int num_qubits() const { return qubits_for_dim(dim()); }
    const CVector &amplitudes() const { return amps_; }
    Complex operator[](std::size_t i) const { return amps_[static_cast<Eigen::Index>(i)]; }
    double norm() const { return amps_.norm(); }

 private:
    CVector amps_;
};

enum class Validation { on, off };

/// Hermitian, unit-trace, positive semi-definite matrix.
class DensityMatrix {
 public:
    DensityMatrix() = default;

    /// With Validation::on, checks Hermiticity and trace within 1e-12 and
    /// eigenvalues >= -1e-10, throwing std::invalid_argument otherwise.
    explicit DensityMatrix(CMatrix entries, Validation validation = Validation::on);

    static DensityMatrix pure(const StateVector &psi);

    std::size_t dim() const { return static_cast<std::size_t>(rho_.rows()); }
    const CMatrix &entries() const { return rho_; }
    Complex operator()(std::size_t i, std::size_t k) const {
        return rho_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k));
    }

    Complex trace() const { return rho_.trace(); }
    double purity() const;
    double hermiticity_error() const;
    double min_eigenvalue() const;

 private:
    CMatrix rho_;
};

struct PauliFactor {
    int site = 1;
    Axis axis = Axis::z;
};

/// Ordered product of single-site Pauli operators, leftmost factor applied last.
struct PauliString {
    int num_qubits = 1;
    std::vector<PauliFactor> factors;
};

/// An operator held either densely or as a Pauli string.
class OperatorSpec {
 public:
    OperatorSpec() = default;
    explicit OperatorSpec(CMatrix dense);
    explicit OperatorSpec(PauliString pauli);

    std::size_t dim() const;
    bool is_pauli() const { return std::holds_alternative<PauliString>(rep_); }
    const PauliString &pauli() const { return std::get<PauliString>(rep_); }

    CMatrix materialize(const Limits &limits = default_limits()) const;
    CVector apply(const CVector &v) const;
    CVector apply(const StateVector &psi) const { return apply(psi.amplitudes()); }

 private:
    std::variant<CMatrix, PauliString> rep_;
};

CMatrix kron(const CMatrix &a, const CMatrix &b);
CVector kron(const CVector &a, const CVector &b);
StateVector kron(const StateVector &a, const StateVector &b);
/// Pauli strings combine into a Pauli string; any dense operand gives a dense result.
OperatorSpec kron(const OperatorSpec &a, const OperatorSpec &b);

/// <a|b>, conjugating the left argument.
Complex inner(const CVector &a, const CVector &b);

/// <bra|op|ket>.
Complex matrix_element(const CVector &bra, const OperatorSpec &op, const CVector &ket);
Complex expectation(const OperatorSpec &op, const StateVector &psi);

/// |<a|b>|^2.
double fidelity_up_to_phase(const StateVector &a, const StateVector &b);
double fidelity_up_to_phase(const CVector &a, const CVector &b);

/// Largest |U^dagger U - 1| entry.
double unitarity_error(const CMatrix &u);
double hermiticity_error(const CMatrix &m);

}  // namespace ptm
