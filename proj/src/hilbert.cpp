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

#include "ptm/hilbert.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace ptm {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char *what) {
    if (a != b) {
        throw DimensionError(fmt::format("{}: dimension mismatch ({} vs {})", what, a, b));
    }
}

}  // namespace

char axis_name(Axis axis) {
    switch (axis) {
        case Axis::x:
            return 'x';
        case Axis::y:
            return 'y';
        case Axis::z:
            return 'z';
    }
    return '?';
}

Axis parse_axis(char name) {
    switch (name) {
        case 'x':
        case 'X':
            return Axis::x;
        case 'y':
        case 'Y':
            return Axis::y;
        case 'z':
        case 'Z':
            return Axis::z;
        default:
            throw std::invalid_argument(fmt::format("unknown axis '{}'", name));
    }
}

int qubits_for_dim(std::size_t dim) {
    if (dim == 0 || !std::has_single_bit(dim)) {
        throw DimensionError(fmt::format("dimension {} is not a power of two", dim));
    }
    return std::countr_zero(dim);
}

StateVector::StateVector(CVector amps, double tolerance) : amps_(std::move(amps)) {
    if (amps_.size() == 0) {
        throw std::invalid_argument("StateVector: empty amplitude vector");
    }
    const double n = amps_.norm();
    if (std::abs(n * n - 1.0) > tolerance) {
        throw std::invalid_argument(fmt::format("StateVector: squared norm {} is not 1", n * n));
    }
}

StateVector StateVector::normalized(CVector amps) {
    const double n = amps.norm();
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw std::invalid_argument("StateVector: cannot normalize a zero or non-finite vector");
    }
    amps /= n;
    return StateVector(std::move(amps));
}

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw std::out_of_range(fmt::format("basis index {} out of range for dimension {}", index, dim));
    }
    CVector amps = CVector::Zero(static_cast<Eigen::Index>(dim));
    amps[static_cast<Eigen::Index>(index)] = 1.0;
    return StateVector(std::move(amps));
}

DensityMatrix::DensityMatrix(CMatrix entries, Validation validation) : rho_(std::move(entries)) {
    if (rho_.rows() != rho_.cols() || rho_.rows() == 0) {
        throw DimensionError("DensityMatrix: entries must be a non-empty square matrix");
    }
    if (validation == Validation::off) {
        return;
    }
    if (hermiticity_error() > 1e-12) {
        throw std::invalid_argument(fmt::format("DensityMatrix: not Hermitian (error {})", hermiticity_error()));
    }
    if (std::abs(trace() - Complex(1.0)) > 1e-12) {
        throw std::invalid_argument(fmt::format("DensityMatrix: trace {} is not 1", trace().real()));
    }
    if (min_eigenvalue() < -1e-10) {
        throw std::invalid_argument(fmt::format("DensityMatrix: negative eigenvalue {}", min_eigenvalue()));
    }
}

DensityMatrix DensityMatrix::pure(const StateVector &psi) {
    const CVector &a = psi.amplitudes();
    return DensityMatrix(a * a.adjoint());
}

double DensityMatrix::purity() const { return (rho_ * rho_).trace().real(); }

double DensityMatrix::hermiticity_error() const { return ptm::hermiticity_error(rho_); }

double DensityMatrix::min_eigenvalue() const {
    // Eigen reads only the lower triangle; symmetrize so drift does not bias it.
    const CMatrix herm = 0.5 * (rho_ + rho_.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(herm, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

OperatorSpec::OperatorSpec(CMatrix dense) : rep_(std::move(dense)) {
    const auto &m = std::get<CMatrix>(rep_);
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw DimensionError("OperatorSpec: dense operator must be a non-empty square matrix");
    }
}

OperatorSpec::OperatorSpec(PauliString pauli) : rep_(std::move(pauli)) {
    const auto &p = std::get<PauliString>(rep_);
    if (p.num_qubits < 1 || p.num_qubits > 62) {
        throw std::invalid_argument("OperatorSpec: Pauli string register size out of range");
    }
    for (const PauliFactor &f : p.factors) {
        if (f.site < 1 || f.site > p.num_qubits) {
            throw std::out_of_range(fmt::format("Pauli factor site {} outside 1..{}", f.site, p.num_qubits));
        }
    }
}

std::size_t OperatorSpec::dim() const {
    if (const auto *p = std::get_if<PauliString>(&rep_)) {
        return std::size_t{1} << p->num_qubits;
    }
    return static_cast<std::size_t>(std::get<CMatrix>(rep_).rows());
}

CVector OperatorSpec::apply(const CVector &v) const {
    require_same_dim(dim(), static_cast<std::size_t>(v.size()), "OperatorSpec::apply");
    if (const auto *dense = std::get_if<CMatrix>(&rep_)) {
        return *dense * v;
    }
    const PauliString &p = std::get<PauliString>(rep_);
    const Complex i_unit(0.0, 1.0);
    CVector out = CVector::Zero(v.size());
    for (Eigen::Index col = 0; col < v.size(); ++col) {
        if (v[col] == Complex(0.0)) {
            continue;
        }
        std::uint64_t row = static_cast<std::uint64_t>(col);
        Complex phase = 1.0;
        for (auto it = p.factors.rbegin(); it != p.factors.rend(); ++it) {
            const int bit = site_bit(row, it->site, p.num_qubits);
            switch (it->axis) {
                case Axis::x:
                    row ^= site_mask(it->site, p.num_qubits);
                    break;
                case Axis::y:
                    phase *= bit ? -i_unit : i_unit;
                    row ^= site_mask(it->site, p.num_qubits);
                    break;
                case Axis::z:
                    if (bit) {
                        phase = -phase;
                    }
                    break;
            }
        }
        out[static_cast<Eigen::Index>(row)] += phase * v[col];
    }
    return out;
}

CMatrix OperatorSpec::materialize(const Limits &limits) const {
    if (const auto *dense = std::get_if<CMatrix>(&rep_)) {
        return *dense;
    }
    const PauliString &p = std::get<PauliString>(rep_);
    require_capacity(p.num_qubits, limits.operator_qubits, "OperatorSpec::materialize");
    const auto n = static_cast<Eigen::Index>(dim());
    CMatrix m(n, n);
    CVector unit = CVector::Zero(n);
    for (Eigen::Index col = 0; col < n; ++col) {
        unit[col] = 1.0;
        m.col(col) = apply(unit);
        unit[col] = 0.0;
    }
    return m;
}

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

CVector kron(const CVector &a, const CVector &b) {
    CVector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        out.segment(i * b.size(), b.size()) = a[i] * b;
    }
    return out;
}

StateVector kron(const StateVector &a, const StateVector &b) {
    return StateVector(kron(a.amplitudes(), b.amplitudes()));
}

OperatorSpec kron(const OperatorSpec &a, const OperatorSpec &b) {
    if (a.is_pauli() && b.is_pauli()) {
        PauliString out{a.pauli().num_qubits + b.pauli().num_qubits, a.pauli().factors};
        for (PauliFactor f : b.pauli().factors) {
            f.site += a.pauli().num_qubits;
            out.factors.push_back(f);
        }
        return OperatorSpec(std::move(out));
    }
    return OperatorSpec(kron(a.materialize(), b.materialize()));
}

Complex inner(const CVector &a, const CVector &b) {
    require_same_dim(static_cast<std::size_t>(a.size()), static_cast<std::size_t>(b.size()), "inner");
    return a.dot(b);
}

Complex matrix_element(const CVector &bra, const OperatorSpec &op, const CVector &ket) {
    return inner(bra, op.apply(ket));
}

Complex expectation(const OperatorSpec &op, const StateVector &psi) {
    return matrix_element(psi.amplitudes(), op, psi.amplitudes());
}

double fidelity_up_to_phase(const CVector &a, const CVector &b) { return std::norm(inner(a, b)); }

double fidelity_up_to_phase(const StateVector &a, const StateVector &b) {
    return fidelity_up_to_phase(a.amplitudes(), b.amplitudes());
}

double unitarity_error(const CMatrix &u) {
    if (u.rows() != u.cols()) {
        throw DimensionError("unitarity_error: matrix is not square");
    }
    return (u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

double hermiticity_error(const CMatrix &m) {
    if (m.rows() != m.cols()) {
        throw DimensionError("hermiticity_error: matrix is not square");
    }
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace ptm
