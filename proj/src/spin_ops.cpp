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

#include "ptm/spin_ops.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>

#include <fmt/format.h>

namespace ptm {

namespace {

constexpr double kIdentityTol = 1e-12;

void require_register(int num_qubits, const char *what) {
    if (num_qubits < 1 || num_qubits > 62) {
        throw std::invalid_argument(fmt::format("{}: register size {} out of range", what, num_qubits));
    }
}

void require_site(int site, int num_qubits, const char *what) {
    if (site < 1 || site > num_qubits) {
        throw std::out_of_range(fmt::format("{}: site {} outside 1..{}", what, site, num_qubits));
    }
}

struct GaussianInt {
    BigInt re = 0;
    BigInt im = 0;
};

Rational dyadic(const BigInt &numerator, int exponent) { return Rational(numerator, BigInt(1) << exponent); }

Claim moment_claim(int power, int order) {
    if (power < order) {
        return Claim::holds;
    }
    return power == order ? Claim::fails : Claim::none;
}

bool claim_met(Claim claim, bool identity_holds) {
    switch (claim) {
        case Claim::holds:
            return identity_holds;
        case Claim::fails:
            return !identity_holds;
        case Claim::none:
            return true;
    }
    return false;
}

}  // namespace

const char *claim_name(Claim claim) {
    switch (claim) {
        case Claim::holds:
            return "holds";
        case Claim::fails:
            return "fails";
        case Claim::none:
            return "none";
    }
    return "?";
}

CMatrix pauli_matrix(Axis axis) {
    CMatrix m(2, 2);
    switch (axis) {
        case Axis::x:
            m << 0.0, 1.0, 1.0, 0.0;
            break;
        case Axis::y:
            m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
            break;
        case Axis::z:
            m << 1.0, 0.0, 0.0, -1.0;
            break;
    }
    return m;
}

CMatrix hadamard_matrix() {
    CMatrix h(2, 2);
    h << 1.0, 1.0, 1.0, -1.0;
    return h / std::sqrt(2.0);
}

OperatorSpec pauli_on(Axis axis, int site, int num_qubits) {
    require_register(num_qubits, "pauli_on");
    require_site(site, num_qubits, "pauli_on");
    return OperatorSpec(PauliString{num_qubits, {PauliFactor{site, axis}}});
}

OperatorSpec hadamard_all(int num_qubits, const Limits &limits) {
    require_register(num_qubits, "hadamard_all");
    require_capacity(num_qubits, limits.operator_qubits, "hadamard_all");
    const std::size_t dim = std::size_t{1} << num_qubits;
    const double scale = std::pow(2.0, -0.5 * num_qubits);
    CMatrix h(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            h(r, c) = (std::popcount(r & c) & 1) ? -scale : scale;
        }
    }
    return OperatorSpec(std::move(h));
}

CVector apply_hadamard_all(CVector v) {
    const auto n = v.size();
    qubits_for_dim(static_cast<std::size_t>(n));
    for (Eigen::Index len = 1; len < n; len <<= 1) {
        for (Eigen::Index base = 0; base < n; base += 2 * len) {
            for (Eigen::Index i = base; i < base + len; ++i) {
                const Complex a = v[i];
                const Complex b = v[i + len];
                v[i] = a + b;
                v[i + len] = a - b;
            }
        }
    }
    v *= std::pow(2.0, -0.5 * static_cast<double>(std::countr_zero(static_cast<std::size_t>(n))));
    return v;
}

CVector CollectiveOp::apply(const CVector &v) const {
    CVector out = CVector::Zero(v.size());
    for (int site = 1; site <= num_qubits; ++site) {
        out += pauli_on(axis, site, num_qubits).apply(v);
    }
    if (scale == SpinScale::spin_half) {
        out *= 0.5;
    }
    return out;
}

CMatrix CollectiveOp::materialize(const Limits &limits) const {
    require_capacity(num_qubits, limits.operator_qubits, "CollectiveOp::materialize");
    const auto dim = Eigen::Index{1} << num_qubits;
    CMatrix m(dim, dim);
    CVector unit = CVector::Zero(dim);
    for (Eigen::Index c = 0; c < dim; ++c) {
        unit[c] = 1.0;
        m.col(c) = apply(unit);
        unit[c] = 0.0;
    }
    return m;
}

QuditJz qudit_jz(std::size_t d) {
    if (d < 2) {
        throw std::invalid_argument("qudit_jz: dimension must be at least 2");
    }
    QuditJz jz;
    jz.dim = d;
    jz.diagonal.reserve(d);
    for (std::size_t k = 0; k < d; ++k) {
        jz.diagonal.emplace_back(BigInt(static_cast<long long>(d) - 1 - 2 * static_cast<long long>(k)), BigInt(2));
    }
    return jz;
}

FirstMomentReport verify_first_moment(int num_qubits, Logical which, const Limits &limits) {
    if (num_qubits < 2) {
        throw std::invalid_argument("verify_first_moment: requires N > 1");
    }
    const PtmLogical state = ptm_state(num_qubits, which, limits);
    FirstMomentReport report{num_qubits, which, {}, true};
    const std::array<Axis, 3> axes{Axis::x, Axis::y, Axis::z};
    for (std::size_t a = 0; a < axes.size(); ++a) {
        const CollectiveOp op{axes[a], num_qubits, SpinScale::pauli};
        const CVector &psi = state.state.amplitudes();
        report.values[a] = inner(psi, op.apply(psi));
        report.pass = report.pass && std::abs(report.values[a]) <= kIdentityTol;
    }
    return report;
}

ZProductReport verify_z_products(int num_qubits, const std::vector<int> &sites) {
    require_register(num_qubits, "verify_z_products");
    require_capacity(num_qubits, default_limits().state_qubits, "verify_z_products");
    if (sites.empty()) {
        throw std::invalid_argument("verify_z_products: site set must be non-empty");
    }
    std::map<int, int> counts;
    for (int s : sites) {
        require_site(s, num_qubits, "verify_z_products");
        ++counts[s];
    }
    ZProductReport report;
    report.num_qubits = num_qubits;
    report.sites = sites;
    std::uint64_t mask = 0;
    for (auto [site, count] : counts) {
        if (count % 2 == 1) {
            report.effective_sites.push_back(site);
            mask |= site_mask(site, num_qubits);
        }
    }
    const std::uint64_t dim = std::uint64_t{1} << num_qubits;
    long long zero_sum = 0;
    long long one_sum = 0;
    for (std::uint64_t k = 0; k < dim; ++k) {
        const int sign = (std::popcount(k & mask) & 1) ? -1 : 1;
        (ptm_digit_sum(k) ? one_sum : zero_sum) += sign;
    }
    report.raw_zero = zero_sum;
    report.raw_one = one_sum;
    report.value_zero = std::ldexp(static_cast<double>(zero_sum), -(num_qubits - 1));
    report.value_one = std::ldexp(static_cast<double>(one_sum), -(num_qubits - 1));
    // The operator is diagonal and the supports are disjoint.
    report.offdiag = 0.0;
    report.offdiag_zero = true;
    report.diag_equal = zero_sum == one_sum;
    report.claim = static_cast<int>(report.effective_sites.size()) < num_qubits ? Claim::holds : Claim::fails;
    report.pass = claim_met(report.claim, report.diag_equal && report.offdiag_zero);
    return report;
}

PowerMomentReport verify_power_moments(int num_qubits, Axis axis, int power, const Limits &limits) {
    require_register(num_qubits, "verify_power_moments");
    require_capacity(num_qubits, limits.state_qubits, "verify_power_moments");
    if (power < 0) {
        throw std::invalid_argument("verify_power_moments: power must be non-negative");
    }
    if (axis == Axis::x) {
        throw std::invalid_argument("verify_power_moments: only axes y and z are supported");
    }
    PowerMomentReport report;
    report.num_qubits = num_qubits;
    report.axis = axis;
    report.power = power;
    const std::uint64_t dim = std::uint64_t{1} << num_qubits;
    const int exponent = num_qubits - 1;

    if (axis == Axis::z) {
        BigInt zero_sum = 0;
        BigInt one_sum = 0;
        for (std::uint64_t k = 0; k < dim; ++k) {
            const long long eigen = num_qubits - 2LL * std::popcount(k);
            BigInt term = boost::multiprecision::pow(BigInt(eigen), static_cast<unsigned>(power));
            (ptm_digit_sum(k) ? one_sum : zero_sum) += term;
        }
        report.diag_zero = dyadic(zero_sum, exponent);
        report.diag_one = dyadic(one_sum, exponent);
    } else {
        // S_y^j applied to the 0/1 indicator of each support, in exact Gaussian integers.
        auto power_apply = [&](Logical which) {
            std::vector<GaussianInt> v(dim);
            const int wanted = which == Logical::zero ? 0 : 1;
            for (std::uint64_t k = 0; k < dim; ++k) {
                v[k].re = ptm_digit_sum(k) == wanted ? 1 : 0;
            }
            for (int step = 0; step < power; ++step) {
                std::vector<GaussianInt> next(dim);
                for (std::uint64_t k = 0; k < dim; ++k) {
                    if (v[k].re == 0 && v[k].im == 0) {
                        continue;
                    }
                    for (int site = 1; site <= num_qubits; ++site) {
                        // sigma_y|0> = i|1>, sigma_y|1> = -i|0>.
                        const std::uint64_t row = k ^ site_mask(site, num_qubits);
                        if (site_bit(k, site, num_qubits) == 0) {
                            next[row].re -= v[k].im;
                            next[row].im += v[k].re;
                        } else {
                            next[row].re += v[k].im;
                            next[row].im -= v[k].re;
                        }
                    }
                }
                v = std::move(next);
            }
            return v;
        };
        const auto from_zero = power_apply(Logical::zero);
        const auto from_one = power_apply(Logical::one);
        GaussianInt zero_sum;
        GaussianInt one_sum;
        GaussianInt cross;
        for (std::uint64_t k = 0; k < dim; ++k) {
            if (ptm_digit_sum(k) == 0) {
                zero_sum.re += from_zero[k].re;
                zero_sum.im += from_zero[k].im;
            } else {
                one_sum.re += from_one[k].re;
                one_sum.im += from_one[k].im;
                cross.re += from_zero[k].re;
                cross.im += from_zero[k].im;
            }
        }
        if (zero_sum.im != 0 || one_sum.im != 0) {
            throw std::logic_error("verify_power_moments: Hermitian moment has an imaginary part");
        }
        report.diag_zero = dyadic(zero_sum.re, exponent);
        report.diag_one = dyadic(one_sum.re, exponent);
        report.cross_re = dyadic(cross.re, exponent);
        report.cross_im = dyadic(cross.im, exponent);
    }
    report.diag_equal = report.diag_zero == report.diag_one;
    report.cross_zero = report.cross_re == 0 && report.cross_im == 0;
    report.claim = moment_claim(power, num_qubits);
    report.pass = claim_met(report.claim, report.diag_equal && report.cross_zero);
    return report;
}

XxStabilizerReport verify_xx_stabilizer(int num_qubits, int site_a, int site_b, const Limits &limits) {
    require_register(num_qubits, "verify_xx_stabilizer");
    require_site(site_a, num_qubits, "verify_xx_stabilizer");
    require_site(site_b, num_qubits, "verify_xx_stabilizer");
    const OperatorSpec xx(PauliString{num_qubits, {{site_a, Axis::x}, {site_b, Axis::x}}});
    XxStabilizerReport report{num_qubits, site_a, site_b, {}, {}, true};
    for (int b = 0; b < 2; ++b) {
        const PtmLogical state = ptm_state(num_qubits, b == 0 ? Logical::zero : Logical::one, limits);
        const CVector &psi = state.state.amplitudes();
        const CVector out = xx.apply(psi);
        report.max_deviation[b] = (out - psi).cwiseAbs().maxCoeff();
        report.fidelity[b] = fidelity_up_to_phase(psi, out);
        report.pass = report.pass && report.max_deviation[b] <= kIdentityTol;
    }
    return report;
}

SxReciprocityReport sx_reciprocity(int num_qubits, const Limits &limits) {
    const CVector zero = ptm_state(num_qubits, Logical::zero, limits).state.amplitudes();
    const CVector one = ptm_state(num_qubits, Logical::one, limits).state.amplitudes();
    const CollectiveOp sx{Axis::x, num_qubits, SpinScale::pauli};
    const double n = num_qubits;
    SxReciprocityReport report;
    report.num_qubits = num_qubits;
    report.swap_residual[0] = (sx.apply(zero) - n * one).norm();
    report.swap_residual[1] = (sx.apply(one) - n * zero).norm();
    const double r = 1.0 / std::sqrt(2.0);
    const std::array<CVector, 2> eigvecs{r * (zero + one), r * (zero - one)};
    report.pass = report.swap_residual[0] <= kIdentityTol && report.swap_residual[1] <= kIdentityTol;
    for (int s = 0; s < 2; ++s) {
        const CVector image = sx.apply(eigvecs[s]);
        report.eigenvalue[s] = inner(eigvecs[s], image).real();
        const double expected = s == 0 ? n : -n;
        report.eigen_residual[s] = (image - expected * eigvecs[s]).norm();
        report.pass = report.pass && report.eigen_residual[s] <= kIdentityTol;
    }
    return report;
}

MemoryForms memory_matrix_forms(int num_qubits, const Limits &limits) {
    if (num_qubits < 2) {
        throw std::invalid_argument("memory_matrix_forms: requires N >= 2");
    }
    const std::array<CVector, 2> basis{ptm_state(num_qubits, Logical::zero, limits).state.amplitudes(),
                                       ptm_state(num_qubits, Logical::one, limits).state.amplitudes()};
    MemoryForms forms;
    forms.num_qubits = num_qubits;
    const std::array<Axis, 3> axes{Axis::x, Axis::y, Axis::z};
    for (std::size_t a = 0; a < axes.size(); ++a) {
        const CollectiveOp op{axes[a], num_qubits, SpinScale::pauli};
        for (int c = 0; c < 2; ++c) {
            const CVector image = op.apply(basis[c]);
            for (int r = 0; r < 2; ++r) {
                forms.blocks[a](r, c) = inner(basis[r], image);
            }
        }
    }
    Eigen::Matrix2cd expected_x;
    expected_x << 0.0, static_cast<double>(num_qubits), static_cast<double>(num_qubits), 0.0;
    forms.pass = (forms.blocks[0] - expected_x).cwiseAbs().maxCoeff() <= kIdentityTol &&
                 forms.blocks[1].cwiseAbs().maxCoeff() <= kIdentityTol &&
                 forms.blocks[2].cwiseAbs().maxCoeff() <= kIdentityTol;
    return forms;
}

JzMomentReport verify_jz_moments(std::size_t d, int power) {
    if (d < 2 || !std::has_single_bit(d)) {
        throw std::invalid_argument(fmt::format("verify_jz_moments: dimension {} is not a power of two", d));
    }
    if (power < 0) {
        throw std::invalid_argument("verify_jz_moments: power must be non-negative");
    }
    const int order = std::countr_zero(d);
    const QuditJz jz = qudit_jz(d);
    // Each supported level has squared amplitude 2/d.
    const Rational weight(2, static_cast<long long>(d));
    JzMomentReport report;
    report.dim = d;
    report.power = power;
    Rational zero_sum = 0;
    Rational one_sum = 0;
    for (std::size_t k = 0; k < d; ++k) {
        Rational term = 1;
        for (int p = 0; p < power; ++p) {
            term *= jz.diagonal[k];
        }
        (ptm_digit_sum(k) ? one_sum : zero_sum) += term;
    }
    report.diag_zero = weight * zero_sum;
    report.diag_one = weight * one_sum;
    report.cross = 0;
    report.diag_equal = report.diag_zero == report.diag_one;
    report.claim = moment_claim(power, order);
    report.pass = claim_met(report.claim, report.diag_equal);
    return report;
}

}  // namespace ptm
