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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "ptm/hilbert.hpp"
#include "ptm/ptm_seq.hpp"

namespace ptm {

/// Binary floating point with a 128-bit mantissa.
using BigReal = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<128, boost::multiprecision::digit_base_2>,
    boost::multiprecision::et_off>;

struct RealEstimate {
    BigReal value = 0;
    std::uint64_t terms = 0;
    double error_bound = 0.0;
};

struct ComplexEstimate {
    Complex value = 0.0;
    std::uint64_t terms = 0;
    double error_bound = 0.0;
};

enum class ProductFamily { p1, p2, p3, p4 };

std::string_view product_name(ProductFamily which);
std::optional<ProductFamily> parse_product_family(std::string_view name);

/// Known limit of the infinite product, or nullopt when it is not known in closed form (p4).
std::optional<BigReal> product_limit(ProductFamily which);

/// Partial product over M factors (n = 0..M-1, or n = 1..M for p4). The error
/// bound is the heuristic |P| |f_last - 1|.
RealEstimate product_family(ProductFamily which, std::uint64_t terms);

struct ConstantEstimate {
    /// sum_{i<B} t_i 2^{B-1-i}; the truncated constant is numerator / 2^B.
    BigInt numerator = 0;
    int bits = 0;
    /// Exact tail bound 2^-B.
    BigReal error_bound = 0;

    BigReal value() const;
    /// First `digits` decimals of numerator / 2^B, truncated.
    std::string decimal(int digits) const;
};

inline constexpr int kMaxConstantBits = 4096;

ConstantEstimate ptm_constant(int bits);

struct DirichletPair {
    /// sum_{n<=M} t_{n-1} n^-s
    ComplexEstimate a;
    /// sum_{n<=M} t_n n^-s
    ComplexEstimate b;
};

/// Requires Re(s) > 1 and M >= 2. Tail bound M^{1-Re s}/(Re s - 1).
DirichletPair dirichlet_pair(Complex s, std::uint64_t terms);

/// (1 + 2^-s) A + (1 - 2^-s) B.
ComplexEstimate zeta_ptm(Complex s, std::uint64_t terms);

struct FeilerResult {
    double sigma = 0.0;
    double tau = 0.0;
    std::uint64_t terms = 0;
    /// sum_n c_n^2 (n+1)^{-i tau} for the two truncated amplitude vectors.
    Complex psi1_corr = 0.0;
    Complex psi2_corr = 0.0;
    /// (1 + 2^-s) psi1_corr + (1 - 2^-s) psi2_corr, without normalization.
    Complex zeta_estimate = 0.0;
    /// 1 / || (1 + 2^-s) psi1 + (1 - 2^-s) psi2 || over the truncated levels.
    double normalization = 0.0;
    /// <psi^*|psi(t)> of the unnormalized superposition itself, cross terms included.
    Complex superposition_corr = 0.0;
    double error_bound = 0.0;
};

/// Conjugate autocorrelations of the two level-weighted states after phases (n+1)^{-i tau}.
FeilerResult feiler_autocorrelation(double sigma, double tau, std::uint64_t terms);

}  // namespace ptm
