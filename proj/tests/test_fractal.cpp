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

#include "ptm/fractal.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"

#include "oracles/oracles.hpp"

using namespace ptm;

namespace {

const Complex kAlpha{std::numbers::sqrt2 / 2, 0.0};
const Complex kBeta{-std::numbers::sqrt2 / 2, 0.0};

std::vector<double> oracle_intensities(int n, Complex alpha, Complex beta) {
    const CVector psi = alpha * oracle::ptm_state(n, 0) + beta * oracle::ptm_state(n, 1);
    const CVector f = oracle::dft_matrix(n) * psi;
    std::vector<double> out(static_cast<std::size_t>(f.size()));
    for (Eigen::Index j = 0; j < f.size(); ++j) {
        out[static_cast<std::size_t>(j)] = std::norm(f[j]);
    }
    return out;
}

}  // namespace

TEST(fractal, unitary_fft_matches_naive_dft) {
    std::mt19937_64 rng(21);
    std::normal_distribution<double> g;
    for (int n : {1, 2, 8, 64, 256}) {
        std::vector<Complex> x(static_cast<std::size_t>(n));
        for (auto &v : x) {
            v = Complex(g(rng), g(rng));
        }
        const std::vector<Complex> expected = oracle::naive_dft(x);
        unitary_fft(x);
        for (std::size_t j = 0; j < x.size(); ++j) {
            ASSERT_LT(std::abs(x[j] - expected[j]), 1e-11);
        }
    }
    std::vector<Complex> bad(6);
    EXPECT_THROW(unitary_fft(bad), DimensionError);
}

TEST(fractal, direct_matches_dense_qft) {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> g;
    for (int n = 1; n <= 8; ++n) {
        Complex a(g(rng), g(rng));
        Complex b(g(rng), g(rng));
        const double s = std::sqrt(std::norm(a) + std::norm(b));
        a /= s;
        b /= s;
        const SpectrumSeries d = ftm_direct(n, a, b);
        const std::vector<double> expected = oracle_intensities(n, a, b);
        for (std::size_t j = 0; j < expected.size(); ++j) {
            ASSERT_NEAR(d.intensities[j], expected[j], 1e-12);
        }
    }
}

TEST(fractal, closed_form_matches_direct) {
    std::mt19937_64 rng(6);
    std::normal_distribution<double> g;
    for (int n = 1; n <= 12; ++n) {
        Complex a(g(rng), g(rng));
        Complex b(g(rng), g(rng));
        const double s = std::sqrt(std::norm(a) + std::norm(b));
        a /= s;
        b /= s;
        const SpectrumSeries d = ftm_direct(n, a, b);
        const SpectrumSeries c = ftm_closed_series(n, a, b);
        ASSERT_EQ(c.intensities.size(), d.intensities.size());
        for (std::size_t j = 0; j < c.intensities.size(); ++j) {
            ASSERT_NEAR(c.intensities[j], d.intensities[j], 1e-10) << n << " " << j;
        }
        EXPECT_NEAR(c.total_intensity(), 1.0, 1e-10);
        EXPECT_NEAR(d.total_intensity(), 1.0, 1e-12);
        EXPECT_TRUE(c.coefficients.empty());
    }
}

TEST(fractal, zero_frequency_and_equal_amplitudes) {
    const Complex a{0.6, 0.0};
    const Complex b{0.0, 0.8};
    const SpectrumSeries d = ftm_direct(6, a, b);
    EXPECT_LT(std::abs(d.coefficients[0] - (a + b) / std::numbers::sqrt2), 1e-14);
    EXPECT_NEAR(ftm_closed(6, 0, a, b), std::norm(a + b) / 2.0, 1e-15);

    const Complex h{std::numbers::sqrt2 / 2, 0.0};
    const SpectrumSeries eq = ftm_direct(7, h, h);
    EXPECT_NEAR(eq.intensities[0], 1.0, 1e-13);
    for (std::size_t j = 1; j < eq.intensities.size(); ++j) {
        ASSERT_LT(eq.intensities[j], 1e-26);
    }
}

TEST(fractal, even_nonzero_frequencies_vanish) {
    const SpectrumSeries c = ftm_closed_series(10, kAlpha, kBeta);
    for (std::size_t j = 2; j < c.intensities.size(); j += 2) {
        ASSERT_EQ(c.intensities[j], 0.0);
    }
    EXPECT_GT(c.intensities[1], 0.0);
}

TEST(fractal, signed_sum_equals_product) {
    for (int n = 1; n <= 12; ++n) {
        const std::uint64_t dim = std::uint64_t{1} << n;
        for (std::uint64_t j = 0; j < dim; ++j) {
            const Complex sum = signed_phase_sum(n, j);
            const Complex prod = signed_phase_product(n, j);
            ASSERT_LT(std::abs(sum - prod), 1e-9) << n << " " << j;
        }
    }
}

TEST(fractal, large_register_spot_check) {
    Limits big;
    big.state_qubits = 20;
    const SpectrumSeries d = ftm_direct(20, kAlpha, kBeta, big);
    for (std::uint64_t j : {1ULL, 77ULL, 12345ULL, 699051ULL, 1048575ULL}) {
        EXPECT_NEAR(ftm_closed(20, j, kAlpha, kBeta), d.intensities[j], 1e-10) << j;
    }
    EXPECT_THROW(ftm_direct(20, kAlpha, kBeta), CapacityError);
}

TEST(fractal, argument_checks) {
    EXPECT_THROW(ftm_closed(4, 16, kAlpha, kBeta), std::out_of_range);
    EXPECT_THROW(ftm_closed_series(27, kAlpha, kBeta), CapacityError);
    EXPECT_THROW(ftm_direct(4, Complex{1.0, 0.0}, Complex{1.0, 0.0}), std::invalid_argument);
    EXPECT_THROW(zoom_window(1024, 1.0, 4.0), std::out_of_range);
    EXPECT_THROW(zoom_window(1024, 0.5, 0.5), std::invalid_argument);
    EXPECT_THROW(zoom_window(1024, 0.5, 2048.0), std::invalid_argument);
}

TEST(fractal, zoom_window_alignment) {
    const ZoomWindow w = zoom_window(1024, 0.3, 8.0);
    EXPECT_EQ(w.begin, 256U);
    EXPECT_EQ(w.end, 384U);
    const ZoomWindow all = zoom_window(1024, 0.7, 1.0);
    EXPECT_EQ(all.begin, 0U);
    EXPECT_EQ(all.end, 1024U);
}

TEST(fractal, self_similarity_basics) {
    const SpectrumSeries c = ftm_closed_series(12, kAlpha, kBeta);
    const std::optional<double> whole = self_similarity(c.intensities, 0.5, 1.0);
    ASSERT_TRUE(whole.has_value());
    EXPECT_NEAR(*whole, 1.0, 1e-12);
    const std::vector<double> flat(4096, 0.25);
    EXPECT_FALSE(self_similarity(flat, 0.3, 4.0).has_value());
}

TEST(fractal, self_similarity_snapshots) {
    const SpectrumSeries c = ftm_closed_series(20, kAlpha, kBeta);
    const double zoom = 32.0;
    EXPECT_NEAR(*self_similarity(c.intensities, 0.2, zoom), 0.9810748412720162, 1e-9);
    EXPECT_NEAR(*self_similarity(c.intensities, 0.25, zoom), 0.8240969838931314, 1e-9);
    EXPECT_NEAR(*self_similarity(c.intensities, 0.88, zoom), 0.9174481228569111, 1e-9);
}
