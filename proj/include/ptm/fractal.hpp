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
#include <vector>

#include "ptm/hilbert.hpp"
#include "ptm/limits.hpp"

namespace ptm {

struct SpectrumSeries {
    int num_qubits = 0;
    /// F_j; empty when the series came from the closed form.
    std::vector<Complex> coefficients;
    std::vector<double> intensities;

    double total_intensity() const;
};

/// In-place DFT with kernel exp(+2 pi i jk/n)/sqrt(n); n must be a power of two.
void unitary_fft(std::vector<Complex> &data);

/// F_j = <j| QFT (alpha|0_TM> + beta|1_TM>) via the FFT.
SpectrumSeries ftm_direct(int num_qubits, Complex alpha, Complex beta, const Limits &limits = default_limits());

/// |F_j|^2 from the product of sines; j = 0 gives |alpha + beta|^2 / 2.
double ftm_closed(int num_qubits, std::uint64_t j, Complex alpha, Complex beta);

/// ftm_closed for every j; N up to 26.
SpectrumSeries ftm_closed_series(int num_qubits, Complex alpha, Complex beta);

/// sum_k (-1)^{t_k} exp(2 pi i jk / 2^N), summed directly.
Complex signed_phase_sum(int num_qubits, std::uint64_t j);

/// prod_{k<N} (1 - exp(2 pi i j 2^k / 2^N)).
Complex signed_phase_product(int num_qubits, std::uint64_t j);

struct ZoomWindow {
    std::size_t begin = 0;
    std::size_t end = 0;
};

/// The cell of width floor(n/zoom), on the grid of such cells, that contains center * n.
/// Throws if it is empty or does not fit in [0, n).
ZoomWindow zoom_window(std::size_t n, double center, double zoom);

/// Pearson correlation between log block-averaged intensities of the whole series
/// and of the zoom window, both reduced to min(1024, window length) blocks.
/// Empty when either side has zero variance.
std::optional<double> self_similarity(const std::vector<double> &intensities, double center, double zoom);

inline constexpr double kIntensityFloor = 1e-300;

}  // namespace ptm
