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

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include <fftw3.h>
#include <fmt/format.h>

#include "ptm/ptm_seq.hpp"

namespace ptm {

namespace {

void check_weights(Complex alpha, Complex beta, const char *what) {
    const double w = std::norm(alpha) + std::norm(beta);
    if (std::abs(w - 1.0) > 1e-12) {
        throw std::invalid_argument(fmt::format("{}: |alpha|^2 + |beta|^2 = {} is not 1", what, w));
    }
}

void check_order(int num_qubits, int max, const char *what) {
    if (num_qubits < 1 || num_qubits > max) {
        throw CapacityError(fmt::format("{}: N = {} outside 1..{}", what, num_qubits, max));
    }
}

constexpr int kClosedSeriesMax = 26;

// sin^2(pi m / 2^N) for m reduced mod 2^N.
double sin2_dyadic(std::uint64_t m, int num_qubits) {
    if (m == 0) {
        return 0.0;
    }
    const double s = std::sin(std::numbers::pi * std::ldexp(static_cast<double>(m), -num_qubits));
    return s * s;
}

}  // namespace

double SpectrumSeries::total_intensity() const {
    return std::accumulate(intensities.begin(), intensities.end(), 0.0);
}

void unitary_fft(std::vector<Complex> &data) {
    const std::size_t n = data.size();
    if (n == 0 || !std::has_single_bit(n)) {
        throw DimensionError("unitary_fft: length must be a power of two");
    }
    auto *buf = reinterpret_cast<fftw_complex *>(data.data());
    fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (Complex &c : data) {
        c *= scale;
    }
}

SpectrumSeries ftm_direct(int num_qubits, Complex alpha, Complex beta, const Limits &limits) {
    check_weights(alpha, beta, "ftm_direct");
    if (num_qubits < 1) {
        throw std::invalid_argument("ftm_direct: requires at least 1 qubit");
    }
    require_capacity(num_qubits, limits.state_qubits, "ftm_direct");
    const std::size_t dim = std::size_t{1} << num_qubits;
    const double amp = std::sqrt(std::ldexp(1.0, -(num_qubits - 1)));
    SpectrumSeries s;
    s.num_qubits = num_qubits;
    s.coefficients.resize(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        s.coefficients[k] = amp * (ptm_digit_sum(k) ? beta : alpha);
    }
    unitary_fft(s.coefficients);
    s.intensities.resize(dim);
    std::transform(s.coefficients.begin(), s.coefficients.end(), s.intensities.begin(),
                   [](Complex c) { return std::norm(c); });
    return s;
}

double ftm_closed(int num_qubits, std::uint64_t j, Complex alpha, Complex beta) {
    check_order(num_qubits, 62, "ftm_closed");
    const std::uint64_t mask = (std::uint64_t{1} << num_qubits) - 1;
    if (j > mask) {
        throw std::out_of_range(fmt::format("ftm_closed: j = {} exceeds 2^N - 1", j));
    }
    if (j == 0) {
        return 0.5 * std::norm(alpha + beta);
    }
    double product = 0.5 * std::norm(alpha - beta);
    for (int k = 0; k < num_qubits && product != 0.0; ++k) {
        product *= sin2_dyadic((j << k) & mask, num_qubits);
    }
    return product;
}

SpectrumSeries ftm_closed_series(int num_qubits, Complex alpha, Complex beta) {
    check_weights(alpha, beta, "ftm_closed_series");
    check_order(num_qubits, kClosedSeriesMax, "ftm_closed_series");
    const std::size_t dim = std::size_t{1} << num_qubits;
    // Every factor is sin^2(pi m / 2^N) for some m; tabulate once.
    std::vector<double> table(dim);
    for (std::size_t m = 0; m < dim; ++m) {
        table[m] = sin2_dyadic(m, num_qubits);
    }
    const double prefactor = 0.5 * std::norm(alpha - beta);
    SpectrumSeries s;
    s.num_qubits = num_qubits;
    s.intensities.resize(dim);
    s.intensities[0] = 0.5 * std::norm(alpha + beta);
    for (std::size_t j = 1; j < dim; ++j) {
        double product = prefactor;
        for (int k = 0; k < num_qubits && product != 0.0; ++k) {
            product *= table[(j << k) & (dim - 1)];
        }
        s.intensities[j] = product;
    }
    return s;
}

Complex signed_phase_sum(int num_qubits, std::uint64_t j) {
    check_order(num_qubits, 24, "signed_phase_sum");
    const std::uint64_t dim = std::uint64_t{1} << num_qubits;
    Complex sum = 0.0;
    for (std::uint64_t k = 0; k < dim; ++k) {
        const double angle = 2.0 * std::numbers::pi * std::ldexp(static_cast<double>((j * k) & (dim - 1)), -num_qubits);
        const Complex term = std::polar(1.0, angle);
        sum += ptm_digit_sum(k) ? -term : term;
    }
    return sum;
}

Complex signed_phase_product(int num_qubits, std::uint64_t j) {
    check_order(num_qubits, 62, "signed_phase_product");
    const std::uint64_t mask = (std::uint64_t{1} << num_qubits) - 1;
    Complex product = 1.0;
    for (int k = 0; k < num_qubits; ++k) {
        const double angle = 2.0 * std::numbers::pi * std::ldexp(static_cast<double>((j << k) & mask), -num_qubits);
        product *= 1.0 - std::polar(1.0, angle);
    }
    return product;
}

ZoomWindow zoom_window(std::size_t n, double center, double zoom) {
    if (!(zoom >= 1.0) || !std::isfinite(zoom)) {
        throw std::invalid_argument("zoom_window: zoom must be a finite factor >= 1");
    }
    const auto width = static_cast<std::size_t>(std::floor(static_cast<double>(n) / zoom));
    if (width == 0) {
        throw std::invalid_argument("zoom_window: window is empty");
    }
    if (!(center >= 0.0 && center < 1.0)) {
        throw std::out_of_range(fmt::format("zoom_window: centre {} is outside [0, 1)", center));
    }
    const auto cell = static_cast<std::size_t>(std::floor(center * static_cast<double>(n) / static_cast<double>(width)));
    const std::size_t begin = cell * width;
    if (begin + width > n) {
        throw std::out_of_range(fmt::format("zoom_window: centre {} with zoom {} leaves the range", center, zoom));
    }
    return {begin, begin + width};
}

namespace {

std::vector<double> log_blocks(const std::vector<double> &values, std::size_t begin, std::size_t end,
                               std::size_t blocks) {
    const std::size_t len = end - begin;
    std::vector<double> out(blocks);
    for (std::size_t b = 0; b < blocks; ++b) {
        const std::size_t lo = begin + b * len / blocks;
        const std::size_t hi = begin + (b + 1) * len / blocks;
        double sum = 0.0;
        for (std::size_t i = lo; i < hi; ++i) {
            sum += values[i];
        }
        out[b] = std::log(std::max(sum / static_cast<double>(hi - lo), kIntensityFloor));
    }
    return out;
}

std::optional<double> pearson(const std::vector<double> &a, const std::vector<double> &b) {
    const double n = static_cast<double>(a.size());
    const double ma = std::accumulate(a.begin(), a.end(), 0.0) / n;
    const double mb = std::accumulate(b.begin(), b.end(), 0.0) / n;
    double sab = 0.0;
    double saa = 0.0;
    double sbb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sab += (a[i] - ma) * (b[i] - mb);
        saa += (a[i] - ma) * (a[i] - ma);
        sbb += (b[i] - mb) * (b[i] - mb);
    }
    // Spreads at rounding level count as constant series.
    const auto flat = [n](double ss, double mean) {
        const double scale = 1e-12 * std::max(1.0, std::abs(mean));
        return ss <= n * scale * scale;
    };
    if (flat(saa, ma) || flat(sbb, mb)) {
        return std::nullopt;
    }
    return sab / std::sqrt(saa * sbb);
}

}  // namespace

std::optional<double> self_similarity(const std::vector<double> &intensities, double center, double zoom) {
    const ZoomWindow w = zoom_window(intensities.size(), center, zoom);
    const std::size_t blocks = std::min<std::size_t>(1024, w.end - w.begin);
    if (blocks < 2) {
        return std::nullopt;
    }
    return pearson(log_blocks(intensities, 0, intensities.size(), blocks), log_blocks(intensities, w.begin, w.end, blocks));
}

}  // namespace ptm
