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

// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "oracles/oracles.hpp"
#include "ptm/circuits.hpp"
#include "ptm/dynamics.hpp"
#include "ptm/fractal.hpp"
#include "ptm/number_theory.hpp"
#include "ptm/ptm_seq.hpp"
#include "ptm/ptm_states.hpp"
#include "ptm/spin_ops.hpp"

using namespace ptm;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string &what) {
        if (!ok) {
            pass = false;
            if (!detail.empty()) {
                detail += "; ";
            }
            detail += what;
        }
    }
    void note(const std::string &what) {
        if (!detail.empty()) {
            detail += "; ";
        }
        detail += what;
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::pair<Complex, Complex> random_logical(std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    Complex a(g(rng), g(rng));
    Complex b(g(rng), g(rng));
    const double n = std::sqrt(std::norm(a) + std::norm(b));
    return {a / n, b / n};
}

Outcome sequence_identity() {
    Outcome o;
    const int order = 20;
    const auto start = Clock::now();
    const BitBlock block = ptm_block(order);
    std::uint64_t mismatches = 0;
    for (std::uint64_t n = 0; n < block.size(); ++n) {
        const int a = ptm_digit_sum(n);
        const int b = ptm_recursive(n);
        if (a != b || a != block[n]) {
            ++mismatches;
        }
    }
    const double elapsed = seconds_since(start);
    const std::string reference = oracle::thue_morse_substitution(order);
    for (std::uint64_t n = 0; n < block.size(); ++n) {
        if (reference[n] - '0' != block[n]) {
            ++mismatches;
        }
    }
    o.require(mismatches == 0, fmt::format("{} mismatches", mismatches));
    o.require(elapsed < 5.0, fmt::format("took {:.2f} s", elapsed));
    o.note(fmt::format("2^20 terms in {:.3f} s", elapsed));
    return o;
}

Outcome multigrade() {
    Outcome o;
    const int n3[] = {4, 14, 70};
    for (int k = 0; k < 3; ++k) {
        const PowerSums s = multigrade_sums(3, k);
        o.require(s.equal() && s.sum_evens == n3[k], fmt::format("N=3 k={}", k));
    }
    const PowerSums s3 = multigrade_sums(3, 3);
    o.require(s3.sum_evens == 368 && s3.sum_odds == 416, "N=3 k=3 values");
    const int n4[] = {8, 60, 620, 7200};
    for (int k = 0; k < 4; ++k) {
        const PowerSums s = multigrade_sums(4, k);
        o.require(s.equal() && s.sum_evens == n4[k], fmt::format("N=4 k={}", k));
    }
    for (int n = 1; n <= 12; ++n) {
        for (int k = 0; k < n; ++k) {
            o.require(multigrade_sums(n, k).equal(), fmt::format("N={} k={} unequal", n, k));
        }
        o.require(!multigrade_sums(n, n).equal(), fmt::format("N={} k=N equal", n));
    }
    o.note("N<=12 exhaustive");
    return o;
}

Outcome hadamard_relation() {
    Outcome o;
    double worst = 1.0;
    const double r = std::numbers::sqrt2 / 2;
    for (int n = 1; n <= 8; ++n) {
        const CVector zero = StateVector::basis(std::size_t{1} << n, 0).amplitudes();
        const double f = fidelity_up_to_phase(apply_hadamard_all(zero), encode_logical(r, r, n).amplitudes());
        worst = std::min(worst, f);
    }
    o.require(worst >= 1.0 - 1e-12, fmt::format("fidelity {:.3e}", worst));
    o.note(fmt::format("min fidelity 1 - {:.1e}", 1.0 - worst));
    return o;
}

Outcome operator_properties() {
    Outcome o;
    const auto start = Clock::now();
    int checks = 0;
    for (int n = 1; n <= 8; ++n) {
        for (Logical b : {Logical::zero, Logical::one}) {
            if (n < 2) {
                break;
            }
            o.require(verify_first_moment(n, b).pass, fmt::format("1.2.1 N={}", n));
            ++checks;
        }
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
            std::vector<int> sites;
            for (int k = 1; k <= n; ++k) {
                if (mask & (std::uint64_t{1} << (k - 1))) {
                    sites.push_back(k);
                }
            }
            o.require(verify_z_products(n, sites).pass, fmt::format("1.2.2 N={} mask={}", n, mask));
            ++checks;
        }
        for (Axis axis : {Axis::y, Axis::z}) {
            for (int j = 0; j <= n; ++j) {
                const PowerMomentReport r = verify_power_moments(n, axis, j);
                o.require(r.pass, fmt::format("1.2.3 N={} {} j={}", n, axis_name(axis), j));
                if (j == n) {
                    o.require(!(r.diag_equal && r.cross_zero), fmt::format("1.2.3 boundary missed N={}", n));
                }
                ++checks;
            }
        }
        for (int a = 1; a <= n; ++a) {
            for (int b = a; b <= n; ++b) {
                o.require(verify_xx_stabilizer(n, a, b).pass, fmt::format("1.2.4 N={} ({},{})", n, a, b));
                ++checks;
            }
        }
    }
    const double elapsed = seconds_since(start);
    o.require(elapsed < 120.0, fmt::format("took {:.1f} s", elapsed));
    o.note(fmt::format("{} checks in {:.2f} s", checks, elapsed));
    return o;
}

Outcome qudit_moments() {
    Outcome o;
    for (int n = 1; n <= 10; ++n) {
        const std::size_t d = std::size_t{1} << n;
        for (int j = 0; j <= n; ++j) {
            const JzMomentReport r = verify_jz_moments(d, j);
            o.require(r.pass, fmt::format("d={} j={}", d, j));
            o.require(r.diag_equal == (j < n), fmt::format("boundary d={} j={}", d, j));
        }
    }
    o.note("d = 2..1024");
    return o;
}

Outcome encoder() {
    Outcome o;
    std::mt19937_64 rng(11);
    double worst = 0.0;
    for (int n = 2; n <= 8; ++n) {
        const CircuitProgram enc = ptm_encoder(n);
        for (int trial = 0; trial < 20; ++trial) {
            auto [a, b] = random_logical(rng);
            CVector in = CVector::Zero(std::int64_t{1} << n);
            in[0] = a;
            in[std::int64_t{1} << (n - 1)] = b;
            const StateVector out = run(enc, StateVector(in), 0).output;
            worst = std::max(worst, (out.amplitudes() - encode_logical(a, b, n).amplitudes()).cwiseAbs().maxCoeff());
        }
    }
    o.require(worst <= 1e-12, fmt::format("deviation {:.2e}", worst));
    o.note(fmt::format("N=2..8, max deviation {:.1e}", worst));
    return o;
}

Outcome qec() {
    Outcome o;
    std::mt19937_64 rng(12);
    double worst = 1.0;
    for (int code = 0; code < 2; ++code) {
        std::vector<std::array<int, 2>> syndromes;
        for (int site : kErrorSites) {
            std::array<int, 2> seen{-1, -1};
            for (int trial = 0; trial < 10; ++trial) {
                auto [a, b] = random_logical(rng);
                const QecResult r = code == 0 ? shor3_run(a, b, site) : ptm_qec_run(a, b, site);
                worst = std::min(worst, r.fidelity);
                if (trial == 0) {
                    seen = r.syndrome;
                }
                o.require(r.syndrome == seen, "syndrome depends on the logical state");
            }
            for (const auto &s : syndromes) {
                o.require(s != seen, fmt::format("code {} syndrome collision", code));
            }
            syndromes.push_back(seen);
        }
    }
    o.require(worst >= 1.0 - 1e-10, fmt::format("fidelity {:.3e}", worst));
    o.note(fmt::format("min fidelity 1 - {:.1e}", 1.0 - worst));
    return o;
}

Outcome xx_phase() {
    Outcome o;
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const double theta = angle(rng);
        for (int n = 2; n <= 6; ++n) {
            for (int a = 1; a <= n; ++a) {
                for (int b = a + 1; b <= n; ++b) {
                    const XxPhaseReport r = xx_rotation_phase_check(n, a, b, theta);
                    o.require(r.pass, fmt::format("N={} ({},{}) theta={}", n, a, b, theta));
                    worst = std::max({worst, r.max_deviation[0], r.max_deviation[1]});
                }
            }
        }
    }
    o.note(fmt::format("max deviation {:.1e}", worst));
    return o;
}

Outcome lindblad() {
    Outcome o;
    const auto start = Clock::now();
    const double g = 1.0;
    auto evolve = [&](int n) {
        ChainConfig c = default_chain(n, g);
        c.t_final = 5.0 / g;
        c.save_every = 10;
        return lindblad_evolve(c, DensityMatrix::pure(ghz_state(n)));
    };
    const Trajectory even = evolve(4);
    double off_class = 0.0;
    for (const DensityMatrix &rho : even.states) {
        off_class = std::max(off_class, support_class(rho, 4).pop_odd);
    }
    o.require(off_class < 1e-9, fmt::format("N=4 off-class population {:.2e}", off_class));
    const Trajectory odd = evolve(3);
    const SupportReport r3 = support_class(odd.states.back(), 3);
    o.require(r3.pop_even > 1e-3 && r3.pop_odd > 1e-3, "N=3 does not populate both classes");
    double drift = 0.0;
    for (const Trajectory *t : {&even, &odd}) {
        const TrajectoryDiagnostics d = diagnose(*t);
        drift = std::max({drift, d.max_trace_drift, d.max_hermiticity_error});
    }
    const Trajectory five = evolve(5);
    drift = std::max({drift, diagnose(five).max_trace_drift, diagnose(five).max_hermiticity_error});
    o.require(drift < 1e-9, fmt::format("drift {:.2e}", drift));
    const double elapsed = seconds_since(start);
    o.require(elapsed < 60.0, fmt::format("took {:.1f} s", elapsed));
    o.note(fmt::format("N=4 off-class {:.1e}, N=3 E/O {:.3f}/{:.3f}, drift {:.1e}, {:.2f} s", off_class, r3.pop_even,
                       r3.pop_odd, drift, elapsed));
    return o;
}

Outcome initialization() {
    Outcome o;
    double worst = 0.0;
    for (int n = 1; n <= 6; ++n) {
        for (int sign : {1, -1}) {
            const PopulationTrace t = population_trace(n, sign, 11);
            const PtmLogical target = ptm_state(n, sign > 0 ? Logical::zero : Logical::one);
            for (std::size_t k = 0; k < target.state.dim(); ++k) {
                worst = std::max(worst, std::abs(t.populations.back()[k] - std::norm(target.state[k])));
            }
        }
    }
    o.require(worst <= 1e-10, fmt::format("deviation {:.2e}", worst));
    o.note(fmt::format("max deviation {:.1e}", worst));
    return o;
}

Outcome fractal() {
    Outcome o;
    const Complex alpha{std::numbers::sqrt2 / 2, 0.0};
    const Complex beta{-std::numbers::sqrt2 / 2, 0.0};
    double worst = 0.0;
    double parseval = 0.0;
    for (int n = 1; n <= 12; ++n) {
        const SpectrumSeries d = ftm_direct(n, alpha, beta);
        const SpectrumSeries c = ftm_closed_series(n, alpha, beta);
        for (std::size_t j = 0; j < d.intensities.size(); ++j) {
            worst = std::max(worst, std::abs(d.intensities[j] - c.intensities[j]));
        }
        parseval = std::max({parseval, std::abs(d.total_intensity() - 1.0), std::abs(c.total_intensity() - 1.0)});
    }
    o.require(worst < 1e-10, fmt::format("closed vs direct {:.2e}", worst));
    const auto start = Clock::now();
    const SpectrumSeries big = ftm_closed_series(20, alpha, beta);
    const double elapsed = seconds_since(start);
    o.require(elapsed < 10.0, fmt::format("N=20 took {:.2f} s", elapsed));
    parseval = std::max(parseval, std::abs(big.total_intensity() - 1.0));
    o.require(parseval < 1e-9, fmt::format("Parseval {:.2e}", parseval));
    const double zoom = 32.0;
    const std::pair<double, double> baselines[] = {
        {0.2, 0.9810748412720162}, {0.25, 0.8240969838931314}, {0.88, 0.9174481228569111}};
    std::string scores;
    for (auto [center, expected] : baselines) {
        const std::optional<double> s = self_similarity(big.intensities, center, zoom);
        o.require(s && std::abs(*s - expected) < 1e-9, fmt::format("self-similarity at {} changed", center));
        scores += fmt::format(" {}:{:.4f}", center, s.value_or(NAN));
    }
    o.note(fmt::format("closed vs direct {:.1e}, N=20 in {:.2f} s, Parseval {:.1e}, self-similarity{}", worst, elapsed,
                       parseval, scores));
    return o;
}

Outcome number_theory() {
    Outcome o;
    const double p3 = static_cast<double>(product_family(ProductFamily::p3, 1000000).value);
    o.require(std::abs(p3 - std::numbers::sqrt2 / 2) < 1e-4, fmt::format("p3 = {}", p3));
    const double p4 = static_cast<double>(product_family(ProductFamily::p4, 1000000).value);
    o.require(std::floor(p4 * 1e4) == 16281.0, fmt::format("p4 = {}", p4));
    const std::string tau = ptm_constant(64).decimal(5);
    o.require(tau == "0.41245", "constant prints " + tau);
    const ComplexEstimate z = zeta_ptm(Complex{2.0, 0.0}, 1000000);
    const double zeta_err = std::abs(z.value - std::numbers::pi * std::numbers::pi / 6.0);
    o.require(zeta_err <= z.error_bound, fmt::format("zeta(2) error {:.2e} > {:.2e}", zeta_err, z.error_bound));
    const FeilerResult f = feiler_autocorrelation(2.0, 0.0, 1000000);
    o.require(f.zeta_estimate == z.value, "feiler path differs from series");
    const ComplexEstimate zi = zeta_ptm(Complex{2.0, 1.0}, 100000);
    const FeilerResult fi = feiler_autocorrelation(2.0, 1.0, 100000);
    o.require(fi.zeta_estimate == zi.value, "feiler path differs at tau = 1");
    o.note(fmt::format("p3 {:.7f}, p4 {:.6f}, tau {}, zeta(2) error {:.1e} <= {:.1e}", p3, p4, tau, zeta_err,
                       z.error_bound));
    return o;
}

Outcome reported_notes() {
    Outcome o;
    std::string baker;
    for (int n = 2; n <= 8; ++n) {
        const BakerDiagnostic b = baker_eigen_quality(n);
        o.require(b.unitarity_error < 1e-10, fmt::format("baker N={} not unitary", n));
        baker += fmt::format(" {}:{:.3f}", n, b.overlap);
    }
    o.note("baker |<psi|B|psi>|" + baker);
    std::string classes;
    for (int n = 2; n <= 5; ++n) {
        ChainConfig c = default_chain(n);
        c.t_final = 5.0;
        c.save_every = 100;
        const Trajectory t = lindblad_evolve(c, DensityMatrix::pure(ghz_state(n)));
        classes += fmt::format(" N={}:{}", n, support_class_name(support_class(t.states.back(), n).cls));
    }
    o.note("GHZ final support" + classes);
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
        {1, sequence_identity}, {2, multigrade},     {3, hadamard_relation}, {4, operator_properties},
        {5, qudit_moments},     {6, encoder},        {7, qec},               {8, xx_phase},
        {9, lindblad},          {10, initialization}, {11, fractal},          {12, number_theory},
        {13, reported_notes},
    };
    int failures = 0;
    for (const auto &[id, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception &e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        failures += o.pass ? 0 : 1;
        std::cout << fmt::format("criterion {:2d}: {}  {}", id, o.pass ? "PASS" : "FAIL", o.detail) << std::endl;
    }
    std::cout << fmt::format("{} of {} criteria passed", criteria.size() - failures, criteria.size()) << std::endl;
    return failures == 0 ? 0 : 1;
}
