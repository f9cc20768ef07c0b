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

#include "ptm/cli.hpp"

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "output.hpp"
#include "ptm/circuits.hpp"
#include "ptm/dynamics.hpp"
#include "ptm/fractal.hpp"
#include "ptm/number_theory.hpp"
#include "ptm/ptm_seq.hpp"
#include "ptm/ptm_states.hpp"
#include "ptm/spin_ops.hpp"

#ifndef PTM_TOOL_VERSION
#define PTM_TOOL_VERSION "0.0.0"
#endif

namespace ptm::cli {

namespace fs = std::filesystem;

const char *tool_version() { return PTM_TOOL_VERSION; }

namespace {

/// Thrown by a subcommand for bad parameter values; reported as a validation failure.
class UsageValue : public std::invalid_argument {
 public:
    using std::invalid_argument::invalid_argument;
};

Logical parse_logical(const std::string &s) {
    if (s == "0") {
        return Logical::zero;
    }
    if (s == "1") {
        return Logical::one;
    }
    throw UsageValue(fmt::format("logical value must be 0 or 1, got '{}'", s));
}

std::vector<int> parse_int_list(const std::string &s) {
    std::vector<int> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::logic_error &) {
            used = 0;
        }
        if (item.empty() || used != item.size()) {
            throw UsageValue(fmt::format("'{}' is not a comma-separated list of integers", s));
        }
        out.push_back(v);
    }
    if (out.empty()) {
        throw UsageValue("empty site list");
    }
    return out;
}

std::string bigint_text(const BigInt &v) { return v.str(); }

std::string bigreal_text(const BigReal &v, int digits) {
    return v.str(digits, std::ios_base::fmtflags(0));
}

Json rational_json(const Rational &r) {
    return Json(boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str());
}

Json matrix2_json(const Eigen::Matrix2cd &m) {
    Json rows = Json::array();
    for (int r = 0; r < 2; ++r) {
        Json row = Json::array();
        for (int c = 0; c < 2; ++c) {
            row.push_back(complex_json(m(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

struct Context {
    std::ostream &out;
    std::uint64_t seed = 0;
};

// ---- seq / multigrade / state ------------------------------------------------

int run_seq(Context &ctx, int order, const std::string &format) {
    const BitBlock block = ptm_block(order);
    if (format == "json") {
        std::vector<int> bits(block.bits.begin(), block.bits.end());
        write_json(ctx.out, report("seq", Json{{"order", order}}, Json{{"bits", bits}}, std::nullopt));
        return kExitOk;
    }
    if (format != "csv") {
        throw UsageValue(fmt::format("unknown format '{}'", format));
    }
    ctx.out << "index,bit\n";
    for (std::size_t n = 0; n < block.size(); ++n) {
        ctx.out << n << ',' << static_cast<int>(block[n]) << '\n';
    }
    return kExitOk;
}

int run_multigrade(Context &ctx, int order, std::optional<int> max_k) {
    const int top = max_k.value_or(order);
    if (top < 0) {
        throw UsageValue("--max-k must be non-negative");
    }
    ctx.out << "k,sum_E,sum_O,equal\n";
    for (int k = 0; k <= top; ++k) {
        const PowerSums s = multigrade_sums(order, k);
        ctx.out << k << ',' << bigint_text(s.sum_evens) << ',' << bigint_text(s.sum_odds) << ','
                << (s.equal() ? "true" : "false") << '\n';
    }
    return kExitOk;
}

int run_state(Context &ctx, std::optional<int> n, const std::string &which, std::optional<std::size_t> qudit) {
    const Logical b = parse_logical(which);
    PtmLogical state;
    if (qudit) {
        state = ptm_qudit_state(*qudit, b);
    } else if (n) {
        state = ptm_state(*n, b);
    } else {
        throw UsageValue("state needs --n or --qudit");
    }
    ctx.out << "index,amplitude\n";
    for (std::size_t i = 0; i < state.state.dim(); ++i) {
        ctx.out << i << ',' << format_real(state.state[i].real()) << '\n';
    }
    return kExitOk;
}

// ---- verify --------------------------------------------------------------------

struct VerifyOptions {
    std::string property;
    std::optional<int> n;
    std::string which = "both";
    std::optional<std::string> sites;
    std::string axis = "z";
    std::optional<int> power;
    std::optional<int> site_a;
    std::optional<int> site_b;
    std::optional<std::size_t> d;
};

std::string canonical_property(const std::string &p) {
    if (p == "1.2.1" || p == "first-moment") {
        return "first-moment";
    }
    if (p == "1.2.2" || p == "z-products") {
        return "z-products";
    }
    if (p == "1.2.3" || p == "power-moments") {
        return "power-moments";
    }
    if (p == "1.2.4" || p == "xx-stabilizer") {
        return "xx-stabilizer";
    }
    if (p == "sx" || p == "jz" || p == "memory") {
        return p;
    }
    throw UsageValue(fmt::format("unknown property '{}'", p));
}

int need_n(const VerifyOptions &o) {
    if (!o.n) {
        throw UsageValue("this property needs --n");
    }
    return *o.n;
}

std::vector<Logical> selected_logicals(const std::string &which) {
    if (which == "both") {
        return {Logical::zero, Logical::one};
    }
    return {parse_logical(which)};
}

Json z_products_json(const ZProductReport &r) {
    return Json{{"sites", r.sites},
                {"effective_sites", r.effective_sites},
                {"raw_zero", bigint_text(r.raw_zero)},
                {"raw_one", bigint_text(r.raw_one)},
                {"value_zero", r.value_zero},
                {"value_one", r.value_one},
                {"offdiag", r.offdiag},
                {"diag_equal", r.diag_equal},
                {"offdiag_zero", r.offdiag_zero},
                {"claim", claim_name(r.claim)},
                {"pass", r.pass}};
}

Json power_json(const PowerMomentReport &r) {
    return Json{{"power", r.power},
                {"diag_zero", rational_json(r.diag_zero)},
                {"diag_one", rational_json(r.diag_one)},
                {"cross_re", rational_json(r.cross_re)},
                {"cross_im", rational_json(r.cross_im)},
                {"diag_equal", r.diag_equal},
                {"cross_zero", r.cross_zero},
                {"claim", claim_name(r.claim)},
                {"pass", r.pass}};
}

Json jz_json(const JzMomentReport &r) {
    return Json{{"power", r.power},
                {"diag_zero", rational_json(r.diag_zero)},
                {"diag_one", rational_json(r.diag_one)},
                {"cross", rational_json(r.cross)},
                {"diag_equal", r.diag_equal},
                {"claim", claim_name(r.claim)},
                {"pass", r.pass}};
}

int run_verify(Context &ctx, const VerifyOptions &o) {
    const std::string property = canonical_property(o.property);
    Json params{{"property", property}};
    if (o.n) {
        params["n"] = *o.n;
    }
    Json values;
    bool pass = true;
    std::optional<double> bound;

    if (property == "first-moment") {
        const int n = need_n(o);
        params["which"] = o.which;
        bound = 1e-12;
        for (Logical b : selected_logicals(o.which)) {
            const FirstMomentReport r = verify_first_moment(n, b);
            values[std::string(1, logical_name(b))] = Json{{"x", complex_json(r.values[0])},
                                                           {"y", complex_json(r.values[1])},
                                                           {"z", complex_json(r.values[2])},
                                                           {"pass", r.pass}};
            pass = pass && r.pass;
        }
    } else if (property == "z-products") {
        const int n = need_n(o);
        bound = 1e-12;
        if (o.sites) {
            params["sites"] = *o.sites;
            const ZProductReport r = verify_z_products(n, parse_int_list(*o.sites));
            values = z_products_json(r);
            pass = r.pass;
        } else {
            // Every nonempty subset of {1..N}.
            if (n < 1 || n > 20) {
                throw UsageValue("exhaustive z-products needs 1 <= N <= 20; pass --sites for a single subset");
            }
            params["sites"] = "all";
            std::uint64_t checked = 0;
            Json failures = Json::array();
            for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
                std::vector<int> sites;
                for (int k = 1; k <= n; ++k) {
                    if (mask & (std::uint64_t{1} << (k - 1))) {
                        sites.push_back(k);
                    }
                }
                const ZProductReport r = verify_z_products(n, sites);
                ++checked;
                if (!r.pass) {
                    failures.push_back(z_products_json(r));
                }
            }
            values["subsets_checked"] = checked;
            values["full_set"] = z_products_json(verify_z_products(n, [&] {
                std::vector<int> all(static_cast<std::size_t>(n));
                for (int k = 1; k <= n; ++k) {
                    all[static_cast<std::size_t>(k - 1)] = k;
                }
                return all;
            }()));
            pass = failures.empty();
            values["failures"] = std::move(failures);
        }
    } else if (property == "power-moments") {
        const int n = need_n(o);
        if (o.axis.size() != 1) {
            throw UsageValue("--axis must be y or z");
        }
        const Axis axis = parse_axis(o.axis[0]);
        params["axis"] = o.axis;
        bound = 1e-10;
        if (o.power) {
            params["power"] = *o.power;
            const PowerMomentReport r = verify_power_moments(n, axis, *o.power);
            values = power_json(r);
            pass = r.pass;
        } else {
            Json rows = Json::array();
            std::optional<int> first_failure;
            for (int j = 0; j <= n; ++j) {
                const PowerMomentReport r = verify_power_moments(n, axis, j);
                if (!first_failure && !(r.diag_equal && r.cross_zero)) {
                    first_failure = j;
                }
                pass = pass && r.pass;
                rows.push_back(power_json(r));
            }
            values["moments"] = std::move(rows);
            values["first_failing_power"] = first_failure ? Json(*first_failure) : Json(nullptr);
        }
    } else if (property == "xx-stabilizer") {
        const int n = need_n(o);
        bound = 1e-12;
        std::vector<std::pair<int, int>> pairs;
        if (o.site_a || o.site_b) {
            if (!o.site_a || !o.site_b) {
                throw UsageValue("give both --k and --j, or neither");
            }
            pairs.emplace_back(*o.site_a, *o.site_b);
            params["k"] = *o.site_a;
            params["j"] = *o.site_b;
        } else {
            for (int a = 1; a <= n; ++a) {
                for (int b = a; b <= n; ++b) {
                    pairs.emplace_back(a, b);
                }
            }
        }
        Json rows = Json::array();
        for (auto [a, b] : pairs) {
            const XxStabilizerReport r = verify_xx_stabilizer(n, a, b);
            rows.push_back(Json{{"k", a},
                                {"j", b},
                                {"max_deviation", r.max_deviation},
                                {"fidelity", r.fidelity},
                                {"pass", r.pass}});
            pass = pass && r.pass;
        }
        values["pairs"] = std::move(rows);
    } else if (property == "sx") {
        const int n = need_n(o);
        bound = 1e-12;
        const SxReciprocityReport r = sx_reciprocity(n);
        values = Json{{"swap_residual", r.swap_residual},
                      {"eigen_residual", r.eigen_residual},
                      {"eigenvalue", r.eigenvalue}};
        pass = r.pass;
    } else if (property == "memory") {
        const int n = need_n(o);
        bound = 1e-12;
        const MemoryForms r = memory_matrix_forms(n);
        values = Json{{"S_x", matrix2_json(r.blocks[0])},
                      {"S_y", matrix2_json(r.blocks[1])},
                      {"S_z", matrix2_json(r.blocks[2])}};
        pass = r.pass;
    } else {
        std::size_t d = 0;
        if (o.d) {
            d = *o.d;
        } else if (o.n) {
            if (*o.n < 1 || *o.n > 30) {
                throw UsageValue("--n must be in 1..30 for jz");
            }
            d = std::size_t{1} << *o.n;
        } else {
            throw UsageValue("jz needs --d or --n");
        }
        params["d"] = d;
        if (o.power) {
            params["power"] = *o.power;
            const JzMomentReport r = verify_jz_moments(d, *o.power);
            values = jz_json(r);
            pass = r.pass;
        } else {
            const int n = qubits_for_dim(d);
            Json rows = Json::array();
            std::optional<int> first_failure;
            for (int j = 0; j <= n; ++j) {
                const JzMomentReport r = verify_jz_moments(d, j);
                if (!first_failure && !r.diag_equal) {
                    first_failure = j;
                }
                pass = pass && r.pass;
                rows.push_back(jz_json(r));
            }
            values["moments"] = std::move(rows);
            values["first_failing_power"] = first_failure ? Json(*first_failure) : Json(nullptr);
        }
    }
    Json doc = report("verify", std::move(params), std::move(values), pass, bound);
    write_json(ctx.out, doc);
    return pass ? kExitOk : kExitVerifyFailed;
}

// ---- circuit / qec ---------------------------------------------------------------

Json gate_json(const Gate &gate) {
    Json g{{"gate", gate_name(gate)}};
    std::visit(
        [&](const auto &v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, HGate> || std::is_same_v<T, PauliGate>) {
                g["qubits"] = {v.qubit};
            } else if constexpr (std::is_same_v<T, CnotGate> || std::is_same_v<T, CzGate>) {
                g["qubits"] = {v.control, v.target};
            } else if constexpr (std::is_same_v<T, UnitaryGate>) {
                g["qubits"] = v.qubits;
            } else if constexpr (std::is_same_v<T, MeasureGate>) {
                g["qubits"] = {v.qubit};
                g["cbit"] = v.cbit;
            } else if constexpr (std::is_same_v<T, CorrectionGate>) {
                g["cbits"] = v.cbits;
                g["axis"] = std::string(1, axis_name(v.axis));
            }
        },
        gate);
    return g;
}

Json program_json(const CircuitProgram &p) {
    Json gates = Json::array();
    for (const Gate &g : p.gates) {
        gates.push_back(gate_json(g));
    }
    return Json{{"register_qubits", p.register_qubits},
                {"ancilla_qubits", p.ancilla_qubits},
                {"classical_bits", p.classical_bits},
                {"gates", std::move(gates)}};
}

int run_circuit(Context &ctx, const std::string &kind, std::optional<int> n, int error_site) {
    Json params{{"kind", kind}};
    auto need = [&]() {
        if (!n) {
            throw UsageValue(fmt::format("circuit {} needs --n", kind));
        }
        params["n"] = *n;
        return *n;
    };
    if (kind == "encoder") {
        write_json(ctx.out, report("circuit", params, program_json(ptm_encoder(need())), std::nullopt));
    } else if (kind == "shor3" || kind == "ptm3") {
        params["error_site"] = error_site;
        const CircuitProgram p = kind == "shor3" ? shor3_program(error_site) : ptm_qec_program(error_site);
        write_json(ctx.out, report("circuit", params, program_json(p), std::nullopt));
    } else if (kind == "qft") {
        const int q = need();
        const CMatrix f = qft(q).materialize();
        write_json(ctx.out, report("circuit", params, Json{{"dim", f.rows()}, {"unitarity_error", unitarity_error(f)}},
                                   unitarity_error(f) <= 1e-12, 1e-12));
    } else if (kind == "baker") {
        const BakerDiagnostic d = baker_eigen_quality(need());
        write_json(ctx.out, report("circuit", params,
                                   Json{{"unitarity_error", d.unitarity_error},
                                        {"eigen_overlap", d.overlap},
                                        {"eigen_residual", d.residual}},
                                   std::nullopt));
    } else {
        throw UsageValue(fmt::format("unknown circuit '{}'; expected encoder, shor3, ptm3, qft or baker", kind));
    }
    return kExitOk;
}

int run_qec(Context &ctx, const std::string &code, const std::string &alpha_text, const std::string &beta_text,
            int error_site) {
    const Complex alpha = parse_complex(alpha_text);
    const Complex beta = parse_complex(beta_text);
    QecResult r;
    if (code == "shor3") {
        r = shor3_run(alpha, beta, error_site, ctx.seed);
    } else if (code == "ptm3") {
        r = ptm_qec_run(alpha, beta, error_site, ctx.seed);
    } else {
        throw UsageValue(fmt::format("unknown code '{}'; expected shor3 or ptm3", code));
    }
    Json params{{"code", code},
                {"alpha", complex_json(alpha)},
                {"beta", complex_json(beta)},
                {"error_site", error_site},
                {"seed", ctx.seed}};
    Json values{{"syndrome", {r.syndrome[0], r.syndrome[1]}},
                {"fidelity", r.fidelity},
                {"measurement_probabilities", r.measurement_probabilities}};
    write_json(ctx.out, report("qec", std::move(params), std::move(values), r.fidelity >= 1.0 - 1e-10, 1e-10));
    return kExitOk;
}

// ---- evolve / initptm ---------------------------------------------------------------

struct EvolveOptions {
    int n = 0;
    double g = 1.0;
    std::optional<double> gamma;
    double t_final = 5.0;
    double dt = 0.01;
    std::string init = "ghz";
    int save_every = 10;
    double threshold = 1e-10;
    std::string out;
};

int run_evolve(Context &ctx, const EvolveOptions &o) {
    ChainConfig config = default_chain(o.n, o.g);
    if (o.gamma) {
        std::fill(config.gamma.begin(), config.gamma.end(), *o.gamma);
    }
    config.dt = o.dt;
    config.t_final = o.t_final;
    config.save_every = o.save_every;
    config.validate();
    if (!(o.threshold >= 0.0)) {
        throw UsageValue("--threshold must be non-negative");
    }
    StateVector psi0;
    if (o.init == "ghz") {
        psi0 = ghz_state(o.n);
    } else if (o.init == "ptm0" || o.init == "ptm1") {
        psi0 = ptm_state(o.n, o.init == "ptm0" ? Logical::zero : Logical::one).state;
    } else {
        throw UsageValue(fmt::format("unknown initial state '{}'; expected ghz, ptm0 or ptm1", o.init));
    }
    const Trajectory traj = lindblad_evolve(config, DensityMatrix::pure(psi0));
    const fs::path path(o.out);
    {
        std::ofstream csv = open_output(path);
        csv << "t,i,k,re,im\n";
        for (std::size_t s = 0; s < traj.states.size(); ++s) {
            const DensityMatrix &rho = traj.states[s];
            for (std::size_t i = 0; i < rho.dim(); ++i) {
                for (std::size_t k = 0; k < rho.dim(); ++k) {
                    const Complex v = rho(i, k);
                    if (std::abs(v) > o.threshold) {
                        csv << format_real(traj.times[s]) << ',' << i << ',' << k << ',' << format_real(v.real())
                            << ',' << format_real(v.imag()) << '\n';
                    }
                }
            }
        }
    }
    Json params{{"n", o.n},
                {"g", o.g},
                {"gamma", config.gamma[0]},
                {"tfinal", o.t_final},
                {"dt", o.dt},
                {"init", o.init},
                {"save_every", o.save_every},
                {"threshold", o.threshold},
                {"out", o.out}};
    const fs::path manifest = write_manifest(path, "evolve", params, ctx.seed, {path});
    const SupportReport support = support_class(traj.states.back(), o.n);
    const TrajectoryDiagnostics diag = diagnose(traj);
    const bool cptp = diag.max_trace_drift < 1e-9 && diag.max_hermiticity_error < 1e-9 && diag.min_eigenvalue > -1e-8;
    Json values{{"steps", traj.steps},
                {"dt", traj.dt},
                {"max_local_error", traj.max_local_error},
                {"final_support", support_class_name(support.cls)},
                {"pop_even", support.pop_even},
                {"pop_odd", support.pop_odd},
                {"off_class_population", support.off_class_population},
                {"max_cross_coherence", support.max_cross_coherence},
                {"max_trace_drift", diag.max_trace_drift},
                {"max_hermiticity_error", diag.max_hermiticity_error},
                {"min_eigenvalue", diag.min_eigenvalue},
                {"data", o.out},
                {"manifest", manifest.string()}};
    write_json(ctx.out, report("evolve", std::move(params), std::move(values), cptp, 1e-9));
    return kExitOk;
}

int run_initptm(Context &ctx, int n, const std::string &sign_text, int steps, const std::string &out) {
    int sign = 0;
    if (sign_text == "+" || sign_text == "1" || sign_text == "+1") {
        sign = 1;
    } else if (sign_text == "-" || sign_text == "-1") {
        sign = -1;
    } else {
        throw UsageValue("--sign must be + or -");
    }
    const PopulationTrace trace = population_trace(n, sign, steps);
    const fs::path path(out);
    {
        std::ofstream csv = open_output(path);
        csv << "t,index,population\n";
        for (std::size_t m = 0; m < trace.times.size(); ++m) {
            for (std::size_t k = 0; k < trace.populations[m].size(); ++k) {
                csv << format_real(trace.times[m]) << ',' << k << ',' << format_real(trace.populations[m][k]) << '\n';
            }
        }
    }
    Json params{{"n", n}, {"sign", sign > 0 ? "+" : "-"}, {"steps", steps}, {"out", out}};
    const fs::path manifest = write_manifest(path, "initptm", params, ctx.seed, {path});
    const PtmLogical target = ptm_state(n, sign > 0 ? Logical::zero : Logical::one);
    double deviation = 0.0;
    for (std::size_t k = 0; k < target.state.dim(); ++k) {
        deviation = std::max(deviation, std::abs(trace.populations.back()[k] - std::norm(target.state[k])));
    }
    Json values{{"final_max_deviation", deviation}, {"data", out}, {"manifest", manifest.string()}};
    write_json(ctx.out, report("initptm", std::move(params), std::move(values), deviation <= 1e-10, 1e-10));
    return kExitOk;
}

// ---- fractal -----------------------------------------------------------------------

struct FractalOptions {
    int n = 20;
    std::optional<std::string> alpha;
    std::optional<std::string> beta;
    std::string method = "closed";
    std::vector<std::string> zooms;
    std::string out;
};

void write_spectrum_rows(std::ostream &csv, const std::vector<double> &intensities, std::size_t begin,
                         std::size_t end, int n) {
    csv << "j,x,intensity,log10_intensity\n";
    for (std::size_t j = begin; j < end; ++j) {
        const double v = intensities[j];
        csv << j << ',' << format_real(std::ldexp(static_cast<double>(j), -n)) << ',' << format_real(v) << ','
            << format_real(std::log10(std::max(v, kIntensityFloor))) << '\n';
    }
}

int run_fractal(Context &ctx, const FractalOptions &o) {
    const Complex alpha = o.alpha ? parse_complex(*o.alpha) : Complex(std::numbers::sqrt2 / 2.0);
    const Complex beta = o.beta ? parse_complex(*o.beta) : Complex(-std::numbers::sqrt2 / 2.0);
    SpectrumSeries series;
    if (o.method == "closed") {
        series = ftm_closed_series(o.n, alpha, beta);
    } else if (o.method == "direct") {
        series = ftm_direct(o.n, alpha, beta);
    } else {
        throw UsageValue(fmt::format("unknown method '{}'; expected closed or direct", o.method));
    }
    struct Zoom {
        double center;
        double width;
    };
    std::vector<Zoom> zooms;
    for (const std::string &z : o.zooms) {
        const Complex cw = parse_complex(z.find(',') == std::string::npos ? z + ",0.03125" : z);
        if (!(cw.imag() > 0.0 && cw.imag() <= 1.0)) {
            throw UsageValue(fmt::format("zoom width must be in (0, 1], got '{}'", z));
        }
        zooms.push_back({cw.real(), cw.imag()});
    }
    const fs::path path(o.out);
    std::vector<fs::path> outputs{path};
    {
        std::ofstream csv = open_output(path);
        write_spectrum_rows(csv, series.intensities, 0, series.intensities.size(), o.n);
    }
    Json windows = Json::array();
    for (const Zoom &z : zooms) {
        const double zoom = 1.0 / z.width;
        const ZoomWindow w = zoom_window(series.intensities.size(), z.center, zoom);
        fs::path wpath = path;
        wpath.replace_extension();
        wpath += fmt::format("_zoom_{}_{}.csv", z.center, z.width);
        {
            std::ofstream csv = open_output(wpath);
            write_spectrum_rows(csv, series.intensities, w.begin, w.end, o.n);
        }
        outputs.push_back(wpath);
        const std::optional<double> score = self_similarity(series.intensities, z.center, zoom);
        windows.push_back(Json{{"center", z.center},
                               {"width", z.width},
                               {"begin", w.begin},
                               {"end", w.end},
                               {"self_similarity", score ? Json(*score) : Json(nullptr)},
                               {"path", wpath.string()}});
    }
    Json zoom_params = Json::array();
    for (const Zoom &z : zooms) {
        zoom_params.push_back(Json{{"center", z.center}, {"width", z.width}});
    }
    Json params{{"n", o.n},
                {"alpha", complex_json(alpha)},
                {"beta", complex_json(beta)},
                {"method", o.method},
                {"zoom", std::move(zoom_params)},
                {"out", o.out}};
    const fs::path manifest = write_manifest(path, "fractal", params, ctx.seed, outputs);
    const double total = series.total_intensity();
    Json values{{"total_intensity", total},
                {"f0_intensity", series.intensities[0]},
                {"windows", std::move(windows)},
                {"data", o.out},
                {"manifest", manifest.string()}};
    write_json(ctx.out, report("fractal", std::move(params), std::move(values), std::abs(total - 1.0) < 1e-9, 1e-9));
    return kExitOk;
}

// ---- number theory -----------------------------------------------------------------

int run_zeta(Context &ctx, double sigma, double tau, std::uint64_t terms) {
    const Complex s(sigma, tau);
    const DirichletPair pair = dirichlet_pair(s, terms);
    const ComplexEstimate z = zeta_ptm(s, terms);
    const FeilerResult f = feiler_autocorrelation(sigma, tau, terms);
    const bool same = f.zeta_estimate.real() == z.value.real() && f.zeta_estimate.imag() == z.value.imag();
    Json params{{"sigma", sigma}, {"tau", tau}, {"terms", terms}};
    Json values{{"value", complex_json(z.value)},
                {"terms", terms},
                {"dirichlet_a", complex_json(pair.a.value)},
                {"dirichlet_b", complex_json(pair.b.value)},
                {"feiler",
                 Json{{"psi1_corr", complex_json(f.psi1_corr)},
                      {"psi2_corr", complex_json(f.psi2_corr)},
                      {"zeta_estimate", complex_json(f.zeta_estimate)},
                      {"normalization", f.normalization},
                      {"superposition_corr", complex_json(f.superposition_corr)}}},
                {"feiler_matches_series", same}};
    write_json(ctx.out, report("zeta", std::move(params), std::move(values), same, z.error_bound));
    return kExitOk;
}

int run_products(Context &ctx, const std::string &which_text, std::uint64_t terms, int digits) {
    const auto which = parse_product_family(which_text);
    if (!which) {
        throw UsageValue(fmt::format("unknown product '{}'; expected p1, p2, p3 or p4", which_text));
    }
    if (digits < 1 || digits > 38) {
        throw UsageValue("--digits must be in 1..38");
    }
    const RealEstimate est = product_family(*which, terms);
    const auto limit = product_limit(*which);
    Json values{{"value", bigreal_text(est.value, digits)},
                {"value_double", static_cast<double>(est.value)},
                {"terms", terms},
                {"limit", limit ? Json(bigreal_text(*limit, digits)) : Json(nullptr)},
                {"distance_to_limit",
                 limit ? Json(static_cast<double>(boost::multiprecision::abs(est.value - *limit))) : Json(nullptr)}};
    write_json(ctx.out, report("products", Json{{"which", which_text}, {"terms", terms}}, std::move(values),
                               std::nullopt, est.error_bound));
    return kExitOk;
}

int run_constant(Context &ctx, int bits, int digits) {
    if (digits < 0 || digits > 1300) {
        throw UsageValue("--digits must be in 0..1300");
    }
    const ConstantEstimate c = ptm_constant(bits);
    Json values{{"value", c.decimal(digits)}, {"terms", bits}, {"numerator_hex", [&] {
                                                                    std::stringstream s;
                                                                    s << std::hex << c.numerator;
                                                                    return s.str();
                                                                }()}};
    write_json(ctx.out, report("constant", Json{{"bits", bits}, {"digits", digits}}, std::move(values), std::nullopt,
                               static_cast<double>(c.error_bound)));
    return kExitOk;
}

void add_seed(CLI::App *sub, std::uint64_t &seed) {
    sub->add_option("--seed", seed, "Random seed (default 0)");
}

}  // namespace

int dispatch(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Prouhet-Thue-Morse sequence, state and dynamics toolkit", "ptm"};
    app.set_version_flag("--version", std::string(tool_version()));
    app.require_subcommand(1);

    Context ctx{out};
    std::function<int()> action;

    auto *seq = app.add_subcommand("seq", "Emit T_N as index,bit rows");
    int seq_order = 0;
    std::string seq_format = "csv";
    seq->add_option("--order", seq_order, "Block order N (2^N terms)")->required();
    seq->add_option("--format", seq_format, "csv or json");
    add_seed(seq, ctx.seed);
    seq->callback([&] { action = [&] { return run_seq(ctx, seq_order, seq_format); }; });

    auto *mg = app.add_subcommand("multigrade", "Power sums over E(N) and O(N)");
    int mg_order = 0;
    std::optional<int> mg_max_k;
    mg->add_option("--order", mg_order, "Order N")->required();
    mg->add_option("--max-k", mg_max_k, "Largest power (default N)");
    add_seed(mg, ctx.seed);
    mg->callback([&] { action = [&] { return run_multigrade(ctx, mg_order, mg_max_k); }; });

    auto *st = app.add_subcommand("state", "Amplitudes of a PTM logical state");
    std::optional<int> st_n;
    std::string st_which = "0";
    std::optional<std::size_t> st_qudit;
    st->add_option("--n", st_n, "Number of qubits");
    st->add_option("--which", st_which, "Logical value 0 or 1");
    st->add_option("--qudit", st_qudit, "Qudit dimension d (power of two)");
    add_seed(st, ctx.seed);
    st->callback([&] { action = [&] { return run_state(ctx, st_n, st_which, st_qudit); }; });

    auto *vf = app.add_subcommand("verify", "Check an operator property of the PTM code");
    VerifyOptions vo;
    vf->add_option("--property", vo.property,
                   "1.2.1|first-moment, 1.2.2|z-products, 1.2.3|power-moments, 1.2.4|xx-stabilizer, sx, jz, memory")
        ->required();
    vf->add_option("--n", vo.n, "Number of qubits");
    vf->add_option("--which", vo.which, "0, 1 or both (first-moment)");
    vf->add_option("--sites", vo.sites, "Comma-separated sites (z-products; default all subsets)");
    vf->add_option("--axis", vo.axis, "y or z (power-moments)");
    vf->add_option("--power", vo.power, "Power j (power-moments, jz; default 0..N)");
    vf->add_option("--k", vo.site_a, "First site (xx-stabilizer)");
    vf->add_option("--j", vo.site_b, "Second site (xx-stabilizer)");
    vf->add_option("--d", vo.d, "Qudit dimension (jz)");
    add_seed(vf, ctx.seed);
    vf->callback([&] { action = [&] { return run_verify(ctx, vo); }; });

    auto *ci = app.add_subcommand("circuit", "Describe a circuit: encoder, shor3, ptm3, qft or baker");
    std::string ci_kind;
    std::optional<int> ci_n;
    int ci_error = 0;
    ci->add_option("kind", ci_kind, "Circuit name")->required();
    ci->add_option("--n", ci_n, "Number of qubits");
    ci->add_option("--error-site", ci_error, "Phase-flip site 0..3 (shor3, ptm3)");
    add_seed(ci, ctx.seed);
    ci->callback([&] { action = [&] { return run_circuit(ctx, ci_kind, ci_n, ci_error); }; });

    auto *qe = app.add_subcommand("qec", "Run a three-qubit phase-flip correction round");
    std::string qe_code;
    std::string qe_alpha;
    std::string qe_beta;
    int qe_error = 0;
    qe->add_option("--code", qe_code, "shor3 or ptm3")->required();
    qe->add_option("--alpha", qe_alpha, "Logical amplitude alpha")->required();
    qe->add_option("--beta", qe_beta, "Logical amplitude beta")->required();
    qe->add_option("--error-site", qe_error, "Phase-flip site 0..3 (0 = none)");
    add_seed(qe, ctx.seed);
    qe->callback([&] { action = [&] { return run_qec(ctx, qe_code, qe_alpha, qe_beta, qe_error); }; });

    auto *ev = app.add_subcommand("evolve", "Dephasing X-X chain trajectory");
    EvolveOptions eo;
    ev->add_option("--n", eo.n, "Number of qubits")->required();
    ev->add_option("--g", eo.g, "Coupling g (default 1)");
    ev->add_option("--gamma", eo.gamma, "Dephasing rate per site (default 0.1 g)");
    ev->add_option("--tfinal", eo.t_final, "Final time (default 5)");
    ev->add_option("--dt", eo.dt, "Integrator step (default 0.01)");
    ev->add_option("--init", eo.init, "ghz, ptm0 or ptm1");
    ev->add_option("--save-every", eo.save_every, "Write every k-th step (default 10)");
    ev->add_option("--threshold", eo.threshold, "Smallest |rho_ik| written (default 1e-10)");
    ev->add_option("--out", eo.out, "CSV output path")->required();
    add_seed(ev, ctx.seed);
    ev->callback([&] { action = [&] { return run_evolve(ctx, eo); }; });

    auto *ip = app.add_subcommand("initptm", "Populations under the Hadamard-generating Hamiltonian");
    int ip_n = 0;
    std::string ip_sign = "+";
    int ip_steps = 101;
    std::string ip_out;
    ip->add_option("--n", ip_n, "Number of qubits")->required();
    ip->add_option("--sign", ip_sign, "+ or -");
    ip->add_option("--steps", ip_steps, "Time points in [0, 1] (default 101)");
    ip->add_option("--out", ip_out, "CSV output path")->required();
    add_seed(ip, ctx.seed);
    ip->callback([&] { action = [&] { return run_initptm(ctx, ip_n, ip_sign, ip_steps, ip_out); }; });

    auto *fr = app.add_subcommand("fractal", "QFT spectrum of a PTM logical state");
    FractalOptions fo;
    fr->add_option("--n", fo.n, "Number of qubits (default 20)");
    fr->add_option("--alpha", fo.alpha, "Amplitude of |0_TM> (default 1/sqrt2)");
    fr->add_option("--beta", fo.beta, "Amplitude of |1_TM> (default -1/sqrt2)");
    fr->add_option("--method", fo.method, "closed or direct");
    fr->add_option("--zoom", fo.zooms, "Window center,width as fractions of the range; repeatable");
    fr->add_option("--out", fo.out, "CSV output path")->required();
    add_seed(fr, ctx.seed);
    fr->callback([&] { action = [&] { return run_fractal(ctx, fo); }; });

    auto *ze = app.add_subcommand("zeta", "PTM-weighted Dirichlet series for zeta(sigma + i tau)");
    double ze_sigma = 2.0;
    double ze_tau = 0.0;
    std::uint64_t ze_terms = 1000000;
    ze->add_option("--sigma", ze_sigma, "Real part of s (> 1)");
    ze->add_option("--tau", ze_tau, "Imaginary part of s");
    ze->add_option("--terms", ze_terms, "Number of terms M");
    add_seed(ze, ctx.seed);
    ze->callback([&] { action = [&] { return run_zeta(ctx, ze_sigma, ze_tau, ze_terms); }; });

    auto *pr = app.add_subcommand("products", "PTM-weighted infinite products");
    std::string pr_which;
    std::uint64_t pr_terms = 1000000;
    int pr_digits = 30;
    pr->add_option("--which", pr_which, "p1, p2, p3 or p4")->required();
    pr->add_option("--terms", pr_terms, "Number of factors M");
    pr->add_option("--digits", pr_digits, "Significant digits printed");
    add_seed(pr, ctx.seed);
    pr->callback([&] { action = [&] { return run_products(ctx, pr_which, pr_terms, pr_digits); }; });

    auto *co = app.add_subcommand("constant", "The PTM constant to B bits");
    int co_bits = 64;
    int co_digits = 5;
    co->add_option("--bits", co_bits, "Binary digits B (<= 4096)");
    co->add_option("--digits", co_digits, "Decimal digits printed (truncated)");
    add_seed(co, ctx.seed);
    co->callback([&] { action = [&] { return run_constant(ctx, co_bits, co_digits); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        return action();
    } catch (const std::exception &e) {
        const char *kind = dynamic_cast<const CapacityError *>(&e)          ? "capacity"
                           : dynamic_cast<const DimensionError *>(&e)       ? "dimension"
                           : dynamic_cast<const StepSizeError *>(&e)        ? "step_size"
                           : dynamic_cast<const std::invalid_argument *>(&e) ? "invalid_argument"
                           : dynamic_cast<const std::out_of_range *>(&e)    ? "out_of_range"
                                                                            : "runtime";
        Json doc{{"error", Json{{"kind", kind}, {"message", e.what()}}}};
        err << doc.dump() << '\n';
        return kExitValidation;
    }
}

}  // namespace ptm::cli
