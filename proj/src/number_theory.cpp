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

#include "ptm/number_theory.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <fmt/format.h>

namespace ptm {

namespace mp = boost::multiprecision;

std::string_view product_name(ProductFamily which) {
    switch (which) {
        case ProductFamily::p1:
            return "p1";
        case ProductFamily::p2:
            return "p2";
        case ProductFamily::p3:
            return "p3";
        case ProductFamily::p4:
            return "p4";
    }
    return "?";
}

std::optional<ProductFamily> parse_product_family(std::string_view name) {
    for (ProductFamily f : {ProductFamily::p1, ProductFamily::p2, ProductFamily::p3, ProductFamily::p4}) {
        if (product_name(f) == name) {
            return f;
        }
    }
    return std::nullopt;
}

std::optional<BigReal> product_limit(ProductFamily which) {
    const BigReal root2 = mp::sqrt(BigReal(2));
    const BigReal pi = boost::math::constants::pi<BigReal>();
    switch (which) {
        case ProductFamily::p1:
            return root2 / pi;
        case ProductFamily::p2:
            return 2 * root2 / pi;
        case ProductFamily::p3:
            return root2 / 2;
        case ProductFamily::p4:
            return std::nullopt;
    }
    return std::nullopt;
}

RealEstimate product_family(ProductFamily which, std::uint64_t terms) {
    if (terms < 1) {
        throw std::invalid_argument("product_family: needs at least one factor");
    }
    if (terms > (std::uint64_t{1} << 40)) {
        throw CapacityError("product_family: too many factors");
    }
    BigReal product = 1;
    BigReal factor = 1;
    const std::uint64_t first = which == ProductFamily::p4 ? 1 : 0;
    for (std::uint64_t n = first; n < first + terms; ++n) {
        const bool t = ptm_digit_sum(n) != 0;
        const BigReal odd(2 * n + 1);
        const BigReal even(2 * n + 2);
        switch (which) {
            case ProductFamily::p1:
                factor = t ? BigReal(2 * n + 3) / even : odd * odd * BigReal(2 * n + 3) / (even * even * even);
                break;
            case ProductFamily::p2:
                factor = t ? odd * odd * BigReal(2 * n + 3) / (even * even * even) : BigReal(2 * n + 3) / even;
                break;
            case ProductFamily::p3:
                factor = t ? even / odd : odd / even;
                break;
            case ProductFamily::p4:
                factor = t ? odd / BigReal(2 * n) : BigReal(2 * n) / odd;
                break;
        }
        product *= factor;
    }
    RealEstimate est;
    est.value = product;
    est.terms = terms;
    est.error_bound = static_cast<double>(mp::abs(product) * mp::abs(factor - 1));
    return est;
}

BigReal ConstantEstimate::value() const {
    return mp::ldexp(BigReal(numerator), -bits);
}

std::string ConstantEstimate::decimal(int digits) const {
    if (digits < 0) {
        throw std::invalid_argument("ConstantEstimate::decimal: negative digit count");
    }
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) {
        scale *= 10;
    }
    const BigInt scaled = (numerator * scale) >> bits;
    std::string frac = scaled.str();
    frac.insert(0, static_cast<std::size_t>(digits) - std::min(frac.size(), static_cast<std::size_t>(digits)), '0');
    return digits == 0 ? "0" : "0." + frac;
}

ConstantEstimate ptm_constant(int bits) {
    if (bits < 1 || bits > kMaxConstantBits) {
        throw std::invalid_argument(fmt::format("ptm_constant: bits must be in 1..{}", kMaxConstantBits));
    }
    ConstantEstimate c;
    c.bits = bits;
    for (int i = 0; i < bits; ++i) {
        c.numerator <<= 1;
        if (ptm_digit_sum(static_cast<std::uint64_t>(i))) {
            c.numerator += 1;
        }
    }
    c.error_bound = mp::ldexp(BigReal(1), -bits);
    return c;
}

namespace {

void check_sigma(double sigma, const char *what) {
    if (!(sigma > 1.0) || !std::isfinite(sigma)) {
        throw std::invalid_argument(fmt::format("{}: requires Re(s) > 1, got {}", what, sigma));
    }
}

void check_terms(std::uint64_t terms, const char *what) {
    if (terms < 2) {
        throw std::invalid_argument(fmt::format("{}: needs at least 2 terms", what));
    }
    if (terms > (std::uint64_t{1} << 36)) {
        throw CapacityError(fmt::format("{}: too many terms", what));
    }
}

// Compensated (Neumaier) complex sum.
class Accumulator {
 public:
    void add(Complex x) {
        add_part(sum_re_, comp_re_, x.real());
        add_part(sum_im_, comp_im_, x.imag());
    }
    Complex value() const { return {sum_re_ + comp_re_, sum_im_ + comp_im_}; }

 private:
    static void add_part(double &sum, double &comp, double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x)) {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }
    double sum_re_ = 0.0;
    double sum_im_ = 0.0;
    double comp_re_ = 0.0;
    double comp_im_ = 0.0;
};

// Both the series and the state-evolution paths build every term from these
// two functions, so they produce identical floating-point values.
double level_amplitude(std::uint64_t level, double sigma) {
    return std::pow(static_cast<double>(level), -0.5 * sigma);
}

Complex level_phase(std::uint64_t level, double tau) {
    return std::polar(1.0, -tau * std::log(static_cast<double>(level)));
}

Complex inverse_power_of_two(double sigma, double tau) {
    return level_amplitude(2, sigma) * level_amplitude(2, sigma) * level_phase(2, tau);
}

Complex combine(Complex a, Complex b, double sigma, double tau) {
    const Complex w = inverse_power_of_two(sigma, tau);
    return (1.0 + w) * a + (1.0 - w) * b;
}

double tail_bound(double sigma, std::uint64_t terms) {
    return std::pow(static_cast<double>(terms), 1.0 - sigma) / (sigma - 1.0);
}

double combined_bound(double sigma, double tau, double tail) {
    const Complex w = inverse_power_of_two(sigma, tau);
    return (std::abs(1.0 + w) + std::abs(1.0 - w)) * tail;
}

}  // namespace

DirichletPair dirichlet_pair(Complex s, std::uint64_t terms) {
    check_sigma(s.real(), "dirichlet_pair");
    check_terms(terms, "dirichlet_pair");
    const double sigma = s.real();
    const double tau = s.imag();
    Accumulator a;
    Accumulator b;
    for (std::uint64_t n = 1; n <= terms; ++n) {
        const bool prev = ptm_digit_sum(n - 1) != 0;
        const bool cur = ptm_digit_sum(n) != 0;
        if (!prev && !cur) {
            continue;
        }
        const double amp = level_amplitude(n, sigma);
        const Complex term = (amp * amp) * level_phase(n, tau);
        if (prev) {
            a.add(term);
        }
        if (cur) {
            b.add(term);
        }
    }
    const double tail = tail_bound(sigma, terms);
    return {{a.value(), terms, tail}, {b.value(), terms, tail}};
}

ComplexEstimate zeta_ptm(Complex s, std::uint64_t terms) {
    const DirichletPair p = dirichlet_pair(s, terms);
    return {combine(p.a.value, p.b.value, s.real(), s.imag()), terms,
            combined_bound(s.real(), s.imag(), p.a.error_bound)};
}

FeilerResult feiler_autocorrelation(double sigma, double tau, std::uint64_t terms) {
    check_sigma(sigma, "feiler_autocorrelation");
    check_terms(terms, "feiler_autocorrelation");
    if (!std::isfinite(tau)) {
        throw std::invalid_argument("feiler_autocorrelation: tau must be finite");
    }
    // Level n carries amplitude t_n (n+1)^{-sigma/2} in psi1 and t_{n+1} (n+1)^{-sigma/2} in psi2.
    const auto m = static_cast<std::size_t>(terms);
    std::vector<double> psi1(m);
    std::vector<double> psi2(m);
    for (std::size_t n = 0; n < m; ++n) {
        const double amp = level_amplitude(n + 1, sigma);
        psi1[n] = ptm_digit_sum(n) ? amp : 0.0;
        psi2[n] = ptm_digit_sum(n + 1) ? amp : 0.0;
    }
    const Complex w = inverse_power_of_two(sigma, tau);
    const Complex c1 = 1.0 + w;
    const Complex c2 = 1.0 - w;
    Accumulator corr1;
    Accumulator corr2;
    Accumulator corr0;
    double norm2 = 0.0;
    for (std::size_t n = 0; n < m; ++n) {
        if (psi1[n] == 0.0 && psi2[n] == 0.0) {
            continue;
        }
        const Complex evolved = level_phase(n + 1, tau);
        if (psi1[n] != 0.0) {
            corr1.add((psi1[n] * psi1[n]) * evolved);
        }
        if (psi2[n] != 0.0) {
            corr2.add((psi2[n] * psi2[n]) * evolved);
        }
        const Complex amp0 = c1 * psi1[n] + c2 * psi2[n];
        corr0.add(amp0 * amp0 * evolved);
        norm2 += std::norm(amp0);
    }
    FeilerResult r;
    r.sigma = sigma;
    r.tau = tau;
    r.terms = terms;
    r.psi1_corr = corr1.value();
    r.psi2_corr = corr2.value();
    r.zeta_estimate = combine(r.psi1_corr, r.psi2_corr, sigma, tau);
    r.normalization = 1.0 / std::sqrt(norm2);
    r.superposition_corr = corr0.value();
    r.error_bound = combined_bound(sigma, tau, tail_bound(sigma, terms));
    return r;
}

}  // namespace ptm
