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

#include "ptm/ptm_states.hpp"

#include <cmath>
#include <random>

#include "gtest/gtest.h"

#include "oracles/oracles.hpp"
#include "ptm/spin_ops.hpp"

using namespace ptm;

TEST(ptm_states, two_qubit_pair) {
    const double r = 1.0 / std::sqrt(2.0);
    const PtmLogical zero = ptm_state(2, Logical::zero);
    const PtmLogical one = ptm_state(2, Logical::one);
    EXPECT_NEAR(std::abs(zero.state[0] - r), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(zero.state[3] - r), 0.0, 1e-15);
    EXPECT_EQ(zero.state[1], Complex(0.0));
    EXPECT_NEAR(std::abs(one.state[1] - r), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(one.state[2] - r), 0.0, 1e-15);
}

TEST(ptm_states, three_qubit_zero) {
    const PtmLogical zero = ptm_state(3, Logical::zero);
    EXPECT_EQ(zero.support, (std::vector<std::uint64_t>{0, 3, 5, 6}));
    for (std::uint64_t k : zero.support) {
        EXPECT_EQ(zero.state[k], Complex(0.5));
    }
    EXPECT_EQ(zero.squared_amplitude(), Rational(1, 4));
}

TEST(ptm_states, match_oracle_and_partition) {
    for (int n = 1; n <= 10; ++n) {
        for (int b = 0; b < 2; ++b) {
            const PtmLogical s = ptm_state(n, b ? Logical::one : Logical::zero);
            EXPECT_LT((s.state.amplitudes() - oracle::ptm_state(n, b)).cwiseAbs().maxCoeff(), 1e-15);
        }
        const auto e = logical_support(n, Logical::zero);
        const auto o = logical_support(n, Logical::one);
        EXPECT_EQ(e.size() + o.size(), std::size_t{1} << n);
        std::vector<int> seen(std::size_t{1} << n, 0);
        for (auto k : e) {
            seen[k]++;
        }
        for (auto k : o) {
            seen[k]++;
        }
        for (int c : seen) {
            ASSERT_EQ(c, 1);
        }
    }
}

TEST(ptm_states, orthonormality) {
    for (int n = 1; n <= 12; ++n) {
        const ExactOrthonormality exact = exact_orthonormality(n);
        EXPECT_EQ(exact.norm_zero, 1);
        EXPECT_EQ(exact.norm_one, 1);
        EXPECT_EQ(exact.overlap, 0);
        const PtmLogical zero = ptm_state(n, Logical::zero);
        const PtmLogical one = ptm_state(n, Logical::one);
        EXPECT_LE(std::abs(inner(zero.state.amplitudes(), one.state.amplitudes())), 1e-14);
        EXPECT_LE(std::abs(zero.state.norm() - 1.0), 1e-14);
        EXPECT_LE(std::abs(one.state.norm() - 1.0), 1e-14);
    }
}

TEST(ptm_states, compose_matches_direct) {
    PtmLogical zero = ptm_state(1, Logical::zero);
    PtmLogical one = ptm_state(1, Logical::one);
    EXPECT_EQ(zero.state[0], Complex(1.0));
    EXPECT_EQ(one.state[1], Complex(1.0));
    for (int n = 2; n <= 12; ++n) {
        auto [next0, next1] = ptm_compose(zero, one);
        const PtmLogical d0 = ptm_state(n, Logical::zero);
        const PtmLogical d1 = ptm_state(n, Logical::one);
        EXPECT_EQ(next0.support, d0.support);
        EXPECT_EQ(next1.support, d1.support);
        EXPECT_EQ(next0.squared_amplitude(), d0.squared_amplitude());
        EXPECT_TRUE(next0.state.amplitudes() == d0.state.amplitudes()) << n;
        EXPECT_TRUE(next1.state.amplitudes() == d1.state.amplitudes()) << n;
        zero = next0;
        one = next1;
    }
}

TEST(ptm_states, compose_rejects_mismatched_orders) {
    EXPECT_THROW(ptm_compose(ptm_state(2, Logical::zero), ptm_state(3, Logical::one)), std::invalid_argument);
    EXPECT_THROW(ptm_compose(ptm_state(2, Logical::one), ptm_state(2, Logical::zero)), std::invalid_argument);
}

TEST(ptm_states, qudit_states) {
    const PtmLogical d4 = ptm_qudit_state(4, Logical::one);
    EXPECT_EQ(d4.support, (std::vector<std::uint64_t>{1, 2}));
    EXPECT_NEAR(std::abs(d4.state[1] - 1.0 / std::sqrt(2.0)), 0.0, 1e-15);
    const PtmLogical d8 = ptm_qudit_state(8, Logical::zero);
    EXPECT_EQ(d8.support, (std::vector<std::uint64_t>{0, 3, 5, 6}));
    EXPECT_EQ(d8.state[3], Complex(0.5));
    const PtmLogical d16 = ptm_qudit_state(16, Logical::zero);
    EXPECT_EQ(d16.support, logical_support(4, Logical::zero));
    EXPECT_EQ(d16.squared_amplitude(), Rational(2, 16));
    EXPECT_THROW(ptm_qudit_state(6, Logical::zero), std::invalid_argument);
    EXPECT_THROW(ptm_qudit_state(1, Logical::zero), std::invalid_argument);
}

TEST(ptm_states, encode_logical_examples) {
    const double r = 1.0 / std::sqrt(2.0);
    for (int n = 2; n <= 6; ++n) {
        const StateVector zero = encode_logical(1.0, 0.0, n);
        EXPECT_TRUE(zero.amplitudes() == ptm_state(n, Logical::zero).state.amplitudes());
        const CMatrix h = oracle::hadamard_all(n);
        const CVector plus = h.col(0);
        const CVector minus = h.col((1 << n) - 1);
        EXPECT_LT((encode_logical(r, r, n).amplitudes() - plus).norm(), 1e-12);
        EXPECT_LT((encode_logical(r, -r, n).amplitudes() - minus).norm(), 1e-12);
    }
    EXPECT_THROW(encode_logical(1.0, 1.0, 3), std::invalid_argument);
}

TEST(ptm_states, capacity) {
    Limits small;
    small.state_qubits = 4;
    EXPECT_NO_THROW(ptm_state(4, Logical::zero, small));
    EXPECT_THROW(ptm_state(5, Logical::zero, small), CapacityError);
    EXPECT_THROW(ptm_state(0, Logical::zero), std::invalid_argument);
}
