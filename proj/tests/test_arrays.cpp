// risim - RIS-assisted massive MIMO uplink rate toolkit
// Copyright (C) 2026 risim contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "risim/arrays.hpp"

#include <gtest/gtest.h>

#include <numbers>
#include <random>

using namespace risim;
constexpr double pi = std::numbers::pi;

TEST(Steering, FirstElementIsOne)
{
    const auto a = steering_vector(16, 1.1, 2.3, 0.5);
    EXPECT_EQ(a(0), std::complex<double>(1.0, 0.0));
}

TEST(Steering, SecondElementOfFourIsMinusOne)
{
    const auto a = steering_vector(4, pi / 2, pi / 2, 0.5);
    EXPECT_NEAR(a(1).real(), -1.0, 1e-15);
    EXPECT_NEAR(a(1).imag(), 0.0, 1e-15);
}

TEST(Steering, UnitModulusAndSquareCheck)
{
    const auto a = steering_vector(64, 0.3, 4.0, 0.5);
    EXPECT_LT(arma::max(arma::abs(arma::abs(a) - 1.0)), 1e-15);
    EXPECT_THROW(steering_vector(10, 0.1, 0.2, 0.5), config_error);
}

TEST(Sinc, Values)
{
    EXPECT_EQ(sinc(0.0), 1.0);
    EXPECT_EQ(sinc(1e-13), 1.0);
    EXPECT_NEAR(sinc(0.5), 2.0 / pi, 1e-15);
    EXPECT_NEAR(sinc(3.0), 0.0, 1e-15);
}

TEST(InnerProduct, IdenticalAnglesGiveN)
{
    const ArrayAngles a{0.7, 1.9};
    const auto v = steering_vector(16, a, 0.5);
    EXPECT_NEAR(std::abs(steering_inner_product(v, v) - 16.0), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(steering_inner_product_closed(16, a, a, 0.5) - 16.0), 0.0, 1e-12);
}

TEST(InnerProduct, SincZeroKillsAxis)
{
    // d sqrt(N) s = 1 with d = 0.5, sqrt(N) = 4
    EXPECT_LT(std::abs(axis_factor(4, 0.5, 0.5)), 1e-12);
    EXPECT_LT(std::abs(axis_factor(4, -1.0, 0.5)), 1e-12);
}

TEST(InnerProduct, ClosedFormMatchesDirectSum)
{
    std::mt19937_64 gen(42);
    std::uniform_real_distribution<double> u(0.0, 2 * pi);
    double worst = 0.0;
    for (int t = 0; t < 1000; ++t)
    {
        const int N = std::vector<int>{4, 16, 64, 256}[t % 4];
        const ArrayAngles a{u(gen), u(gen)}, b{u(gen), u(gen)};
        const auto direct = steering_inner_product(steering_vector(N, a, 0.5), steering_vector(N, b, 0.5));
        const auto closed = steering_inner_product_closed(N, a, b, 0.5);
        worst = std::max(worst, std::abs(direct - closed) / std::max(1.0, std::abs(direct)));
    }
    EXPECT_LT(worst, 1e-10);
}

TEST(InnerProduct, LengthMismatch)
{
    EXPECT_THROW(steering_inner_product(arma::cx_vec(4), arma::cx_vec(16)), config_error);
}

TEST(InnerProduct, NormalizedAxisFactorVanishes)
{
    const double s = 0.37;
    double prev_envelope = 1e300;
    for (int side : {4, 8, 16, 32})
    {
        const double normalized = std::abs(axis_factor(side, s, 0.5)) / side;
        const double envelope = 1.0 / (side * std::abs(std::sin(pi * 0.5 * s)));
        EXPECT_LE(normalized, envelope + 1e-15);
        EXPECT_LT(envelope, prev_envelope);
        prev_envelope = envelope;
    }
    EXPECT_LT(std::abs(axis_factor(32, s, 0.5)) / 32, 0.12);
}

TEST(RisGain, ZeroPhasesSameAngles)
{
    const ArrayAngles a{1.0, 2.0};
    const auto g = ris_gain(arma::zeros(16), a, a, 0.5);
    EXPECT_NEAR(std::abs(g.total - 16.0), 0.0, 1e-12);
}

TEST(RisGain, RandomPhasesBelowN)
{
    std::mt19937_64 gen(3);
    std::uniform_real_distribution<double> u(0.0, 2 * pi);
    arma::vec th(16);
    for (auto &v : th)
        v = u(gen);
    const auto g = ris_gain(th, {0.4, 1.2}, {2.2, 0.9}, 0.5);
    EXPECT_LT(std::abs(g.total), 16.0);
    EXPECT_NEAR(std::abs(g.total - arma::accu(g.terms)), 0.0, 1e-12);
    EXPECT_LT(arma::max(arma::abs(arma::abs(g.terms) - 1.0)), 1e-14);
}
