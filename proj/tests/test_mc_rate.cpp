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

#include "risim/ga_opt.hpp"
#include "risim/mc_rate.hpp"

#include <gtest/gtest.h>

#include <numbers>

using namespace risim;

namespace
{
ScenarioConfig make(int M, int N, int K, std::uint64_t seed = 3)
{
    ScenarioInput raw;
    raw.M = M;
    raw.N = N;
    raw.K = K;
    raw.seed = seed;
    return build_scenario(raw);
}

struct Draw
{
    ChannelRealization ch;
    arma::cx_vec th, chi;
};

Draw draw(const ScenarioConfig &sc, std::uint64_t t)
{
    RngStream pn(sc.seed, t, StreamTag::phase_noise), rf(sc.seed, t, StreamTag::rf_chain);
    return {sample_channels(sc, los_components(sc), t), sample_phase_noise(sc.hardware.upsilon, sc.N, pn),
            sample_rf_chains(sc.hardware.kappa, sc.hardware.eta, sc.M, rf)};
}
} // namespace

TEST(Sinr, SingleUserHasNoInterference)
{
    const auto sc = make(16, 16, 1);
    const auto d = draw(sc, 0);
    const auto t = instantaneous_sinr(d.ch, d.th, d.chi, random_phases(16, 1), sc);
    EXPECT_EQ(t.interference(0, 0), 0.0);
    EXPECT_NEAR(t.sinr(0), t.signal(0) / (t.dn(0) + t.an(0) + t.qn(0)), 1e-15 * t.sinr(0));
}

TEST(Sinr, DeadRfChains)
{
    ScenarioInput raw;
    raw.M = 16;
    raw.N = 16;
    raw.hardware.kappa = 0.0;
    const auto sc = build_scenario(raw);
    const auto d = draw(sc, 0);
    const auto t = instantaneous_sinr(d.ch, d.th, d.chi, random_phases(16, 1), sc);
    EXPECT_TRUE(arma::all(t.signal == 0.0));
    EXPECT_TRUE(arma::all(arma::vectorise(t.interference) == 0.0));
    EXPECT_TRUE(arma::all(t.sinr == 0.0));
}

TEST(Sinr, ScalarCase)
{
    const auto sc = make(1, 1, 1);
    const std::complex<double> g(0.3, -0.7), h(-0.2, 0.5), th = std::polar(1.0, 0.4), chi = std::polar(0.9, -0.2);
    const double theta = 1.3;
    ChannelRealization ch;
    ch.G = arma::cx_mat{g};
    ch.H = arma::cx_mat{h};
    const auto t = instantaneous_sinr(ch, arma::cx_vec{th}, arma::cx_vec{chi}, arma::vec{theta}, sc);
    const double tau = sc.derived.tau, p = sc.power(0);
    const double gh2 = std::norm(g) * std::norm(h);
    const double sig = p * tau * tau * std::norm(chi) * gh2 * gh2;
    const double sq = p * std::norm(chi) * gh2 + sc.hardware.sigma_rf2 + sc.hardware.sigma2;
    const double den = tau * tau * (sc.hardware.sigma_rf2 + sc.hardware.sigma2) * gh2 + tau * (1 - tau) * sq * gh2;
    EXPECT_NEAR(t.sinr(0) / (sig / den), 1.0, 1e-12);
}

TEST(Sinr, GlobalPhaseInvariance)
{
    const auto sc = make(16, 16, 4);
    const auto d = draw(sc, 5);
    const arma::vec ph = random_phases(16, 2);
    const auto a = instantaneous_sinr(d.ch, d.th, d.chi, ph, sc);
    for (double psi : {0.3, 2.1, 5.9})
    {
        const auto b = instantaneous_sinr(d.ch, d.th, d.chi, ph + psi, sc);
        EXPECT_LT(arma::max(arma::abs(a.sinr - b.sinr) / a.sinr), 1e-12);
    }
}

TEST(Sinr, NoiseMonotoneAndRatio)
{
    const auto sc = make(16, 16, 3);
    auto hw = sc.hardware;
    hw.sigma2 *= 3.0;
    const auto noisy = with_hardware(sc, hw);
    const arma::vec ph = random_phases(16, 2);
    for (int t = 0; t < 20; ++t)
    {
        const auto d = draw(sc, t);
        const auto a = instantaneous_sinr(d.ch, d.th, d.chi, ph, sc);
        const auto b = instantaneous_sinr(d.ch, d.th, d.chi, ph, noisy);
        EXPECT_TRUE(arma::all(b.sinr < a.sinr));
        EXPECT_LT(arma::max(arma::abs(a.dn / a.an - sc.hardware.sigma_rf2 / sc.hardware.sigma2)), 1e-12);
        EXPECT_TRUE(arma::all(a.qn >= 0.0));
    }
}

TEST(Ergodic, SingleRealizationDeterministic)
{
    const auto sc = make(16, 16, 4);
    McOptions o;
    o.realizations = 1;
    const auto a = ergodic_rate_mc(sc, random_phases(16, 1), o);
    const auto b = ergodic_rate_mc(sc, random_phases(16, 1), o);
    EXPECT_TRUE(arma::all(a.per_user == b.per_user));
    EXPECT_EQ(a.method, Method::mc);
    EXPECT_NEAR(a.sum_rate, arma::accu(a.per_user), 1e-15);
}

TEST(Ergodic, ThreadCountDoesNotChangeResult)
{
    const auto sc = make(16, 16, 4);
    McOptions o;
    o.realizations = 300;
    const auto a = ergodic_rate_mc(sc, random_phases(16, 1), o);
    o.threads = 5;
    const auto b = ergodic_rate_mc(sc, random_phases(16, 1), o);
    EXPECT_TRUE(arma::all(a.per_user == b.per_user));
    EXPECT_TRUE(arma::all(a.stderr_mc == b.stderr_mc));
}

TEST(Ergodic, StderrScaling)
{
    const auto sc = make(16, 16, 4);
    McOptions o;
    o.threads = 4;
    o.realizations = 2000;
    const auto a = ergodic_rate_mc(sc, random_phases(16, 1), o);
    o.realizations = 8000;
    const auto b = ergodic_rate_mc(sc, random_phases(16, 1), o);
    const arma::vec ratio = a.stderr_mc / b.stderr_mc;
    EXPECT_TRUE(arma::all(ratio > 1.6 && ratio < 2.4)) << ratio.t();
}

TEST(Ergodic, MarginalSqModeRuns)
{
    const auto sc = make(16, 16, 2);
    McOptions o;
    o.realizations = 200;
    o.sq_mode = SqMode::marginal;
    const auto r = ergodic_rate_mc(sc, random_phases(16, 1), o);
    EXPECT_TRUE(arma::all(r.per_user > 0.0));
}

TEST(Coefficients, EstimatorIsThreadInvariant)
{
    const auto sc = make(4, 4, 2);
    const auto a = estimate_coefficients(sc, random_phases(4, 1), 10000, 1);
    const auto b = estimate_coefficients(sc, random_phases(4, 1), 10000, 3);
    EXPECT_TRUE(arma::all(arma::vectorise(a.xi_gamma == b.xi_gamma)));
    EXPECT_EQ(a.zeta, b.zeta);
}
