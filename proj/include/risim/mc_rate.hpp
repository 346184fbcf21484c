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

#pragma once

#include "risim/channel.hpp"
#include "risim/report.hpp"

#include <functional>

namespace risim
{

enum class SqMode
{
    conditional, // S_Q from the realized channel and impairments
    marginal     // S_Q = zeta + sigma_rf2 + sigma2 on every chain
};

struct InstantaneousTerms
{
    arma::vec signal;       // p_k tau^2 |v_k^H u_k|^2
    arma::mat interference; // (k, i) = p_i tau^2 |v_k^H u_i|^2, zero diagonal
    arma::vec dn, an, qn;
    arma::vec sinr;
};

InstantaneousTerms instantaneous_sinr(const ChannelRealization &ch, const arma::cx_vec &theta_noise,
                                      const arma::cx_vec &chi, const arma::vec &phases, const ScenarioConfig &sc,
                                      SqMode mode = SqMode::conditional, double marginal_zeta = 0.0);

struct McOptions
{
    int realizations = 2000;
    int threads = 1;
    SqMode sq_mode = SqMode::conditional;
};

RateReport ergodic_rate_mc(const ScenarioConfig &sc, const arma::vec &phases, const McOptions &opt);

// Monte Carlo estimates of the coefficient expectations, for the validation table.
struct CoefficientEstimate
{
    arma::mat xi_gamma, xi_gamma_se; // (k, i): E|v_k^H chi G Phi Theta h_i|^2; diagonal is xi_k
    arma::vec varpi, varpi_se;       // E|[G Phi h_k]_m|^2 averaged over m
    double zeta = 0.0, zeta_se = 0.0;
};

CoefficientEstimate estimate_coefficients(const ScenarioConfig &sc, const arma::vec &phases, int samples,
                                          int threads = 1);

// Runs f(t) for t in [0, n) over `threads` workers with static chunking.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)> &f);

} // namespace risim
