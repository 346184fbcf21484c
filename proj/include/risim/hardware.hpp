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

#include "risim/rng.hpp"

#include <armadillo>
#include <stdexcept>
#include <string>

namespace risim
{

// Invalid configuration or argument. Maps to exit code 2 in the CLI.
class config_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

struct HardwareProfile
{
    double upsilon = 20.0;               // phase-noise concentration
    double kappa = 0.9;                  // RF amplitude
    double eta = 0.5235987755982988;     // RF phase bound, pi/6
    double sigma_rf2 = 3.981071705534972e-14; // -104 dBm in watts
    double sigma2 = 3.981071705534972e-14;
    int bits = 2;
};

struct DerivedHardware
{
    double rho = 0.0;
    double iota = 1.0;
    double varrho = 0.0; // inverse SQNR
    double tau = 1.0;
};

struct QuantizerParams
{
    double varrho;
    double tau;
};

double bessel_ratio_rho(double upsilon);
double iota(double eta);
QuantizerParams quantizer_params(int bits);

void validate(const HardwareProfile &hw);
DerivedHardware derive(const HardwareProfile &hw);

double sample_von_mises(double concentration, RngStream &rng);

// e^{j eps_n}, eps_n ~ VonMises(0, upsilon)
arma::cx_vec sample_phase_noise(double upsilon, arma::uword N, RngStream &rng);

// chi_m = kappa e^{j phi_m}, phi_m ~ U[-eta, eta]
arma::cx_vec sample_rf_chains(double kappa, double eta, arma::uword M, RngStream &rng);

// Conditional [S_Q]_mm = sum_k p_k |[chi G Phi Theta H]_mk|^2 + sigma_rf2 + sigma2.
// `effective` is chi G Phi Theta H (M x K).
arma::vec sq_diagonal(const arma::cx_mat &effective, const arma::vec &power, double sigma_rf2, double sigma2);

arma::vec sq_diagonal(const arma::cx_mat &G, const arma::cx_mat &H, const arma::cx_vec &chi,
                      const arma::cx_vec &theta_noise, const arma::cx_vec &phi, const arma::vec &power,
                      double sigma_rf2, double sigma2);

} // namespace risim
