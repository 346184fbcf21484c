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

#include "risim/hardware.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace risim
{

namespace
{
// Ratio of the exponentially scaled asymptotic series of I1 and I0,
// e^{-x} I_nu(x) sqrt(2 pi x) ~ sum_k (-1)^k a_k(nu) / x^k
double bessel_ratio_asymptotic(double x)
{
    double s0 = 1.0, s1 = 1.0;
    double t0 = 1.0, t1 = 1.0;
    double prev = 1.0;
    for (int k = 1; k < 60; ++k)
    {
        const double odd = 2.0 * k - 1.0;
        const double n0 = t0 * (odd * odd) / (8.0 * k * x);
        const double n1 = t1 * (odd * odd - 4.0) / (8.0 * k * x);
        const double mag = std::abs(n0) + std::abs(n1);
        if (mag > prev || mag < 1e-18)
            break;
        prev = mag;
        t0 = n0;
        t1 = n1;
        s0 += t0;
        s1 += t1;
    }
    return s1 / s0;
}

double bessel_ratio_series(double x)
{
    const double q = 0.25 * x * x;
    double term0 = 1.0, term1 = 1.0;
    double s0 = 1.0, s1 = 1.0;
    for (int k = 1; k < 200; ++k)
    {
        term0 *= q / (double(k) * k);
        term1 *= q / (double(k) * (k + 1));
        s0 += term0;
        s1 += term1;
        if (term0 < 1e-17 * s0 && term1 < 1e-17 * s1)
            break;
    }
    return 0.5 * x * s1 / s0;
}

constexpr std::array<double, 5> varrho_table{0.3634, 0.1175, 0.03454, 0.009497, 0.002499};
} // namespace

double bessel_ratio_rho(double upsilon)
{
    if (!(upsilon >= 0.0) || !std::isfinite(upsilon))
        throw config_error("phase-noise concentration must be finite and >= 0");
    if (upsilon < 15.0)
        return bessel_ratio_series(upsilon);
    return bessel_ratio_asymptotic(upsilon);
}

double iota(double eta)
{
    if (!(eta >= 0.0) || eta >= std::numbers::pi)
        throw config_error("RF phase bound eta must lie in [0, pi)");
    if (eta < 1e-8)
        return 1.0 - eta * eta / 6.0;
    return std::sin(eta) / eta;
}

QuantizerParams quantizer_params(int bits)
{
    if (bits < 1)
        throw config_error("ADC resolution must be at least 1 bit");
    double v;
    if (bits <= 5)
        v = varrho_table[bits - 1];
    else
        v = std::numbers::pi * std::sqrt(3.0) / 2.0 * std::pow(2.0, -2.0 * bits);
    return {v, 1.0 - v};
}

void validate(const HardwareProfile &hw)
{
    if (!(hw.upsilon >= 0.0) || !std::isfinite(hw.upsilon))
        throw config_error("hardware.upsilon must be finite and >= 0");
    if (!(hw.kappa >= 0.0 && hw.kappa <= 1.0))
        throw config_error("hardware.kappa must lie in [0, 1]");
    if (!(hw.eta >= 0.0 && hw.eta < std::numbers::pi))
        throw config_error("hardware.eta must lie in [0, pi)");
    if (!(hw.sigma_rf2 >= 0.0) || !(hw.sigma2 >= 0.0))
        throw config_error("noise powers must be >= 0");
    if (hw.bits < 1)
        throw config_error("hardware.b must be >= 1");
}

DerivedHardware derive(const HardwareProfile &hw)
{
    validate(hw);
    const auto q = quantizer_params(hw.bits);
    return {bessel_ratio_rho(hw.upsilon), iota(hw.eta), q.varrho, q.tau};
}

// Best & Fisher (1979) rejection sampler on (-pi, pi].
double sample_von_mises(double concentration, RngStream &rng)
{
    constexpr double pi = std::numbers::pi;
    if (concentration < 1e-8)
        return rng.uniform(-pi, pi);
    if (concentration > 1e6)
    {
        // wrapped normal, accurate to O(1/kappa^2) here
        return std::remainder(rng.normal() / std::sqrt(concentration), 2.0 * pi);
    }
    const double a = 1.0 + std::sqrt(1.0 + 4.0 * concentration * concentration);
    const double b = (a - std::sqrt(2.0 * a)) / (2.0 * concentration);
    const double r = (1.0 + b * b) / (2.0 * b);
    double f;
    while (true)
    {
        const double u1 = rng.uniform();
        const double z = std::cos(pi * u1);
        f = (1.0 + r * z) / (r + z);
        const double c = concentration * (r - f);
        const double u2 = rng.uniform();
        if (c * (2.0 - c) - u2 > 0.0)
            break;
        if (std::log(c / u2) + 1.0 - c >= 0.0)
            break;
    }
    const double u3 = rng.uniform();
    const double theta = std::acos(std::clamp(f, -1.0, 1.0));
    return u3 > 0.5 ? theta : -theta;
}

arma::cx_vec sample_phase_noise(double upsilon, arma::uword N, RngStream &rng)
{
    arma::cx_vec out(N);
    for (arma::uword n = 0; n < N; ++n)
        out(n) = std::polar(1.0, sample_von_mises(upsilon, rng));
    return out;
}

arma::cx_vec sample_rf_chains(double kappa, double eta, arma::uword M, RngStream &rng)
{
    arma::cx_vec out(M);
    for (arma::uword m = 0; m < M; ++m)
        out(m) = std::polar(kappa, eta > 0.0 ? rng.uniform(-eta, eta) : 0.0);
    return out;
}

arma::vec sq_diagonal(const arma::cx_mat &effective, const arma::vec &power, double sigma_rf2, double sigma2)
{
    if (effective.n_cols != power.n_elem)
        throw config_error("sq_diagonal: power length does not match user count");
    arma::vec out(effective.n_rows);
    for (arma::uword m = 0; m < effective.n_rows; ++m)
    {
        double s = 0.0;
        for (arma::uword k = 0; k < effective.n_cols; ++k)
            s += power(k) * std::norm(effective(m, k));
        out(m) = s + sigma_rf2 + sigma2;
    }
    return out;
}

arma::vec sq_diagonal(const arma::cx_mat &G, const arma::cx_mat &H, const arma::cx_vec &chi,
                      const arma::cx_vec &theta_noise, const arma::cx_vec &phi, const arma::vec &power,
                      double sigma_rf2, double sigma2)
{
    if (G.n_rows != chi.n_elem || G.n_cols != phi.n_elem || H.n_rows != phi.n_elem ||
        theta_noise.n_elem != phi.n_elem)
        throw config_error("sq_diagonal: dimension mismatch");
    const arma::cx_mat eff = arma::diagmat(chi) * G * arma::diagmat(phi % theta_noise) * H;
    return sq_diagonal(eff, power, sigma_rf2, sigma2);
}

} // namespace risim
