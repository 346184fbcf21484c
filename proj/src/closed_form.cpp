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

#include "risim/closed_form.hpp"

#include "risim/arrays.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace risim
{

namespace
{
arma::cx_vec los_column(const ScenarioConfig &sc, int k)
{
    return steering_vector(sc.N, sc.angles.ris_arrival[k], sc.spacing_ratio);
}

void check_phases(const ScenarioConfig &sc, const arma::vec &phases)
{
    if (phases.n_elem != static_cast<arma::uword>(sc.N))
        throw config_error("phase vector length must equal N");
}
} // namespace

LosGeometry los_geometry(const ScenarioConfig &sc)
{
    LosGeometry g;
    const arma::cx_vec at = steering_vector(sc.N, sc.angles.ris_departure, sc.spacing_ratio);
    std::vector<arma::cx_vec> hb;
    g.cascade.set_size(sc.N, sc.K);
    for (int k = 0; k < sc.K; ++k)
    {
        hb.push_back(los_column(sc, k));
        g.cascade.col(k) = arma::conj(at) % hb.back();
    }
    g.gram.set_size(sc.K, sc.K);
    for (int k = 0; k < sc.K; ++k)
        for (int i = 0; i < sc.K; ++i)
            g.gram(k, i) = arma::cdot(hb[k], hb[i]);
    return g;
}

arma::cx_vec ris_gains(const LosGeometry &g, const arma::vec &phases)
{
    const arma::cx_vec e = arma::exp(std::complex<double>(0.0, 1.0) * arma::cx_vec(phases, arma::zeros(phases.n_elem)));
    return g.cascade.st() * e;
}

ClosedFormTerms closed_form_terms(const ScenarioConfig &sc, const arma::vec &phases, CoefficientForm form)
{
    check_phases(sc, phases);
    const auto g = los_geometry(sc);
    return closed_form_terms(sc, ris_gains(g, phases), g.gram, form);
}

ClosedFormTerms closed_form_terms(const ScenarioConfig &sc, const arma::cx_vec &f, const arma::cx_mat &gram,
                                  CoefficientForm form)
{
    const int K = sc.K;
    const double M = sc.M, N = sc.N;
    const double d = sc.delta, beta = sc.beta, kappa = sc.hardware.kappa;
    const double rho = sc.derived.rho, io = sc.derived.iota;
    const double r2 = rho * rho, i2 = io * io;
    const bool fix = form == CoefficientForm::corrected;

    ClosedFormTerms t;
    t.rho = rho;
    t.iota = io;
    t.f = f;
    t.los_gram = gram;

    t.xi.set_size(K);
    t.varpi.set_size(K);
    t.gamma.zeros(K, K);
    t.c.set_size(K, 4);
    t.z.zeros(K, K, 4);

    for (int k = 0; k < K; ++k)
    {
        const double mk = sc.mu(k);
        const double F = std::norm(t.f(k));

        double c1 = (r2 * std::pow(mk + d + 1, 2) + (1 - r2) * d * d * mk + d * d) * N * N +
                    (((2 * mk + 3 * d + 2 - d * mk) * r2 + (1 + mk) * d) * d * mk * F + std::pow(mk + d + 2, 2) -
                     r2 * std::pow(mk + d + 1, 2) - 2 * r2 * d * mk - 2) *
                        N +
                    r2 * d * d * mk * mk * F * F + 2 * ((1 - r2) * (mk + d) + 2) * d * mk * F;
        const double c2 = ((1 - i2) * std::pow(mk + d + 1, 2) - d * mk * (mk + 1 + d - i2 * d)) * r2 +
                          (d + mk + 1) * d * mk + std::pow(mk + d + 1, 2) - (mk + 1) * i2 * d * d;
        double c3 = (((3 - 2 * i2) * (mk + 1) + (i2 - 1) * d * (mk - 3)) * r2 + (d + 1 - i2 * d) * (mk + 1)) * d *
                        mk * F +
                    ((i2 - 1) * std::pow(mk + d + 1, 2) + (i2 - 2) * 2 * mk * d) * r2 + (1 - i2) * std::pow(mk + d + 2, 2) +
                    2 * mk * d + 2 * mk + 2 * d - 1 - 2 * i2;
        const double c4 = (1 - i2) * r2 * d * d * mk * mk * F * F +
                          2 * d * mk * F * ((1 - i2) * (1 - r2) * (mk + d + 1) + (2 - i2) * (1 + r2));
        if (fix)
        {
            c1 += 2 * d * mk * N;
            c3 += 2 * (1 - i2) * d * mk + 4 * i2;
        }
        t.c(k, 0) = c1;
        t.c(k, 1) = c2;
        t.c(k, 2) = c3;
        t.c(k, 3) = c4;

        const double ak = sc.alpha(k);
        t.xi(k) = beta * beta * ak * ak * kappa * kappa * M / (std::pow(d + 1, 2) * std::pow(mk + 1, 2)) *
                  (c1 * i2 * M + c2 * N * N + c3 * N + c4);
        t.varpi(k) = beta * ak / ((d + 1) * (mk + 1)) * (d * mk * F + (mk + d + 1) * N);

        for (int i = 0; i < K; ++i)
        {
            if (i == k)
                continue;
            const double mi = sc.mu(i);
            const double Fi = std::norm(t.f(i));
            const double H = std::norm(t.los_gram(k, i));
            // Re(f_k^* f_i h_bar_i^H h_bar_k)
            const double C = std::real(std::conj(t.f(k)) * t.f(i) * t.los_gram(i, k));
            const double A = mi + 1 - r2 * mi;

            const double z1 = A * d * d * N * N +
                              (A * d * d * mk * F + r2 * d * d * mi * Fi + (mk + 2 * d + 1) * A + r2 * mi) * N +
                              (2 * d * Fi + mk * H + 2 * d * mk * C) * r2 * mi +
                              (r2 * d * mi * Fi + 2 * mi * (1 - r2) + 2) * d * mk * F;
            double z2 = ((d + 1) * mk + std::pow(d + 1, 2) - i2 * d * d) * (mi + 1) -
                        (mk + d + 1 - i2 * d) * r2 * d * mi - 1;
            const double z3 = ((1 - i2) * d * A + mi + 1) * d * mk * F +
                              ((mi + 1) * (mk + 2 * d + 1) - (mk + 2 * d) * r2 * mi) * (1 - i2) +
                              (mk + d + 1 - i2 * d) * r2 * d * mi * Fi;
            const double z4 = ((d * Fi - 2) * r2 * mi + 2 * mi + 2) * (1 - i2) * d * mk * F +
                              (1 - i2) * r2 * mk * mi * (H + 2 * d * C) + 2 * (1 - i2) * r2 * d * mi * Fi;
            if (fix)
                z2 += 1;
            t.z(k, i, 0) = z1;
            t.z(k, i, 1) = z2;
            t.z(k, i, 2) = z3;
            t.z(k, i, 3) = z4;

            t.gamma(k, i) = kappa * kappa * beta * beta * ak * sc.alpha(i) * M /
                            (std::pow(d + 1, 2) * (mk + 1) * (mi + 1)) * (z1 * i2 * M + z2 * N * N + z3 * N + z4);
        }
    }

    double zeta = 0.0;
    for (int s = 0; s < K; ++s)
    {
        const double ms = sc.mu(s);
        zeta += kappa * kappa * sc.power(s) * beta * sc.alpha(s) / ((d + 1) * (ms + 1)) *
                (r2 * d * ms * std::norm(t.f(s)) + ((1 - r2) * d * ms + d + ms + 1) * N);
    }
    t.zeta = zeta;
    return t;
}

arma::vec closed_form_sinr(const ScenarioConfig &sc, const ClosedFormTerms &t)
{
    const double tau = sc.derived.tau;
    if (!(tau > 0.0 && tau <= 1.0))
        throw config_error("closed form: tau must lie in (0, 1]");
    const double M = sc.M;
    const double noise = sc.hardware.sigma_rf2 + sc.hardware.sigma2;
    arma::vec sinr(sc.K);
    for (int k = 0; k < sc.K; ++k)
    {
        double interf = 0.0;
        for (int i = 0; i < sc.K; ++i)
            if (i != k)
                interf += sc.power(i) * tau * tau * t.gamma(k, i);
        const double den = interf + tau * (1 - tau) * t.varpi(k) * t.zeta * M + tau * noise * t.varpi(k) * M;
        const double num = sc.power(k) * tau * tau * t.xi(k);
        sinr(k) = num > 0.0 ? num / den : 0.0;
    }
    return sinr;
}

RateReport rate_closed_form(const ScenarioConfig &sc, const arma::vec &phases, CoefficientForm form)
{
    const auto t = closed_form_terms(sc, phases, form);
    return make_report(arma::log2(1.0 + closed_form_sinr(sc, t)), Method::closed);
}

RateReport rate_rayleigh(const ScenarioConfig &sc, const arma::vec &phases, CoefficientForm form)
{
    check_phases(sc, phases);
    if (sc.delta != 0.0 || arma::any(sc.mu != 0.0))
        throw config_error("rate_rayleigh requires rician_delta = 0 and rician_mu = 0");
    const double M = sc.M, N = sc.N;
    const double tau = sc.derived.tau, kappa2 = sc.hardware.kappa * sc.hardware.kappa;
    const double r2 = sc.derived.rho * sc.derived.rho, i2 = sc.derived.iota * sc.derived.iota;
    const bool fix = form == CoefficientForm::corrected;
    const double tail = (fix ? 3 - 2 * i2 : 3 - 6 * i2) + (i2 - 1) * r2;
    const double extra = fix ? N : 0.0;
    const double noise = sc.hardware.sigma_rf2 + sc.hardware.sigma2;

    const double total_power = arma::dot(sc.power, sc.alpha);
    arma::vec rate(sc.K);
    for (int k = 0; k < sc.K; ++k)
    {
        const double num = sc.power(k) * tau * sc.alpha(k) * kappa2 *
                           (i2 * M * (r2 * N + 2 - r2) + ((1 - i2) * r2 + 1) * N + tail);
        double interf = 0.0;
        for (int i = 0; i < sc.K; ++i)
            if (i != k)
                interf += sc.power(i) * tau * kappa2 * sc.alpha(i) * (i2 * M + extra + 1 - i2);
        const double den = interf + (1 - tau) * kappa2 * N * total_power + noise / sc.beta;
        rate(k) = std::log2(1.0 + num / den);
    }
    return make_report(rate, Method::closed);
}

arma::vec steered_phases(const ScenarioConfig &sc, const ArrayAngles &arrival)
{
    const int side = square_side(sc.N);
    const auto &t = sc.angles.ris_departure;
    const double p = std::sin(arrival.azimuth) * std::sin(arrival.elevation) - std::sin(t.azimuth) * std::sin(t.elevation);
    const double q = std::cos(arrival.elevation) - std::cos(t.elevation);
    constexpr double two_pi = 2.0 * std::numbers::pi;
    arma::vec theta(sc.N);
    for (int n = 0; n < sc.N; ++n)
    {
        const int x = n % side, y = n / side;
        double v = std::fmod(-two_pi * sc.spacing_ratio * (x * p + y * q), two_pi);
        if (v < 0.0)
            v += two_pi;
        if (v >= two_pi)
            v = 0.0;
        theta(n) = v;
    }
    return theta;
}

arma::vec aligned_phases(const ScenarioConfig &sc, int k)
{
    if (k < 0 || k >= sc.K)
        throw config_error("aligned_phases: user index out of range");
    return steered_phases(sc, sc.angles.ris_arrival[k]);
}

bool is_aligned(const ScenarioConfig &sc, const arma::vec &phases, int k)
{
    const auto g = ris_gain(phases, sc.angles.ris_departure, sc.angles.ris_arrival[k], sc.spacing_ratio);
    return std::abs(g.total) > aligned_threshold * sc.N;
}

double limit_aligned_N_infinity(const DerivedHardware &hw, int M)
{
    if (!(hw.tau < 1.0))
        throw config_error("limit undefined for an infinite-resolution ADC (tau = 1)");
    const double i2 = hw.iota * hw.iota;
    return std::log2(hw.tau * i2 * M / (1 - hw.tau) + (1 - i2 * hw.tau) / (1 - hw.tau));
}

namespace
{
// sum_{i != k} alpha_i (mu_k+1) / (alpha_k (mu_i+1)) (mu_i + 1 - rho^2 mu_i), optionally power weighted
double interference_ratio(const ScenarioConfig &sc, int k, bool power_weighted)
{
    const double r2 = sc.derived.rho * sc.derived.rho;
    double s = 0.0;
    for (int i = 0; i < sc.K; ++i)
    {
        if (i == k)
            continue;
        const double pw = power_weighted ? sc.power(i) / sc.power(k) : 1.0;
        s += pw * sc.alpha(i) * (sc.mu(k) + 1) / (sc.alpha(k) * (sc.mu(i) + 1)) * (sc.mu(i) + 1 - r2 * sc.mu(i));
    }
    return s;
}

double unaligned_signal(const ScenarioConfig &sc, int k)
{
    const double r2 = sc.derived.rho * sc.derived.rho, d = sc.delta, mk = sc.mu(k);
    return r2 / (d * d) * std::pow(mk + d + 1, 2) + mk + 1 - r2 * mk;
}

void require_los_ris(const ScenarioConfig &sc)
{
    if (!(sc.delta > 0.0))
        throw config_error("M,N -> infinity limits need rician_delta > 0");
}
} // namespace

arma::vec limit_MN_infinity(const ScenarioConfig &sc)
{
    require_los_ris(sc);
    arma::vec out(sc.K);
    for (int k = 0; k < sc.K; ++k)
        out(k) = std::log2(1.0 + unaligned_signal(sc, k) / interference_ratio(sc, k, true));
    return out;
}

ScalingConstants scaling_constants(const ScenarioConfig &sc, const arma::vec &phases)
{
    const auto t = closed_form_terms(sc, phases);
    const double tau = sc.derived.tau, i2 = t.iota * t.iota;
    const double kappa2 = sc.hardware.kappa * sc.hardware.kappa, beta2 = sc.beta * sc.beta;
    const double d = sc.delta;
    ScalingConstants s;
    s.Gamma.set_size(sc.K);
    s.Gamma_ki.zeros(sc.K, sc.K);
    s.varpi = t.varpi;
    for (int k = 0; k < sc.K; ++k)
    {
        const double mk = sc.mu(k), ak = sc.alpha(k);
        s.Gamma(k) = tau * tau * i2 * kappa2 * beta2 * ak * ak / (std::pow(d + 1, 2) * std::pow(mk + 1, 2)) * t.c(k, 0);
        for (int i = 0; i < sc.K; ++i)
            if (i != k)
                s.Gamma_ki(k, i) = tau * tau * i2 * kappa2 * beta2 * ak * sc.alpha(i) /
                                   (std::pow(d + 1, 2) * (mk + 1) * (sc.mu(i) + 1)) * t.z(k, i, 0);
    }
    return s;
}

arma::vec scaled_rate_limit(const ScenarioConfig &sc, const arma::vec &phases, double epsilon, double E_u,
                            ScalingRegime regime, int aligned_user)
{
    if (!(epsilon >= 0.0))
        throw config_error("scaling exponent must be >= 0");
    if (!(E_u > 0.0))
        throw config_error("E_u must be positive");
    const double noise = sc.hardware.sigma_rf2 + sc.hardware.sigma2;
    const double tau = sc.derived.tau, i2 = sc.derived.iota * sc.derived.iota;
    const double kappa2 = sc.hardware.kappa * sc.hardware.kappa;
    arma::vec out(sc.K);

    switch (regime)
    {
    case ScalingRegime::M_only: {
        if (epsilon > 1.0)
            return arma::zeros(sc.K);
        const auto s = scaling_constants(sc, phases);
        for (int k = 0; k < sc.K; ++k)
        {
            const double interf = arma::accu(s.Gamma_ki.row(k));
            double sinr;
            if (epsilon == 1.0)
                sinr = E_u * s.Gamma(k) / (E_u * interf + noise * tau * s.varpi(k));
            else
                sinr = s.Gamma(k) / interf;
            out(k) = std::log2(1.0 + sinr);
        }
        return out;
    }
    case ScalingRegime::MN_unaligned: {
        require_los_ris(sc);
        const double d = sc.delta;
        for (int k = 0; k < sc.K; ++k)
        {
            const double mk = sc.mu(k);
            const double noise_term = noise * (mk + d + 1) * (d + 1) * (mk + 1) /
                                      (E_u * i2 * kappa2 * tau * sc.beta * sc.alpha(k) * d * d);
            out(k) = std::log2(1.0 + unaligned_signal(sc, k) / (interference_ratio(sc, k, false) + noise_term));
        }
        return out;
    }
    case ScalingRegime::MN_aligned: {
        require_los_ris(sc);
        if (aligned_user < 0 || aligned_user >= sc.K)
            throw config_error("aligned user index out of range");
        out.fill(std::numeric_limits<double>::quiet_NaN());
        const int k = aligned_user;
        const double d = sc.delta, mk = sc.mu(k);
        const double r2 = sc.derived.rho * sc.derived.rho;
        const double noise_term =
            noise * (d + 1) * (mk + 1) / (E_u * tau * i2 * kappa2 * sc.beta * sc.alpha(k) * d);
        out(k) = std::log2(1.0 + r2 * mk / (interference_ratio(sc, k, false) + noise_term));
        return out;
    }
    }
    throw config_error("unknown scaling regime");
}

} // namespace risim
