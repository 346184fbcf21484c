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

#include "risim/mc_rate.hpp"

#include "risim/closed_form.hpp"

#include <cmath>
#include <thread>

namespace risim
{

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)> &f)
{
    const std::size_t workers = std::min<std::size_t>(std::max(threads, 1), std::max<std::size_t>(n, 1));
    if (workers <= 1)
    {
        for (std::size_t i = 0; i < n; ++i)
            f(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            try
            {
                for (std::size_t i = w; i < n; i += workers)
                    f(i);
            }
            catch (...)
            {
                errors[w] = std::current_exception();
            }
        });
    for (auto &t : pool)
        t.join();
    for (auto &e : errors)
        if (e)
            std::rethrow_exception(e);
}

InstantaneousTerms instantaneous_sinr(const ChannelRealization &ch, const arma::cx_vec &theta_noise,
                                      const arma::cx_vec &chi, const arma::vec &phases, const ScenarioConfig &sc,
                                      SqMode mode, double marginal_zeta)
{
    const arma::uword M = ch.G.n_rows, N = ch.G.n_cols, K = ch.H.n_cols;
    if (ch.H.n_rows != N || theta_noise.n_elem != N || phases.n_elem != N || chi.n_elem != M ||
        sc.power.n_elem != K)
        throw config_error("instantaneous_sinr: dimension mismatch");
    const double tau = sc.derived.tau;
    if (!(tau > 0.0 && tau <= 1.0))
        throw config_error("instantaneous_sinr: tau must lie in (0, 1]");

    const arma::cx_vec phi = arma::exp(std::complex<double>(0.0, 1.0) * arma::cx_vec(phases, arma::zeros(N)));
    const arma::cx_mat GP = ch.G * arma::diagmat(phi);
    const arma::cx_mat V = GP * ch.H;                                                  // v_k columns
    const arma::cx_mat U = arma::diagmat(chi) * GP * arma::diagmat(theta_noise) * ch.H; // u_i columns
    const arma::cx_mat C = V.t() * U;

    arma::vec sq;
    if (mode == SqMode::conditional)
        sq = sq_diagonal(U, sc.power, sc.hardware.sigma_rf2, sc.hardware.sigma2);
    else
        sq = arma::vec(M, arma::fill::value(marginal_zeta + sc.hardware.sigma_rf2 + sc.hardware.sigma2));

    InstantaneousTerms t;
    t.signal.set_size(K);
    t.interference.zeros(K, K);
    t.dn.set_size(K);
    t.an.set_size(K);
    t.qn.set_size(K);
    t.sinr.set_size(K);
    const double tau2 = tau * tau;
    for (arma::uword k = 0; k < K; ++k)
    {
        t.signal(k) = sc.power(k) * tau2 * std::norm(C(k, k));
        double interf = 0.0;
        for (arma::uword i = 0; i < K; ++i)
            if (i != k)
            {
                t.interference(k, i) = sc.power(i) * tau2 * std::norm(C(k, i));
                interf += t.interference(k, i);
            }
        const arma::vec mag2 = arma::square(arma::abs(V.col(k)));
        const double vnorm2 = arma::accu(mag2);
        t.dn(k) = tau2 * sc.hardware.sigma_rf2 * vnorm2;
        t.an(k) = tau2 * sc.hardware.sigma2 * vnorm2;
        t.qn(k) = tau * (1.0 - tau) * arma::dot(sq, mag2);
        const double den = interf + t.dn(k) + t.an(k) + t.qn(k);
        t.sinr(k) = t.signal(k) > 0.0 ? t.signal(k) / den : 0.0;
    }
    return t;
}

namespace
{
struct Impairments
{
    arma::cx_vec theta_noise, chi;
};

Impairments draw_impairments(const ScenarioConfig &sc, std::uint64_t index)
{
    RngStream pn(sc.seed, index, StreamTag::phase_noise);
    RngStream rf(sc.seed, index, StreamTag::rf_chain);
    return {sample_phase_noise(sc.hardware.upsilon, sc.N, pn),
            sample_rf_chains(sc.hardware.kappa, sc.hardware.eta, sc.M, rf)};
}

// mean and standard error of x
std::pair<double, double> mean_stderr(const arma::vec &x)
{
    const std::size_t n = x.n_elem;
    const double mean = pairwise_sum(x.memptr(), n) / n;
    if (n < 2)
        return {mean, 0.0};
    const arma::vec dev = arma::square(x - mean);
    const double var = pairwise_sum(dev.memptr(), n) / (n - 1);
    return {mean, std::sqrt(var / n)};
}
} // namespace

RateReport ergodic_rate_mc(const ScenarioConfig &sc, const arma::vec &phases, const McOptions &opt)
{
    if (opt.realizations < 1)
        throw config_error("ergodic_rate_mc: need at least one realization");
    const auto los = los_components(sc);
    double zeta = 0.0;
    if (opt.sq_mode == SqMode::marginal)
        zeta = closed_form_terms(sc, phases).zeta;

    const std::size_t T = opt.realizations;
    arma::mat rates(T, sc.K);
    parallel_for(T, opt.threads, [&](std::size_t t) {
        const auto ch = sample_channels(sc, los, t);
        const auto imp = draw_impairments(sc, t);
        const auto terms = instantaneous_sinr(ch, imp.theta_noise, imp.chi, phases, sc, opt.sq_mode, zeta);
        rates.row(t) = arma::log2(1.0 + terms.sinr).t();
    });

    arma::vec mean(sc.K), se(sc.K);
    for (int k = 0; k < sc.K; ++k)
    {
        const auto [m, s] = mean_stderr(rates.col(k));
        mean(k) = m;
        se(k) = s;
    }
    RateReport r = make_report(mean, Method::mc);
    r.stderr_mc = se;
    return r;
}

CoefficientEstimate estimate_coefficients(const ScenarioConfig &sc, const arma::vec &phases, int samples,
                                          int threads)
{
    const auto los = los_components(sc);
    const arma::uword K = sc.K, N = sc.N;
    const arma::uword stats = K * K + K + 1;
    constexpr std::size_t chunk = 4096;
    const std::size_t chunks = (samples + chunk - 1) / chunk;
    // per chunk: sums then sums of squares
    arma::mat partial(2 * stats, chunks, arma::fill::zeros);
    const arma::cx_vec phi = arma::exp(std::complex<double>(0.0, 1.0) * arma::cx_vec(phases, arma::zeros(N)));

    parallel_for(chunks, threads, [&](std::size_t c) {
        arma::vec acc(2 * stats, arma::fill::zeros);
        const std::size_t end = std::min<std::size_t>((c + 1) * chunk, samples);
        for (std::size_t s = c * chunk; s < end; ++s)
        {
            const auto ch = sample_channels(sc, los, s);
            const auto imp = draw_impairments(sc, s);
            const arma::cx_mat GP = ch.G * arma::diagmat(phi);
            const arma::cx_mat V = GP * ch.H;
            const arma::cx_mat U = arma::diagmat(imp.chi) * GP * arma::diagmat(imp.theta_noise) * ch.H;
            const arma::cx_mat C = V.t() * U;
            arma::uword j = 0;
            auto push = [&](double v) {
                acc(j) += v;
                acc(stats + j) += v * v;
                ++j;
            };
            for (arma::uword i = 0; i < K; ++i)
                for (arma::uword k = 0; k < K; ++k)
                    push(std::norm(C(k, i)));
            for (arma::uword k = 0; k < K; ++k)
                push(arma::mean(arma::square(arma::abs(V.col(k)))));
            const arma::mat P2 = arma::square(arma::abs(U));
            push(arma::mean(P2 * sc.power));
        }
        partial.col(c) = acc;
    });

    arma::vec total(2 * stats, arma::fill::zeros);
    for (std::size_t c = 0; c < chunks; ++c)
        total += partial.col(c);
    const double n = samples;
    auto mean_at = [&](arma::uword j) { return total(j) / n; };
    auto se_at = [&](arma::uword j) {
        const double m = total(j) / n;
        const double var = std::max(total(stats + j) / n - m * m, 0.0) * n / std::max(n - 1.0, 1.0);
        return std::sqrt(var / n);
    };

    CoefficientEstimate e;
    e.xi_gamma.set_size(K, K);
    e.xi_gamma_se.set_size(K, K);
    arma::uword j = 0;
    for (arma::uword i = 0; i < K; ++i)
        for (arma::uword k = 0; k < K; ++k, ++j)
        {
            e.xi_gamma(k, i) = mean_at(j);
            e.xi_gamma_se(k, i) = se_at(j);
        }
    e.varpi.set_size(K);
    e.varpi_se.set_size(K);
    for (arma::uword k = 0; k < K; ++k, ++j)
    {
        e.varpi(k) = mean_at(j);
        e.varpi_se(k) = se_at(j);
    }
    e.zeta = mean_at(j);
    e.zeta_se = se_at(j);
    return e;
}

} // namespace risim
