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

// Acceptance checks. One line per criterion, exit status is the number of failures.
#include "oracles.hpp"

#include "risim/arrays.hpp"
#include "risim/closed_form.hpp"
#include "risim/experiments.hpp"
#include "risim/ga_opt.hpp"
#include "risim/hardware.hpp"
#include "risim/mc_rate.hpp"
#include "risim/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <thread>
#include <unistd.h>

using namespace risim;
namespace fs = std::filesystem;

namespace
{
constexpr double pi = std::numbers::pi;
int failures = 0;

int threads()
{
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

void report(int id, bool ok, const std::string &detail)
{
    std::printf("[%s] %d: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
    std::fflush(stdout);
    failures += ok ? 0 : 1;
}

std::string fmt(const char *f, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

ScenarioConfig defaults(int M, int N)
{
    ScenarioInput raw;
    raw.M = M;
    raw.N = N;
    return build_scenario(raw);
}

void coefficient_oracle()
{
    std::mt19937_64 g(20240611);
    double worst = 0.0;
    int checked = 0, outside = 0;
    for (int trial = 0; trial < 10; ++trial)
    {
        const int M = trial % 2 ? 16 : 4, N = (trial / 2) % 2 ? 16 : 4, K = 1 + trial % 3;
        const auto s = oracle::random_setup(g, M, N, K);
        const auto t = closed_form_terms(oracle::to_scenario(s), arma::vec(s.theta));
        const auto e = oracle::monte_carlo(s, 1000000, 1000 + trial, threads());
        auto check = [&](double closed, double mc, double se) {
            const double z = std::abs(closed - mc) / se;
            worst = std::max(worst, z);
            ++checked;
            outside += z > 3.0;
        };
        for (int k = 0; k < K; ++k)
        {
            check(t.varpi(k), e.varpi(k), e.varpi_se(k));
            for (int i = 0; i < K; ++i)
                check(i == k ? t.xi(k) : t.gamma(k, i), e.xg(k, i), e.xg_se(k, i));
        }
        check(t.zeta, e.zeta, e.zeta_se);
    }
    report(1, outside == 0, fmt("%d coefficients, %d beyond 3 se, max |z| = %.2f", checked, outside, worst));
}

void closed_form_agreement()
{
    double worst_random = 0.0, worst_ga = 0.0;
    std::string where;
    for (int M : {16, 64, 144})
        for (int N : {16, 64})
        {
            const auto sc = defaults(M, N);
            McOptions opt;
            opt.realizations = 2000;
            opt.threads = threads();
            GaParams gp;
            gp.seed = 7;
            gp.threads = threads();
            const arma::vec ph[2] = {random_phases(N, 11), optimize(sc, gp).phases};
            for (int j = 0; j < 2; ++j)
            {
                const auto mc = ergodic_rate_mc(sc, ph[j], opt);
                const auto cf = rate_closed_form(sc, ph[j]);
                const double gap = arma::max(arma::abs(mc.per_user - cf.per_user) / mc.per_user);
                double &w = j == 0 ? worst_random : worst_ga;
                if (gap > w)
                {
                    w = gap;
                    if (gap >= std::max(worst_random, worst_ga))
                        where = fmt("M=%d N=%d %s", M, N, j == 0 ? "random" : "ga");
                }
            }
        }
    const bool ok = worst_random <= 0.05 && worst_ga <= 0.05;
    report(2, ok, fmt("worst per-user |MC-closed|/MC: random phases %.2f%%, GA phases %.2f%% (worst at %s)",
                      100 * worst_random, 100 * worst_ga, where.c_str()));
}

void quantizer_table()
{
    const double table[] = {0.3634, 0.1175, 0.03454, 0.009497, 0.002499};
    bool ok = true;
    for (int b = 1; b <= 5; ++b)
    {
        const auto q = quantizer_params(b);
        ok = ok && q.varrho == table[b - 1] && q.tau == 1.0 - table[b - 1];
    }
    const double b8 = quantizer_params(8).varrho;
    ok = ok && std::abs(b8 - 4.1515e-5) <= 1e-9;
    report(3, ok, fmt("b=1..5 table exact, b=8 gives %.6e", b8));
}

void aligned_limit()
{
    const auto base = defaults(64, 4096);
    const double target = limit_aligned_N_infinity(base.derived, 64);
    double worst = 0.0;
    std::string per;
    for (int k = 0; k < base.K; ++k)
    {
        const double r = rate_closed_form(base, aligned_phases(base, k)).per_user(k);
        worst = std::max(worst, std::abs(r - target));
        per += fmt(" %.4f", r);
    }
    report(4, worst <= 0.1, fmt("limit %.4f, aligned rates%s, max gap %.4f", target, per.c_str(), worst));
}

void power_scaling()
{
    const double Eu = 10.0;
    const arma::vec ph = random_phases(16, 1);
    bool decreasing = true;
    double prev = std::numeric_limits<double>::infinity(), last14 = 0, first14 = 0;
    double gap1 = 0;
    for (int M : {64, 256, 1024, 4096})
    {
        auto sc = defaults(M, 16);
        const double r14 = rate_closed_form(with_power(sc, arma::vec(sc.K, arma::fill::value(Eu / std::pow(M, 1.4)))), ph).sum_rate;
        decreasing = decreasing && r14 < prev;
        if (M == 64)
            first14 = r14;
        prev = last14 = r14;
        const auto s1 = with_power(sc, arma::vec(sc.K, arma::fill::value(Eu / M)));
        const double lim = arma::accu(scaled_rate_limit(s1, ph, 1.0, Eu, ScalingRegime::M_only));
        gap1 = std::abs(rate_closed_form(s1, ph).sum_rate - lim) / lim;
    }
    report(5, decreasing && gap1 <= 0.03,
           fmt("eps=1.4 sum rate %.4g -> %.4g %s, eps=1 final gap to limit %.2f%%", first14, last14,
               decreasing ? "decreasing" : "not monotone", 100 * gap1));
}

void hardware_trends()
{
    const auto base = defaults(64, 16);
    const arma::vec ph = random_phases(16, 1);
    auto sweep = [&](const std::vector<double> &grid, auto set, int dir) {
        bool ok = true;
        double prev = 0;
        std::vector<double> rates;
        for (std::size_t j = 0; j < grid.size(); ++j)
        {
            auto hw = base.hardware;
            set(hw, grid[j]);
            const double r = rate_closed_form(with_hardware(base, hw), ph).sum_rate;
            if (j > 0)
                ok = ok && (dir > 0 ? r >= prev : r <= prev);
            prev = r;
            rates.push_back(r);
        }
        return std::pair{ok, rates};
    };
    const auto [u, ru] = sweep({0, 1, 2, 5, 10, 20, 50, 100}, [](auto &h, double v) { h.upsilon = v; }, 1);
    const auto [k, rk] = sweep({0.5, 0.6, 0.7, 0.8, 0.9, 1.0}, [](auto &h, double v) { h.kappa = v; }, 1);
    const auto [e, re] = sweep({0, pi / 12, pi / 6, pi / 4, pi / 3, 5 * pi / 12, pi / 2},
                               [](auto &h, double v) { h.eta = v; }, -1);
    const auto [b, rb] = sweep({1, 2, 3, 4, 5, 6, 8, 10, 12}, [](auto &h, double v) { h.bits = int(v); }, 1);
    const double sat = (rb.back() - rb[4]) / rb.back();
    report(6, u && k && e && b && sat <= 0.01,
           fmt("upsilon %s, kappa %s, eta %s, bits %s, b=5 vs b=12 gap %.3f%%", u ? "ok" : "not monotone",
               k ? "ok" : "not monotone", e ? "ok" : "not monotone", b ? "ok" : "not monotone", 100 * sat));
}

void ga_behaviour()
{
    bool beats = true, monotone = true;
    std::string margins;
    for (int M : {16, 36, 64, 100, 144})
    {
        const auto sc = defaults(M, 16);
        GaParams p;
        p.seed = 3;
        p.threads = threads();
        const auto res = optimize(sc, p);
        const double rnd = rate_closed_form(sc, random_phases(16, 3)).sum_rate;
        beats = beats && res.best_fitness > rnd;
        monotone = monotone && std::is_sorted(res.history.begin(), res.history.end());
        margins += fmt(" %.3f/%.3f", res.best_fitness, rnd);
    }
    double worst = 0.0;
    for (auto [N, B] : {std::pair{16, 6}, std::pair{64, 3}})
    {
        const auto sc = defaults(64, N);
        GaParams p;
        p.seed = 5;
        p.threads = threads();
        const double cont = optimize(sc, p).best_fitness;
        p.grid_bits = B;
        const double disc = optimize(sc, p).best_fitness;
        worst = std::max(worst, (cont - disc) / cont);
    }
    report(7, beats && monotone && worst <= 0.02,
           fmt("GA/random sum rate%s; history %s; discrete shortfall %.2f%%", margins.c_str(),
               monotone ? "non-decreasing" : "decreases", 100 * worst));
}

void exactness()
{
    double rayleigh = 0.0;
    std::mt19937_64 g(99);
    for (int trial = 0; trial < 10; ++trial)
    {
        auto s = oracle::random_setup(g, 16, 16, 3);
        s.delta = 0.0;
        s.mu.assign(3, 0.0);
        const auto sc = oracle::to_scenario(s);
        const arma::vec th(s.theta);
        const auto a = rate_closed_form(sc, th), b = rate_rayleigh(sc, th);
        rayleigh = std::max(rayleigh, arma::max(arma::abs(a.per_user - b.per_user) / a.per_user));
    }
    double steer = 0.0;
    std::uniform_real_distribution<double> u(0.0, 2 * pi);
    for (int X : {4, 16, 64, 256})
        for (int trial = 0; trial < 20; ++trial)
        {
            const ArrayAngles a1{u(g), u(g)}, a2{u(g), u(g)};
            const auto direct = steering_inner_product(steering_vector(X, a1, 0.5), steering_vector(X, a2, 0.5));
            const auto closed = steering_inner_product_closed(X, a1, a2, 0.5);
            steer = std::max(steer, std::abs(direct - closed) / std::max(1.0, std::abs(direct)));
        }
    double align = 0.0;
    for (int N : {16, 64, 256, 1024, 4096})
    {
        const auto sc = defaults(64, N);
        for (int k = 0; k < sc.K; ++k)
        {
            const auto gk = ris_gain(aligned_phases(sc, k), sc.angles.ris_departure, sc.angles.ris_arrival[k],
                                     sc.spacing_ratio);
            align = std::max(align, std::abs(std::abs(gk.total) - N));
        }
    }
    report(8, rayleigh <= 1e-10 && steer <= 1e-10 && align <= 1e-9,
           fmt("Rayleigh vs general %.2e, steering closed vs direct %.2e, aligned ||f|-N| %.2e", rayleigh, steer,
               align));
}

std::string slurp(const fs::path &p)
{
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void determinism()
{
    const fs::path dir = fs::temp_directory_path() / fs::path("risim_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const auto cfg = dir / "config.json";
    std::ofstream(cfg) << R"({"M": 16, "N": 16, "seed": 42, "mc_realizations": 100})";
    bool ok = true;
    int files = 0;
    std::string bad;
    for (const auto &kind : experiment_kinds())
    {
        for (const char *run : {"a", "b"})
        {
            const std::string cmd = std::string(RISIM_CLI) + " run --config " + cfg.string() + " --experiment " +
                                    kind + " --generations 30 --threads 4 --out " + (dir / run / kind).string() +
                                    " > /dev/null 2>&1";
            ok = ok && std::system(cmd.c_str()) == 0;
        }
        for (const auto &f : fs::directory_iterator(dir / "a" / kind))
        {
            if (f.path().extension() != ".csv")
                continue;
            ++files;
            if (slurp(f.path()) != slurp(dir / "b" / kind / f.path().filename()))
            {
                ok = false;
                bad += " " + f.path().filename().string();
            }
        }
    }
    fs::remove_all(dir);
    report(9, ok && files > 0, fmt("%d CSV files compared across reruns%s%s", files, bad.empty() ? "" : ", differ:",
                                   bad.c_str()));
}
} // namespace

int main()
{
    coefficient_oracle();
    closed_form_agreement();
    quantizer_table();
    aligned_limit();
    power_scaling();
    hardware_trends();
    ga_behaviour();
    exactness();
    determinism();
    return failures == 0 ? 0 : 1;
}
