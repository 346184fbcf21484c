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

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <numeric>

namespace risim
{

namespace
{
constexpr double two_pi = 2.0 * std::numbers::pi;

double grid_size(int bits) { return std::ldexp(1.0, bits); }

double random_gene(RngStream &rng, const std::optional<int> &grid_bits)
{
    if (grid_bits)
        return static_cast<double>(rng.index_below(static_cast<std::uint64_t>(grid_size(*grid_bits))));
    return rng.uniform(0.0, two_pi);
}
} // namespace

void validate(const GaParams &p)
{
    if (p.population < 2)
        throw config_error("GA population must be >= 2");
    if (p.elites < 0 || p.elites >= p.population)
        throw config_error("GA elite count must satisfy 0 <= N_e < N_tot");
    if ((p.population - p.elites) % 2 != 0)
        throw config_error("GA requires N_tot - N_e to be even");
    if (!(p.p_crossover >= 0.0 && p.p_crossover <= 1.0) || !(p.p_mutation >= 0.0 && p.p_mutation <= 1.0))
        throw config_error("GA probabilities must lie in [0, 1]");
    if (p.max_generations < 1)
        throw config_error("GA needs at least one generation");
    if (p.grid_bits && (*p.grid_bits < 1 || *p.grid_bits > 30))
        throw config_error("GA grid bits must lie in [1, 30]");
}

arma::vec genes_to_phases(const arma::vec &genes, const std::optional<int> &grid_bits)
{
    if (!grid_bits)
        return genes;
    return genes * (two_pi / grid_size(*grid_bits));
}

FitnessFn closed_form_fitness(const ScenarioConfig &sc)
{
    auto geo = std::make_shared<const LosGeometry>(los_geometry(sc));
    return [sc, geo](const arma::vec &phases) {
        const auto t = closed_form_terms(sc, ris_gains(*geo, phases), geo->gram);
        const arma::vec r = arma::log2(1.0 + closed_form_sinr(sc, t));
        return arma::accu(r);
    };
}

double fitness(const Individual &ind, const ScenarioConfig &sc, const std::optional<int> &grid_bits)
{
    return rate_closed_form(sc, genes_to_phases(ind.genes, grid_bits)).sum_rate;
}

std::size_t select_index(const std::vector<double> &scaled, double draw)
{
    if (scaled.empty())
        throw config_error("select: empty population");
    double acc = 0.0;
    for (std::size_t j = 0; j < scaled.size(); ++j)
    {
        acc += scaled[j];
        if (draw <= acc)
            return j;
    }
    // rounding left the total just below draw
    return scaled.size() - 1;
}

std::size_t select(const std::vector<double> &scaled, RngStream &rng)
{
    return select_index(scaled, rng.uniform());
}

std::pair<arma::vec, arma::vec> crossover_at(const arma::vec &p1, const arma::vec &p2, arma::uword cut)
{
    if (p1.n_elem != p2.n_elem)
        throw config_error("crossover: parents differ in length");
    arma::vec c1 = p1, c2 = p2;
    const arma::uword N = p1.n_elem;
    if (cut < N)
    {
        c1.subvec(cut, N - 1) = p2.subvec(cut, N - 1);
        c2.subvec(cut, N - 1) = p1.subvec(cut, N - 1);
    }
    return {c1, c2};
}

std::pair<arma::vec, arma::vec> crossover(const arma::vec &p1, const arma::vec &p2, double p_c, RngStream &rng)
{
    if (p1.n_elem != p2.n_elem)
        throw config_error("crossover: parents differ in length");
    const double c1 = rng.uniform();
    const double c2 = rng.uniform();
    if (c1 > p_c)
        return {p1, p2};
    const auto cut = static_cast<arma::uword>(std::max(1.0, std::ceil(c2 * p1.n_elem)));
    return crossover_at(p1, p2, cut);
}

arma::vec mutate(const arma::vec &child, double p_m, RngStream &rng, const std::optional<int> &grid_bits)
{
    arma::vec out = child;
    for (arma::uword i = 0; i < out.n_elem; ++i)
        if (rng.uniform() < p_m)
            out(i) = random_gene(rng, grid_bits);
    return out;
}

arma::vec random_phases(arma::uword N, std::uint64_t seed, std::uint64_t index)
{
    RngStream rng(seed, index, StreamTag::random_phases);
    arma::vec th(N);
    for (auto &v : th)
        v = rng.uniform(0.0, two_pi);
    return th;
}

GaResult optimize(const ScenarioConfig &sc, const GaParams &params)
{
    return optimize(sc.N, closed_form_fitness(sc), params);
}

GaResult optimize(arma::uword N, const FitnessFn &fit, const GaParams &params)
{
    validate(params);
    RngStream rng(params.seed, 0, StreamTag::genetic);
    const std::size_t P = params.population;

    std::vector<Individual> pop(P);
    for (auto &ind : pop)
    {
        ind.genes.set_size(N);
        for (auto &g : ind.genes)
            g = random_gene(rng, params.grid_bits);
    }

    GaResult result;
    for (int gen = 1;; ++gen)
    {
        parallel_for(P, params.threads, [&](std::size_t i) {
            pop[i].fitness = fit(genes_to_phases(pop[i].genes, params.grid_bits));
        });
        std::stable_sort(pop.begin(), pop.end(),
                         [](const Individual &a, const Individual &b) { return a.fitness > b.fitness; });
        result.history.push_back(pop.front().fitness);
        if (gen >= params.max_generations || pop.front().fitness > params.target_fitness)
            break;

        std::vector<double> scaled(P);
        const double total = std::accumulate(pop.begin(), pop.end(), 0.0,
                                             [](double s, const Individual &ind) { return s + ind.fitness; });
        for (std::size_t j = 0; j < P; ++j)
            scaled[j] = total > 0.0 ? pop[j].fitness / total : 1.0 / P;

        std::vector<Individual> next(pop.begin(), pop.begin() + params.elites);
        while (next.size() < P)
        {
            const auto &a = pop[select(scaled, rng)];
            const auto &b = pop[select(scaled, rng)];
            auto [c1, c2] = crossover(a.genes, b.genes, params.p_crossover, rng);
            next.push_back({mutate(c1, params.p_mutation, rng, params.grid_bits), 0.0});
            next.push_back({mutate(c2, params.p_mutation, rng, params.grid_bits), 0.0});
        }
        pop = std::move(next);
    }

    result.genes = pop.front().genes;
    result.phases = genes_to_phases(result.genes, params.grid_bits);
    result.best_fitness = pop.front().fitness;
    return result;
}

} // namespace risim
