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

#include "risim/closed_form.hpp"

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

namespace risim
{

struct GaParams
{
    int population = 200;
    int elites = 10;
    double p_crossover = 0.4;
    double p_mutation = 0.1;
    int max_generations = 2000;
    double target_fitness = std::numeric_limits<double>::infinity();
    std::optional<int> grid_bits; // discrete mode when set
    std::uint64_t seed = 1;
    int threads = 1;
};

void validate(const GaParams &p);

// Continuous genes are radians in [0, 2 pi); discrete genes are grid indices stored as doubles.
struct Individual
{
    arma::vec genes;
    double fitness = 0.0;
};

arma::vec genes_to_phases(const arma::vec &genes, const std::optional<int> &grid_bits);

using FitnessFn = std::function<double(const arma::vec &phases)>;

FitnessFn closed_form_fitness(const ScenarioConfig &sc);
double fitness(const Individual &ind, const ScenarioConfig &sc, const std::optional<int> &grid_bits = {});

// Roulette over scaled fitness. `draw` is the uniform number c.
std::size_t select_index(const std::vector<double> &scaled, double draw);
std::size_t select(const std::vector<double> &scaled, RngStream &rng);

std::pair<arma::vec, arma::vec> crossover(const arma::vec &p1, const arma::vec &p2, double p_c, RngStream &rng);
// Single-point swap after gene `cut` (1-based, genes 1..cut kept).
std::pair<arma::vec, arma::vec> crossover_at(const arma::vec &p1, const arma::vec &p2, arma::uword cut);

arma::vec mutate(const arma::vec &child, double p_m, RngStream &rng, const std::optional<int> &grid_bits);

struct GaResult
{
    arma::vec phases;
    arma::vec genes;
    double best_fitness = 0.0;
    std::vector<double> history; // best fitness per generation
};

GaResult optimize(const ScenarioConfig &sc, const GaParams &params);
GaResult optimize(arma::uword N, const FitnessFn &fit, const GaParams &params);

arma::vec random_phases(arma::uword N, std::uint64_t seed, std::uint64_t index = 0);

} // namespace risim
