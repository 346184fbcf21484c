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

#include "risim/scenario.hpp"

#include <armadillo>
#include <cstdint>

namespace risim
{

struct LosComponents
{
    arma::cx_mat H_bar; // N x K, columns a_N(phi_kr)
    arma::cx_mat G_bar; // M x N, a_M(phi_r) a_N(phi_t)^H
};

struct ChannelRealization
{
    arma::cx_mat H, G;
    arma::cx_mat H_bar, G_bar;
    arma::cx_mat H_tilde, G_tilde;
    std::uint64_t realization_index = 0;
};

LosComponents los_components(const ScenarioConfig &sc);

// Draws H_tilde and G_tilde from the streams of realization `index`.
ChannelRealization sample_channels(const ScenarioConfig &sc, const LosComponents &los, std::uint64_t index);

arma::cx_mat complex_gaussian(arma::uword rows, arma::uword cols, RngStream &rng);

} // namespace risim
