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

#include "risim/channel.hpp"

#include "risim/arrays.hpp"

#include <cmath>

namespace risim
{

LosComponents los_components(const ScenarioConfig &sc)
{
    LosComponents los;
    los.H_bar.set_size(sc.N, sc.K);
    for (int k = 0; k < sc.K; ++k)
        los.H_bar.col(k) = steering_vector(sc.N, sc.angles.ris_arrival[k], sc.spacing_ratio);
    const arma::cx_vec aM = steering_vector(sc.M, sc.angles.bs_arrival, sc.spacing_ratio);
    const arma::cx_vec aN = steering_vector(sc.N, sc.angles.ris_departure, sc.spacing_ratio);
    los.G_bar = aM * aN.t();
    return los;
}

arma::cx_mat complex_gaussian(arma::uword rows, arma::uword cols, RngStream &rng)
{
    arma::cx_mat out(rows, cols);
    for (arma::uword c = 0; c < cols; ++c)
        for (arma::uword r = 0; r < rows; ++r)
            out(r, c) = rng.complex_normal();
    return out;
}

ChannelRealization sample_channels(const ScenarioConfig &sc, const LosComponents &los, std::uint64_t index)
{
    RngStream user_rng(sc.seed, index, StreamTag::user_channel);
    RngStream ris_rng(sc.seed, index, StreamTag::ris_channel);

    ChannelRealization ch;
    ch.realization_index = index;
    ch.H_bar = los.H_bar;
    ch.G_bar = los.G_bar;
    ch.H_tilde = complex_gaussian(sc.N, sc.K, user_rng);
    ch.G_tilde = complex_gaussian(sc.M, sc.N, ris_rng);

    ch.H.set_size(sc.N, sc.K);
    for (int k = 0; k < sc.K; ++k)
    {
        const double mu = sc.mu(k);
        const double los_w = std::sqrt(mu / (mu + 1.0)), nlos_w = std::sqrt(1.0 / (mu + 1.0));
        ch.H.col(k) = std::sqrt(sc.alpha(k)) * (los_w * ch.H_bar.col(k) + nlos_w * ch.H_tilde.col(k));
    }
    const double d = sc.delta;
    ch.G = std::sqrt(sc.beta) * (std::sqrt(d / (d + 1.0)) * ch.G_bar + std::sqrt(1.0 / (d + 1.0)) * ch.G_tilde);
    return ch;
}

} // namespace risim
