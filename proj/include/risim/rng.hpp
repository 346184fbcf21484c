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

#include <complex>
#include <cstdint>
#include <random>

namespace risim
{

// Entity tags separate the independent streams drawn for one realization.
enum class StreamTag : std::uint64_t
{
    geometry = 1,
    angles = 2,
    user_channel = 3,
    ris_channel = 4,
    phase_noise = 5,
    rf_chain = 6,
    random_phases = 7,
    genetic = 8,
    oracle = 9
};

// Deterministic stream keyed by (seed, index, tag). Two streams with any differing key are
// statistically independent; the same key always replays the same sequence.
class RngStream
{
public:
    RngStream(std::uint64_t seed, std::uint64_t index, StreamTag tag);

    double uniform();                     // [0, 1)
    double uniform(double lo, double hi); // [lo, hi)
    double normal();                      // N(0, 1)
    std::complex<double> complex_normal(); // CN(0, 1)
    std::uint64_t index_below(std::uint64_t n);

    std::mt19937_64 &engine() { return engine_; }

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> unit_{0.0, 1.0};
};

std::uint64_t splitmix64(std::uint64_t x);

} // namespace risim
