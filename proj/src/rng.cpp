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

#include "risim/rng.hpp"

namespace risim
{

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

namespace
{
std::seed_seq make_seed(std::uint64_t seed, std::uint64_t index, StreamTag tag)
{
    std::uint64_t h = splitmix64(seed);
    h = splitmix64(h ^ index);
    h = splitmix64(h ^ static_cast<std::uint64_t>(tag));
    const std::uint64_t h2 = splitmix64(h);
    return std::seed_seq{static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32),
                         static_cast<std::uint32_t>(h2), static_cast<std::uint32_t>(h2 >> 32)};
}
} // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t index, StreamTag tag)
{
    auto seq = make_seed(seed, index, tag);
    engine_.seed(seq);
}

double RngStream::uniform() { return unit_(engine_); }

double RngStream::uniform(double lo, double hi) { return lo + (hi - lo) * unit_(engine_); }

double RngStream::normal() { return normal_(engine_); }

std::complex<double> RngStream::complex_normal()
{
    constexpr double s = 0.70710678118654752440;
    const double re = normal_(engine_);
    const double im = normal_(engine_);
    return {s * re, s * im};
}

std::uint64_t RngStream::index_below(std::uint64_t n)
{
    return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(engine_);
}

} // namespace risim
