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

#include "risim/hardware.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace risim
{

using Position = std::array<double, 3>;

// Azimuth / elevation pair in radians.
struct ArrayAngles
{
    double azimuth = 0.0;
    double elevation = 0.0;
};

struct AngleSet
{
    ArrayAngles bs_arrival;           // phi_r at the BS
    ArrayAngles ris_departure;        // phi_t at the RIS
    std::vector<ArrayAngles> ris_arrival; // phi_kr, one per user
};

// Raw experiment description as read from a config file. Optional fields get defaults in
// build_scenario.
struct ScenarioInput
{
    int M = 64;
    int N = 16;
    int K = 4;
    Position bs_pos{0.0, 0.0, 25.0};
    Position ris_pos{5.0, 100.0, 30.0};
    std::optional<std::vector<Position>> user_positions;
    double user_circle_radius = 5.0;
    Position user_circle_center{0.0, 0.0, 1.6};
    double spacing_ratio = 0.5;
    double rician_delta = 1.0;
    std::vector<double> rician_mu{10.0};  // one value broadcasts to all users
    std::vector<double> tx_power{1.0};    // watts, one value broadcasts
    double pathloss_exponent = 2.8;
    HardwareProfile hardware;
    std::optional<AngleSet> angles;
    std::uint64_t seed = 1;
    int mc_realizations = 2000;
};

// Validated scenario with large-scale fading and angles resolved. Treat as immutable.
struct ScenarioConfig
{
    ScenarioInput input;
    int M = 0, N = 0, K = 0;
    double spacing_ratio = 0.5;
    double delta = 0.0;
    arma::vec mu;       // K
    arma::vec power;    // K, watts
    arma::vec alpha;    // K, user-RIS large-scale fading
    double beta = 0.0;  // RIS-BS large-scale fading
    std::vector<Position> user_positions;
    AngleSet angles;
    HardwareProfile hardware;
    DerivedHardware derived;
    std::uint64_t seed = 1;
    int mc_realizations = 2000;
};

double pathloss(double distance, double exponent);
double distance(const Position &a, const Position &b);

ScenarioConfig build_scenario(const ScenarioInput &raw);

// Config file I/O (JSON). Unknown keys throw config_error.
ScenarioInput parse_scenario_json(const std::string &text);
ScenarioInput load_scenario_file(const std::string &path);
std::string scenario_to_json(const ScenarioConfig &sc, int indent = 2);

// Shorthands that rebuild a scenario with one field changed.
ScenarioConfig with_dimensions(const ScenarioConfig &sc, int M, int N);
ScenarioConfig with_power(const ScenarioConfig &sc, const arma::vec &power);
ScenarioConfig with_hardware(const ScenarioConfig &sc, const HardwareProfile &hw);

double dbm_to_watt(double dbm);

} // namespace risim
