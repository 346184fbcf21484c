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

#include <cstdint>
#include <stdexcept>
#include <optional>
#include <string>
#include <vector>

namespace risim
{

// NaN detected in a result. Maps to exit code 3.
class numeric_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

enum class PhaseMode
{
    random,
    optimized
};

struct ExperimentSpec
{
    std::string kind;
    std::vector<double> sweep;        // empty: kind default
    std::vector<std::string> methods; // empty: kind default
    PhaseMode phases = PhaseMode::random;
    std::string out_dir = ".";
    int threads = 1;
    int ga_generations = 2000;
};

const std::vector<std::string> &experiment_kinds();

struct CsvTable
{
    std::string name; // file stem
    std::string header;
    std::vector<std::string> rows;
};

// Runs the experiment and returns the tables without touching the disk.
std::vector<CsvTable> run_experiment(const ScenarioConfig &sc, const ExperimentSpec &spec);

// Runs, writes the CSV files and a manifest into spec.out_dir. Returns written paths.
std::vector<std::string> run(const ScenarioConfig &sc, const ExperimentSpec &spec);

std::string format_double(double v);

} // namespace risim
