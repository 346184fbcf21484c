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

#include "risim/experiments.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

namespace
{
std::vector<std::string> split(const std::string &s)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(item);
    return out;
}
} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"RIS-assisted massive MIMO uplink rate experiments"};
    app.require_subcommand(1);
    auto *run = app.add_subcommand("run", "run one experiment and write CSV plus manifest");

    std::string config, kind, out = ".", sweep, methods, phases = "random";
    std::optional<std::uint64_t> seed;
    std::optional<int> realizations;
    int threads = 1, generations = 2000;
    run->add_option("--config", config, "scenario file (JSON)")->required();
    run->add_option("--experiment", kind, "experiment kind")->required();
    run->add_option("--out", out, "output directory");
    run->add_option("--seed", seed, "override the scenario seed");
    run->add_option("--realizations", realizations, "Monte Carlo realizations");
    run->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    run->add_option("--sweep", sweep, "comma separated sweep values");
    run->add_option("--methods", methods, "comma separated subset of mc,closed,limit");
    run->add_option("--phases", phases, "random or optimized")->check(CLI::IsMember({"random", "optimized"}));
    run->add_option("--generations", generations, "GA generations")->check(CLI::PositiveNumber);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try
    {
        auto raw = risim::load_scenario_file(config);
        if (seed)
            raw.seed = *seed;
        if (realizations)
            raw.mc_realizations = *realizations;
        const auto sc = risim::build_scenario(raw);

        risim::ExperimentSpec spec;
        spec.kind = kind;
        spec.out_dir = out;
        spec.threads = threads;
        spec.ga_generations = generations;
        spec.methods = split(methods);
        spec.phases = phases == "optimized" ? risim::PhaseMode::optimized : risim::PhaseMode::random;
        for (const auto &v : split(sweep))
            spec.sweep.push_back(std::stod(v));

        for (const auto &path : risim::run(sc, spec))
            std::cout << path << '\n';
        return 0;
    }
    catch (const risim::config_error &e)
    {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    }
    catch (const std::invalid_argument &e)
    {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    }
    catch (const risim::numeric_error &e)
    {
        std::cerr << "numeric failure: " << e.what() << '\n';
        return 3;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
