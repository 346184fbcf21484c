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

#include "risim/closed_form.hpp"
#include "risim/ga_opt.hpp"
#include "risim/mc_rate.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <numbers>
#include <set>

namespace risim
{

namespace
{
constexpr const char *rate_header = "sweep_param,value,user,method,rate_bps_hz,stderr,sum_rate";
constexpr double power_scaling_Eu = 10.0; // watts

const std::vector<std::string> kinds{"rate_vs_M",      "power_scaling", "rate_vs_upsilon",
                                     "rate_vs_kappa",  "rate_vs_eta",   "rate_vs_bits",
                                     "discrete_vs_continuous", "optimize_only", "validate_mc"};

std::vector<double> default_sweep(const std::string &kind)
{
    constexpr double pi = std::numbers::pi;
    if (kind == "rate_vs_M")
        return {16, 36, 64, 100, 144};
    if (kind == "power_scaling")
        return {64, 256, 1024, 4096};
    if (kind == "rate_vs_upsilon")
        return {0, 1, 2, 5, 10, 20, 50, 100};
    if (kind == "rate_vs_kappa")
        return {0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
    if (kind == "rate_vs_eta")
        return {0, pi / 12, pi / 6, pi / 4, pi / 3, pi / 2};
    if (kind == "rate_vs_bits")
        return {1, 2, 3, 4, 5, 6, 8, 10, 12};
    if (kind == "discrete_vs_continuous")
        return {1, 2, 3, 4, 5, 6};
    return {};
}

std::vector<std::string> default_methods(const std::string &kind)
{
    if (kind == "power_scaling")
        return {"mc", "closed", "limit"};
    if (kind == "discrete_vs_continuous" || kind == "optimize_only")
        return {"closed"};
    return {"mc", "closed"};
}

void check_nan(double v, const std::string &what)
{
    if (std::isnan(v))
        throw numeric_error("NaN detected in " + what);
}

class RateRunner
{
public:
    RateRunner(const ExperimentSpec &spec, std::vector<std::string> methods)
        : spec_(spec), methods_(std::move(methods))
    {
        for (const auto &m : methods_)
            if (m != "mc" && m != "closed" && m != "limit")
                throw config_error("unknown method '" + m + "'");
    }

    bool wants(const std::string &m) const
    {
        return std::find(methods_.begin(), methods_.end(), m) != methods_.end();
    }

    arma::vec phases_for(const ScenarioConfig &sc) const
    {
        if (spec_.phases == PhaseMode::random)
            return random_phases(sc.N, sc.seed);
        GaParams p;
        p.seed = sc.seed;
        p.threads = spec_.threads;
        p.max_generations = spec_.ga_generations;
        return optimize(sc, p).phases;
    }

    void add(CsvTable &table, const std::string &param, double value, const RateReport &r) const
    {
        for (arma::uword k = 0; k < r.per_user.n_elem; ++k)
        {
            check_nan(r.per_user(k), param + "=" + format_double(value));
            std::string se;
            if (r.method == Method::mc)
            {
                check_nan(r.stderr_mc(k), "standard error");
                se = format_double(r.stderr_mc(k));
            }
            table.rows.push_back(param + "," + format_double(value) + "," + std::to_string(k) + "," +
                                 to_string(r.method) + "," + format_double(r.per_user(k)) + "," + se + "," +
                                 format_double(r.sum_rate));
        }
    }

    // mc and closed rows for one scenario
    void evaluate(CsvTable &table, const std::string &param, double value, const ScenarioConfig &sc,
                  const arma::vec &phases) const
    {
        if (wants("mc"))
        {
            McOptions o;
            o.realizations = sc.mc_realizations;
            o.threads = spec_.threads;
            add(table, param, value, ergodic_rate_mc(sc, phases, o));
        }
        if (wants("closed"))
            add(table, param, value, rate_closed_form(sc, phases));
    }

    void forbid_limit(const std::string &kind) const
    {
        if (wants("limit"))
            throw config_error("method 'limit' is not available for " + kind);
    }

private:
    const ExperimentSpec &spec_;
    std::vector<std::string> methods_;
};

int as_int(double v, const char *what)
{
    const double r = std::round(v);
    if (std::abs(v - r) > 1e-9)
        throw config_error(std::string(what) + " sweep values must be integers");
    return static_cast<int>(r);
}

std::vector<CsvTable> hardware_sweep(const ScenarioConfig &sc, const ExperimentSpec &spec, const RateRunner &run,
                                     const std::vector<double> &sweep)
{
    run.forbid_limit(spec.kind);
    const std::string param = spec.kind.substr(8); // after "rate_vs_"
    CsvTable t{spec.kind, rate_header, {}};
    const arma::vec phases = run.phases_for(sc);
    for (double v : sweep)
    {
        HardwareProfile hw = sc.hardware;
        if (param == "upsilon")
            hw.upsilon = v;
        else if (param == "kappa")
            hw.kappa = v;
        else if (param == "eta")
            hw.eta = v;
        else
            hw.bits = as_int(v, "bits");
        run.evaluate(t, param == "bits" ? "b" : param, v, with_hardware(sc, hw), phases);
    }
    return {t};
}

std::vector<CsvTable> validate_table(const ScenarioConfig &sc, const ExperimentSpec &spec)
{
    const arma::vec phases = random_phases(sc.N, sc.seed);
    const auto cf = closed_form_terms(sc, phases);
    const auto pr = closed_form_terms(sc, phases, CoefficientForm::printed);
    const auto est = estimate_coefficients(sc, phases, sc.mc_realizations, spec.threads);
    CsvTable t{"validate_mc", "coefficient,k,i,closed,closed_printed,mc_mean,mc_stderr,z_score", {}};
    auto row = [&](const std::string &name, const std::string &k, const std::string &i, double c, double p,
                   double m, double se) {
        const double z = se > 0.0 ? (m - c) / se : 0.0;
        check_nan(c, name);
        check_nan(m, name);
        t.rows.push_back(name + "," + k + "," + i + "," + format_double(c) + "," + format_double(p) + "," +
                         format_double(m) + "," + format_double(se) + "," + format_double(z));
    };
    for (int k = 0; k < sc.K; ++k)
    {
        const auto ks = std::to_string(k);
        row("xi", ks, "", cf.xi(k), pr.xi(k), est.xi_gamma(k, k), est.xi_gamma_se(k, k));
        for (int i = 0; i < sc.K; ++i)
            if (i != k)
                row("gamma", ks, std::to_string(i), cf.gamma(k, i), pr.gamma(k, i), est.xi_gamma(k, i),
                    est.xi_gamma_se(k, i));
        row("varpi", ks, "", cf.varpi(k), pr.varpi(k), est.varpi(k), est.varpi_se(k));
    }
    row("zeta", "", "", cf.zeta, pr.zeta, est.zeta, est.zeta_se);
    return {t};
}
} // namespace

const std::vector<std::string> &experiment_kinds() { return kinds; }

std::string format_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::vector<CsvTable> run_experiment(const ScenarioConfig &sc, const ExperimentSpec &spec)
{
    if (std::find(kinds.begin(), kinds.end(), spec.kind) == kinds.end())
        throw config_error("unknown experiment kind '" + spec.kind + "'");
    const auto sweep = spec.sweep.empty() ? default_sweep(spec.kind) : spec.sweep;
    const RateRunner run(spec, spec.methods.empty() ? default_methods(spec.kind) : spec.methods);
    if (spec.kind != "optimize_only" && spec.kind != "validate_mc" && sweep.empty())
        throw config_error("empty sweep");

    if (spec.kind == "rate_vs_M")
    {
        run.forbid_limit(spec.kind);
        CsvTable t{spec.kind, rate_header, {}};
        for (double v : sweep)
        {
            const auto s = with_dimensions(sc, as_int(v, "M"), sc.N);
            run.evaluate(t, "M", v, s, run.phases_for(s));
        }
        return {t};
    }

    if (spec.kind == "power_scaling")
    {
        std::vector<CsvTable> out;
        const arma::vec phases = run.phases_for(sc);
        for (double eps : {1.0, 1.4})
        {
            CsvTable t{"power_scaling_eps" + format_double(eps), rate_header, {}};
            for (double v : sweep)
            {
                const int M = as_int(v, "M");
                const double p = power_scaling_Eu / std::pow(M, eps);
                const auto s = with_power(with_dimensions(sc, M, sc.N), arma::vec(sc.K, arma::fill::value(p)));
                run.evaluate(t, "M", v, s, phases);
                if (run.wants("limit"))
                    run.add(t, "M", v,
                            make_report(scaled_rate_limit(s, phases, eps, power_scaling_Eu, ScalingRegime::M_only),
                                        Method::limit));
            }
            out.push_back(std::move(t));
        }
        return out;
    }

    if (spec.kind.starts_with("rate_vs_"))
        return hardware_sweep(sc, spec, run, sweep);

    if (spec.kind == "discrete_vs_continuous")
    {
        run.forbid_limit(spec.kind);
        CsvTable t{spec.kind, rate_header, {}};
        GaParams p;
        p.seed = sc.seed;
        p.threads = spec.threads;
        p.max_generations = spec.ga_generations;
        for (double v : sweep)
        {
            p.grid_bits = as_int(v, "B");
            run.evaluate(t, "B", v, sc, optimize(sc, p).phases);
        }
        p.grid_bits.reset();
        run.evaluate(t, "continuous", 0.0, sc, optimize(sc, p).phases);
        return {t};
    }

    if (spec.kind == "optimize_only")
    {
        run.forbid_limit(spec.kind);
        GaParams p;
        p.seed = sc.seed;
        p.threads = spec.threads;
        p.max_generations = spec.ga_generations;
        const auto res = optimize(sc, p);
        CsvTable rates{spec.kind, rate_header, {}};
        run.evaluate(rates, "N", sc.N, sc, res.phases);
        CsvTable phases{"optimize_only_phases", "element,theta_rad", {}};
        for (arma::uword n = 0; n < res.phases.n_elem; ++n)
            phases.rows.push_back(std::to_string(n) + "," + format_double(res.phases(n)));
        CsvTable hist{"optimize_only_history", "generation,best_sum_rate", {}};
        for (std::size_t g = 0; g < res.history.size(); ++g)
        {
            check_nan(res.history[g], "GA history");
            hist.rows.push_back(std::to_string(g + 1) + "," + format_double(res.history[g]));
        }
        return {rates, phases, hist};
    }

    return validate_table(sc, spec);
}

std::vector<std::string> run(const ScenarioConfig &sc, const ExperimentSpec &spec)
{
    const auto start = std::chrono::steady_clock::now();
    const auto tables = run_experiment(sc, spec);
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(spec.out_dir, ec);
    std::vector<std::string> written;
    for (const auto &t : tables)
    {
        const auto path = (fs::path(spec.out_dir) / (t.name + ".csv")).string();
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw std::runtime_error("cannot write " + path);
        out << t.header << '\n';
        for (const auto &r : t.rows)
            out << r << '\n';
        if (!out)
            throw std::runtime_error("write failed for " + path);
        written.push_back(path);
    }

    nlohmann::json m;
    m["experiment"] = spec.kind;
    m["seed"] = sc.seed;
    m["tool"] = "risim";
    m["version"] = RISIM_VERSION;
    m["wall_time_s"] = wall;
    m["threads"] = spec.threads;
    m["phases"] = spec.phases == PhaseMode::random ? "random" : "optimized";
    m["files"] = written;
    m["scenario"] = nlohmann::json::parse(scenario_to_json(sc));
    const auto mpath = (fs::path(spec.out_dir) / (spec.kind + "_manifest.json")).string();
    std::ofstream mo(mpath);
    if (!mo)
        throw std::runtime_error("cannot write " + mpath);
    mo << m.dump(2) << '\n';
    written.push_back(mpath);
    return written;
}

} // namespace risim
