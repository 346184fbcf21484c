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

#include "risim/scenario.hpp"

#include "risim/arrays.hpp"

#include <cmath>
#include <fstream>
#include <json.hpp>
#include <numbers>
#include <set>
#include <sstream>

namespace risim
{

using nlohmann::json;

double pathloss(double l, double exponent)
{
    if (!(l > 0.0) || !std::isfinite(l))
        throw config_error("pathloss: distance must be positive");
    if (!(exponent > 0.0))
        throw config_error("pathloss: exponent must be positive");
    return std::pow(l, -exponent) / 1000.0;
}

double distance(const Position &a, const Position &b)
{
    return std::hypot(a[0] - b[0], a[1] - b[1], a[2] - b[2]);
}

double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

namespace
{
arma::vec broadcast(const std::vector<double> &v, int K, const char *name)
{
    if (v.size() == 1)
        return arma::vec(K, arma::fill::value(v.front()));
    if (v.size() != static_cast<std::size_t>(K))
        throw config_error(std::string(name) + ": expected 1 or K values");
    return arma::vec(v);
}

std::vector<Position> sample_users(const ScenarioInput &raw)
{
    RngStream rng(raw.seed, 0, StreamTag::geometry);
    std::vector<Position> out;
    for (int k = 0; k < raw.K; ++k)
    {
        const double r = raw.user_circle_radius * std::sqrt(rng.uniform());
        const double a = rng.uniform(0.0, 2.0 * std::numbers::pi);
        const auto &c = raw.user_circle_center;
        out.push_back({c[0] + r * std::cos(a), c[1] + r * std::sin(a), c[2]});
    }
    return out;
}

AngleSet sample_angles(const ScenarioInput &raw)
{
    RngStream rng(raw.seed, 0, StreamTag::angles);
    auto draw = [&] { return rng.uniform(0.0, 2.0 * std::numbers::pi); };
    AngleSet a;
    a.bs_arrival.azimuth = draw();
    a.bs_arrival.elevation = draw();
    a.ris_departure.azimuth = draw();
    a.ris_departure.elevation = draw();
    for (int k = 0; k < raw.K; ++k)
    {
        ArrayAngles u;
        u.azimuth = draw();
        u.elevation = draw();
        a.ris_arrival.push_back(u);
    }
    return a;
}

bool finite(const ArrayAngles &a) { return std::isfinite(a.azimuth) && std::isfinite(a.elevation); }
} // namespace

ScenarioConfig build_scenario(const ScenarioInput &raw)
{
    square_side(raw.M);
    square_side(raw.N);
    if (raw.K < 1)
        throw config_error("K must be >= 1");
    if (!(raw.spacing_ratio > 0.0))
        throw config_error("spacing_ratio must be positive");
    if (!(raw.rician_delta >= 0.0))
        throw config_error("rician_delta must be >= 0");
    if (!(raw.pathloss_exponent > 0.0))
        throw config_error("pathloss_exponent must be positive");
    if (raw.mc_realizations < 1)
        throw config_error("mc_realizations must be >= 1");
    if (!(raw.user_circle_radius >= 0.0))
        throw config_error("user_circle_radius must be >= 0");

    ScenarioConfig sc;
    sc.input = raw;
    sc.M = raw.M;
    sc.N = raw.N;
    sc.K = raw.K;
    sc.spacing_ratio = raw.spacing_ratio;
    sc.delta = raw.rician_delta;
    sc.mu = broadcast(raw.rician_mu, raw.K, "rician_mu");
    sc.power = broadcast(raw.tx_power, raw.K, "tx_power");
    if (arma::any(sc.mu < 0.0) || sc.mu.has_nan())
        throw config_error("rician_mu must be >= 0");
    if (!arma::all(sc.power > 0.0))
        throw config_error("tx_power must be positive");

    if (raw.user_positions)
    {
        if (raw.user_positions->size() != static_cast<std::size_t>(raw.K))
            throw config_error("user_positions: expected K entries");
        sc.user_positions = *raw.user_positions;
    }
    else
        sc.user_positions = sample_users(raw);

    sc.beta = pathloss(distance(raw.ris_pos, raw.bs_pos), raw.pathloss_exponent);
    sc.alpha.set_size(raw.K);
    for (int k = 0; k < raw.K; ++k)
        sc.alpha(k) = pathloss(distance(sc.user_positions[k], raw.ris_pos), raw.pathloss_exponent);

    if (raw.angles)
    {
        if (raw.angles->ris_arrival.size() != static_cast<std::size_t>(raw.K))
            throw config_error("angles.ris_arrival: expected K entries");
        bool ok = finite(raw.angles->bs_arrival) && finite(raw.angles->ris_departure);
        for (const auto &a : raw.angles->ris_arrival)
            ok = ok && finite(a);
        if (!ok)
            throw config_error("angles must be finite");
        sc.angles = *raw.angles;
    }
    else
        sc.angles = sample_angles(raw);

    sc.hardware = raw.hardware;
    sc.derived = derive(raw.hardware);
    sc.seed = raw.seed;
    sc.mc_realizations = raw.mc_realizations;
    return sc;
}

ScenarioConfig with_dimensions(const ScenarioConfig &sc, int M, int N)
{
    ScenarioInput raw = sc.input;
    raw.M = M;
    raw.N = N;
    return build_scenario(raw);
}

ScenarioConfig with_power(const ScenarioConfig &sc, const arma::vec &power)
{
    ScenarioInput raw = sc.input;
    raw.tx_power = arma::conv_to<std::vector<double>>::from(power);
    return build_scenario(raw);
}

ScenarioConfig with_hardware(const ScenarioConfig &sc, const HardwareProfile &hw)
{
    // geometry, path loss and angles are kept as they are
    ScenarioConfig out = sc;
    out.hardware = hw;
    out.derived = derive(hw);
    out.input.hardware = hw;
    return out;
}

// ---- config file ----

namespace
{
void reject_unknown(const json &j, const std::set<std::string> &allowed, const std::string &where)
{
    if (!j.is_object())
        throw config_error(where + ": expected an object");
    for (const auto &[key, _] : j.items())
        if (!allowed.contains(key))
            throw config_error(where + ": unknown key '" + key + "'");
}

template <typename T>
T get(const json &j, const std::string &key, const std::string &where)
{
    try
    {
        return j.at(key).get<T>();
    }
    catch (const json::exception &e)
    {
        throw config_error(where + "." + key + ": " + e.what());
    }
}

Position get_position(const json &j, const std::string &where)
{
    if (!j.is_array() || j.size() != 3)
        throw config_error(where + ": expected [x, y, z]");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

ArrayAngles get_angles(const json &j, const std::string &where)
{
    if (!j.is_array() || j.size() != 2)
        throw config_error(where + ": expected [azimuth, elevation]");
    return {j[0].get<double>(), j[1].get<double>()};
}

std::vector<double> scalar_or_list(const json &j, const std::string &where)
{
    if (j.is_number())
        return {j.get<double>()};
    if (j.is_array())
        return j.get<std::vector<double>>();
    throw config_error(where + ": expected a number or a list");
}
} // namespace

ScenarioInput parse_scenario_json(const std::string &text)
{
    json j;
    try
    {
        j = json::parse(text);
    }
    catch (const json::parse_error &e)
    {
        throw config_error(std::string("config parse error: ") + e.what());
    }
    reject_unknown(j,
                   {"M", "N", "K", "bs_pos", "ris_pos", "user_positions", "user_circle_radius", "spacing_ratio",
                    "rician_delta", "rician_mu", "tx_power", "pathloss_exponent", "hardware", "angles", "seed",
                    "mc_realizations"},
                   "config");
    ScenarioInput raw;
    try
    {
        if (j.contains("M"))
            raw.M = get<int>(j, "M", "config");
        if (j.contains("N"))
            raw.N = get<int>(j, "N", "config");
        if (j.contains("K"))
            raw.K = get<int>(j, "K", "config");
        if (j.contains("bs_pos"))
            raw.bs_pos = get_position(j["bs_pos"], "bs_pos");
        if (j.contains("ris_pos"))
            raw.ris_pos = get_position(j["ris_pos"], "ris_pos");
        if (j.contains("user_positions"))
        {
            std::vector<Position> users;
            for (const auto &u : j["user_positions"])
                users.push_back(get_position(u, "user_positions"));
            raw.user_positions = users;
        }
        if (j.contains("user_circle_radius"))
            raw.user_circle_radius = get<double>(j, "user_circle_radius", "config");
        if (j.contains("spacing_ratio"))
            raw.spacing_ratio = get<double>(j, "spacing_ratio", "config");
        if (j.contains("rician_delta"))
            raw.rician_delta = get<double>(j, "rician_delta", "config");
        if (j.contains("rician_mu"))
            raw.rician_mu = scalar_or_list(j["rician_mu"], "rician_mu");
        if (j.contains("tx_power"))
            raw.tx_power = scalar_or_list(j["tx_power"], "tx_power");
        if (j.contains("pathloss_exponent"))
            raw.pathloss_exponent = get<double>(j, "pathloss_exponent", "config");
        if (j.contains("seed"))
            raw.seed = get<std::uint64_t>(j, "seed", "config");
        if (j.contains("mc_realizations"))
            raw.mc_realizations = get<int>(j, "mc_realizations", "config");
        if (j.contains("hardware"))
        {
            const json &h = j["hardware"];
            reject_unknown(h, {"upsilon", "kappa", "eta", "sigma_rf2", "sigma2", "b"}, "hardware");
            auto &hw = raw.hardware;
            if (h.contains("upsilon"))
                hw.upsilon = get<double>(h, "upsilon", "hardware");
            if (h.contains("kappa"))
                hw.kappa = get<double>(h, "kappa", "hardware");
            if (h.contains("eta"))
                hw.eta = get<double>(h, "eta", "hardware");
            if (h.contains("sigma_rf2"))
                hw.sigma_rf2 = get<double>(h, "sigma_rf2", "hardware");
            if (h.contains("sigma2"))
                hw.sigma2 = get<double>(h, "sigma2", "hardware");
            if (h.contains("b"))
                hw.bits = get<int>(h, "b", "hardware");
        }
        if (j.contains("angles"))
        {
            const json &a = j["angles"];
            reject_unknown(a, {"bs_arrival", "ris_departure", "ris_arrival"}, "angles");
            AngleSet set;
            set.bs_arrival = get_angles(a.at("bs_arrival"), "angles.bs_arrival");
            set.ris_departure = get_angles(a.at("ris_departure"), "angles.ris_departure");
            for (const auto &u : a.at("ris_arrival"))
                set.ris_arrival.push_back(get_angles(u, "angles.ris_arrival"));
            raw.angles = set;
        }
    }
    catch (const json::exception &e)
    {
        throw config_error(std::string("config: ") + e.what());
    }
    return raw;
}

ScenarioInput load_scenario_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw config_error("cannot read config file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_scenario_json(ss.str());
}

std::string scenario_to_json(const ScenarioConfig &sc, int indent)
{
    auto pos = [](const Position &p) { return json::array({p[0], p[1], p[2]}); };
    auto ang = [](const ArrayAngles &a) { return json::array({a.azimuth, a.elevation}); };
    json j;
    j["M"] = sc.M;
    j["N"] = sc.N;
    j["K"] = sc.K;
    j["bs_pos"] = pos(sc.input.bs_pos);
    j["ris_pos"] = pos(sc.input.ris_pos);
    j["user_positions"] = json::array();
    for (const auto &u : sc.user_positions)
        j["user_positions"].push_back(pos(u));
    j["user_circle_radius"] = sc.input.user_circle_radius;
    j["spacing_ratio"] = sc.spacing_ratio;
    j["rician_delta"] = sc.delta;
    j["rician_mu"] = arma::conv_to<std::vector<double>>::from(sc.mu);
    j["tx_power"] = arma::conv_to<std::vector<double>>::from(sc.power);
    j["pathloss_exponent"] = sc.input.pathloss_exponent;
    j["hardware"] = {{"upsilon", sc.hardware.upsilon}, {"kappa", sc.hardware.kappa},
                     {"eta", sc.hardware.eta},         {"sigma_rf2", sc.hardware.sigma_rf2},
                     {"sigma2", sc.hardware.sigma2},   {"b", sc.hardware.bits}};
    json a;
    a["bs_arrival"] = ang(sc.angles.bs_arrival);
    a["ris_departure"] = ang(sc.angles.ris_departure);
    a["ris_arrival"] = json::array();
    for (const auto &u : sc.angles.ris_arrival)
        a["ris_arrival"].push_back(ang(u));
    j["angles"] = a;
    j["seed"] = sc.seed;
    j["mc_realizations"] = sc.mc_realizations;
    return j.dump(indent);
}

} // namespace risim
