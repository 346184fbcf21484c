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

#include "risim/report.hpp"
#include "risim/scenario.hpp"

namespace risim
{

// `corrected` adds the three terms missing from the printed c_{k,1}, c_{k,3}, z_{ki,2};
// `printed` is the literal form, kept for comparison.
enum class CoefficientForm
{
    corrected,
    printed
};

struct ClosedFormTerms
{
    arma::vec xi;      // K
    arma::mat gamma;   // K x K, zero diagonal
    arma::vec varpi;   // K
    double zeta = 0.0;
    arma::mat c;       // K x 4
    arma::cube z;      // K x K x 4, slice j holds z_{ki,j+1}
    arma::cx_vec f;    // f_k
    arma::cx_mat los_gram; // (k, i) = h_bar_k^H h_bar_i
    double rho = 0.0, iota = 1.0;
};

ClosedFormTerms closed_form_terms(const ScenarioConfig &sc, const arma::vec &phases,
                                  CoefficientForm form = CoefficientForm::corrected);

// LoS quantities that do not depend on the phases.
struct LosGeometry
{
    arma::cx_mat cascade; // N x K, conj(a_N(phi_t)) .* a_N(phi_kr)
    arma::cx_mat gram;    // (k, i) = h_bar_k^H h_bar_i
};

LosGeometry los_geometry(const ScenarioConfig &sc);
arma::cx_vec ris_gains(const LosGeometry &g, const arma::vec &phases);

ClosedFormTerms closed_form_terms(const ScenarioConfig &sc, const arma::cx_vec &f, const arma::cx_mat &gram,
                                  CoefficientForm form = CoefficientForm::corrected);

// Closed-form SINR from precomputed terms.
arma::vec closed_form_sinr(const ScenarioConfig &sc, const ClosedFormTerms &t);

RateReport rate_closed_form(const ScenarioConfig &sc, const arma::vec &phases,
                            CoefficientForm form = CoefficientForm::corrected);

// Explicit Rayleigh expression (mu_k = 0, delta = 0). Throws config_error otherwise.
RateReport rate_rayleigh(const ScenarioConfig &sc, const arma::vec &phases,
                         CoefficientForm form = CoefficientForm::corrected);

// theta that makes |f_k| = N
arma::vec aligned_phases(const ScenarioConfig &sc, int k);
// theta that points the RIS reflection at an arbitrary arrival direction
arma::vec steered_phases(const ScenarioConfig &sc, const ArrayAngles &arrival);

constexpr double aligned_threshold = 0.999;
bool is_aligned(const ScenarioConfig &sc, const arma::vec &phases, int k);

// N -> infinity with the RIS aligned to the user.
double limit_aligned_N_infinity(const DerivedHardware &hw, int M);

// M, N -> infinity with no user aligned.
arma::vec limit_MN_infinity(const ScenarioConfig &sc);

struct ScalingConstants
{
    arma::vec Gamma;      // Gamma_k
    arma::mat Gamma_ki;   // zero diagonal
    arma::vec varpi;      // varpi_k, needed at epsilon = 1
};

ScalingConstants scaling_constants(const ScenarioConfig &sc, const arma::vec &phases);

enum class ScalingRegime
{
    M_only,       // p = E_u / M^epsilon, M -> infinity
    MN_unaligned, // p = E_u / (M N), M, N -> infinity
    MN_aligned    // p_k = E_u / (M N^2), others E_u / (M N); RIS aligned to user k
};

// Per-user limit. For MN_aligned only the aligned user `k` is meaningful; the entry for k is
// returned and the others are NaN.
arma::vec scaled_rate_limit(const ScenarioConfig &sc, const arma::vec &phases, double epsilon, double E_u,
                            ScalingRegime regime, int aligned_user = 0);

} // namespace risim
