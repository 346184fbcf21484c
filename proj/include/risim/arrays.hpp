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
#include <complex>

namespace risim
{

// sin(pi x)/(pi x), exactly 1 near 0
double sinc(double x);

// sqrt(X), throws config_error when X is not a perfect square
int square_side(int X);

// Uniform square planar array response. Element i (0-based) sits at
// x_i = i mod sqrt(X), y_i = floor(i / sqrt(X)) and has phase
// 2 pi d (x_i sin(phi1) sin(phi2) + y_i cos(phi2)).
arma::cx_vec steering_vector(int X, double phi1, double phi2, double spacing_ratio);
arma::cx_vec steering_vector(int X, const ArrayAngles &a, double spacing_ratio);

// sum_n conj(a1_n) a2_n
std::complex<double> steering_inner_product(const arma::cx_vec &a1, const arma::cx_vec &a2);

// Same quantity from the factored sinc form, without building the vectors.
std::complex<double> steering_inner_product_closed(int X, const ArrayAngles &first, const ArrayAngles &second,
                                                   double spacing_ratio);

// One axis of the factored form: sum_{x=0}^{L-1} exp(j 2 pi d x s)
std::complex<double> axis_factor(int L, double s, double spacing_ratio);

struct RisGain
{
    std::complex<double> total;
    arma::cx_vec terms;
};

// f_{k,n} = conj(a_n(phi_t)) e^{j theta_n} a_n(phi_kr)
RisGain ris_gain(const arma::vec &theta, const ArrayAngles &departure, const ArrayAngles &arrival,
                 double spacing_ratio);

} // namespace risim
