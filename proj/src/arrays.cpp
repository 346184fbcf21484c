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

#include "risim/arrays.hpp"

#include <cmath>
#include <numbers>

namespace risim
{

double sinc(double x)
{
    if (std::abs(x) < 1e-12)
        return 1.0;
    const double px = std::numbers::pi * x;
    return std::sin(px) / px;
}

int square_side(int X)
{
    if (X < 1)
        throw config_error("array size must be a positive perfect square");
    const int s = static_cast<int>(std::lround(std::sqrt(static_cast<double>(X))));
    if (s * s != X)
        throw config_error("array size " + std::to_string(X) + " is not a perfect square");
    return s;
}

arma::cx_vec steering_vector(int X, double phi1, double phi2, double spacing_ratio)
{
    const int side = square_side(X);
    const double kx = 2.0 * std::numbers::pi * spacing_ratio * std::sin(phi1) * std::sin(phi2);
    const double ky = 2.0 * std::numbers::pi * spacing_ratio * std::cos(phi2);
    arma::cx_vec a(X);
    for (int i = 0; i < X; ++i)
    {
        const int x = i % side, y = i / side;
        a(i) = std::polar(1.0, x * kx + y * ky);
    }
    return a;
}

arma::cx_vec steering_vector(int X, const ArrayAngles &a, double spacing_ratio)
{
    return steering_vector(X, a.azimuth, a.elevation, spacing_ratio);
}

std::complex<double> steering_inner_product(const arma::cx_vec &a1, const arma::cx_vec &a2)
{
    if (a1.n_elem != a2.n_elem)
        throw config_error("steering_inner_product: length mismatch");
    return arma::cdot(a1, a2);
}

std::complex<double> axis_factor(int L, double s, double spacing_ratio)
{
    const double u = spacing_ratio * s;
    // u integer: every term is 1
    if (std::abs(std::sin(std::numbers::pi * u)) < 1e-12)
        return {static_cast<double>(L), 0.0};
    return static_cast<double>(L) * sinc(L * u) / sinc(u) * std::polar(1.0, std::numbers::pi * (L - 1) * u);
}

std::complex<double> steering_inner_product_closed(int X, const ArrayAngles &first, const ArrayAngles &second,
                                                   double spacing_ratio)
{
    const int side = square_side(X);
    const double s = std::sin(second.azimuth) * std::sin(second.elevation) -
                     std::sin(first.azimuth) * std::sin(first.elevation);
    const double t = std::cos(second.elevation) - std::cos(first.elevation);
    return axis_factor(side, s, spacing_ratio) * axis_factor(side, t, spacing_ratio);
}

RisGain ris_gain(const arma::vec &theta, const ArrayAngles &departure, const ArrayAngles &arrival,
                 double spacing_ratio)
{
    const int N = static_cast<int>(theta.n_elem);
    if (!theta.is_finite())
        throw config_error("ris_gain: phases must be finite");
    const arma::cx_vec at = steering_vector(N, departure, spacing_ratio);
    const arma::cx_vec ak = steering_vector(N, arrival, spacing_ratio);
    RisGain g;
    g.terms.set_size(N);
    for (int n = 0; n < N; ++n)
        g.terms(n) = std::conj(at(n)) * std::polar(1.0, theta(n)) * ak(n);
    g.total = arma::accu(g.terms);
    return g;
}

} // namespace risim
