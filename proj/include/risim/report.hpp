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

#include <armadillo>
#include <string>

namespace risim
{

enum class Method
{
    mc,
    closed,
    limit
};

std::string to_string(Method m);

struct RateReport
{
    arma::vec per_user;   // bits/s/Hz
    arma::vec stderr_mc;  // empty unless method == mc
    double sum_rate = 0.0;
    Method method = Method::closed;
};

RateReport make_report(arma::vec per_user, Method method);

// Deterministic pairwise sum, independent of thread count.
double pairwise_sum(const double *x, std::size_t n);

} // namespace risim
