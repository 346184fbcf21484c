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

#include "risim/report.hpp"

namespace risim
{

std::string to_string(Method m)
{
    switch (m)
    {
    case Method::mc:
        return "mc";
    case Method::closed:
        return "closed";
    case Method::limit:
        return "limit";
    }
    return "unknown";
}

double pairwise_sum(const double *x, std::size_t n)
{
    if (n <= 8)
    {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            s += x[i];
        return s;
    }
    const std::size_t h = n / 2;
    return pairwise_sum(x, h) + pairwise_sum(x + h, n - h);
}

RateReport make_report(arma::vec per_user, Method method)
{
    RateReport r;
    r.sum_rate = pairwise_sum(per_user.memptr(), per_user.n_elem);
    r.per_user = std::move(per_user);
    r.method = method;
    return r;
}

} // namespace risim
