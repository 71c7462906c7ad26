// Copyright 2026 The Rootscope Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "rootscope/solvers.h"

namespace rootscope {

// Kuhn-Munkres with row/column potentials, O(m^3).
double MaxMatchedDistance(const std::vector<ComplexValue>& a,
                          const std::vector<ComplexValue>& b) {
  if (a.size() != b.size()) {
    throw DomainError("MaxMatchedDistance: point sets differ in size");
  }
  const std::size_t m = a.size();
  if (m == 0) return 0.0;
  constexpr double kInf = std::numeric_limits<double>::infinity();

  // 1-based; match[j] is the row assigned to column j.
  std::vector<double> u(m + 1, 0.0), v(m + 1, 0.0);
  std::vector<std::size_t> match(m + 1, 0), way(m + 1, 0);
  for (std::size_t i = 1; i <= m; ++i) {
    match[0] = i;
    std::size_t j0 = 0;
    std::vector<double> min_slack(m + 1, kInf);
    std::vector<bool> used(m + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = match[j0];
      double delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= m; ++j) {
        if (used[j]) continue;
        const double cost = std::abs(a[i0 - 1] - b[j - 1]) - u[i0] - v[j];
        if (cost < min_slack[j]) {
          min_slack[j] = cost;
          way[j] = j0;
        }
        if (min_slack[j] < delta) {
          delta = min_slack[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= m; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          min_slack[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  double worst = 0.0;
  for (std::size_t j = 1; j <= m; ++j) {
    worst = std::max(worst, std::abs(a[match[j] - 1] - b[j - 1]));
  }
  return worst;
}

}  // namespace rootscope
