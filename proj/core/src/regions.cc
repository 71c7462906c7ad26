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

#include "rootscope/regions.h"

#include <cmath>

namespace rootscope {

std::string_view RegionName(RegionId id) {
  switch (id) {
    case RegionId::kR1:
      return "R1";
    case RegionId::kR2:
      return "R2";
    case RegionId::kR3:
      return "R3";
    case RegionId::kR4:
      return "R4";
    case RegionId::kR5:
      return "R5";
  }
  return "?";
}

bool InRegion(RegionId id, ComplexValue z, double margin) {
  if (!(margin >= 0.0)) throw DomainError("InRegion: margin must be >= 0");
  const double mod = std::abs(z);
  const double mod1 = std::abs(1.0 + z);
  const double re = z.real();
  switch (id) {
    case RegionId::kR1:
      return (mod < 1.0 - margin && mod1 > 1.0 + margin) ||
             (mod > 1.0 + margin && mod1 < 1.0 - margin);
    case RegionId::kR2:
      return mod1 > 1.0 + margin && re < -0.5 - margin;
    case RegionId::kR3:
      return mod1 < 1.0 - margin && re > -0.5 + margin;
    case RegionId::kR4:
      return mod > 1.0 + margin && re > -0.5 + margin;
    case RegionId::kR5:
      return mod <= 1.0 + margin && re <= -0.5 + margin;
  }
  return false;
}

RegionReport VerifyExclusions(const RootSet& rs, double margin) {
  RegionReport report;
  report.n = rs.n;
  for (const RootEstimate& r : rs.roots) {
    const ComplexValue z = r.value;
    const RootKind kind = KindOf(z);
    for (const RegionId id : {RegionId::kR1, RegionId::kR2, RegionId::kR3}) {
      if (InRegion(id, z, margin)) report.violations.push_back({id, z});
    }
    if (kind == RootKind::kNonReal && InRegion(RegionId::kR4, z, margin)) {
      report.violations.push_back({RegionId::kR4, z});
    }
    if (kind != RootKind::kPositive) {
      if (InRegion(RegionId::kR5, z, margin)) {
        ++report.r5_members;
      } else {
        report.violations.push_back({RegionId::kR5, z});
      }
    }
    if (std::abs(z - UpperSpecialRoot()) <= margin ||
        std::abs(z - LowerSpecialRoot()) <= margin) {
      report.boundary_roots.push_back(z);
    }
  }
  return report;
}

bool IsSpecialN(int n) {
  if (n < 1) throw DomainError("IsSpecialN: requires n >= 1");
  return n % 6 == 4;
}

}  // namespace rootscope
