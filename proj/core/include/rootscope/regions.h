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

// Membership predicates for the five regions the root-localisation results
// are phrased in, and a per-instance report checking each of them:
//
//   R1  (|z| - 1)(|z+1| - 1) < 0        root-free
//   R2  |z+1| > 1, Re z < -1/2           root-free
//   R3  |z+1| < 1, Re z > -1/2           root-free
//   R4  |z| > 1,   Re z > -1/2           free of non-real roots
//   R5  |z| <= 1,  Re z <= -1/2          closed lens holding every root
//                                        except the positive one

#ifndef ROOTSCOPE_REGIONS_H_
#define ROOTSCOPE_REGIONS_H_

#include <array>
#include <string_view>
#include <vector>

#include "rootscope/solvers.h"
#include "rootscope/types.h"

namespace rootscope {

enum class RegionId { kR1, kR2, kR3, kR4, kR5 };

inline constexpr std::array<RegionId, 5> kAllRegions = {
    RegionId::kR1, RegionId::kR2, RegionId::kR3, RegionId::kR4,
    RegionId::kR5};

inline constexpr double kDefaultRegionMargin = 1e-7;

std::string_view RegionName(RegionId id);

// For the open regions R1..R4 every strict inequality must hold with at
// least `margin` to spare, so margin shrinks the region. R5 is closed and
// margin grows it: |z| <= 1 + margin and Re z <= -1/2 + margin.
// margin = 0 gives the literal predicates. margin must be >= 0.
bool InRegion(RegionId id, ComplexValue z, double margin = 0.0);

struct RegionViolation {
  RegionId region;
  ComplexValue root;
};

struct RegionReport {
  int n = 0;
  std::vector<RegionViolation> violations;
  // Roots other than the positive one that lie in (margin-grown) R5.
  int r5_members = 0;
  // Roots within margin of e^{+-2 pi i/3}.
  std::vector<ComplexValue> boundary_roots;

  bool ok() const { return violations.empty(); }
};

// Flags every root in R1, R2 or R3, every non-real root in R4, and every
// root other than the positive one outside R5.
RegionReport VerifyExclusions(const RootSet& rs,
                              double margin = kDefaultRegionMargin);

// n = 4 (mod 6): exactly the n for which e^{+-2 pi i/3} are roots.
bool IsSpecialN(int n);

}  // namespace rootscope

#endif  // ROOTSCOPE_REGIONS_H_
