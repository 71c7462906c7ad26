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

// Closed-form approximants for the three root families.

#ifndef ROOTSCOPE_ASYMPTOTICS_H_
#define ROOTSCOPE_ASYMPTOTICS_H_

#include <array>
#include <string_view>

#include "rootscope/types.h"

namespace rootscope {

// Two readings of the first-order correction for the non-real roots near
// e^{2 pi i/3}. Both share the phase correction -pi i/(3n); they differ in
// the real part of the modulus correction:
//   kStatement:  1 + pi sqrt(3)/n
//   kDerivation: 1 + pi sqrt(3)/(3n)   (what e^{i delta} ~ 1 + i delta gives
//                                       for delta = (2 pi/3n) e^{-2 pi i/3})
enum class ComplexApproxVariant { kStatement, kDerivation };

inline constexpr std::array<ComplexApproxVariant, 2> kAllComplexVariants = {
    ComplexApproxVariant::kStatement, ComplexApproxVariant::kDerivation};

std::string_view VariantId(ComplexApproxVariant v);
std::string_view VariantDescription(ComplexApproxVariant v);

// n / (ln n - ln ln n). Requires n >= 2.
double ApproxPositiveRoot(int n);

// n / W0(n). Requires n >= 1.
double ApproxPositiveRootLambert(int n);

// -1/2 - ln 2 / (4n) for odd n. Even n has no negative root and throws
// DomainError.
//
// The same correction is sometimes quoted as -ln n/(4n); that form does not
// follow from the first-order balance of the real parts and is not used.
double ApproxNegativeRoot(int n);

// e^{s 2 pi i/3} (1 + a/n - s i pi/(3n)) with s = sign (+1 or -1) and a as
// selected by the variant. sign = -1 gives the exact conjugate of sign = +1.
// Requires n >= 2.
ComplexValue ApproxComplexRoot(int n, int sign, ComplexApproxVariant variant);

}  // namespace rootscope

#endif  // ROOTSCOPE_ASYMPTOTICS_H_
