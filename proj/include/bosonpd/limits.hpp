/*
 * Copyright 2026 The bosonpd developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef BOSONPD_LIMITS_HPP
#define BOSONPD_LIMITS_HPP

#include <cstdint>

namespace bosonpd::limits {

// Size caps for the exponential-time routines. All are plain configuration
// constants; callers that know what they are doing may pass a larger cap to
// the few entry points that accept one.

/// Ryser/Glynn permanents, O(n 2^n).
inline constexpr int kPermanentCap = 24;

/// Permanent by summing all n! diagonals (oracle).
inline constexpr int kNaivePermanentCap = 9;

/// interference_term: brute force over the n! permutations tau.
inline constexpr int kInterferenceCap = 9;

/// Fast derangement-class sums, O(n^2 4^n).
inline constexpr int kDerangementSumCap = 13;

/// Brute-force derangement-class sums, (n!)^2 term pairs.
inline constexpr int kDerangementOracleCap = 7;

/// Eq.-style double sum over S_N x S_N for one output probability.
inline constexpr int kBruteforceProbabilityCap = 7;

/// Convex-sum route: subset-pair enumeration over all block sizes.
inline constexpr int kConvexSumCap = 9;

/// Rearranged route: K-block kernel size.
inline constexpr int kRearrangedBlockCap = 9;

/// Character tables (P(10) = 42 classes).
inline constexpr int kCharacterTableCap = 10;

/// Naive immanant, n! sum weighted by character values.
inline constexpr int kImmanantCap = 9;

/// Gram matrix of size N! x N! for positive-definiteness checks.
inline constexpr int kGramCap = 6;

/// Largest s with !s representable in 64 bits (!21 overflows).
inline constexpr int kSubfactorialCap = 20;

/// Largest n with chi(n) = n! * sum_k 1/k! representable in 64 bits.
inline constexpr int kChiMomentCap = 20;

/// Distribution enumeration: C(M, N) table rows.
inline constexpr std::int64_t kDistributionTableCap = 1'000'000;

/// Imaginary residue of a full-class sum relative to its real part:
/// asserted level, and the level above which the kernel raises.
inline constexpr double kImagResidueSoft = 1e-9;
inline constexpr double kImagResidueHard = 1e-6;

} // namespace bosonpd::limits

#endif
