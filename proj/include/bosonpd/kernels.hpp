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

#ifndef BOSONPD_KERNELS_HPP
#define BOSONPD_KERNELS_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "bosonpd/limits.hpp"
#include "bosonpd/matrix.hpp"
#include "bosonpd/symgroup.hpp"

namespace bosonpd {

/// Permanent by Ryser's inclusion-exclusion with Gray-code subset stepping,
/// O(n 2^n). The empty matrix has permanent 1.
Complex permanent(const ComplexMatrix& a, int cap = limits::kPermanentCap);
double permanent(const RealMatrix& a, int cap = limits::kPermanentCap);

/// Glynn's formula over +-1 sign vectors, also Gray-coded. Agrees with Ryser
/// to roundoff; kept as an independent route for cross-checks.
Complex permanent_glynn(const ComplexMatrix& a, int cap = limits::kPermanentCap);

/// Oracle: sum over all n! diagonals.
Complex permanent_naive(const ComplexMatrix& a, int cap = limits::kNaivePermanentCap);

/// T(sigma) = sum_tau prod_k conj(U[in[sigma(tau(k))], out[k]]) * U[in[tau(k)], out[k]].
/// Brute force over tau; T(identity) is the permanent of the |U|^2 block.
Complex interference_term(const ComplexMatrix& u, const Permutation& sigma,
                          const std::vector<int>& inputs, const std::vector<int>& outputs,
                          int cap = limits::kInterferenceCap);

/// One derangement-class sum, as a raw complex value.
struct InterferenceResult {
    Complex value;
    int s = 0; ///< class index: permutations with exactly n-s fixed points
    int n = 0; ///< block size
};

/// All class sums U(D^(n)_s), s = 0..n, via the xi-tensor Ryser kernel:
/// double inclusion-exclusion over excluded row/column subsets and Taylor
/// extraction on the n+1 discrete phases xi = exp(2*pi*i*q/(n+1)).
/// O(n^2 4^n). Values are complex; class closure under inversion makes the
/// imaginary parts vanish up to roundoff, which callers check rather than
/// symmetrize away.
std::vector<InterferenceResult> derangement_class_sums(
    const ComplexMatrix& u, const std::vector<int>& inputs, const std::vector<int>& outputs,
    int cap = limits::kDerangementSumCap);

/// Batched entry point: the expensive phase loop runs once, then every
/// requested s is read off. Checks the imaginary-residue invariant and
/// returns real parts.
std::vector<double> derangement_sums(const ComplexMatrix& u, const std::vector<int>& inputs,
                                     const std::vector<int>& outputs,
                                     const std::vector<int>& s_set,
                                     int cap = limits::kDerangementSumCap);

double derangement_sum(const ComplexMatrix& u, const std::vector<int>& inputs,
                       const std::vector<int>& outputs, int s,
                       int cap = limits::kDerangementSumCap);

/// Oracle: direct double sum over the class and over tau, (n!)^2 pairs.
double derangement_sum_bruteforce(const ComplexMatrix& u, const std::vector<int>& inputs,
                                  const std::vector<int>& outputs, int s,
                                  int cap = limits::kDerangementOracleCap);

/// chi(n) = sum over S_n of 2^(number of fixed points) = n! * sum_{k<=n} 1/k!.
std::int64_t chi_moment(int n);

} // namespace bosonpd

#endif
