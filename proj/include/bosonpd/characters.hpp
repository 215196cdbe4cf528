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

#ifndef BOSONPD_CHARACTERS_HPP
#define BOSONPD_CHARACTERS_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bosonpd/matrix.hpp"
#include "bosonpd/models.hpp"
#include "bosonpd/rational.hpp"
#include "bosonpd/symgroup.hpp"

namespace bosonpd {

/// One real value per conjugacy class, aligned with CharacterTable order.
struct ClassFunction {
    int n = 0;
    std::vector<double> values;
};

struct ClassFunctionExact {
    int n = 0;
    std::vector<Rational> values;
};

/// Fixed-point-count models are class functions: the value on a class is
/// a[#(parts equal to 1)].
ClassFunction to_class_function(const FixedPointModel& model, const CharacterTable& table);
ClassFunction to_class_function(const FixedPointModel& model);
std::optional<ClassFunctionExact> to_class_function_exact(const FixedPointModel& model,
                                                          const CharacterTable& table);

/// Convex weights q_lambda of the normalized-irreducible-character expansion
/// f(sigma) = sum_lambda q_lambda chi_lambda(sigma) / chi_lambda(I).
struct CharacterExpansion {
    int n = 0;
    std::vector<double> q; ///< aligned with CharacterTable partitions
    std::optional<double> x;

    std::string to_json(const CharacterTable& table) const; // keyed "3+1+1"
};

CharacterExpansion expand_class_function(const ClassFunction& f, const CharacterTable& table);
std::vector<Rational> expand_class_function_exact(const ClassFunctionExact& f,
                                                  const CharacterTable& table);

/// Trace of the permutation action on the C(N,n)-dimensional subspace:
/// counts the (N-n)-subsets fixed pointwise, i.e. C(fixed_points(p), N-n).
std::int64_t trace_Ln(int N, int n, const Permutation& p);

/// Inner products of that reducible character against each irreducible one.
/// Reported as exact rationals; integrality is observed, never assumed.
std::vector<Rational> decompose_trace_Ln(int N, int n, const CharacterTable& table);

/// Naive character-weighted diagonal sum, n! terms. lambda = (n) is the
/// permanent, lambda = (1^n) the determinant.
Complex immanant(const ComplexMatrix& a, const IntegerPartition& lambda,
                 int cap = limits::kImmanantCap);

} // namespace bosonpd

#endif
