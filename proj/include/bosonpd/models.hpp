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

#ifndef BOSONPD_MODELS_HPP
#define BOSONPD_MODELS_HPP

#include <optional>
#include <string>
#include <vector>

#include "bosonpd/limits.hpp"
#include "bosonpd/rational.hpp"
#include "bosonpd/symgroup.hpp"

namespace bosonpd {

/// Weight function on S_N determined by the fixed-point count alone:
/// F(sigma) = a[m] when sigma has exactly m fixed points.
///
/// The uniform and cutoff families are normalized (a[N] = 1). The rearranged
/// family is a probability *factor*, not a normalized weight: its top
/// coefficient is 1/C(N,K), so normalization is deliberately not enforced
/// for it.
struct FixedPointModel {
    int n_total = 0;
    std::vector<double> a; ///< size n_total + 1
    std::string label;
    /// Present whenever the model was built from an exact rational x;
    /// required by the exact positivity routines.
    std::optional<std::vector<Rational>> a_exact;

    double evaluate(const Permutation& p) const;
    bool normalized() const;
};

FixedPointModel model_uniform(int N, double x);
FixedPointModel model_uniform(int N, const Rational& x);
FixedPointModel model_cutoff(int N, int R, double x);
FixedPointModel model_cutoff(int N, int R, const Rational& x);
FixedPointModel model_rearranged(int N, int K, int R, double x);
FixedPointModel model_rearranged(int N, int K, int R, const Rational& x);
FixedPointModel model_custom(std::vector<double> a, std::string label = "custom");

/// Binomial-transform coefficients b and the sufficient positivity verdict:
/// every b_n >= 0 certifies positive definiteness (the converse fails, so a
/// negative b proves nothing about the Gram spectrum).
struct PositivityCertificate {
    std::vector<double> b;
    std::optional<std::vector<Rational>> b_exact;
    bool sufficient_pd = false;
    double min_b = 0.0;
    bool exact = false;
};

/// Floating tolerance used by the inexact path: b above -1e-12 counts as
/// non-negative; the rational path has no tolerance.
inline constexpr double kPositivityTolerance = 1e-12;

PositivityCertificate binomial_transform(const FixedPointModel& model, bool exact = false);

/// Minimum eigenvalue of the N! x N! Gram matrix J(s1 s2^-1). Negative values
/// certify non-positive-definiteness.
double gram_min_eigenvalue(const FixedPointModel& model, int cap = limits::kGramCap);

/// Largest x in (0, 1] (dyadic, denominator <= 2^40) whose rearranged-model
/// coefficients b_{K-R}..b_K are all >= 0, by exact-rational bisection. The
/// bracket is post-validated by exact sign checks at x* and just above it.
Rational positivity_threshold(int N, int K, int R);

double evaluate(const FixedPointModel& model, const Permutation& p);

} // namespace bosonpd

#endif
