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

#ifndef BOSONPD_PROBABILITY_HPP
#define BOSONPD_PROBABILITY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bosonpd/kernels.hpp"
#include "bosonpd/matrix.hpp"
#include "bosonpd/models.hpp"

namespace bosonpd {

/// Sorted, strictly increasing output ports (no-collision outcome).
struct OutputConfiguration {
    std::vector<int> ports;

    OutputConfiguration() = default;
    explicit OutputConfiguration(std::vector<int> ports_in);
    std::string to_string() const; // "0-3-5"
    bool operator==(const OutputConfiguration&) const = default;
};

/// Exhaustive no-collision output table for one model and input set, in
/// lexicographic config order.
struct DistributionTable {
    std::vector<OutputConfiguration> configs;
    std::vector<double> probs;
    std::string model_label;

    double sum() const;
    /// Total negative mass sum max(0, -p).
    double negative_mass() const;
    std::string to_csv(std::optional<std::uint64_t> seed = std::nullopt) const;
    std::string to_json(std::optional<std::uint64_t> seed = std::nullopt) const;
};

/// Weighted double sum over S_N x S_N (the defining expression). `outputs`
/// is an arbitrary port tuple; repeats are legal, which the unitarity
/// sum-rule checks rely on.
double probability_bruteforce(const ComplexMatrix& u, const FixedPointModel& model,
                              const std::vector<int>& inputs, const std::vector<int>& outputs,
                              int cap = limits::kBruteforceProbabilityCap);

/// U(D^(N)_n) expanded over blocks: derangement kernel on every n-subset
/// pair times the classical permanent of the complement.
double u_class_sum_expanded(const ComplexMatrix& u, const std::vector<int>& inputs,
                            const std::vector<int>& outputs, int n);

/// Cutoff-model probability via the derangement expansion
/// p = sum_{n<=R} x^n U(D^(N)_n).
double probability_expansion(const ComplexMatrix& u, int R, double x,
                             const std::vector<int>& inputs, const std::vector<int>& outputs);

/// Truncated quantum factor sum_{s<=R} U(D^(n)_s); may be negative once
/// R < n, and is checked non-negative when R >= n (untruncated case).
double quantum_factor_cutoff(const ComplexMatrix& u, int R, const std::vector<int>& inputs,
                             const std::vector<int>& outputs);

/// Convex-sum route: binomial weights times quantum block factors times
/// classical complements. No `cutoff` gives the full model.
double convex_sum_probability(const ComplexMatrix& u, double x, const std::vector<int>& inputs,
                              const std::vector<int>& outputs,
                              std::optional<int> cutoff = std::nullopt);

/// Rearranged route over K-blocks with the inverse-binomial weights;
/// algebraically identical to probability_expansion.
double rearranged_probability(const ComplexMatrix& u, int K, int R, double x,
                              const std::vector<int>& inputs, const std::vector<int>& outputs);

/// Full no-collision table for the model. Honors BOSONPD_THREADS.
DistributionTable enumerate_distribution(const ComplexMatrix& u, const FixedPointModel& model,
                                         const std::vector<int>& inputs);

/// 1/2 sum |p - q| over the shared support; tables must agree on configs.
double total_variation_distance(const DistributionTable& p, const DistributionTable& q);

} // namespace bosonpd

#endif
