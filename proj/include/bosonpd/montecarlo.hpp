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

#ifndef BOSONPD_MONTECARLO_HPP
#define BOSONPD_MONTECARLO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bosonpd/matrix.hpp"
#include "bosonpd/probability.hpp"

namespace bosonpd {

enum class Ensemble { haar, ginibre };
std::string to_string(Ensemble e);
Ensemble ensemble_from_string(const std::string& name);

/// Haar-distributed M x M unitary: QR of a Ginibre sample with the
/// R-diagonal phase correction.
ComplexMatrix haar_unitary(int M, std::uint64_t seed, std::uint64_t stream = 0);

/// i.i.d. complex Gaussian entries; real and imaginary parts each carry
/// variance/2 so that <|entry|^2> = variance.
ComplexMatrix ginibre(int rows, int cols, double variance, std::uint64_t seed,
                      std::uint64_t stream = 0);

/// Bin edges are declared up front (never data-dependent); values outside
/// the range are folded into the edge bins so counts always sum to trials.
struct HistogramSpec {
    double lo = 0.0;
    double hi = 1.0;
    int bins = 0; ///< 0 disables the histogram
};

struct Histogram {
    std::vector<double> edges;
    std::vector<std::int64_t> counts;
};

Histogram build_histogram(const HistogramSpec& spec, const std::vector<double>& values);

struct ExperimentConfig {
    std::uint64_t master_seed = 0;
    int trials = 0;
    int n = 0; ///< block size for the negativity experiment
    int N = 0;
    int M = 0;
    int R = 0;
    int K = 0;
    double x = 0.0;
    Ensemble ensemble = Ensemble::ginibre;
    HistogramSpec hist;

    nlohmann::json to_json() const;
};

struct SummaryStats {
    double mean = 0.0;
    double stderr_mean = 0.0;
    double min = 0.0;
    double max = 0.0;
};

SummaryStats summarize(const std::vector<double>& values);

struct ExperimentReport {
    std::string kind;
    nlohmann::json config;
    std::uint64_t seed = 0;
    std::vector<double> values; ///< per-trial primary statistic
    Histogram histogram;
    SummaryStats summary;
    double fraction_negative = 0.0;
    nlohmann::json extra; ///< per-kind derived quantities
    double wall_time_s = 0.0;

    std::string to_json() const;
    std::string histogram_csv() const;
    std::string histogram_svg() const;
};

/// Distribution of the truncated quantum factor over a random ensemble;
/// reports the fraction of negative draws.
ExperimentReport negativity_experiment(const ExperimentConfig& cfg);

/// First and second moments of the interference terms and of the full
/// quantum probability against their Gaussian-ensemble values.
ExperimentReport moment_experiment(const ExperimentConfig& cfg);

/// Exact per-trial total variation distance between the uniform model and
/// its cutoff, raw and renormalized, against the analytic bound.
ExperimentReport tvd_experiment(const ExperimentConfig& cfg);

/// 0.5 * sqrt(1 + e/(R+2)!) * x^(R+1) / sqrt(1 - x^2).
double bound_tvd(double x, int R);

/// Classical particles: each input row sampled independently from
/// |U(k, .)|^2. Rows must be normalized (unitary U).
std::vector<std::vector<int>> sample_distinguishable(const ComplexMatrix& u,
                                                     const std::vector<int>& inputs, int shots,
                                                     std::uint64_t seed);

/// Uniform-model sampler: binomial choice of an interfering block, exact
/// block law (including bunched outputs), classical remainder.
std::vector<std::vector<int>> sample_model(const ComplexMatrix& u, double x,
                                           const std::vector<int>& inputs, int shots,
                                           std::uint64_t seed);

} // namespace bosonpd

#endif
