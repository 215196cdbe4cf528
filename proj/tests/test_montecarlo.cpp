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

#include <doctest.h>

#include <cmath>
#include <map>
#include <numeric>

#include "bosonpd/errors.hpp"
#include "bosonpd/montecarlo.hpp"
#include "bosonpd/rng.hpp"

using namespace bosonpd;

namespace {

std::vector<int> iota_vec(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return v;
}

} // namespace

TEST_CASE("split streams are deterministic and independent") {
    SplitStream a(42, 0), b(42, 0), c(42, 1);
    CHECK(a.next_u64() == b.next_u64());
    CHECK(a.next_u64() == b.next_u64());
    CHECK(a.next_u64() != c.next_u64());
    SplitStream d(43, 0);
    CHECK(SplitStream(42, 0).next_u64() != d.next_u64());

    SplitStream u(7, 9);
    for (int i = 0; i < 1000; ++i) {
        const double v = u.next_double();
        CHECK(v >= 0.0);
        CHECK(v < 1.0);
        const int k = u.next_below(6);
        CHECK(k >= 0);
        CHECK(k < 6);
    }
}

TEST_CASE("haar unitaries") {
    SUBCASE("M = 1 is a unimodular number") {
        const ComplexMatrix u = haar_unitary(1, 5, 0);
        CHECK(std::abs(std::abs(u(0, 0)) - 1.0) < 1e-12);
    }
    SUBCASE("columns are orthonormal") {
        for (const int m : {2, 5, 9}) {
            const ComplexMatrix u = haar_unitary(m, 11, static_cast<std::uint64_t>(m));
            CHECK(unitarity_defect(u) < 1e-12);
            for (int j = 0; j < m; ++j)
                CHECK(std::abs(u.col(j).norm() - 1.0) < 1e-12);
        }
    }
    SUBCASE("|U_11|^2 has mean 1/M over the ensemble") {
        const int M = 8, trials = 10000;
        std::vector<double> vals;
        vals.reserve(trials);
        for (int t = 0; t < trials; ++t) {
            const ComplexMatrix u = haar_unitary(M, 2026, static_cast<std::uint64_t>(t));
            vals.push_back(std::norm(u(0, 0)));
        }
        const SummaryStats s = summarize(vals);
        CHECK(std::abs(s.mean - 1.0 / M) <= 3.0 * s.stderr_mean);
    }
    SUBCASE("cell statistics are position independent") {
        const int M = 6, trials = 4000;
        const std::vector<std::pair<int, int>> cells = {{0, 0}, {2, 4}, {5, 5}};
        for (const auto& [r, c] : cells) {
            std::vector<double> vals;
            vals.reserve(trials);
            for (int t = 0; t < trials; ++t) {
                const ComplexMatrix u = haar_unitary(M, 31, static_cast<std::uint64_t>(t));
                vals.push_back(std::norm(u(r, c)));
            }
            const SummaryStats s = summarize(vals);
            CHECK(std::abs(s.mean - 1.0 / M) <= 3.0 * s.stderr_mean);
        }
    }
}

TEST_CASE("ginibre moments") {
    const int rows = 40, cols = 40;
    const double variance = 0.5;
    const ComplexMatrix g = ginibre(rows, cols, variance, 909, 0);
    std::vector<double> re, im, sq;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            re.push_back(g(i, j).real());
            im.push_back(g(i, j).imag());
            sq.push_back(std::norm(g(i, j)));
        }
    const SummaryStats sre = summarize(re), sim = summarize(im), ssq = summarize(sq);
    CHECK(std::abs(sre.mean) <= 3.0 * sre.stderr_mean);
    CHECK(std::abs(sim.mean) <= 3.0 * sim.stderr_mean);
    CHECK(std::abs(ssq.mean - variance) <= 3.0 * ssq.stderr_mean);

    // independence spot check: covariance of two distinct entries
    const int trials = 4000;
    std::vector<double> prod;
    prod.reserve(trials);
    for (int t = 0; t < trials; ++t) {
        const ComplexMatrix h = ginibre(2, 2, 1.0, 910, static_cast<std::uint64_t>(t));
        prod.push_back(h(0, 0).real() * h(1, 1).real());
    }
    const SummaryStats sp = summarize(prod);
    CHECK(std::abs(sp.mean) <= 3.0 * sp.stderr_mean);
    CHECK_THROWS_AS(ginibre(2, 2, 0.0, 1, 0), ValidationError);
}

TEST_CASE("histograms fold outliers into edge bins") {
    const HistogramSpec spec{0.0, 1.0, 4};
    const Histogram h = build_histogram(spec, {-5.0, 0.1, 0.3, 0.6, 0.9, 7.0});
    CHECK(h.counts == std::vector<std::int64_t>{2, 1, 1, 2});
    std::int64_t total = 0;
    for (auto c : h.counts) total += c;
    CHECK(total == 6);
}

TEST_CASE("negativity experiment") {
    SUBCASE("untruncated runs never go negative") {
        ExperimentConfig cfg;
        cfg.master_seed = 77;
        cfg.trials = 150;
        cfg.n = 4;
        cfg.R = 4;
        const ExperimentReport rep = negativity_experiment(cfg);
        CHECK(rep.fraction_negative == 0.0);
        CHECK(rep.summary.min >= 0.0);
    }
    SUBCASE("classical truncation is a nonnegative permanent") {
        ExperimentConfig cfg;
        cfg.master_seed = 78;
        cfg.trials = 100;
        cfg.n = 5;
        cfg.R = 0;
        const ExperimentReport rep = negativity_experiment(cfg);
        CHECK(rep.fraction_negative == 0.0);
    }
    SUBCASE("histogram counts sum to trials and the report is reproducible") {
        ExperimentConfig cfg;
        cfg.master_seed = 79;
        cfg.trials = 200;
        cfg.n = 5;
        cfg.R = 2;
        const ExperimentReport a = negativity_experiment(cfg);
        const ExperimentReport b = negativity_experiment(cfg);
        std::int64_t total = 0;
        for (auto c : a.histogram.counts) total += c;
        CHECK(total == cfg.trials);
        CHECK(a.values == b.values); // bit-identical rerun
        CHECK(a.histogram.counts == b.histogram.counts);
        CHECK(a.fraction_negative > 0.0);
    }
}

TEST_CASE("moment experiment matches the Gaussian-ensemble identities") {
    ExperimentConfig cfg;
    cfg.master_seed = 1000;
    cfg.trials = 20000;
    cfg.N = 3;
    cfg.M = 50;
    const ExperimentReport rep = moment_experiment(cfg);
    // first moments at 3 SE, second moments at 5 SE (heavy tails)
    CHECK(std::abs(rep.extra["t_identity"]["z"].get<double>()) <= 3.0);
    CHECK(std::abs(rep.extra["p_mean"]["z"].get<double>()) <= 3.0);
    CHECK(std::abs(rep.extra["p2_ratio"]["z"].get<double>()) <= 5.0);
    for (const char* sigma : {"t_transposition", "t_three_cycle"}) {
        CHECK(std::abs(rep.extra[sigma]["re"]["z"].get<double>()) <= 3.0);
        CHECK(std::abs(rep.extra[sigma]["im"]["z"].get<double>()) <= 3.0);
        CHECK(std::abs(rep.extra[sigma]["abs2"]["z"].get<double>()) <= 5.0);
    }
    CHECK(rep.extra["p2_ratio"]["theory"].get<double>() == 4.0);
}

TEST_CASE("tvd experiment edge cases") {
    ExperimentConfig cfg;
    cfg.master_seed = 99;
    cfg.trials = 4;
    cfg.N = 3;
    cfg.M = 8;
    SUBCASE("x = 0 erases the distinguishability difference") {
        cfg.x = 0.0;
        cfg.R = 1;
        const ExperimentReport rep = tvd_experiment(cfg);
        for (double v : rep.values) CHECK(v == doctest::Approx(0.0).epsilon(1e-10));
    }
    SUBCASE("R = N keeps the full model") {
        cfg.x = 0.6;
        cfg.R = 3;
        const ExperimentReport rep = tvd_experiment(cfg);
        for (double v : rep.values) CHECK(v <= 1e-10);
    }
}

TEST_CASE("tvd bound evaluation") {
    CHECK(bound_tvd(0.0, 2) == 0.0);
    // sqrt(1 + e/6) * 0.25 / (2 sqrt(0.75))
    CHECK(bound_tvd(0.5, 1) == doctest::Approx(0.17399).epsilon(1e-4));
    double prev = 0.0;
    for (int i = 0; i <= 18; ++i) {
        const double x = 0.05 * i;
        const double b = bound_tvd(x, 2);
        CHECK(b >= prev);
        prev = b;
    }
    CHECK_THROWS_AS(bound_tvd(1.0, 1), ValidationError);
    CHECK_THROWS_AS(bound_tvd(-0.1, 1), ValidationError);
}

TEST_CASE("distinguishable sampler") {
    SUBCASE("identity interferometer returns the inputs") {
        const ComplexMatrix id = ComplexMatrix::Identity(5, 5);
        const auto shots = sample_distinguishable(id, {1, 3}, 50, 7);
        for (const auto& shot : shots) CHECK(shot == std::vector<int>{1, 3});
    }
    SUBCASE("single-particle marginal matches |U|^2") {
        const ComplexMatrix u = haar_unitary(2, 51, 0);
        const double p1 = std::norm(u(0, 1));
        const int shots = 10000;
        const auto out = sample_distinguishable(u, {0}, shots, 8);
        int hits = 0;
        for (const auto& shot : out) hits += (shot[0] == 1);
        const double freq = static_cast<double>(hits) / shots;
        const double se = std::sqrt(p1 * (1.0 - p1) / shots);
        CHECK(std::abs(freq - p1) <= 3.0 * se);
    }
    SUBCASE("non-unitary matrices are rejected") {
        ComplexMatrix bad = ComplexMatrix::Identity(3, 3);
        bad(0, 0) = 2.0;
        CHECK_THROWS_AS(sample_distinguishable(bad, {0}, 1, 1), ValidationError);
    }
}

TEST_CASE("model sampler converges to the enumerated table") {
    const int N = 3, M = 8, shots = 60000;
    const ComplexMatrix u = haar_unitary(M, 4321, 0);
    const std::vector<int> inputs = iota_vec(N);
    for (const double x : {0.0, 0.5, 1.0}) {
        const DistributionTable table = enumerate_distribution(u, model_uniform(N, x), inputs);
        std::map<std::string, std::int64_t> counts;
        const auto outcomes = sample_model(u, x, inputs, shots, 5150);
        for (const auto& shot : outcomes) {
            std::vector<int> sorted = shot;
            std::sort(sorted.begin(), sorted.end());
            const bool collision =
                std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
            if (collision) {
                ++counts["collision"];
            } else {
                ++counts[OutputConfiguration(sorted).to_string()];
            }
        }
        // TVD between the empirical law and the exact table, with all
        // collision outcomes lumped into one complementary cell.
        double tvd = 0.0;
        double table_mass = 0.0;
        for (std::size_t i = 0; i < table.configs.size(); ++i) {
            const double emp =
                static_cast<double>(counts[table.configs[i].to_string()]) / shots;
            tvd += std::abs(emp - table.probs[i]);
            table_mass += table.probs[i];
        }
        tvd += std::abs(static_cast<double>(counts["collision"]) / shots -
                        (1.0 - table_mass));
        tvd *= 0.5;
        REQUIRE_MESSAGE(tvd < 0.02, "x=", x, " tvd=", tvd);
    }
}

TEST_CASE("model sampler at x = 0 matches the distinguishable law") {
    const int M = 6, shots = 40000;
    const ComplexMatrix u = haar_unitary(M, 86, 0);
    const std::vector<int> inputs = {0, 1};
    const auto a = sample_model(u, 0.0, inputs, shots, 99);
    const auto b = sample_distinguishable(u, inputs, shots, 100);
    // compare joint empirical distributions over ordered pairs
    std::map<std::pair<int, int>, double> fa, fb;
    for (const auto& shot : a) fa[{shot[0], shot[1]}] += 1.0 / shots;
    for (const auto& shot : b) fb[{shot[0], shot[1]}] += 1.0 / shots;
    double tvd = 0.0;
    for (int p = 0; p < M; ++p)
        for (int q = 0; q < M; ++q) tvd += std::abs(fa[{p, q}] - fb[{p, q}]);
    CHECK(tvd * 0.5 < 0.02);
}

TEST_CASE("experiment reports serialize with full provenance") {
    ExperimentConfig cfg;
    cfg.master_seed = 12345;
    cfg.trials = 50;
    cfg.n = 4;
    cfg.R = 2;
    const ExperimentReport rep = negativity_experiment(cfg);
    const std::string json = rep.to_json();
    CHECK(json.find("\"seed\": 12345") != std::string::npos);
    CHECK(json.find("\"version\": \"0.1.0\"") != std::string::npos);
    CHECK(json.find("\"wall_time_s\"") != std::string::npos);
    CHECK(json.find("\"config\"") != std::string::npos);
    const std::string csv = rep.histogram_csv();
    CHECK(csv.find("bin_left,bin_right,count") != std::string::npos);
    const std::string svg = rep.histogram_svg();
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("<rect") != std::string::npos);
}
