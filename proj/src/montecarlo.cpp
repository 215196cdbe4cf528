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

#include "bosonpd/montecarlo.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>

#include "bosonpd/errors.hpp"
#include "bosonpd/rng.hpp"
#include "bosonpd/version.hpp"

namespace bosonpd {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::int64_t kTvdTableCap = 100000;

double elapsed_s(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<int> iota_vec(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return v;
}

double sample_variance(const std::vector<double>& v, double mean) {
    if (v.size() < 2) return 0.0;
    double acc = 0.0;
    for (double x : v) acc += (x - mean) * (x - mean);
    return acc / (static_cast<double>(v.size()) - 1.0);
}

double sample_covariance(const std::vector<double>& a, const std::vector<double>& b,
                         double mean_a, double mean_b) {
    if (a.size() < 2) return 0.0;
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += (a[i] - mean_a) * (b[i] - mean_b);
    return acc / (static_cast<double>(a.size()) - 1.0);
}

double mean_of(const std::vector<double>& v) {
    double acc = 0.0;
    for (double x : v) acc += x;
    return v.empty() ? 0.0 : acc / static_cast<double>(v.size());
}

nlohmann::json moment_entry(const std::vector<double>& samples, double theory) {
    const double mean = mean_of(samples);
    const double se = std::sqrt(sample_variance(samples, mean) /
                                static_cast<double>(samples.size()));
    nlohmann::json e;
    e["mean"] = mean;
    e["stderr"] = se;
    e["theory"] = theory;
    e["z"] = se > 0.0 ? (mean - theory) / se : 0.0;
    return e;
}

} // namespace

std::string to_string(Ensemble e) { return e == Ensemble::haar ? "haar" : "ginibre"; }

Ensemble ensemble_from_string(const std::string& name) {
    if (name == "haar") return Ensemble::haar;
    if (name == "ginibre") return Ensemble::ginibre;
    throw ValidationError("unknown ensemble '" + name + "' (expected haar or ginibre)");
}

ComplexMatrix haar_unitary(int M, std::uint64_t seed, std::uint64_t stream) {
    if (M < 1) throw ValidationError("haar_unitary: need M >= 1");
    const ComplexMatrix g = ginibre(M, M, 1.0, seed, stream);
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix the gauge: divide each column by the phase of the R diagonal so
    // the distribution is exactly Haar, not QR-convention dependent.
    for (int j = 0; j < M; ++j) {
        const Complex d = r(j, j);
        const double mag = std::abs(d);
        const Complex phase = mag > 0.0 ? d / mag : Complex(1.0, 0.0);
        q.col(j) *= phase;
    }
    return q;
}

ComplexMatrix ginibre(int rows, int cols, double variance, std::uint64_t seed,
                      std::uint64_t stream) {
    if (rows < 1 || cols < 1) throw ValidationError("ginibre: need positive dimensions");
    if (!(variance > 0.0)) throw ValidationError("ginibre: variance must be positive");
    SplitStream rng(seed, stream);
    const double sigma = std::sqrt(variance / 2.0);
    ComplexMatrix g(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            g(i, j) = Complex(sigma * rng.next_normal(), sigma * rng.next_normal());
    return g;
}

Histogram build_histogram(const HistogramSpec& spec, const std::vector<double>& values) {
    Histogram h;
    if (spec.bins <= 0) return h;
    if (!(spec.hi > spec.lo)) throw ValidationError("build_histogram: need hi > lo");
    h.edges.resize(static_cast<std::size_t>(spec.bins) + 1);
    const double width = (spec.hi - spec.lo) / spec.bins;
    for (int i = 0; i <= spec.bins; ++i)
        h.edges[static_cast<std::size_t>(i)] = spec.lo + width * i;
    h.counts.assign(static_cast<std::size_t>(spec.bins), 0);
    for (double v : values) {
        int bin = static_cast<int>(std::floor((v - spec.lo) / width));
        bin = std::clamp(bin, 0, spec.bins - 1); // out-of-range folds into edge bins
        ++h.counts[static_cast<std::size_t>(bin)];
    }
    return h;
}

nlohmann::json ExperimentConfig::to_json() const {
    nlohmann::json j;
    j["master_seed"] = master_seed;
    j["trials"] = trials;
    if (n > 0) j["n"] = n;
    if (N > 0) j["N"] = N;
    if (M > 0) j["M"] = M;
    j["R"] = R;
    if (K > 0) j["K"] = K;
    j["x"] = x;
    j["ensemble"] = bosonpd::to_string(ensemble);
    if (hist.bins > 0) j["histogram"] = {{"lo", hist.lo}, {"hi", hist.hi}, {"bins", hist.bins}};
    return j;
}

SummaryStats summarize(const std::vector<double>& values) {
    SummaryStats s;
    if (values.empty()) return s;
    s.mean = mean_of(values);
    s.stderr_mean =
        std::sqrt(sample_variance(values, s.mean) / static_cast<double>(values.size()));
    s.min = *std::min_element(values.begin(), values.end());
    s.max = *std::max_element(values.begin(), values.end());
    return s;
}

std::string ExperimentReport::to_json() const {
    nlohmann::json j;
    j["schema_version"] = kReportSchemaVersion;
    j["kind"] = kind;
    j["version"] = kVersion;
    j["config"] = config;
    j["seed"] = seed;
    j["wall_time_s"] = wall_time_s;
    j["summary"] = {{"mean", summary.mean},
                    {"stderr", summary.stderr_mean},
                    {"min", summary.min},
                    {"max", summary.max},
                    {"fraction_negative", fraction_negative}};
    if (!histogram.counts.empty())
        j["histogram"] = {{"edges", histogram.edges}, {"counts", histogram.counts}};
    j["values"] = values;
    if (!extra.is_null()) j["extra"] = extra;
    return j.dump(2);
}

std::string ExperimentReport::histogram_csv() const {
    std::string out;
    out += "# kind: " + kind + "\n";
    out += "# version: " + std::string(kVersion) + "\n";
    out += "# seed: " + std::to_string(seed) + "\n";
    out += "bin_left,bin_right,count\n";
    for (std::size_t i = 0; i < histogram.counts.size(); ++i)
        out += format_double(histogram.edges[i]) + "," + format_double(histogram.edges[i + 1]) +
               "," + std::to_string(histogram.counts[i]) + "\n";
    return out;
}

std::string ExperimentReport::histogram_svg() const {
    const int width = 640, height = 400, margin = 40;
    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
           "\" height=\"" + std::to_string(height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!histogram.counts.empty()) {
        const std::int64_t peak =
            std::max<std::int64_t>(1, *std::max_element(histogram.counts.begin(),
                                                        histogram.counts.end()));
        const double lo = histogram.edges.front();
        const double hi = histogram.edges.back();
        const double plot_w = width - 2.0 * margin;
        const double plot_h = height - 2.0 * margin;
        for (std::size_t i = 0; i < histogram.counts.size(); ++i) {
            const double x0 = margin + plot_w * (histogram.edges[i] - lo) / (hi - lo);
            const double x1 = margin + plot_w * (histogram.edges[i + 1] - lo) / (hi - lo);
            const double frac = static_cast<double>(histogram.counts[i]) /
                                static_cast<double>(peak);
            const double bar_h = plot_h * frac;
            svg += "<rect x=\"" + format_double(x0) + "\" y=\"" +
                   format_double(height - margin - bar_h) + "\" width=\"" +
                   format_double(std::max(0.5, x1 - x0 - 0.5)) + "\" height=\"" +
                   format_double(bar_h) + "\" fill=\"steelblue\"/>\n";
        }
        // axes and range labels
        svg += "<line x1=\"" + std::to_string(margin) + "\" y1=\"" +
               std::to_string(height - margin) + "\" x2=\"" + std::to_string(width - margin) +
               "\" y2=\"" + std::to_string(height - margin) + "\" stroke=\"black\"/>\n";
        svg += "<line x1=\"" + std::to_string(margin) + "\" y1=\"" + std::to_string(margin) +
               "\" x2=\"" + std::to_string(margin) + "\" y2=\"" +
               std::to_string(height - margin) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + std::to_string(margin) + "\" y=\"" +
               std::to_string(height - margin + 16) + "\" font-size=\"11\">" +
               format_double(lo) + "</text>\n";
        svg += "<text x=\"" + std::to_string(width - margin - 60) + "\" y=\"" +
               std::to_string(height - margin + 16) + "\" font-size=\"11\">" +
               format_double(hi) + "</text>\n";
        svg += "<text x=\"" + std::to_string(margin + 4) + "\" y=\"" +
               std::to_string(margin - 8) + "\" font-size=\"11\">peak " +
               std::to_string(peak) + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

ExperimentReport negativity_experiment(const ExperimentConfig& cfg) {
    const auto start = Clock::now();
    if (cfg.trials < 1) throw ValidationError("negativity_experiment: need trials >= 1");
    if (cfg.n < 1) throw ValidationError("negativity_experiment: need n >= 1");
    if (cfg.n > 12)
        throw CapacityError("negativity_experiment: n exceeds the kernel budget (12)");
    const int M = cfg.M > 0 ? cfg.M : cfg.n;
    if (M < cfg.n) throw ValidationError("negativity_experiment: need M >= n");

    const std::vector<int> ports = iota_vec(cfg.n);
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(cfg.trials));
    for (int trial = 0; trial < cfg.trials; ++trial) {
        ComplexMatrix u;
        if (cfg.ensemble == Ensemble::haar)
            u = haar_unitary(M, cfg.master_seed, static_cast<std::uint64_t>(trial));
        else
            u = ginibre(cfg.n, cfg.n, 1.0 / M, cfg.master_seed,
                        static_cast<std::uint64_t>(trial));
        values.push_back(quantum_factor_cutoff(u, cfg.R, ports, ports));
    }

    ExperimentReport report;
    report.kind = "negativity";
    report.config = cfg.to_json();
    report.seed = cfg.master_seed;
    report.values = values;
    report.summary = summarize(values);
    int negative = 0;
    for (double v : values)
        if (v < 0.0) ++negative;
    report.fraction_negative = static_cast<double>(negative) / cfg.trials;

    HistogramSpec spec = cfg.hist;
    if (spec.bins <= 0) {
        // declared in units of the ensemble-mean classical probability
        double scale = 1.0;
        for (int i = 1; i <= cfg.n; ++i) scale *= static_cast<double>(i) / M;
        spec = HistogramSpec{-2.0 * scale, 8.0 * scale, 80};
    }
    report.config["histogram"] = {{"lo", spec.lo}, {"hi", spec.hi}, {"bins", spec.bins}};
    report.histogram = build_histogram(spec, values);
    report.extra = {{"negative_trials", negative}};
    report.wall_time_s = elapsed_s(start);
    return report;
}

ExperimentReport moment_experiment(const ExperimentConfig& cfg) {
    const auto start = Clock::now();
    if (cfg.trials < 1) throw ValidationError("moment_experiment: need trials >= 1");
    if (cfg.N < 2) throw ValidationError("moment_experiment: need N >= 2");
    if (cfg.N > 6) throw CapacityError("moment_experiment: N exceeds the cap (6)");
    if (cfg.M < 1) throw ValidationError("moment_experiment: need M >= 1");
    const int N = cfg.N, M = cfg.M;
    const std::vector<int> ports = iota_vec(N);
    const Permutation swap01 = Permutation::from_cycle(N, {0, 1});
    const bool has_cycle = N >= 3;
    const Permutation cycle3 =
        has_cycle ? Permutation::from_cycle(N, {0, 1, 2}) : Permutation::identity(N);

    std::vector<double> t_identity, p_vals, p_sq, swap_re, swap_im, swap_abs2, cyc_re, cyc_im,
        cyc_abs2;
    for (int trial = 0; trial < cfg.trials; ++trial) {
        const ComplexMatrix g =
            ginibre(N, N, 1.0 / M, cfg.master_seed, static_cast<std::uint64_t>(trial));
        t_identity.push_back(permanent(abs_squared(g)));
        const double p = std::norm(permanent(g));
        p_vals.push_back(p);
        p_sq.push_back(p * p);
        const Complex ts = interference_term(g, swap01, ports, ports);
        swap_re.push_back(ts.real());
        swap_im.push_back(ts.imag());
        swap_abs2.push_back(std::norm(ts));
        if (has_cycle) {
            const Complex tc = interference_term(g, cycle3, ports, ports);
            cyc_re.push_back(tc.real());
            cyc_im.push_back(tc.imag());
            cyc_abs2.push_back(std::norm(tc));
        }
    }

    const double mn = to_double(Rational(factorial_exact(N)));
    const double m_pow_n = std::pow(static_cast<double>(M), N);
    const double mean_theory = mn / m_pow_n;

    nlohmann::json extra;
    extra["t_identity"] = moment_entry(t_identity, mean_theory);
    extra["p_mean"] = moment_entry(p_vals, mean_theory);

    // ratio <p^2>/<p>^2 with a delta-method standard error
    {
        const double m1 = mean_of(p_vals);
        const double m2 = mean_of(p_sq);
        const double ratio = m2 / (m1 * m1);
        const double s11 = sample_variance(p_vals, m1);
        const double s22 = sample_variance(p_sq, m2);
        const double s12 = sample_covariance(p_vals, p_sq, m1, m2);
        const double g1 = -2.0 * m2 / (m1 * m1 * m1);
        const double g2 = 1.0 / (m1 * m1);
        const double var =
            (g1 * g1 * s11 + 2.0 * g1 * g2 * s12 + g2 * g2 * s22) / cfg.trials;
        nlohmann::json e;
        e["value"] = ratio;
        e["stderr"] = std::sqrt(std::max(0.0, var));
        e["theory"] = static_cast<double>(N + 1);
        e["z"] = std::sqrt(var) > 0.0 ? (ratio - (N + 1)) / std::sqrt(var) : 0.0;
        extra["p2_ratio"] = e;
    }

    const auto sigma_entry = [&](const std::vector<double>& re, const std::vector<double>& im,
                                 const std::vector<double>& abs2, int fixed_points) {
        nlohmann::json e;
        e["re"] = moment_entry(re, 0.0);
        e["im"] = moment_entry(im, 0.0);
        const double chi = static_cast<double>(chi_moment(fixed_points));
        e["abs2"] = moment_entry(abs2, mn * chi / (m_pow_n * m_pow_n));
        return e;
    };
    extra["t_transposition"] = sigma_entry(swap_re, swap_im, swap_abs2, N - 2);
    if (has_cycle) extra["t_three_cycle"] = sigma_entry(cyc_re, cyc_im, cyc_abs2, N - 3);

    ExperimentReport report;
    report.kind = "moments";
    report.config = cfg.to_json();
    report.seed = cfg.master_seed;
    report.values = p_vals;
    report.summary = summarize(p_vals);
    report.histogram = build_histogram(cfg.hist, p_vals);
    report.extra = std::move(extra);
    report.wall_time_s = elapsed_s(start);
    return report;
}

ExperimentReport tvd_experiment(const ExperimentConfig& cfg) {
    const auto start = Clock::now();
    if (cfg.trials < 1) throw ValidationError("tvd_experiment: need trials >= 1");
    if (cfg.N < 1) throw ValidationError("tvd_experiment: need N >= 1");
    if (cfg.N > 5) throw CapacityError("tvd_experiment: N exceeds the cap (5)");
    if (cfg.M < cfg.N) throw ValidationError("tvd_experiment: need M >= N");
    if (binomial_exact(cfg.M, cfg.N) > kTvdTableCap)
        throw CapacityError("tvd_experiment: C(M, N) exceeds the cap 1e5");
    if (!(cfg.x >= 0.0 && cfg.x <= 1.0)) throw ValidationError("tvd_experiment: x outside [0,1]");
    if (cfg.R < 0 || cfg.R > cfg.N) throw ValidationError("tvd_experiment: need 0 <= R <= N");

    const std::vector<int> inputs = iota_vec(cfg.N);
    const FixedPointModel full = model_uniform(cfg.N, cfg.x);
    const FixedPointModel cut = model_cutoff(cfg.N, cfg.R, cfg.x);

    std::vector<double> tvd_raw, tvd_cond;
    for (int trial = 0; trial < cfg.trials; ++trial) {
        const ComplexMatrix u =
            haar_unitary(cfg.M, cfg.master_seed, static_cast<std::uint64_t>(trial));
        const DistributionTable p = enumerate_distribution(u, full, inputs);
        const DistributionTable q = enumerate_distribution(u, cut, inputs);
        tvd_raw.push_back(total_variation_distance(p, q));
        const double ps = p.sum(), qs = q.sum();
        double acc = 0.0;
        for (std::size_t i = 0; i < p.probs.size(); ++i)
            acc += std::abs(p.probs[i] / ps - q.probs[i] / qs);
        tvd_cond.push_back(0.5 * acc);
    }

    ExperimentReport report;
    report.kind = "tvd";
    report.config = cfg.to_json();
    report.seed = cfg.master_seed;
    report.values = tvd_raw;
    report.summary = summarize(tvd_raw);
    report.histogram = build_histogram(cfg.hist, tvd_raw);
    const SummaryStats cond = summarize(tvd_cond);
    const double bound = cfg.x < 1.0 ? bound_tvd(cfg.x, cfg.R) : 0.0;
    report.extra = {{"tvd_conditional",
                     {{"mean", cond.mean}, {"stderr", cond.stderr_mean}}},
                    {"bound", bound},
                    {"bound_ratio", bound > 0.0 ? report.summary.mean / bound : 0.0}};
    report.wall_time_s = elapsed_s(start);
    return report;
}

double bound_tvd(double x, int R) {
    if (R < 0) throw ValidationError("bound_tvd: negative R");
    if (!(x >= 0.0 && x < 1.0)) throw ValidationError("bound_tvd: need 0 <= x < 1");
    const double fact = to_double(Rational(factorial_exact(R + 2)));
    return 0.5 * std::sqrt(1.0 + std::numbers::e / fact) * std::pow(x, R + 1) /
           std::sqrt(1.0 - x * x);
}

namespace {

std::vector<std::vector<double>> row_cdfs(const ComplexMatrix& u, const std::vector<int>& inputs,
                                          const char* who) {
    std::vector<std::vector<double>> cdf;
    cdf.reserve(inputs.size());
    for (int k : inputs) {
        if (k < 0 || k >= u.rows()) throw ValidationError(std::string(who) + ": bad input port");
        std::vector<double> row(static_cast<std::size_t>(u.cols()));
        double acc = 0.0;
        for (int l = 0; l < u.cols(); ++l) {
            acc += std::norm(u(k, l));
            row[static_cast<std::size_t>(l)] = acc;
        }
        if (std::abs(acc - 1.0) > 1e-6)
            throw ValidationError(std::string(who) +
                                  ": row is not normalized; matrix must be unitary");
        row.back() = 1.0;
        cdf.push_back(std::move(row));
    }
    return cdf;
}

int draw_from_cdf(const std::vector<double>& cdf, double u) {
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    return static_cast<int>(std::min<std::ptrdiff_t>(it - cdf.begin(),
                                                     static_cast<std::ptrdiff_t>(cdf.size()) - 1));
}

} // namespace

std::vector<std::vector<int>> sample_distinguishable(const ComplexMatrix& u,
                                                     const std::vector<int>& inputs, int shots,
                                                     std::uint64_t seed) {
    if (shots < 0) throw ValidationError("sample_distinguishable: negative shot count");
    const auto cdf = row_cdfs(u, inputs, "sample_distinguishable");
    std::vector<std::vector<int>> out;
    out.reserve(static_cast<std::size_t>(shots));
    for (int shot = 0; shot < shots; ++shot) {
        SplitStream rng(seed, static_cast<std::uint64_t>(shot));
        std::vector<int> outcome(inputs.size());
        for (std::size_t k = 0; k < inputs.size(); ++k)
            outcome[k] = draw_from_cdf(cdf[k], rng.next_double());
        out.push_back(std::move(outcome));
    }
    return out;
}

namespace {

// Exact law of an n-boson block through u: all multisets of output ports,
// p = |per u[rows | multiset]|^2 / prod(multiplicity!).
struct BlockTable {
    std::vector<std::vector<int>> multisets;
    std::vector<double> cdf;
};

BlockTable build_block_table(const ComplexMatrix& u, const std::vector<int>& rows) {
    const int n = static_cast<int>(rows.size());
    const int M = static_cast<int>(u.cols());
    BlockTable table;
    std::vector<int> multiset(static_cast<std::size_t>(n), 0);
    double acc = 0.0;
    // non-decreasing port sequences = multisets
    while (true) {
        ComplexMatrix block(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                block(i, j) = u(rows[static_cast<std::size_t>(i)],
                                multiset[static_cast<std::size_t>(j)]);
        double mult_factorial = 1.0;
        int run = 1;
        for (int j = 1; j < n; ++j) {
            if (multiset[static_cast<std::size_t>(j)] == multiset[static_cast<std::size_t>(j - 1)])
                mult_factorial *= ++run;
            else
                run = 1;
        }
        acc += std::norm(permanent(block)) / mult_factorial;
        table.multisets.push_back(multiset);
        table.cdf.push_back(acc);

        int i = n - 1;
        while (i >= 0 && multiset[static_cast<std::size_t>(i)] == M - 1) --i;
        if (i < 0) break;
        const int next = multiset[static_cast<std::size_t>(i)] + 1;
        for (int j = i; j < n; ++j) multiset[static_cast<std::size_t>(j)] = next;
    }
    // Unitarity makes acc = 1 up to roundoff; normalize the tail away.
    for (double& c : table.cdf) c /= acc;
    table.cdf.back() = 1.0;
    return table;
}

} // namespace

std::vector<std::vector<int>> sample_model(const ComplexMatrix& u, double x,
                                           const std::vector<int>& inputs, int shots,
                                           std::uint64_t seed) {
    const int N = static_cast<int>(inputs.size());
    if (shots < 0) throw ValidationError("sample_model: negative shot count");
    if (!(x >= 0.0 && x <= 1.0)) throw ValidationError("sample_model: x outside [0,1]");
    if (N > 7) throw CapacityError("sample_model: N exceeds the block-enumeration cap (7)");
    const auto classical_cdf = row_cdfs(u, inputs, "sample_model");

    // Binomial(N, x) CDF over the interfering-block size.
    std::vector<double> binom_cdf(static_cast<std::size_t>(N) + 1);
    {
        double acc = 0.0;
        for (int n = 0; n <= N; ++n) {
            acc += to_double(Rational(binomial_exact(N, n))) * std::pow(x, n) *
                   std::pow(1.0 - x, N - n);
            binom_cdf[static_cast<std::size_t>(n)] = acc;
        }
        binom_cdf.back() = 1.0;
    }

    std::map<std::uint32_t, BlockTable> block_cache;
    const auto block_for = [&](std::uint32_t mask, const std::vector<int>& rows) -> const BlockTable& {
        auto it = block_cache.find(mask);
        if (it == block_cache.end()) it = block_cache.emplace(mask, build_block_table(u, rows)).first;
        return it->second;
    };

    std::vector<std::vector<int>> out;
    out.reserve(static_cast<std::size_t>(shots));
    std::vector<int> positions(static_cast<std::size_t>(N));
    for (int shot = 0; shot < shots; ++shot) {
        SplitStream rng(seed, static_cast<std::uint64_t>(shot));
        const int n = draw_from_cdf(binom_cdf, rng.next_double());
        // uniform n-subset of positions by partial Fisher-Yates
        std::iota(positions.begin(), positions.end(), 0);
        for (int i = 0; i < n; ++i) {
            const int j = i + rng.next_below(N - i);
            std::swap(positions[static_cast<std::size_t>(i)],
                      positions[static_cast<std::size_t>(j)]);
        }
        std::vector<int> block_pos(positions.begin(), positions.begin() + n);
        std::sort(block_pos.begin(), block_pos.end());

        std::vector<int> outcome(static_cast<std::size_t>(N), -1);
        if (n > 0) {
            std::uint32_t mask = 0;
            std::vector<int> rows;
            rows.reserve(block_pos.size());
            for (int pos : block_pos) {
                mask |= (1u << pos);
                rows.push_back(inputs[static_cast<std::size_t>(pos)]);
            }
            const BlockTable& table = block_for(mask, rows);
            const int pick = draw_from_cdf(table.cdf, rng.next_double());
            const std::vector<int>& ports = table.multisets[static_cast<std::size_t>(pick)];
            for (std::size_t i = 0; i < block_pos.size(); ++i)
                outcome[static_cast<std::size_t>(block_pos[i])] = ports[i];
        }
        for (int pos = 0; pos < N; ++pos)
            if (outcome[static_cast<std::size_t>(pos)] < 0)
                outcome[static_cast<std::size_t>(pos)] =
                    draw_from_cdf(classical_cdf[static_cast<std::size_t>(pos)],
                                  rng.next_double());
        out.push_back(std::move(outcome));
    }
    return out;
}

} // namespace bosonpd
