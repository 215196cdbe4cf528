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

#include "bosonpd/probability.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <thread>

#include <nlohmann/json.hpp>

#include "bosonpd/debug.hpp"
#include "bosonpd/errors.hpp"
#include "bosonpd/version.hpp"

namespace bosonpd {

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double checked_real(Complex value, const char* who) {
    const double scale = 1.0 + std::abs(value.real());
    const double residue = std::abs(value.imag());
    if (residue > limits::kImagResidueHard * scale)
        throw InvariantViolation(std::string(who) + ": imaginary residue " +
                                     std::to_string(residue) + " exceeds hard tolerance",
                                 residue);
    if (residue > limits::kImagResidueSoft * scale)
        debug_log(std::string(who) + ": truncating imaginary residue " + std::to_string(residue));
    return value.real();
}

std::vector<int> complement_of(const std::vector<int>& base, const std::vector<int>& chosen) {
    std::vector<int> out;
    out.reserve(base.size() - chosen.size());
    std::size_t c = 0;
    for (std::size_t i = 0; i < base.size(); ++i) {
        if (c < chosen.size() && chosen[c] == static_cast<int>(i)) {
            ++c;
            continue;
        }
        out.push_back(base[i]);
    }
    return out;
}

std::vector<int> pick(const std::vector<int>& base, const std::vector<int>& idx) {
    std::vector<int> out;
    out.reserve(idx.size());
    for (int i : idx) out.push_back(base[static_cast<std::size_t>(i)]);
    return out;
}

int env_thread_count() {
    if (const char* env = std::getenv("BOSONPD_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

} // namespace

OutputConfiguration::OutputConfiguration(std::vector<int> ports_in) : ports(std::move(ports_in)) {
    for (std::size_t i = 0; i < ports.size(); ++i) {
        if (ports[i] < 0) throw ValidationError("OutputConfiguration: negative port");
        if (i > 0 && ports[i] <= ports[i - 1])
            throw ValidationError("OutputConfiguration: ports must be strictly increasing");
    }
}

std::string OutputConfiguration::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < ports.size(); ++i) {
        if (i) s += '-';
        s += std::to_string(ports[i]);
    }
    return s;
}

double DistributionTable::sum() const {
    double acc = 0.0;
    for (double p : probs) acc += p;
    return acc;
}

double DistributionTable::negative_mass() const {
    double acc = 0.0;
    for (double p : probs)
        if (p < 0.0) acc -= p;
    return acc;
}

std::string DistributionTable::to_csv(std::optional<std::uint64_t> seed) const {
    std::string out;
    out += "# model: " + model_label + "\n";
    out += "# version: " + std::string(kVersion) + "\n";
    if (seed) out += "# seed: " + std::to_string(*seed) + "\n";
    out += "ports,probability\n";
    for (std::size_t i = 0; i < configs.size(); ++i)
        out += configs[i].to_string() + "," + format_double(probs[i]) + "\n";
    return out;
}

std::string DistributionTable::to_json(std::optional<std::uint64_t> seed) const {
    nlohmann::json doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["model"] = model_label;
    doc["version"] = kVersion;
    if (seed) doc["seed"] = *seed;
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < configs.size(); ++i)
        rows.push_back({{"ports", configs[i].to_string()}, {"probability", probs[i]}});
    doc["table"] = std::move(rows);
    return doc.dump(2);
}

double probability_bruteforce(const ComplexMatrix& u, const FixedPointModel& model,
                              const std::vector<int>& inputs, const std::vector<int>& outputs,
                              int cap) {
    if (inputs.size() != outputs.size())
        throw ValidationError("probability_bruteforce: inputs/outputs size mismatch");
    const int n = static_cast<int>(inputs.size());
    if (model.n_total != n)
        throw ValidationError("probability_bruteforce: model degree does not match port count");
    if (n > cap)
        throw CapacityError("probability_bruteforce: N = " + std::to_string(n) +
                            " exceeds the configured cap " + std::to_string(cap));
    for (int k : inputs)
        if (k < 0 || k >= u.rows()) throw ValidationError("probability_bruteforce: bad input port");
    for (int l : outputs)
        if (l < 0 || l >= u.cols()) throw ValidationError("probability_bruteforce: bad output port");

    const std::vector<Permutation> perms = all_permutations(n);
    std::vector<Complex> amp(perms.size());
    for (std::size_t i = 0; i < perms.size(); ++i) {
        Complex prod(1);
        for (int k = 0; k < n; ++k)
            prod *= u(inputs[static_cast<std::size_t>(perms[i](k))],
                      outputs[static_cast<std::size_t>(k)]);
        amp[i] = prod;
    }
    Complex total(0);
    for (std::size_t i = 0; i < perms.size(); ++i) {
        for (std::size_t j = 0; j < perms.size(); ++j) {
            int agree = 0;
            for (int k = 0; k < n; ++k)
                if (perms[i](k) == perms[j](k)) ++agree;
            total += model.a[static_cast<std::size_t>(agree)] * std::conj(amp[i]) * amp[j];
        }
    }
    return checked_real(total, "probability_bruteforce");
}

double u_class_sum_expanded(const ComplexMatrix& u, const std::vector<int>& inputs,
                            const std::vector<int>& outputs, int n) {
    const int total = static_cast<int>(inputs.size());
    if (outputs.size() != inputs.size())
        throw ValidationError("u_class_sum_expanded: inputs/outputs size mismatch");
    if (n < 0 || n > total) throw ValidationError("u_class_sum_expanded: block size out of range");
    const RealMatrix usq = abs_squared(u);

    double acc = 0.0;
    for_each_combination(total, n, [&](const std::vector<int>& in_idx) {
        const std::vector<int> block_in = pick(inputs, in_idx);
        const std::vector<int> rest_in = complement_of(inputs, in_idx);
        for_each_combination(total, n, [&](const std::vector<int>& out_idx) {
            const std::vector<int> block_out = pick(outputs, out_idx);
            const std::vector<int> rest_out = complement_of(outputs, out_idx);
            const double block = derangement_sum(u, block_in, block_out, n);
            const double classical = permanent(submatrix(usq, rest_in, rest_out));
            acc += block * classical;
        });
    });
    return acc;
}

double probability_expansion(const ComplexMatrix& u, int R, double x,
                             const std::vector<int>& inputs, const std::vector<int>& outputs) {
    const int N = static_cast<int>(inputs.size());
    if (R < 0) throw ValidationError("probability_expansion: negative cutoff R");
    if (N > limits::kDerangementSumCap)
        throw CapacityError("probability_expansion: N = " + std::to_string(N) +
                            " exceeds the configured cap " +
                            std::to_string(limits::kDerangementSumCap));
    double acc = 0.0;
    double xn = 1.0;
    for (int n = 0; n <= std::min(R, N); ++n) {
        if (n != 1) // D_1 is empty; its term is exactly zero
            acc += xn * u_class_sum_expanded(u, inputs, outputs, n);
        xn *= x;
    }
    return acc;
}

double quantum_factor_cutoff(const ComplexMatrix& u, int R, const std::vector<int>& inputs,
                             const std::vector<int>& outputs) {
    const int n = static_cast<int>(inputs.size());
    if (R < 0) throw ValidationError("quantum_factor_cutoff: negative cutoff R");
    std::vector<int> s_set;
    for (int s = 0; s <= std::min(R, n); ++s) s_set.push_back(s);
    const std::vector<double> sums = derangement_sums(u, inputs, outputs, s_set);
    double acc = 0.0;
    for (double v : sums) acc += v;
    if (R >= n && acc < -1e-10)
        throw InvariantViolation(
            "quantum_factor_cutoff: untruncated probability came out negative", acc);
    return acc;
}

double convex_sum_probability(const ComplexMatrix& u, double x, const std::vector<int>& inputs,
                              const std::vector<int>& outputs, std::optional<int> cutoff) {
    const int N = static_cast<int>(inputs.size());
    if (outputs.size() != inputs.size())
        throw ValidationError("convex_sum_probability: inputs/outputs size mismatch");
    if (N > limits::kConvexSumCap)
        throw CapacityError("convex_sum_probability: N = " + std::to_string(N) +
                            " exceeds the configured cap " +
                            std::to_string(limits::kConvexSumCap));
    if (cutoff && *cutoff < 0) throw ValidationError("convex_sum_probability: negative cutoff");
    const RealMatrix usq = abs_squared(u);

    double acc = 0.0;
    for (int n = 0; n <= N; ++n) {
        const double weight = std::pow(x, n) * std::pow(1.0 - x, N - n);
        if (weight == 0.0) continue;
        double inner = 0.0;
        for_each_combination(N, n, [&](const std::vector<int>& in_idx) {
            const std::vector<int> block_in = pick(inputs, in_idx);
            const std::vector<int> rest_in = complement_of(inputs, in_idx);
            for_each_combination(N, n, [&](const std::vector<int>& out_idx) {
                const std::vector<int> block_out = pick(outputs, out_idx);
                const std::vector<int> rest_out = complement_of(outputs, out_idx);
                double quantum;
                if (cutoff) {
                    quantum = quantum_factor_cutoff(u, *cutoff, block_in, block_out);
                } else {
                    const Complex amp = permanent(submatrix(u, block_in, block_out));
                    quantum = std::norm(amp);
                }
                const double classical = permanent(submatrix(usq, rest_in, rest_out));
                inner += quantum * classical;
            });
        });
        acc += weight * inner;
    }
    return acc;
}

double rearranged_probability(const ComplexMatrix& u, int K, int R, double x,
                              const std::vector<int>& inputs, const std::vector<int>& outputs) {
    const int N = static_cast<int>(inputs.size());
    if (outputs.size() != inputs.size())
        throw ValidationError("rearranged_probability: inputs/outputs size mismatch");
    if (!(0 <= R && R <= K && K <= N))
        throw ValidationError("rearranged_probability: need 0 <= R <= K <= N");
    if (N > limits::kConvexSumCap || K > limits::kRearrangedBlockCap)
        throw CapacityError("rearranged_probability: size exceeds the configured caps");
    const RealMatrix usq = abs_squared(u);

    double acc = 0.0;
    for_each_combination(N, K, [&](const std::vector<int>& in_idx) {
        const std::vector<int> block_in = pick(inputs, in_idx);
        const std::vector<int> rest_in = complement_of(inputs, in_idx);
        for_each_combination(N, K, [&](const std::vector<int>& out_idx) {
            const std::vector<int> block_out = pick(outputs, out_idx);
            const std::vector<int> rest_out = complement_of(outputs, out_idx);
            double factor = 0.0;
            double xn = 1.0;
            for (int n = 0; n <= std::min(R, K); ++n) {
                if (n != 1) {
                    const double inv_binom =
                        to_double(Rational(1) / Rational(binomial_exact(N - n, K - n)));
                    factor += xn * inv_binom * u_class_sum_expanded(u, block_in, block_out, n);
                }
                xn *= x;
            }
            const double classical = permanent(submatrix(usq, rest_in, rest_out));
            acc += factor * classical;
        });
    });
    return acc;
}

DistributionTable enumerate_distribution(const ComplexMatrix& u, const FixedPointModel& model,
                                         const std::vector<int>& inputs) {
    const int N = static_cast<int>(inputs.size());
    const int M = static_cast<int>(u.cols());
    if (model.n_total != N)
        throw ValidationError("enumerate_distribution: model degree does not match input count");
    if (N > limits::kDerangementSumCap)
        throw CapacityError("enumerate_distribution: N exceeds the derangement kernel cap");
    if (binomial_exact(M, N) > limits::kDistributionTableCap)
        throw CapacityError("enumerate_distribution: C(M, N) exceeds the table cap");

    DistributionTable table;
    table.model_label = model.label;
    for_each_combination(M, N, [&](const std::vector<int>& ports) {
        table.configs.push_back(OutputConfiguration(ports));
    });
    table.probs.assign(table.configs.size(), 0.0);

    // s classes with zero weight contribute nothing; skip them up front.
    std::vector<int> s_set;
    for (int s = 0; s <= N; ++s)
        if (model.a[static_cast<std::size_t>(N - s)] != 0.0) s_set.push_back(s);

    const auto eval_range = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const std::vector<double> sums =
                derangement_sums(u, inputs, table.configs[i].ports, s_set);
            double p = 0.0;
            for (std::size_t j = 0; j < s_set.size(); ++j)
                p += model.a[static_cast<std::size_t>(N - s_set[j])] * sums[j];
            table.probs[i] = p;
        }
    };

    const std::size_t count = table.configs.size();
    const int threads = std::min<int>(env_thread_count(), static_cast<int>(count) == 0 ? 1 : static_cast<int>(count));
    if (threads <= 1 || count < 64) {
        eval_range(0, count);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (count + static_cast<std::size_t>(threads) - 1) /
                                  static_cast<std::size_t>(threads);
        for (int t = 0; t < threads; ++t) {
            const std::size_t begin = static_cast<std::size_t>(t) * chunk;
            const std::size_t end = std::min(count, begin + chunk);
            if (begin >= end) break;
            pool.emplace_back(eval_range, begin, end);
        }
        for (std::thread& th : pool) th.join();
    }
    return table;
}

double total_variation_distance(const DistributionTable& p, const DistributionTable& q) {
    if (p.configs.size() != q.configs.size())
        throw ValidationError("total_variation_distance: tables differ in support size");
    double acc = 0.0;
    for (std::size_t i = 0; i < p.configs.size(); ++i) {
        if (!(p.configs[i] == q.configs[i]))
            throw ValidationError("total_variation_distance: mismatched supports at row " +
                                  std::to_string(i));
        acc += std::abs(p.probs[i] - q.probs[i]);
    }
    return 0.5 * acc;
}

} // namespace bosonpd
