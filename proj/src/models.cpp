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

#include "bosonpd/models.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Dense>

#include "bosonpd/errors.hpp"

namespace bosonpd {

double FixedPointModel::evaluate(const Permutation& p) const {
    if (p.size() != n_total)
        throw ValidationError("FixedPointModel::evaluate: permutation size mismatch");
    return a[static_cast<std::size_t>(p.fixed_point_count())];
}

bool FixedPointModel::normalized() const { return !a.empty() && a.back() == 1.0; }

namespace {

void check_x_range(double x, const char* who) {
    if (!(x >= 0.0 && x <= 1.0))
        throw ValidationError(std::string(who) + ": x must lie in [0, 1]");
}

void check_x_range(const Rational& x, const char* who) {
    if (x < 0 || x > 1) throw ValidationError(std::string(who) + ": x must lie in [0, 1]");
}

std::vector<double> mirror(const std::vector<Rational>& exact) {
    std::vector<double> out;
    out.reserve(exact.size());
    for (const Rational& v : exact) out.push_back(to_double(v));
    return out;
}

std::string format_x(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

} // namespace

FixedPointModel model_uniform(int N, double x) {
    if (N < 0) throw ValidationError("model_uniform: negative N");
    check_x_range(x, "model_uniform");
    FixedPointModel m;
    m.n_total = N;
    m.a.resize(static_cast<std::size_t>(N) + 1);
    for (int i = 0; i <= N; ++i)
        m.a[static_cast<std::size_t>(i)] = std::pow(x, N - i);
    m.a[static_cast<std::size_t>(N)] = 1.0; // pow(0,0) pinned
    m.label = "uniform(N=" + std::to_string(N) + ",x=" + format_x(x) + ")";
    return m;
}

FixedPointModel model_uniform(int N, const Rational& x) {
    if (N < 0) throw ValidationError("model_uniform: negative N");
    check_x_range(x, "model_uniform");
    std::vector<Rational> exact(static_cast<std::size_t>(N) + 1);
    for (int i = 0; i <= N; ++i)
        exact[static_cast<std::size_t>(i)] = pow_rational(x, N - i);
    FixedPointModel m;
    m.n_total = N;
    m.a = mirror(exact);
    m.a_exact = std::move(exact);
    m.label = "uniform(N=" + std::to_string(N) + ",x=" + format_rational(x) + ")";
    return m;
}

FixedPointModel model_cutoff(int N, int R, double x) {
    if (N < 0 || R < 0 || R > N) throw ValidationError("model_cutoff: need 0 <= R <= N");
    check_x_range(x, "model_cutoff");
    FixedPointModel m = model_uniform(N, x);
    for (int i = 0; i < N - R; ++i) m.a[static_cast<std::size_t>(i)] = 0.0;
    m.label = "cutoff(N=" + std::to_string(N) + ",R=" + std::to_string(R) + ",x=" +
              format_x(x) + ")";
    return m;
}

FixedPointModel model_cutoff(int N, int R, const Rational& x) {
    if (N < 0 || R < 0 || R > N) throw ValidationError("model_cutoff: need 0 <= R <= N");
    check_x_range(x, "model_cutoff");
    FixedPointModel m = model_uniform(N, x);
    for (int i = 0; i < N - R; ++i) {
        m.a[static_cast<std::size_t>(i)] = 0.0;
        (*m.a_exact)[static_cast<std::size_t>(i)] = 0;
    }
    m.label = "cutoff(N=" + std::to_string(N) + ",R=" + std::to_string(R) + ",x=" +
              format_rational(x) + ")";
    return m;
}

namespace {

std::vector<Rational> rearranged_exact(int N, int K, int R, const Rational& x) {
    std::vector<Rational> a(static_cast<std::size_t>(K) + 1, Rational(0));
    for (int m = K - R; m <= K; ++m)
        a[static_cast<std::size_t>(m)] =
            pow_rational(x, K - m) / Rational(binomial_exact(N - K + m, m));
    return a;
}

void check_rearranged_params(int N, int K, int R, const char* who) {
    if (!(0 <= R && R <= K && K <= N))
        throw ValidationError(std::string(who) + ": need 0 <= R <= K <= N");
}

} // namespace

FixedPointModel model_rearranged(int N, int K, int R, double x) {
    check_rearranged_params(N, K, R, "model_rearranged");
    check_x_range(x, "model_rearranged");
    FixedPointModel m;
    m.n_total = K;
    m.a.assign(static_cast<std::size_t>(K) + 1, 0.0);
    for (int j = K - R; j <= K; ++j)
        m.a[static_cast<std::size_t>(j)] =
            std::pow(x, K - j) / to_double(Rational(binomial_exact(N - K + j, j)));
    m.label = "rearranged(N=" + std::to_string(N) + ",K=" + std::to_string(K) + ",R=" +
              std::to_string(R) + ",x=" + format_x(x) + ")";
    return m;
}

FixedPointModel model_rearranged(int N, int K, int R, const Rational& x) {
    check_rearranged_params(N, K, R, "model_rearranged");
    check_x_range(x, "model_rearranged");
    std::vector<Rational> exact = rearranged_exact(N, K, R, x);
    FixedPointModel m;
    m.n_total = K;
    m.a = mirror(exact);
    m.a_exact = std::move(exact);
    m.label = "rearranged(N=" + std::to_string(N) + ",K=" + std::to_string(K) + ",R=" +
              std::to_string(R) + ",x=" + format_rational(x) + ")";
    return m;
}

FixedPointModel model_custom(std::vector<double> a, std::string label) {
    if (a.empty()) throw ValidationError("model_custom: empty coefficient list");
    FixedPointModel m;
    m.n_total = static_cast<int>(a.size()) - 1;
    m.a = std::move(a);
    m.label = std::move(label);
    return m;
}

PositivityCertificate binomial_transform(const FixedPointModel& model, bool exact) {
    const int N = model.n_total;
    PositivityCertificate cert;
    if (exact) {
        if (!model.a_exact)
            throw ValidationError(
                "binomial_transform: exact mode needs a model built from a rational x; "
                "approximate x by a fraction p/q first");
        std::vector<Rational> b(static_cast<std::size_t>(N) + 1, Rational(0));
        for (int n = 0; n <= N; ++n) {
            Rational acc = 0;
            for (int m = 0; m <= n; ++m) {
                const Rational term =
                    Rational(binomial_exact(n, m)) * (*model.a_exact)[static_cast<std::size_t>(m)];
                acc += ((n - m) % 2 == 0) ? term : -term;
            }
            b[static_cast<std::size_t>(n)] = acc;
        }
        cert.b = mirror(b);
        cert.sufficient_pd = std::all_of(b.begin(), b.end(), [](const Rational& v) { return v >= 0; });
        cert.min_b = *std::min_element(cert.b.begin(), cert.b.end());
        cert.b_exact = std::move(b);
        cert.exact = true;
        return cert;
    }
    cert.b.assign(static_cast<std::size_t>(N) + 1, 0.0);
    for (int n = 0; n <= N; ++n) {
        double acc = 0.0;
        for (int m = 0; m <= n; ++m) {
            const double term =
                to_double(Rational(binomial_exact(n, m))) * model.a[static_cast<std::size_t>(m)];
            acc += ((n - m) % 2 == 0) ? term : -term;
        }
        cert.b[static_cast<std::size_t>(n)] = acc;
    }
    cert.min_b = *std::min_element(cert.b.begin(), cert.b.end());
    cert.sufficient_pd = cert.min_b >= -kPositivityTolerance;
    cert.exact = false;
    return cert;
}

double gram_min_eigenvalue(const FixedPointModel& model, int cap) {
    const int N = model.n_total;
    if (N > cap)
        throw CapacityError("gram_min_eigenvalue: N = " + std::to_string(N) +
                            " exceeds the configured cap " + std::to_string(cap));
    const std::vector<Permutation> perms = all_permutations(N);
    const Eigen::Index size = static_cast<Eigen::Index>(perms.size());
    Eigen::MatrixXd gram(size, size);
    for (Eigen::Index i = 0; i < size; ++i) {
        for (Eigen::Index j = 0; j < size; ++j) {
            // fixed points of p_i * p_j^{-1} = agreements of p_i with p_j
            int agree = 0;
            for (int k = 0; k < N; ++k)
                if (perms[static_cast<std::size_t>(i)](k) == perms[static_cast<std::size_t>(j)](k))
                    ++agree;
            gram(i, j) = model.a[static_cast<std::size_t>(agree)];
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram,
                                                          Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

namespace {

bool rearranged_feasible(int N, int K, int R, const Rational& x) {
    const std::vector<Rational> a = rearranged_exact(N, K, R, x);
    for (int n = 0; n <= K; ++n) {
        Rational acc = 0;
        for (int m = 0; m <= n; ++m) {
            const Rational term = Rational(binomial_exact(n, m)) * a[static_cast<std::size_t>(m)];
            acc += ((n - m) % 2 == 0) ? term : -term;
        }
        if (acc < 0) return false;
    }
    return true;
}

} // namespace

Rational positivity_threshold(int N, int K, int R) {
    check_rearranged_params(N, K, R, "positivity_threshold");
    const Rational one(1);
    if (rearranged_feasible(N, K, R, one)) return one;

    Rational lo(0), hi(1);
    for (int iter = 0; iter < 40; ++iter) {
        const Rational mid = (lo + hi) / 2;
        if (rearranged_feasible(N, K, R, mid))
            lo = mid;
        else
            hi = mid;
    }
    // Post-validation: the reported point must be feasible and a point just
    // above it infeasible. A failure here would mean the feasible set is not
    // an interval near x*, which is a finding to surface, not to hide.
    if (!rearranged_feasible(N, K, R, lo))
        throw InvariantViolation("positivity_threshold: reported x* is not feasible");
    const Rational probe = lo * (Rational(1) + Rational(1, Int(1) << 20));
    if (probe <= 1 && rearranged_feasible(N, K, R, probe))
        throw InvariantViolation(
            "positivity_threshold: feasibility is not monotone just above x*");
    return lo;
}

double evaluate(const FixedPointModel& model, const Permutation& p) { return model.evaluate(p); }

} // namespace bosonpd
