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

#include "bosonpd/errors.hpp"
#include "bosonpd/models.hpp"

using namespace bosonpd;

TEST_CASE("uniform model coefficients") {
    const FixedPointModel all_one = model_uniform(3, 1.0);
    CHECK(all_one.a == std::vector<double>{1.0, 1.0, 1.0, 1.0});

    const FixedPointModel classical = model_uniform(3, 0.0);
    CHECK(classical.a == std::vector<double>{0.0, 0.0, 0.0, 1.0});

    const FixedPointModel half = model_uniform(2, 0.5);
    CHECK(half.a == std::vector<double>{0.25, 0.5, 1.0});

    CHECK_THROWS_AS(model_uniform(3, 1.5), ValidationError);
    CHECK_THROWS_AS(model_uniform(3, -0.1), ValidationError);
}

TEST_CASE("cutoff model coefficients") {
    CHECK(model_cutoff(4, 4, 0.3).a == model_uniform(4, 0.3).a);
    CHECK(model_cutoff(2, 0, 0.7).a == std::vector<double>{0.0, 0.0, 1.0});
    CHECK(model_cutoff(2, 1, 1.0).a == std::vector<double>{0.0, 1.0, 1.0});
    CHECK_THROWS_AS(model_cutoff(2, 3, 0.5), ValidationError);
}

TEST_CASE("rearranged model coefficients") {
    const FixedPointModel same = model_rearranged(5, 5, 2, Rational(1, 3));
    const FixedPointModel cut = model_cutoff(5, 2, Rational(1, 3));
    CHECK(same.a == cut.a);

    const FixedPointModel m = model_rearranged(20, 6, 3, Rational(1, 2));
    CHECK(m.n_total == 6);
    CHECK(m.a[0] == 0.0);
    CHECK(m.a[1] == 0.0);
    CHECK(m.a[2] == 0.0);
    // a_4 = x^2 / C(18, 4) = (1/4) / 3060
    CHECK((*m.a_exact)[4] == Rational(1, 4) / Rational(3060));
    // top coefficient of the rearranged factor is 1/C(N, K), not 1
    CHECK((*m.a_exact)[6] == Rational(1) / Rational(binomial_exact(20, 6)));

    CHECK_THROWS_AS(model_rearranged(5, 6, 2, 0.5), ValidationError);
    CHECK_THROWS_AS(model_rearranged(5, 4, 5, 0.5), ValidationError);
}

TEST_CASE("evaluate by fixed point count") {
    const FixedPointModel m = model_uniform(3, 0.5);
    CHECK(evaluate(m, Permutation::identity(3)) == 1.0);
    CHECK(evaluate(m, Permutation::from_cycle(3, {0, 1, 2})) == doctest::Approx(0.125));
    const FixedPointModel cut = model_cutoff(3, 1, 0.5);
    CHECK(evaluate(cut, Permutation::from_cycle(3, {0, 1})) == 0.0);
    CHECK_THROWS_AS(evaluate(m, Permutation::identity(4)), ValidationError);
}

TEST_CASE("binomial transform closed forms") {
    SUBCASE("uniform model: b_n = x^(N-n) (1-x)^n") {
        const FixedPointModel m = model_uniform(2, Rational(1, 2));
        const PositivityCertificate cert = binomial_transform(m, true);
        REQUIRE(cert.exact);
        CHECK(*cert.b_exact ==
              std::vector<Rational>{Rational(1, 4), Rational(1, 4), Rational(1, 4)});
        CHECK(cert.sufficient_pd);

        for (int N = 2; N <= 12; ++N) {
            for (const Rational x : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
                const PositivityCertificate c = binomial_transform(model_uniform(N, x), true);
                REQUIRE(c.sufficient_pd);
                for (int n = 0; n <= N; ++n)
                    CHECK((*c.b_exact)[static_cast<std::size_t>(n)] ==
                          pow_rational(x, N - n) * pow_rational(1 - x, n));
            }
        }
    }
    SUBCASE("J = 1 telescopes to a delta") {
        const PositivityCertificate cert = binomial_transform(model_uniform(4, Rational(1)), true);
        CHECK(*cert.b_exact == std::vector<Rational>{1, 0, 0, 0, 0});
    }
    SUBCASE("cutoff counterexample b_2 = -1") {
        const PositivityCertificate cert =
            binomial_transform(model_cutoff(2, 1, Rational(1)), true);
        CHECK(*cert.b_exact == std::vector<Rational>{0, 1, -1});
        CHECK_FALSE(cert.sufficient_pd);
        CHECK(cert.min_b == -1.0);
    }
    SUBCASE("exact mode demands rational coefficients") {
        CHECK_THROWS_AS(binomial_transform(model_uniform(3, 0.3), true), ValidationError);
        CHECK_NOTHROW(binomial_transform(model_uniform(3, 0.3), false));
    }
}

TEST_CASE("binomial transform round trip") {
    // a_m = sum_{n<=m} C(m,n) b_n reconstructs every family exactly.
    const auto reconstruct_and_check = [](const FixedPointModel& m) {
        const PositivityCertificate cert = binomial_transform(m, true);
        const std::vector<Rational>& b = *cert.b_exact;
        for (int i = 0; i <= m.n_total; ++i) {
            Rational acc = 0;
            for (int n = 0; n <= i; ++n)
                acc += Rational(binomial_exact(i, n)) * b[static_cast<std::size_t>(n)];
            CHECK(acc == (*m.a_exact)[static_cast<std::size_t>(i)]);
        }
    };
    for (int N : {2, 5, 9, 12}) {
        reconstruct_and_check(model_uniform(N, Rational(2, 7)));
        reconstruct_and_check(model_cutoff(N, N / 2, Rational(2, 7)));
        reconstruct_and_check(model_rearranged(N + 6, N, N / 2, Rational(2, 7)));
    }
}

TEST_CASE("gram matrix eigenvalues") {
    SUBCASE("J = 1 is rank one PSD") {
        CHECK(gram_min_eigenvalue(model_uniform(3, 1.0)) == doctest::Approx(0.0).epsilon(1e-10));
    }
    SUBCASE("classical delta gives the identity gram") {
        CHECK(gram_min_eigenvalue(model_uniform(3, 0.0)) == doctest::Approx(1.0));
    }
    SUBCASE("cutoff(5, 2, 1) is certifiably not positive definite") {
        // dense eigensolver oracle confirms the sign; regression value frozen
        const double lambda = gram_min_eigenvalue(model_cutoff(5, 2, 1.0));
        CHECK(lambda < -1e-6);
        CHECK(lambda == doctest::Approx(-9.0).epsilon(1e-9));
    }
    SUBCASE("sufficiency soundness: b >= 0 implies PSD gram") {
        for (int N = 2; N <= 5; ++N)
            for (const double x : {0.0, 0.25, 0.5, 0.75, 1.0}) {
                const FixedPointModel m = model_uniform(N, x);
                if (binomial_transform(m).sufficient_pd)
                    CHECK(gram_min_eigenvalue(m) >= -1e-10);
            }
    }
    SUBCASE("cap") {
        CHECK_THROWS_AS(gram_min_eigenvalue(model_uniform(7, 0.5)), CapacityError);
    }
}

TEST_CASE("positivity threshold") {
    SUBCASE("no truncation keeps the full range") {
        CHECK(positivity_threshold(4, 4, 4) == Rational(1));
        CHECK(positivity_threshold(9, 4, 0) == Rational(1));
    }
    SUBCASE("K = N = 2, R = 1: threshold is exactly 1/2") {
        // b_2 = 1 - 2x by hand, so the dyadic search must land on 1/2.
        CHECK(positivity_threshold(2, 2, 1) == Rational(1, 2));
    }
    SUBCASE("(20, 6, 3): binding coefficient has root 1/(N-R+1) = 1/18") {
        const Rational x_star = positivity_threshold(20, 6, 3);
        CHECK(x_star <= Rational(1, 18));
        CHECK(Rational(1, 18) - x_star < Rational(1, Int(1) << 39));
        // b_{K-R+1} = x^2 (1/3060 - x/170) changes sign exactly at 1/18
        const auto feasible_at = [](const Rational& x) {
            return binomial_transform(model_rearranged(20, 6, 3, x), true).sufficient_pd;
        };
        CHECK(feasible_at(Rational(1, 18)));
        CHECK_FALSE(feasible_at(Rational(1, 18) + Rational(1, 1 << 20)));
        CHECK_FALSE(feasible_at(Rational(1, 14))); // the asymptotic scale is not exact
        CHECK_FALSE(feasible_at(Rational(1, 2)));
    }
    SUBCASE("(50, 8, 3): threshold sits at 1/(N-R+1) = 1/48") {
        const Rational x_star = positivity_threshold(50, 8, 3);
        CHECK(x_star <= Rational(1, 48));
        CHECK(Rational(1, 48) - x_star < Rational(1, Int(1) << 39));
    }
}

TEST_CASE("rising factorial approximation stays within its error band") {
    // Exact coefficients against the (N-K)^n approximation for N-K >= 100.
    // The approximation presumes block sizes far below sqrt(N-K), so K is
    // kept near R here.
    const auto check_config = [](int N, int K, int R) {
        const double nk = static_cast<double>(N - K);
        for (const Rational x : {Rational(1, N - K), Rational(1, 2 * (N - K))}) {
            const PositivityCertificate cert =
                binomial_transform(model_rearranged(N, K, R, x), true);
            for (int n = K - R; n <= K; ++n) {
                const double exact = cert.b[static_cast<std::size_t>(n)];
                // n! x^(K-n) / (N-K)^n * sum_{s<=n-K+R} (-(N-K)x)^s / s!
                double sum = 0.0, term = 1.0;
                for (int s = 0; s <= n - K + R; ++s) {
                    sum += term;
                    term *= -nk * to_double(x) / (s + 1);
                }
                const double approx = to_double(Rational(factorial_exact(n))) *
                                      std::pow(to_double(x), K - n) / std::pow(nk, n) * sum;
                if (exact > 0.0) {
                    const double ratio = approx / exact;
                    const double band = 5.0 * R * R / nk;
                    CHECK(ratio >= 1.0 - band);
                    CHECK(ratio <= 1.0 + band);
                }
            }
        }
    };
    check_config(120, 3, 3);
    check_config(120, 4, 3);
    check_config(150, 4, 3);
}

TEST_CASE("fixed subset identity") {
    // sum_{m>=n} C(m,n) [fp(sigma) = m] equals the number of n-subsets fixed
    // pointwise, verified by enumeration for N <= 6.
    for (int N = 1; N <= 6; ++N) {
        for_each_permutation(N, [&](const Permutation& sigma) {
            for (int n = 0; n <= N; ++n) {
                const Int lhs = binomial_exact(sigma.fixed_point_count(), n);
                int count = 0;
                for_each_combination(N, n, [&](const std::vector<int>& subset) {
                    for (int k : subset)
                        if (sigma(k) != k) return;
                    ++count;
                });
                CHECK(lhs == count);
            }
        });
    }
}
