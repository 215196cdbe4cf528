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
#include <numeric>

#include "bosonpd/errors.hpp"
#include "bosonpd/kernels.hpp"
#include "bosonpd/montecarlo.hpp"

using namespace bosonpd;

namespace {

bool close_rel(double a, double b, double tol, double scale = 0.0) {
    return std::abs(a - b) <= tol * std::max({std::abs(a), std::abs(b), scale});
}

bool close_rel(Complex a, Complex b, double tol, double scale = 0.0) {
    return std::abs(a - b) <= tol * std::max({std::abs(a), std::abs(b), scale});
}

std::vector<int> iota_vec(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return v;
}

} // namespace

TEST_CASE("permanent basics") {
    CHECK(permanent(ComplexMatrix(ComplexMatrix::Identity(3, 3))) == Complex(1.0));
    CHECK(permanent(ComplexMatrix(ComplexMatrix::Ones(4, 4))).real() == doctest::Approx(24.0));
    ComplexMatrix a(2, 2);
    a << 1.0, 2.0, 3.0, 4.0;
    CHECK(permanent(a).real() == doctest::Approx(10.0)); // ad + bc
    CHECK(permanent(ComplexMatrix(0, 0)) == Complex(1.0));

    CHECK_THROWS_AS(permanent(ComplexMatrix(ComplexMatrix::Ones(2, 3))), ValidationError);
    CHECK_THROWS_AS(permanent(ComplexMatrix(ComplexMatrix::Ones(25, 25))), CapacityError);
}

TEST_CASE("permanent_naive basics") {
    CHECK(permanent_naive(ComplexMatrix(ComplexMatrix::Identity(2, 2))) == Complex(1.0));
    CHECK(permanent_naive(ComplexMatrix(ComplexMatrix::Ones(3, 3))).real() == doctest::Approx(6.0));
    CHECK_THROWS_AS(permanent_naive(ComplexMatrix(ComplexMatrix::Ones(10, 10))), CapacityError);

    const ComplexMatrix g = ginibre(6, 6, 1.0, 17, 0);
    const Complex ryser = permanent(g);
    const Complex naive = permanent_naive(g);
    CHECK(close_rel(ryser, naive, 1e-10));
}

TEST_CASE("ryser and glynn agree on seeded ginibre samples") {
    int sample = 0;
    for (int n = 2; n <= 10; ++n) {
        for (int rep = 0; rep < 23 && sample < 200; ++rep, ++sample) {
            const ComplexMatrix g = ginibre(n, n, 1.0, 401, static_cast<std::uint64_t>(sample));
            const Complex r = permanent(g);
            const Complex gl = permanent_glynn(g);
            REQUIRE_MESSAGE(close_rel(r, gl, 1e-10), "n=", n, " rep=", rep);
        }
    }
    CHECK(sample == 200);
}

TEST_CASE("interference term") {
    const ComplexMatrix u = haar_unitary(6, 5, 0);
    const std::vector<int> in = {0, 1, 2, 3}, out = {1, 2, 4, 5};

    SUBCASE("identity gives the classical |U|^2 permanent") {
        const Complex t = interference_term(u, Permutation::identity(4), in, out);
        const double classical = permanent(submatrix(abs_squared(u), in, out));
        CHECK(t.real() == doctest::Approx(classical).epsilon(1e-12));
        CHECK(std::abs(t.imag()) < 1e-12);
    }
    SUBCASE("n = 1 is a single squared modulus") {
        const Complex t = interference_term(u, Permutation::identity(1), {2}, {3});
        CHECK(t.real() == doctest::Approx(std::norm(u(2, 3))));
    }
    SUBCASE("T(sigma) + T(sigma^-1) is real") {
        const Permutation sigma = Permutation::from_cycle(4, {0, 2, 3});
        const Complex sum = interference_term(u, sigma, in, out) +
                            interference_term(u, sigma.inverse(), in, out);
        CHECK(std::abs(sum.imag()) < 1e-12 * (1.0 + std::abs(sum.real())));
    }
    SUBCASE("size mismatch is rejected") {
        CHECK_THROWS_AS(interference_term(u, Permutation::identity(3), in, out),
                        ValidationError);
    }
}

TEST_CASE("derangement class sums: trivial classes") {
    const ComplexMatrix u = haar_unitary(5, 11, 0);
    const std::vector<int> in = {0, 1, 2, 4}, out = {0, 2, 3, 4};

    const double s0 = derangement_sum(u, in, out, 0);
    CHECK(s0 == doctest::Approx(permanent(submatrix(abs_squared(u), in, out))).epsilon(1e-11));
    CHECK(derangement_sum(u, in, out, 1) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("derangement sums match the brute-force oracle") {
    for (int n = 2; n <= 5; ++n) {
        const std::vector<int> ports = iota_vec(n);
        for (std::uint64_t rep = 0; rep < 3; ++rep) {
            const ComplexMatrix g = ginibre(n, n, 1.0, 777, rep);
            const auto sums = derangement_class_sums(g, ports, ports);
            double scale = 0.0;
            for (const auto& r : sums) scale += std::abs(r.value);
            for (int s = 0; s <= n; ++s) {
                const double fast = derangement_sum(g, ports, ports, s);
                const double brute = derangement_sum_bruteforce(g, ports, ports, s);
                REQUIRE_MESSAGE(close_rel(fast, brute, 1e-9, scale), "n=", n, " s=", s);
            }
        }
    }
    // the spec's pinned case
    const ComplexMatrix g = ginibre(4, 4, 1.0, 7, 0);
    const std::vector<int> ports = iota_vec(4);
    CHECK(close_rel(derangement_sum(g, ports, ports, 2),
                    derangement_sum_bruteforce(g, ports, ports, 2), 1e-9));
}

TEST_CASE("derangement sum 2x2 by hand") {
    const ComplexMatrix u = haar_unitary(2, 3, 0);
    const std::vector<int> ports = {0, 1};
    // D_2 of S_2 is the single swap; T(swap) + nothing else.
    const double expected =
        2.0 * (std::conj(u(1, 0)) * std::conj(u(0, 1)) * u(0, 0) * u(1, 1)).real();
    CHECK(derangement_sum(u, ports, ports, 2) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(derangement_sum_bruteforce(u, ports, ports, 2) ==
          doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("derangement sums on identity matrix") {
    const ComplexMatrix id = ComplexMatrix::Identity(3, 3);
    const std::vector<int> ports = iota_vec(3);
    CHECK(derangement_sum_bruteforce(id, ports, ports, 3) == doctest::Approx(0.0));
    CHECK(derangement_sum(id, ports, ports, 3) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("full sum over classes reconstructs |per U|^2") {
    for (int n = 2; n <= 7; ++n) {
        const std::vector<int> ports = iota_vec(n);
        const ComplexMatrix u = haar_unitary(n + 2, 23 + static_cast<std::uint64_t>(n), 0);
        const auto sums = derangement_class_sums(u, ports, ports);
        double total = 0.0;
        for (const auto& r : sums) total += r.value.real();
        const double expected = std::norm(permanent(submatrix(u, ports, ports)));
        REQUIRE_MESSAGE(close_rel(total, expected, 1e-9, 1e-9), "n=", n);
    }
}

TEST_CASE("imaginary residues stay below the asserted tolerance") {
    for (int n = 2; n <= 6; ++n) {
        const std::vector<int> ports = iota_vec(n);
        const ComplexMatrix g = ginibre(n, n, 1.0, 99, static_cast<std::uint64_t>(n));
        for (const auto& r : derangement_class_sums(g, ports, ports))
            CHECK(std::abs(r.value.imag()) <=
                  limits::kImagResidueSoft * (1.0 + std::abs(r.value.real())));
    }
}

TEST_CASE("global phase leaves derangement sums unchanged") {
    const int n = 4;
    const std::vector<int> ports = iota_vec(n);
    const ComplexMatrix g = ginibre(n, n, 1.0, 1234, 0);
    const ComplexMatrix g2 = std::polar(1.0, 0.7) * g;
    for (int s = 0; s <= n; ++s)
        CHECK(derangement_sum(g, ports, ports, s) ==
              doctest::Approx(derangement_sum(g2, ports, ports, s)).epsilon(1e-11));
}

TEST_CASE("batched entry point matches single-s calls") {
    const int n = 5;
    const std::vector<int> ports = iota_vec(n);
    const ComplexMatrix u = haar_unitary(n, 31, 0);
    const std::vector<int> s_set = {0, 2, 3, 5};
    const auto batched = derangement_sums(u, ports, ports, s_set);
    for (std::size_t i = 0; i < s_set.size(); ++i)
        CHECK(batched[i] == derangement_sum(u, ports, ports, s_set[i]));
    CHECK_THROWS_AS(derangement_sums(u, ports, ports, {6}), ValidationError);
}

TEST_CASE("chi moment") {
    CHECK(chi_moment(0) == 1);
    CHECK(chi_moment(2) == 5);
    CHECK(chi_moment(3) == 16);
    CHECK_THROWS_AS(chi_moment(21), CapacityError);
    // oracle: group sum of 2^(fixed points)
    for (int n = 0; n <= 7; ++n) {
        std::int64_t brute = 0;
        for_each_permutation(n, [&](const Permutation& p) {
            brute += std::int64_t(1) << p.fixed_point_count();
        });
        CHECK(chi_moment(n) == brute);
    }
}
