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

#include <chrono>
#include <numeric>

#include "bosonpd/kernels.hpp"
#include "bosonpd/montecarlo.hpp"

using namespace bosonpd;

TEST_CASE("derangement kernel completes n = 12 within the single-core budget") {
    const int n = 12;
    std::vector<int> ports(static_cast<std::size_t>(n));
    std::iota(ports.begin(), ports.end(), 0);
    const ComplexMatrix g = ginibre(n, n, 1.0 / n, 120, 0);

    const auto start = std::chrono::steady_clock::now();
    const auto sums = derangement_class_sums(g, ports, ports);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    MESSAGE("n=12 class sums took ", elapsed, " s");
    CHECK(elapsed < 60.0);

    double total = 0.0;
    for (const auto& r : sums) total += r.value.real();
    const double expected = std::norm(permanent(submatrix(g, ports, ports)));
    CHECK(std::abs(total - expected) <= 1e-7 * expected);
}
