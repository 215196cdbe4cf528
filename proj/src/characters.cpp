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

#include "bosonpd/characters.hpp"

#include <algorithm>
#include <numeric>

#include <nlohmann/json.hpp>

#include "bosonpd/errors.hpp"

namespace bosonpd {

namespace {

void check_degree(const FixedPointModel& model, const CharacterTable& table, const char* who) {
    if (model.n_total != table.n)
        throw ValidationError(std::string(who) + ": model degree does not match the table");
}

} // namespace

ClassFunction to_class_function(const FixedPointModel& model, const CharacterTable& table) {
    check_degree(model, table, "to_class_function");
    ClassFunction f;
    f.n = table.n;
    f.values.reserve(table.partitions.size());
    for (const IntegerPartition& cls : table.partitions)
        f.values.push_back(model.a[static_cast<std::size_t>(cls.count_ones())]);
    return f;
}

ClassFunction to_class_function(const FixedPointModel& model) {
    return to_class_function(model, character_table(model.n_total));
}

std::optional<ClassFunctionExact> to_class_function_exact(const FixedPointModel& model,
                                                          const CharacterTable& table) {
    check_degree(model, table, "to_class_function_exact");
    if (!model.a_exact) return std::nullopt;
    ClassFunctionExact f;
    f.n = table.n;
    f.values.reserve(table.partitions.size());
    for (const IntegerPartition& cls : table.partitions)
        f.values.push_back((*model.a_exact)[static_cast<std::size_t>(cls.count_ones())]);
    return f;
}

CharacterExpansion expand_class_function(const ClassFunction& f, const CharacterTable& table) {
    if (f.n != table.n || f.values.size() != table.partitions.size())
        throw ValidationError("expand_class_function: class function does not match the table");
    const double n_factorial = to_double(Rational(factorial_exact(table.n)));
    CharacterExpansion e;
    e.n = table.n;
    e.q.resize(table.partitions.size());
    for (std::size_t row = 0; row < table.partitions.size(); ++row) {
        double inner = 0.0;
        for (std::size_t col = 0; col < table.partitions.size(); ++col)
            inner += static_cast<double>(table.class_sizes[col]) * f.values[col] *
                     static_cast<double>(table.value(static_cast<int>(row), static_cast<int>(col)));
        e.q[row] = inner * static_cast<double>(table.dims[row]) / n_factorial;
    }
    return e;
}

std::vector<Rational> expand_class_function_exact(const ClassFunctionExact& f,
                                                  const CharacterTable& table) {
    if (f.n != table.n || f.values.size() != table.partitions.size())
        throw ValidationError("expand_class_function_exact: class function does not match the table");
    const Rational n_factorial(factorial_exact(table.n));
    std::vector<Rational> q(table.partitions.size());
    for (std::size_t row = 0; row < table.partitions.size(); ++row) {
        Rational inner = 0;
        for (std::size_t col = 0; col < table.partitions.size(); ++col)
            inner += Rational(table.class_sizes[col]) * f.values[col] *
                     Rational(table.value(static_cast<int>(row), static_cast<int>(col)));
        q[row] = inner * Rational(table.dims[row]) / n_factorial;
    }
    return q;
}

std::string CharacterExpansion::to_json(const CharacterTable& table) const {
    if (q.size() != table.partitions.size())
        throw ValidationError("CharacterExpansion::to_json: size mismatch with the table");
    nlohmann::json weights = nlohmann::json::object();
    for (std::size_t i = 0; i < q.size(); ++i)
        weights[table.partitions[i].to_string()] = q[i];
    nlohmann::json doc;
    doc["n"] = n;
    if (x) doc["x"] = *x;
    doc["q"] = std::move(weights);
    return doc.dump(2);
}

std::int64_t trace_Ln(int N, int n, const Permutation& p) {
    if (n < 0 || n > N) throw ValidationError("trace_Ln: need 0 <= n <= N");
    if (p.size() != N) throw ValidationError("trace_Ln: permutation size mismatch");
    return static_cast<std::int64_t>(binomial_exact(p.fixed_point_count(), N - n));
}

std::vector<Rational> decompose_trace_Ln(int N, int n, const CharacterTable& table) {
    if (table.n != N) throw ValidationError("decompose_trace_Ln: table degree mismatch");
    if (n < 0 || n > N) throw ValidationError("decompose_trace_Ln: need 0 <= n <= N");
    ClassFunctionExact f;
    f.n = N;
    f.values.reserve(table.partitions.size());
    for (const IntegerPartition& cls : table.partitions)
        f.values.push_back(Rational(binomial_exact(cls.count_ones(), N - n)));
    // Multiplicities are plain inner products (no dimension factor).
    const Rational n_factorial(factorial_exact(N));
    std::vector<Rational> m(table.partitions.size());
    for (std::size_t row = 0; row < table.partitions.size(); ++row) {
        Rational inner = 0;
        for (std::size_t col = 0; col < table.partitions.size(); ++col)
            inner += Rational(table.class_sizes[col]) * f.values[col] *
                     Rational(table.value(static_cast<int>(row), static_cast<int>(col)));
        m[row] = inner / n_factorial;
    }
    return m;
}

Complex immanant(const ComplexMatrix& a, const IntegerPartition& lambda, int cap) {
    if (a.rows() != a.cols()) throw ValidationError("immanant: matrix must be square");
    const int n = static_cast<int>(a.rows());
    if (lambda.total != n)
        throw ValidationError("immanant: partition total does not match matrix size");
    if (n > cap)
        throw CapacityError("immanant: n = " + std::to_string(n) +
                            " exceeds the configured cap " + std::to_string(cap));
    const CharacterTable table = character_table(n);
    const int row = table.index_of(lambda);

    Complex total(0);
    for_each_permutation(n, [&](const Permutation& sigma) {
        Complex prod(1);
        for (int i = 0; i < n; ++i) prod *= a(i, sigma(i));
        const int col = table.index_of(cycle_type(sigma));
        total += static_cast<double>(table.value(row, col)) * prod;
    });
    return total;
}

} // namespace bosonpd
