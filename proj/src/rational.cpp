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

#include "bosonpd/rational.hpp"

#include <cctype>

#include "bosonpd/errors.hpp"

namespace bosonpd {

Int factorial_exact(int n) {
    if (n < 0) throw ValidationError("factorial_exact: negative argument");
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

Int binomial_exact(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

Rational pow_rational(const Rational& base, int exponent) {
    if (exponent < 0) {
        if (base == 0) throw ValidationError("pow_rational: 0 to a negative power");
        return 1 / pow_rational(base, -exponent);
    }
    Rational r = 1;
    Rational b = base;
    int e = exponent;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::optional<Rational> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::size_t pos = 0;
    auto parse_int = [&](Int& out) -> bool {
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
        std::size_t digits = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            ++digits;
        }
        if (digits == 0) return false;
        out = Int(text.substr(start, pos - start));
        return true;
    };
    Int num;
    if (!parse_int(num)) return std::nullopt;
    if (pos == text.size()) return Rational(num);
    if (text[pos] != '/') return std::nullopt;
    ++pos;
    Int den;
    if (!parse_int(den) || pos != text.size()) return std::nullopt;
    if (den == 0) throw ValidationError("parse_rational: zero denominator in '" + text + "'");
    return Rational(num, den);
}

std::string format_rational(const Rational& r) {
    const Int num = boost::multiprecision::numerator(r);
    const Int den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

} // namespace bosonpd
