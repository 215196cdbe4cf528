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

#ifndef BOSONPD_RATIONAL_HPP
#define BOSONPD_RATIONAL_HPP

#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace bosonpd {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Int factorial_exact(int n);
Int binomial_exact(int n, int k);
Rational pow_rational(const Rational& base, int exponent);

double to_double(const Rational& r);

/// "p/q" or a bare integer. Returns nullopt if the text is not of that shape
/// (decimal inputs are handled by the caller as doubles).
std::optional<Rational> parse_rational(const std::string& text);

/// Canonical "p/q" (or "p" when the denominator is 1).
std::string format_rational(const Rational& r);

} // namespace bosonpd

#endif
