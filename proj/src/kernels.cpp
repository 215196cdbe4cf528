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

#include "bosonpd/kernels.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "bosonpd/debug.hpp"
#include "bosonpd/errors.hpp"

namespace bosonpd {

namespace {

void require_square(Eigen::Index rows, Eigen::Index cols, const char* who) {
    if (rows != cols)
        throw ValidationError(std::string(who) + ": matrix must be square, got " +
                              std::to_string(rows) + "x" + std::to_string(cols));
}

void require_cap(int n, int cap, const char* who) {
    if (n > cap)
        throw CapacityError(std::string(who) + ": n = " + std::to_string(n) +
                            " exceeds the configured cap " + std::to_string(cap));
}

void require_ports(const ComplexMatrix& u, const std::vector<int>& inputs,
                   const std::vector<int>& outputs, const char* who) {
    if (inputs.size() != outputs.size())
        throw ValidationError(std::string(who) + ": inputs and outputs differ in length");
    for (int k : inputs)
        if (k < 0 || k >= u.rows())
            throw ValidationError(std::string(who) + ": input port out of range");
    for (int l : outputs)
        if (l < 0 || l >= u.cols())
            throw ValidationError(std::string(who) + ": output port out of range");
}

// Shared Ryser loop: subsets of columns stepped in Gray-code order, one
// column toggled per step, row sums updated in O(n).
template <typename Scalar, typename Mat>
Scalar ryser_permanent(const Mat& a) {
    const int n = static_cast<int>(a.rows());
    if (n == 0) return Scalar(1);
    std::vector<Scalar> row_sum(static_cast<std::size_t>(n), Scalar(0));
    Scalar total(0);
    const std::uint64_t count = std::uint64_t(1) << n;
    std::uint64_t gray = 0;
    int popcount = 0;
    for (std::uint64_t k = 1; k < count; ++k) {
        const int j = std::countr_zero(k);
        const std::uint64_t bit = std::uint64_t(1) << j;
        gray ^= bit;
        const bool added = (gray & bit) != 0;
        popcount += added ? 1 : -1;
        for (int i = 0; i < n; ++i) {
            const Scalar v = a(i, j);
            row_sum[static_cast<std::size_t>(i)] += added ? v : -v;
        }
        Scalar prod(1);
        for (int i = 0; i < n; ++i) prod *= row_sum[static_cast<std::size_t>(i)];
        if (popcount % 2 == 0)
            total -= prod;
        else
            total += prod;
    }
    // Sign bookkeeping: the term for subset S carries (-1)^(n-|S|).
    if (n % 2 == 0) total = -total;
    return total;
}

} // namespace

Complex permanent(const ComplexMatrix& a, int cap) {
    require_square(a.rows(), a.cols(), "permanent");
    require_cap(static_cast<int>(a.rows()), cap, "permanent");
    return ryser_permanent<Complex>(a);
}

double permanent(const RealMatrix& a, int cap) {
    require_square(a.rows(), a.cols(), "permanent");
    require_cap(static_cast<int>(a.rows()), cap, "permanent");
    return ryser_permanent<double>(a);
}

Complex permanent_glynn(const ComplexMatrix& a, int cap) {
    require_square(a.rows(), a.cols(), "permanent_glynn");
    const int n = static_cast<int>(a.rows());
    require_cap(n, cap, "permanent_glynn");
    if (n == 0) return Complex(1);
    // delta_0 fixed at +1; Gray-walk the remaining n-1 signs.
    std::vector<Complex> col_sum(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        Complex s(0);
        for (int i = 0; i < n; ++i) s += a(i, j);
        col_sum[static_cast<std::size_t>(j)] = s;
    }
    Complex total(0);
    int sign = 1;
    {
        Complex prod(1);
        for (int j = 0; j < n; ++j) prod *= col_sum[static_cast<std::size_t>(j)];
        total += prod;
    }
    const std::uint64_t count = std::uint64_t(1) << (n - 1);
    std::uint64_t gray = 0;
    for (std::uint64_t k = 1; k < count; ++k) {
        const int i = std::countr_zero(k); // sign delta_{i+1} flips
        const std::uint64_t bit = std::uint64_t(1) << i;
        gray ^= bit;
        const double delta = (gray & bit) ? -2.0 : 2.0;
        for (int j = 0; j < n; ++j) col_sum[static_cast<std::size_t>(j)] += delta * a(i + 1, j);
        sign = -sign;
        Complex prod(1);
        for (int j = 0; j < n; ++j) prod *= col_sum[static_cast<std::size_t>(j)];
        total += static_cast<double>(sign) * prod;
    }
    return total / static_cast<double>(std::uint64_t(1) << (n - 1));
}

Complex permanent_naive(const ComplexMatrix& a, int cap) {
    require_square(a.rows(), a.cols(), "permanent_naive");
    const int n = static_cast<int>(a.rows());
    require_cap(n, cap, "permanent_naive");
    Complex total(0);
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        Complex prod(1);
        for (int i = 0; i < n; ++i) prod *= a(i, sigma[static_cast<std::size_t>(i)]);
        total += prod;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return total;
}

Complex interference_term(const ComplexMatrix& u, const Permutation& sigma,
                          const std::vector<int>& inputs, const std::vector<int>& outputs,
                          int cap) {
    require_ports(u, inputs, outputs, "interference_term");
    const int n = static_cast<int>(inputs.size());
    if (sigma.size() != n)
        throw ValidationError("interference_term: sigma size does not match port count");
    require_cap(n, cap, "interference_term");
    if (n == 0) return Complex(1);

    // Cache the two factor matrices indexed by (input slot, output slot).
    ComplexMatrix bar(n, n), plain(n, n);
    for (int m = 0; m < n; ++m)
        for (int k = 0; k < n; ++k) {
            const Complex v = u(inputs[static_cast<std::size_t>(m)],
                                outputs[static_cast<std::size_t>(k)]);
            plain(m, k) = v;
            bar(m, k) = std::conj(v);
        }

    Complex total(0);
    std::vector<int> tau(static_cast<std::size_t>(n));
    std::iota(tau.begin(), tau.end(), 0);
    do {
        Complex prod(1);
        for (int k = 0; k < n; ++k) {
            const int t = tau[static_cast<std::size_t>(k)];
            prod *= bar(sigma(t), k) * plain(t, k);
        }
        total += prod;
    } while (std::next_permutation(tau.begin(), tau.end()));
    return total;
}

std::vector<InterferenceResult> derangement_class_sums(const ComplexMatrix& u,
                                                       const std::vector<int>& inputs,
                                                       const std::vector<int>& outputs,
                                                       int cap) {
    require_ports(u, inputs, outputs, "derangement_class_sums");
    const int n = static_cast<int>(inputs.size());
    require_cap(n, cap, "derangement_class_sums");

    std::vector<InterferenceResult> out(static_cast<std::size_t>(n) + 1);
    for (int s = 0; s <= n; ++s) out[static_cast<std::size_t>(s)] = {Complex(0), s, n};
    if (n == 0) {
        out[0].value = Complex(1); // the empty permutation
        return out;
    }

    const std::size_t un = static_cast<std::size_t>(n);
    // Port-indexed copies: a[m][c] = U(in_m, out_c).
    std::vector<Complex> a(un * un), a_conj(un * un);
    std::vector<double> a_abs2(un * un);
    for (int m = 0; m < n; ++m)
        for (int c = 0; c < n; ++c) {
            const Complex v = u(inputs[static_cast<std::size_t>(m)],
                                outputs[static_cast<std::size_t>(c)]);
            a[un * static_cast<std::size_t>(m) + static_cast<std::size_t>(c)] = v;
            a_conj[un * static_cast<std::size_t>(m) + static_cast<std::size_t>(c)] = std::conj(v);
            a_abs2[un * static_cast<std::size_t>(m) + static_cast<std::size_t>(c)] = std::norm(v);
        }

    // For each phase xi_q evaluate
    //   P(xi) = sum_A (-1)^|A| sum_B (-1)^|B| prod_m T_m(A, B),
    //   T_m(A, B) = sum_{c not in B} V[m][c],
    //   V[m][c]   = a[m][c] * S_c(A) + [m not in A] (xi - 1) |a[m][c]|^2,
    //   S_c(A)    = sum_{j not in A} conj(a[j][c]).
    // A excludes conjugate-row indices, B output columns. The coefficient of
    // xi^t in P collects the permutations with exactly t fixed points, so
    // U(D_s) is the coefficient at t = n - s.
    const int q_count = n + 1;
    std::vector<Complex> p_of_xi(static_cast<std::size_t>(q_count));

    std::vector<Complex> s_col(un), v(un * un), t(un);
    const std::uint64_t subsets = std::uint64_t(1) << n;

    for (int q = 0; q < q_count; ++q) {
        const double theta = 2.0 * std::numbers::pi * q / q_count;
        const Complex xi(std::cos(theta), std::sin(theta));
        const Complex xi_minus_1 = xi - Complex(1);

        for (int c = 0; c < n; ++c) {
            Complex acc(0);
            for (int j = 0; j < n; ++j)
                acc += a_conj[un * static_cast<std::size_t>(j) + static_cast<std::size_t>(c)];
            s_col[static_cast<std::size_t>(c)] = acc;
        }

        Complex sum(0), comp(0); // Kahan-compensated accumulation over (A, B)
        const auto accumulate = [&](const Complex& term) {
            const Complex y = term - comp;
            const Complex t2 = sum + y;
            comp = (t2 - sum) - y;
            sum = t2;
        };

        std::uint64_t a_mask = 0;
        int a_sign = 1;
        for (std::uint64_t ka = 0; ka < subsets; ++ka) {
            if (ka > 0) {
                const int j = std::countr_zero(ka);
                const std::uint64_t bit = std::uint64_t(1) << j;
                a_mask ^= bit;
                const bool excluded = (a_mask & bit) != 0;
                for (int c = 0; c < n; ++c) {
                    const Complex d =
                        a_conj[un * static_cast<std::size_t>(j) + static_cast<std::size_t>(c)];
                    s_col[static_cast<std::size_t>(c)] += excluded ? -d : d;
                }
                a_sign = -a_sign;
            }
            // Refresh V and the B = empty column totals for this A.
            for (int m = 0; m < n; ++m) {
                const bool diag_live = (a_mask & (std::uint64_t(1) << m)) == 0;
                Complex row_total(0);
                for (int c = 0; c < n; ++c) {
                    const std::size_t idx =
                        un * static_cast<std::size_t>(m) + static_cast<std::size_t>(c);
                    Complex val = a[idx] * s_col[static_cast<std::size_t>(c)];
                    if (diag_live) val += xi_minus_1 * a_abs2[idx];
                    v[idx] = val;
                    row_total += val;
                }
                t[static_cast<std::size_t>(m)] = row_total;
            }

            std::uint64_t b_mask = 0;
            int b_sign = 1;
            for (std::uint64_t kb = 0; kb < subsets; ++kb) {
                if (kb > 0) {
                    const int c = std::countr_zero(kb);
                    const std::uint64_t bit = std::uint64_t(1) << c;
                    b_mask ^= bit;
                    const bool excluded = (b_mask & bit) != 0;
                    if (excluded)
                        for (int m = 0; m < n; ++m)
                            t[static_cast<std::size_t>(m)] -=
                                v[un * static_cast<std::size_t>(m) + static_cast<std::size_t>(c)];
                    else
                        for (int m = 0; m < n; ++m)
                            t[static_cast<std::size_t>(m)] +=
                                v[un * static_cast<std::size_t>(m) + static_cast<std::size_t>(c)];
                    b_sign = -b_sign;
                }
                Complex prod(1);
                for (int m = 0; m < n; ++m) prod *= t[static_cast<std::size_t>(m)];
                accumulate((a_sign * b_sign > 0) ? prod : -prod);
            }
        }
        p_of_xi[static_cast<std::size_t>(q)] = sum;
    }

    // U(D_s) = [xi^{n-s}] P = (1/(n+1)) sum_q xi_q^{-(n-s)} P(xi_q).
    for (int s = 0; s <= n; ++s) {
        const int power = n - s;
        Complex acc(0);
        for (int q = 0; q < q_count; ++q) {
            const double theta = -2.0 * std::numbers::pi * q * power / q_count;
            acc += Complex(std::cos(theta), std::sin(theta)) *
                   p_of_xi[static_cast<std::size_t>(q)];
        }
        out[static_cast<std::size_t>(s)].value = acc / static_cast<double>(q_count);
    }
    return out;
}

namespace {

double checked_real(const InterferenceResult& r, const char* who) {
    const double scale = 1.0 + std::abs(r.value.real());
    const double residue = std::abs(r.value.imag());
    if (residue > limits::kImagResidueHard * scale)
        throw InvariantViolation(std::string(who) + ": imaginary residue " +
                                     std::to_string(residue) + " on class s=" +
                                     std::to_string(r.s) + " exceeds hard tolerance",
                                 residue);
    if (residue > limits::kImagResidueSoft * scale)
        debug_log(std::string(who) + ": truncating imaginary residue " +
                  std::to_string(residue) + " on class s=" + std::to_string(r.s));
    return r.value.real();
}

} // namespace

std::vector<double> derangement_sums(const ComplexMatrix& u, const std::vector<int>& inputs,
                                     const std::vector<int>& outputs,
                                     const std::vector<int>& s_set, int cap) {
    const int n = static_cast<int>(inputs.size());
    for (int s : s_set)
        if (s < 0 || s > n)
            throw ValidationError("derangement_sums: class index s out of range");
    const std::vector<InterferenceResult> all = derangement_class_sums(u, inputs, outputs, cap);
    std::vector<double> out;
    out.reserve(s_set.size());
    for (int s : s_set) out.push_back(checked_real(all[static_cast<std::size_t>(s)], "derangement_sums"));
    return out;
}

double derangement_sum(const ComplexMatrix& u, const std::vector<int>& inputs,
                       const std::vector<int>& outputs, int s, int cap) {
    return derangement_sums(u, inputs, outputs, {s}, cap)[0];
}

double derangement_sum_bruteforce(const ComplexMatrix& u, const std::vector<int>& inputs,
                                  const std::vector<int>& outputs, int s, int cap) {
    require_ports(u, inputs, outputs, "derangement_sum_bruteforce");
    const int n = static_cast<int>(inputs.size());
    if (s < 0 || s > n)
        throw ValidationError("derangement_sum_bruteforce: class index s out of range");
    require_cap(n, cap, "derangement_sum_bruteforce");
    Complex total(0);
    for_each_in_derangement_class(n, s, [&](const Permutation& sigma) {
        total += interference_term(u, sigma, inputs, outputs, cap);
    });
    return checked_real({total, s, n}, "derangement_sum_bruteforce");
}

std::int64_t chi_moment(int n) {
    if (n < 0) throw ValidationError("chi_moment: negative argument");
    if (n > limits::kChiMomentCap)
        throw CapacityError("chi_moment: n = " + std::to_string(n) +
                            " exceeds 64-bit integer capacity");
    // chi(n) = sum_{k=0}^{n} n!/k!, accumulated from k = n downwards.
    std::int64_t total = 0, term = 1;
    for (int k = n; k >= 0; --k) {
        total += term;
        term *= k; // next term is n!/ (k-1)! = term * k
    }
    return total;
}

} // namespace bosonpd
