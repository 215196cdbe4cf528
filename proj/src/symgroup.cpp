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

#include "bosonpd/symgroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

#include "bosonpd/errors.hpp"
#include "bosonpd/rational.hpp"

namespace bosonpd {

Permutation::Permutation(std::vector<int> images) : map_(std::move(images)) {
    const int n = static_cast<int>(map_.size());
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : map_) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw ValidationError("Permutation: image array is not a bijection on {0..n-1}");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    if (n < 0) throw ValidationError("Permutation::identity: negative size");
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return Permutation(std::move(v));
}

Permutation Permutation::from_cycle(int n, const std::vector<int>& cycle) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    const int len = static_cast<int>(cycle.size());
    for (int i = 0; i < len; ++i) {
        const int from = cycle[static_cast<std::size_t>(i)];
        const int to = cycle[static_cast<std::size_t>((i + 1) % len)];
        if (from < 0 || from >= n) throw ValidationError("Permutation::from_cycle: index out of range");
        v[static_cast<std::size_t>(from)] = to;
    }
    return Permutation(std::move(v));
}

Permutation Permutation::compose(const Permutation& other) const {
    if (size() != other.size()) throw ValidationError("Permutation::compose: size mismatch");
    std::vector<int> v(map_.size());
    for (std::size_t i = 0; i < map_.size(); ++i)
        v[i] = map_[static_cast<std::size_t>(other.map_[i])];
    return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
    std::vector<int> v(map_.size());
    for (std::size_t i = 0; i < map_.size(); ++i)
        v[static_cast<std::size_t>(map_[i])] = static_cast<int>(i);
    return Permutation(std::move(v));
}

int Permutation::fixed_point_count() const {
    int c = 0;
    for (std::size_t i = 0; i < map_.size(); ++i)
        if (map_[i] == static_cast<int>(i)) ++c;
    return c;
}

IntegerPartition::IntegerPartition(std::vector<int> parts_in) : parts(std::move(parts_in)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw ValidationError("IntegerPartition: parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw ValidationError("IntegerPartition: parts must be non-increasing");
        total += parts[i];
    }
}

int IntegerPartition::count_ones() const {
    return static_cast<int>(std::count(parts.begin(), parts.end(), 1));
}

std::string IntegerPartition::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += '+';
        s += std::to_string(parts[i]);
    }
    return s;
}

IntegerPartition cycle_type(const Permutation& p) {
    const int n = p.size();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> lens;
    for (int i = 0; i < n; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        int len = 0;
        int j = i;
        while (!seen[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = 1;
            j = p(j);
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end(), std::greater<int>());
    return IntegerPartition(std::move(lens));
}

int fixed_point_count(const Permutation& p) { return p.fixed_point_count(); }

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& acc,
                    std::vector<IntegerPartition>& out) {
    if (remaining == 0) {
        out.push_back(IntegerPartition(acc));
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        acc.push_back(part);
        partitions_rec(remaining - part, part, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<IntegerPartition> partitions_of(int n) {
    if (n < 0) throw ValidationError("partitions_of: negative n");
    std::vector<IntegerPartition> out;
    if (n == 0) {
        out.push_back(IntegerPartition{});
        return out;
    }
    std::vector<int> acc;
    partitions_rec(n, n, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t derangement_count(int s) {
    if (s < 0) throw ValidationError("derangement_count: negative size");
    if (s > limits::kSubfactorialCap)
        throw CapacityError("derangement_count: !" + std::to_string(s) +
                            " exceeds 64-bit integer capacity");
    // !s = (s-1) * (!(s-1) + !(s-2)), with !0 = 1, !1 = 0.
    std::uint64_t prev2 = 1, prev1 = 0;
    if (s == 0) return 1;
    if (s == 1) return 0;
    std::uint64_t cur = 0;
    for (int i = 2; i <= s; ++i) {
        cur = static_cast<std::uint64_t>(i - 1) * (prev1 + prev2);
        prev2 = prev1;
        prev1 = cur;
    }
    return cur;
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
    if (n < 0) throw ValidationError("for_each_permutation: negative n");
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    do {
        fn(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); });
    return out;
}

void for_each_combination(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    if (k < 0 || k > n) throw ValidationError("for_each_combination: need 0 <= k <= n");
    std::vector<int> c(static_cast<std::size_t>(k));
    std::iota(c.begin(), c.end(), 0);
    while (true) {
        fn(c);
        int i = k - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++c[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
}

void for_each_in_derangement_class(int n, int s,
                                   const std::function<void(const Permutation&)>& fn) {
    if (n < 0 || s < 0 || s > n)
        throw ValidationError("for_each_in_derangement_class: need 0 <= s <= n");
    if (s == 1) return; // no permutation has exactly n-1 fixed points
    for_each_combination(n, s, [&](const std::vector<int>& moved) {
        // Derange the chosen s points among themselves, identity elsewhere.
        std::vector<int> sub(moved.begin(), moved.end());
        std::sort(sub.begin(), sub.end());
        std::vector<int> perm = sub;
        do {
            bool fixed_free = true;
            for (std::size_t i = 0; i < sub.size(); ++i)
                if (perm[i] == sub[i]) {
                    fixed_free = false;
                    break;
                }
            if (!fixed_free) continue;
            std::vector<int> img(static_cast<std::size_t>(n));
            std::iota(img.begin(), img.end(), 0);
            for (std::size_t i = 0; i < sub.size(); ++i)
                img[static_cast<std::size_t>(sub[i])] = perm[i];
            fn(Permutation(std::move(img)));
        } while (std::next_permutation(perm.begin(), perm.end()));
    });
}

std::vector<Permutation> derangement_class(int n, int s) {
    std::vector<Permutation> out;
    for_each_in_derangement_class(n, s, [&](const Permutation& p) { out.push_back(p); });
    return out;
}

int CharacterTable::index_of(const IntegerPartition& p) const {
    const auto it = std::lower_bound(partitions.begin(), partitions.end(), p);
    if (it == partitions.end() || !(*it == p))
        throw ValidationError("CharacterTable: unknown partition " + p.to_string());
    return static_cast<int>(it - partitions.begin());
}

namespace {

// Murnaghan-Nakayama on beta numbers. Removing a border strip of length r
// from the shape with beta set {b_i} replaces some b_i by b_i - r; the move
// is legal when b_i >= r and b_i - r is not already occupied, and its sign is
// (-1)^h with h the number of beta values strictly between b_i - r and b_i.
std::vector<int> to_beta(const std::vector<int>& parts) {
    const int len = static_cast<int>(parts.size());
    std::vector<int> beta(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i)
        beta[static_cast<std::size_t>(i)] = parts[static_cast<std::size_t>(i)] + (len - 1 - i);
    return beta;
}

std::vector<int> to_partition(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<int>());
    const int len = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 0; i < len; ++i) {
        const int part = beta[static_cast<std::size_t>(i)] - (len - 1 - i);
        if (part > 0) parts.push_back(part);
    }
    return parts;
}

using MemoKey = std::pair<std::vector<int>, std::size_t>;

std::int64_t mn_value(const std::vector<int>& parts, const std::vector<int>& cycles,
                      std::size_t idx, std::map<MemoKey, std::int64_t>& memo) {
    if (idx == cycles.size()) return parts.empty() ? 1 : 0;
    const MemoKey key{parts, idx};
    if (const auto it = memo.find(key); it != memo.end()) return it->second;

    const int r = cycles[idx];
    const std::vector<int> beta = to_beta(parts);
    std::int64_t total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const int target = beta[i] - r;
        if (target < 0) continue;
        bool occupied = false;
        int height = 0;
        for (std::size_t j = 0; j < beta.size(); ++j) {
            if (j == i) continue;
            if (beta[j] == target) {
                occupied = true;
                break;
            }
            if (beta[j] > target && beta[j] < beta[i]) ++height;
        }
        if (occupied) continue;
        std::vector<int> next_beta = beta;
        next_beta[i] = target;
        const std::vector<int> next_parts = to_partition(std::move(next_beta));
        const std::int64_t sub = mn_value(next_parts, cycles, idx + 1, memo);
        total += (height % 2 == 0) ? sub : -sub;
    }
    memo.emplace(key, total);
    return total;
}

} // namespace

CharacterTable character_table(int n, int cap) {
    if (n < 1) throw ValidationError("character_table: need n >= 1");
    if (n > cap)
        throw CapacityError("character_table: n = " + std::to_string(n) +
                            " exceeds the configured cap " + std::to_string(cap));

    CharacterTable table;
    table.n = n;
    table.partitions = partitions_of(n);
    const std::size_t k = table.partitions.size();
    table.values.assign(k * k, 0);
    table.class_sizes.resize(k);
    table.dims.resize(k);

    const Int n_factorial = factorial_exact(n);
    for (std::size_t c = 0; c < k; ++c) {
        // |class| = n! / prod_r r^{m_r} m_r!
        Int centralizer = 1;
        int run_value = 0, run_len = 0;
        auto flush = [&]() {
            for (int i = 0; i < run_len; ++i) centralizer *= run_value;
            centralizer *= factorial_exact(run_len);
        };
        for (int part : table.partitions[c].parts) {
            if (part == run_value) {
                ++run_len;
            } else {
                if (run_len > 0) flush();
                run_value = part;
                run_len = 1;
            }
        }
        if (run_len > 0) flush();
        table.class_sizes[c] = static_cast<std::int64_t>(n_factorial / centralizer);
    }

    for (std::size_t row = 0; row < k; ++row) {
        const std::vector<int>& shape = table.partitions[row].parts;
        for (std::size_t col = 0; col < k; ++col) {
            std::map<MemoKey, std::int64_t> memo;
            table.values[row * k + col] =
                mn_value(shape, table.partitions[col].parts, 0, memo);
        }
        table.dims[row] = table.values[row * k + 0]; // identity class is column 0
    }
    return table;
}

} // namespace bosonpd
