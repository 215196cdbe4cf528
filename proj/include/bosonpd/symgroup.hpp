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

#ifndef BOSONPD_SYMGROUP_HPP
#define BOSONPD_SYMGROUP_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bosonpd/limits.hpp"

namespace bosonpd {

/// A permutation of {0..n-1} stored as an image array: p(i) = mapping[i].
/// Immutable after construction; the constructor rejects non-bijections.
class Permutation {
  public:
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);
    /// Identity except for the given cycle, e.g. {0,1,2} maps 0->1->2->0.
    static Permutation from_cycle(int n, const std::vector<int>& cycle);

    int size() const { return static_cast<int>(map_.size()); }
    int operator()(int i) const { return map_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& images() const { return map_; }

    /// (p.compose(q))(i) == p(q(i)).
    Permutation compose(const Permutation& other) const;
    Permutation inverse() const;

    int fixed_point_count() const;

    bool operator==(const Permutation&) const = default;

  private:
    std::vector<int> map_;
};

/// Non-increasing positive parts summing to `total`.
struct IntegerPartition {
    std::vector<int> parts;
    int total = 0;

    IntegerPartition() = default;
    explicit IntegerPartition(std::vector<int> parts_in);

    int count_ones() const;
    std::string to_string() const; // "3+1+1"

    friend auto operator<=>(const IntegerPartition& a, const IntegerPartition& b) {
        return a.parts <=> b.parts;
    }
    friend bool operator==(const IntegerPartition& a, const IntegerPartition& b) = default;
};

IntegerPartition cycle_type(const Permutation& p);
int fixed_point_count(const Permutation& p);

/// All partitions of n, sorted ascending lexicographically on the
/// largest-part-first tuples: (1,1,..,1) first, (n) last. This ordering is
/// shared by character-table rows and columns and by every serialized
/// expansion, so files stay comparable across runs.
std::vector<IntegerPartition> partitions_of(int n);

/// Subfactorial !s in exact integer arithmetic.
std::uint64_t derangement_count(int s);

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn);
std::vector<Permutation> all_permutations(int n);

/// Sorted k-subsets of {0..n-1} in lexicographic order.
void for_each_combination(int n, int k, const std::function<void(const std::vector<int>&)>& fn);

/// Every permutation of {0..n-1} with exactly n-s fixed points, each once.
/// Count is C(n,s) * derangement_count(s).
void for_each_in_derangement_class(int n, int s,
                                   const std::function<void(const Permutation&)>& fn);
std::vector<Permutation> derangement_class(int n, int s);

/// Irreducible characters of S_n. Rows are irrep labels, columns conjugacy
/// classes (cycle types); both indexed by `partitions` in the shared order.
struct CharacterTable {
    int n = 0;
    std::vector<IntegerPartition> partitions;
    std::vector<std::int64_t> values; // row-major, partitions.size()^2
    std::vector<std::int64_t> class_sizes;
    std::vector<std::int64_t> dims; // chi_lambda(identity)

    std::int64_t value(int row, int col) const {
        return values[static_cast<std::size_t>(row) * partitions.size() +
                      static_cast<std::size_t>(col)];
    }
    int class_count() const { return static_cast<int>(partitions.size()); }
    int index_of(const IntegerPartition& p) const;
};

/// Murnaghan-Nakayama evaluation of the full table.
CharacterTable character_table(int n, int cap = limits::kCharacterTableCap);

} // namespace bosonpd

#endif
