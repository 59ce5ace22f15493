//
// Copyright (c) 2026 lpsym contributors
//
// This file is part of lpsym.
//
// Permission is hereby granted, free of charge, to any person obtaining a copy
// of this software and associated documentation files (the "Software"), to
// deal in the Software without restriction, including without limitation the
// rights to use, copy, modify, merge, publish, distribute, sublicense, and/or
// sell copies of the Software, and to permit persons to whom the Software is
// furnished to do so, subject to the following conditions:
//
// The above copyright notice and this permission notice shall be included in
// all copies or substantial portions of the Software.
//
// THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
// IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
// FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
// AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
// LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
// FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS
// IN THE SOFTWARE.
//
#pragma once

#include <lpsym/program.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lpsym {

/// A permutation of atom ids, stored as a dense image table over 1..n and
/// extended by the identity beyond it. The table is trimmed so that equal
/// permutations compare equal regardless of how they were built.
class AtomPermutation {
public:
    /// Identity.
    AtomPermutation() = default;

    /// Builds from a dense image table `image[a] = pi(a)` for a in 1..size-1
    /// (index 0 is ignored). Throws PermutationDomainError unless the table is
    /// a bijection fixing ids outside its range.
    explicit AtomPermutation(std::vector<AtomId> image);

    /// Builds from explicit (atom, image) pairs; unmentioned atoms are fixed.
    /// Throws PermutationDomainError if the pairs do not describe a bijection.
    static AtomPermutation from_pairs(const std::vector<std::pair<AtomId, AtomId>>& pairs);

    /// Builds the cycle (a1 a2 ... ak): a1 -> a2 -> ... -> ak -> a1.
    static AtomPermutation from_cycle(const std::vector<AtomId>& cycle);

    AtomId apply(AtomId a) const { return a < image_.size() ? image_[a] : a; }
    AtomId operator()(AtomId a) const { return apply(a); }

    bool is_identity() const { return image_.size() <= 1; }

    /// Atoms not mapped to themselves, ascending.
    std::vector<AtomId> support() const;

    /// Disjoint cycles, each rotated so its minimum atom comes first, sorted
    /// by first element. Fixed points are omitted; the identity yields {}.
    std::vector<std::vector<AtomId>> cycles() const;

    AtomPermutation inverse() const;

    /// Trimmed dense image table (index 0 unused). Empty for the identity.
    const std::vector<AtomId>& image() const { return image_; }

    bool operator==(const AtomPermutation&) const = default;
    auto operator<=>(const AtomPermutation&) const = default;

private:
    std::vector<AtomId> image_; // image_[0] == 0 whenever non-empty
};

/// Composition: apply `inner` first, then `outer` (x -> outer(inner(x))).
AtomPermutation compose(const AtomPermutation& outer, const AtomPermutation& inner);

/// Renders cycle notation, e.g. "(2 3)(5 7 9)". Atoms with a symbol-table
/// entry are printed by name; "()" denotes the identity.
std::string cycles_to_string(const AtomPermutation& pi,
                             const std::map<AtomId, std::string>* symbols = nullptr);

/// Breadth-first product closure of the generators (always contains the
/// identity). Returns std::nullopt once more than `bound` elements exist.
std::optional<std::vector<AtomPermutation>> closure(const std::vector<AtomPermutation>& gens,
                                                    std::size_t bound);

/// Drops identities, exact duplicates, and generators expressible as products
/// of the kept ones, provided the full closure fits within `bound` elements
/// (otherwise the list is returned with only identities/duplicates removed).
/// The kept list always satisfies |kept| <= log2(group order) when reduction
/// ran, because every kept generator at least doubles the generated subgroup.
std::vector<AtomPermutation> reduce_generators(const std::vector<AtomPermutation>& gens,
                                               std::size_t bound);

/// Partitions the given atom sets into orbits: two sets are equivalent when
/// one maps to the other by some sequence of generators or their inverses.
/// Returns groups of indices into `sets`, each sorted, ordered by first index.
std::vector<std::vector<std::size_t>> orbit_of_set(const std::vector<std::vector<AtomId>>& sets,
                                                   const std::vector<AtomPermutation>& gens);

/// Elementwise image of a sorted atom set.
std::vector<AtomId> apply_to_set(const AtomPermutation& pi, const std::vector<AtomId>& set);

} // namespace lpsym
