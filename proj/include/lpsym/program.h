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

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lpsym {

/// Atom number as used in the smodels format. Valid ids are >= 1.
using AtomId = std::uint32_t;

/// A ground disjunctive rule  a1 ; ... ; al <- b1, ..., bm, not c1, ..., not cn.
///
/// All three parts are kept as sorted, duplicate-free vectors. An integrity
/// constraint is a rule with an empty head; a fact is a single-atom head with
/// an empty body.
struct Rule {
    std::vector<AtomId> head;
    std::vector<AtomId> body_pos;
    std::vector<AtomId> body_neg;

    Rule() = default;
    Rule(std::vector<AtomId> h, std::vector<AtomId> bp, std::vector<AtomId> bn);

    /// Sorts and deduplicates all three atom lists.
    void normalize();

    bool is_constraint() const { return head.empty(); }
    bool is_fact() const { return head.size() == 1 && body_pos.empty() && body_neg.empty(); }
    std::size_t body_size() const { return body_pos.size() + body_neg.size(); }
    /// Number of literal occurrences (head atoms plus body literals).
    std::size_t literal_count() const { return head.size() + body_size(); }

    auto operator<=>(const Rule&) const = default;
};

/// A ground disjunctive logic program in normalized form.
///
/// Rules are a set (sorted, duplicate-free). Integrity constraints are stored
/// with an empty head; the false-marker atom used by the smodels encoding is
/// remembered separately in `false_atom` so files can be re-emitted with the
/// same marker. `compute_neg` never contains the marker itself.
struct Program {
    std::vector<Rule> rules;
    std::map<AtomId, std::string> symbols; // visible atoms only
    AtomId max_atom_id = 0;
    std::vector<AtomId> compute_pos;
    std::vector<AtomId> compute_neg;
    std::optional<AtomId> false_atom;
    std::uint32_t models = 1;

    /// Restores all invariants: rules sorted and deduplicated, compute
    /// sections sorted, max_atom_id covering every referenced atom.
    void normalize();

    /// Sorted list of atoms occurring in rules. Atoms that appear only in the
    /// symbol table or compute sections are not part of the program algebra.
    std::vector<AtomId> atoms() const;

    bool operator==(const Program&) const = default;
};

class AtomPermutation; // permutation.h

/// Maps every head/body atom of every rule through pi and renormalizes.
/// Throws PermutationDomainError if pi is not a valid permutation.
Program apply_permutation(const Program& p, const AtomPermutation& pi);

/// True iff pi maps the rule set of p onto itself.
bool is_symmetry(const Program& p, const AtomPermutation& pi);

} // namespace lpsym
