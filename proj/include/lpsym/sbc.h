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

#include <lpsym/permutation.h>
#include <lpsym/program.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace lpsym {

// Lex-leader symmetry breaking. Atoms are ordered ascending by id with the
// smallest id most significant and false < true; for each generator pi the
// emitted constraint keeps exactly the assignments M with vec(M) <= vec(M^pi),
// so the lexicographically smallest member of every orbit always survives.

/// Truncation depth for permutation constraints; nullopt = unbounded.
using TruncationK = std::optional<std::uint32_t>;

/// Rules realizing one permutation constraint, with the fresh chain atoms they
/// introduce. Every rule's head is empty or a fresh atom, and chain rules only
/// reference later chain atoms (the dependency chain is acyclic).
struct SbcRuleSet {
    std::vector<Rule> rules;
    std::vector<AtomId> fresh_atoms; // ascending ids; fresh_atoms[j] is chain atom v_{q-j}
    std::size_t generator_tag = 0;
};

/// The constrained index positions of pi: its support minus the maximum atom
/// of each cycle, ascending. Throws EmptyIndex for the identity.
std::vector<AtomId> lex_index(const AtomPermutation& pi);

/// Emits the (possibly truncated) permutation constraint for pi with fresh
/// chain atoms allocated from first_fresh upwards. With positions p1..pq
/// (q = min(k, |lex_index|)) the rules are
///
///     <- p1, not pi(p1)
///     <- v2                                  (only when q >= 2)
///     vi <- p(i-1), pi, not pi(pi)           for i = 2..q
///     vi <- pi, not pi(p(i-1)), not pi(pi)
///     vi <- p(i-1), v(i+1)                   for i = 2..q-1
///     vi <- v(i+1), not pi(p(i-1))
///
/// v_{q+1} is never introduced, so the chain ends underivable and the
/// constraint is exactly the prefix of the lex condition over p1..pq. Chain
/// atom ids ascend with *descending* chain index (v_q = first_fresh), so each
/// rule body only mentions atoms smaller than its head.
SbcRuleSet permutation_constraint(const AtomPermutation& pi, TruncationK k, AtomId first_fresh,
                                  std::size_t tag = 0);

/// Appends one permutation constraint per non-identity generator, each with
/// its own fresh-atom block (ascending by generator index). When
/// name_sbc_atoms is set the chain atoms get symbol-table entries _sbc(g,i);
/// otherwise they stay hidden.
Program build_sbc(const Program& p, const std::vector<AtomPermutation>& gens, TruncationK k,
                  bool name_sbc_atoms = false);

} // namespace lpsym
