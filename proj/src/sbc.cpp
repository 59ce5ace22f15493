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
#include <lpsym/sbc.h>

#include <lpsym/errors.h>

#include <algorithm>
#include <sstream>

namespace lpsym {

std::vector<AtomId> lex_index(const AtomPermutation& pi) {
    if (pi.is_identity()) {
        throw EmptyIndex("identity permutation has no constrained positions");
    }
    std::vector<AtomId> index = pi.support();
    for (const auto& cycle : pi.cycles()) {
        AtomId max = *std::max_element(cycle.begin(), cycle.end());
        index.erase(std::find(index.begin(), index.end(), max));
    }
    return index; // support() is ascending and removal preserves that
}

SbcRuleSet permutation_constraint(const AtomPermutation& pi, TruncationK k, AtomId first_fresh,
                                  std::size_t tag) {
    std::vector<AtomId> positions = lex_index(pi);
    std::size_t q = positions.size();
    if (k && *k < q) {
        q = *k;
    }

    SbcRuleSet out;
    out.generator_tag = tag;
    // chain atom v_i for i in 2..q; ids ascend with descending i so rule
    // bodies only reference smaller ids than their head
    auto chain = [&](std::size_t i) { return first_fresh + static_cast<AtomId>(q - i); };
    for (std::size_t i = q; i >= 2; --i) {
        out.fresh_atoms.push_back(chain(i));
    }

    auto pos = [&](std::size_t i) { return positions[i - 1]; };       // 1-based
    auto img = [&](std::size_t i) { return pi(positions[i - 1]); };

    out.rules.emplace_back(std::vector<AtomId>{}, std::vector<AtomId>{pos(1)},
                           std::vector<AtomId>{img(1)});
    if (q >= 2) {
        out.rules.emplace_back(std::vector<AtomId>{}, std::vector<AtomId>{chain(2)},
                               std::vector<AtomId>{});
        for (std::size_t i = 2; i <= q; ++i) {
            out.rules.emplace_back(std::vector<AtomId>{chain(i)},
                                   std::vector<AtomId>{pos(i - 1), pos(i)},
                                   std::vector<AtomId>{img(i)});
            out.rules.emplace_back(std::vector<AtomId>{chain(i)}, std::vector<AtomId>{pos(i)},
                                   std::vector<AtomId>{img(i - 1), img(i)});
            if (i < q) { // v_{q+1} stays underivable: its rules are omitted
                out.rules.emplace_back(std::vector<AtomId>{chain(i)},
                                       std::vector<AtomId>{pos(i - 1), chain(i + 1)},
                                       std::vector<AtomId>{});
                out.rules.emplace_back(std::vector<AtomId>{chain(i)},
                                       std::vector<AtomId>{chain(i + 1)},
                                       std::vector<AtomId>{img(i - 1)});
            }
        }
    }
    return out;
}

Program build_sbc(const Program& p, const std::vector<AtomPermutation>& gens, TruncationK k,
                  bool name_sbc_atoms) {
    Program out = p;
    out.normalize();
    AtomId next_fresh = out.max_atom_id + 1;
    std::size_t tag = 0;
    for (const auto& pi : gens) {
        if (pi.is_identity()) {
            ++tag;
            continue;
        }
        SbcRuleSet set = permutation_constraint(pi, k, next_fresh, tag);
        out.rules.insert(out.rules.end(), set.rules.begin(), set.rules.end());
        if (!set.fresh_atoms.empty()) {
            next_fresh = set.fresh_atoms.back() + 1;
            if (name_sbc_atoms) {
                std::size_t q = set.fresh_atoms.size() + 1;
                for (std::size_t j = 0; j < set.fresh_atoms.size(); ++j) {
                    std::ostringstream name;
                    name << "_sbc(" << tag << ',' << (q - j) << ')';
                    out.symbols[set.fresh_atoms[j]] = name.str();
                }
            }
        }
        ++tag;
    }
    out.max_atom_id = std::max(out.max_atom_id, next_fresh - 1);
    out.normalize();
    return out;
}

} // namespace lpsym
