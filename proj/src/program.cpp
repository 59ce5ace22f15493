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
#include <lpsym/program.h>

#include <lpsym/permutation.h>

#include <algorithm>
#include <set>

namespace lpsym {

namespace {
void sort_unique(std::vector<AtomId>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}
} // namespace

Rule::Rule(std::vector<AtomId> h, std::vector<AtomId> bp, std::vector<AtomId> bn)
    : head(std::move(h)), body_pos(std::move(bp)), body_neg(std::move(bn)) {
    normalize();
}

void Rule::normalize() {
    sort_unique(head);
    sort_unique(body_pos);
    sort_unique(body_neg);
}

void Program::normalize() {
    for (auto& r : rules) {
        r.normalize();
    }
    std::sort(rules.begin(), rules.end());
    rules.erase(std::unique(rules.begin(), rules.end()), rules.end());
    sort_unique(compute_pos);
    sort_unique(compute_neg);
    AtomId max = max_atom_id;
    auto cover = [&max](const std::vector<AtomId>& v) {
        for (AtomId a : v) {
            max = std::max(max, a);
        }
    };
    for (const auto& r : rules) {
        cover(r.head);
        cover(r.body_pos);
        cover(r.body_neg);
    }
    cover(compute_pos);
    cover(compute_neg);
    if (!symbols.empty()) {
        max = std::max(max, symbols.rbegin()->first);
    }
    if (false_atom) {
        max = std::max(max, *false_atom);
    }
    max_atom_id = max;
}

std::vector<AtomId> Program::atoms() const {
    std::set<AtomId> seen;
    for (const auto& r : rules) {
        seen.insert(r.head.begin(), r.head.end());
        seen.insert(r.body_pos.begin(), r.body_pos.end());
        seen.insert(r.body_neg.begin(), r.body_neg.end());
    }
    return {seen.begin(), seen.end()};
}

Program apply_permutation(const Program& p, const AtomPermutation& pi) {
    Program out = p;
    for (auto& r : out.rules) {
        for (auto& a : r.head) {
            a = pi(a);
        }
        for (auto& a : r.body_pos) {
            a = pi(a);
        }
        for (auto& a : r.body_neg) {
            a = pi(a);
        }
    }
    out.normalize();
    return out;
}

bool is_symmetry(const Program& p, const AtomPermutation& pi) {
    return apply_permutation(p, pi).rules == p.rules;
}

} // namespace lpsym
