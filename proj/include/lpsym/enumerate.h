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

#include <cstddef>
#include <vector>

namespace lpsym {

// Desk-scale answer-set machinery: exact, exhaustive, and deliberately not a
// solver. Used to verify the preprocessing pipeline and to report model-count
// compression on small instances.

/// Default ceiling on |atoms(P)| for the exhaustive procedures below.
inline constexpr std::size_t default_enumeration_guard = 25;

struct CompressionReport {
    std::size_t total_models = 0;
    std::size_t surviving_models = 0;
    double compression = 0.0; // 1 - surviving/total, 0 when total == 0
};

/// The reduct of p w.r.t. candidate set m: rules whose negative body meets m
/// are dropped, the rest lose their negative body.
Program reduct(const Program& p, const std::vector<AtomId>& m);

/// True iff m is a minimal model of reduct(p, m). Exhaustive minimality check
/// over subsets of m; throws TooLarge beyond the guard.
bool is_answer_set(const Program& p, const std::vector<AtomId>& m,
                   std::size_t max_atoms = default_enumeration_guard);

/// All answer sets, each as a sorted atom vector, in sorted order. Depth-first
/// over atom assignments with early pruning of violated rules and of true
/// atoms whose every potential support is already gone. Throws TooLarge if
/// |atoms(P)| exceeds max_atoms.
std::vector<std::vector<AtomId>> answer_sets(const Program& p,
                                             std::size_t max_atoms = default_enumeration_guard);

/// Counts answer sets of p, and of p_sbc projected onto atoms(p).
CompressionReport compression(const Program& p, const Program& p_sbc,
                              std::size_t max_atoms = default_enumeration_guard);

} // namespace lpsym
