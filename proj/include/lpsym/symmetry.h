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

#include <lpsym/automorphism.h>
#include <lpsym/graph.h>
#include <lpsym/permutation.h>
#include <lpsym/program.h>

#include <cstddef>
#include <vector>

namespace lpsym {

/// Projects a colour-preserving graph automorphism to the atom permutation it
/// induces on the positive literal vertices. Throws InconsistentAutomorphism
/// if the negative literal vertices do not follow along (which would indicate
/// an engine bug, given the consistency edges).
AtomPermutation project(const VertexPermutation& gamma, const VertexMap& vm);

struct DetectionStats {
    std::size_t graph_vertices = 0;
    std::size_t graph_edges = 0;
    std::size_t raw_generators = 0;  // automorphism generators found
    std::size_t identity_skipped = 0; // projected to the identity on atoms
    std::size_t discarded = 0;        // failed re-verification (engine bug if != 0)
    std::size_t kept = 0;             // after irredundancy reduction
    double seconds_build = 0.0;
    double seconds_search = 0.0;
    double seconds_project = 0.0;
    double seconds_reduce = 0.0;
};

struct DetectionResult {
    std::vector<AtomPermutation> generators;
    DetectionStats stats;
};

/// Full detection pipeline: build the graph, search automorphism generators,
/// project them to atom permutations, re-verify each against the program with
/// is_symmetry (failures are discarded and counted), and reduce the surviving
/// set. Throws SearchBudgetExceeded if the automorphism search runs out of
/// budget.
DetectionResult detect_symmetries(const Program& p, const BuildOptions& opts = {},
                                  const SearchLimits& limits = {},
                                  std::size_t closure_bound = 100'000);

} // namespace lpsym
