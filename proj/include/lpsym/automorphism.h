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

#include <lpsym/graph.h>

#include <cstdint>
#include <vector>

namespace lpsym {

/// A bijection on graph vertices, as a dense image table of size V.
using VertexPermutation = std::vector<VertexId>;

/// An ordered partition of the vertex set: non-empty, pairwise disjoint cells
/// whose union is 0..V-1. Cell order is significant.
using OrderedPartition = std::vector<std::vector<VertexId>>;

/// Coarsest equitable refinement of p: afterwards, any two vertices in the
/// same cell have, for every cell C, the same number of out-neighbours in C
/// and the same number of in-neighbours from C. Split order is deterministic:
/// cells are processed in order and sub-cells are emitted sorted by their
/// signature, so the result depends only on the graph and the input partition.
OrderedPartition refine(const ColouredDigraph& g, OrderedPartition p);

/// The partition of vertices by colour code, ascending.
OrderedPartition colour_partition(const ColouredDigraph& g);

struct SearchLimits {
    std::uint64_t max_nodes = 1'000'000; // search-tree nodes before giving up
};

/// Computes a generating set of the colour-preserving automorphism group by
/// individualization-refinement: depth-first over the refinement tree, target
/// cell = first non-singleton cell, candidates compared against the first
/// discovered leaf and verified edge-by-edge. Explored branches are pruned via
/// orbits of the generators found so far (on the leftmost path only, using
/// generators that fix the path's individualized vertices), and a subtree is
/// abandoned as soon as it yields one automorphism. Every returned permutation
/// is a verified automorphism; together they generate the full group.
///
/// Deterministic for a fixed graph presentation. Throws SearchBudgetExceeded
/// if the node budget runs out (never returns partial results).
std::vector<VertexPermutation> automorphism_generators(const ColouredDigraph& g,
                                                       const SearchLimits& limits = {});

/// All automorphisms by exhaustive enumeration of colour-respecting
/// bijections. Test oracle; guarded to vertex_count <= 10 (throws TooLarge).
std::vector<VertexPermutation> brute_force_automorphisms(const ColouredDigraph& g);

/// True iff gamma is a colour-preserving automorphism of g.
bool is_automorphism(const ColouredDigraph& g, const VertexPermutation& gamma);

} // namespace lpsym
