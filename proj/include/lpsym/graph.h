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
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace lpsym {

using VertexId = std::uint32_t;

/// Vertex colours of the program graph. Automorphisms must preserve them.
enum Colour : int {
    colour_pos_lit = 1, // positive literal of an atom
    colour_neg_lit = 2, // negative literal of an atom
    colour_body    = 3, // rule body
    colour_fact    = 4, // positive literal of an atom that is a fact
    colour_bottom  = 5  // shared target of integrity constraints
};

/// A vertex-coloured directed graph with contiguous vertex ids 0..V-1.
/// No self-loops, no duplicate edges.
struct ColouredDigraph {
    std::uint32_t vertex_count = 0;
    std::vector<int> colour;                            // size vertex_count
    std::vector<std::pair<VertexId, VertexId>> edges;   // sorted, unique
};

/// Records how program entities were laid out in the graph.
struct VertexMap {
    std::vector<AtomId> atom_order;                  // ascending atoms(P)
    std::unordered_map<AtomId, VertexId> atom_pos;   // a -> vertex of a
    std::unordered_map<AtomId, VertexId> atom_neg;   // a -> vertex of not a
    std::vector<std::optional<VertexId>> body_of_rule; // per rule; nullopt if elided
    std::optional<VertexId> bottom;
};

struct BuildOptions {
    bool opt_facts = true; // facts recolour the head atom instead of a body vertex
    bool opt_unary = true; // single-head, one-literal-body rules become one edge
};

struct BuildResult {
    ColouredDigraph graph;
    VertexMap map;
};

/// Builds the coloured digraph whose colour-preserving automorphisms project
/// onto the symmetries of p.
///
/// Base construction: per atom a, vertices a+ (colour 1) and a- (colour 2)
/// with a consistency edge a+ -> a-; per rule, a body vertex (colour 3) with
/// edges from its body literal vertices and edges to its head atoms' positive
/// vertices. Constraints point their body vertex at a shared bottom vertex
/// (colour 5, created on demand). Each rule gets its own body vertex even if
/// another rule has the same body, so a disjunctive head never becomes
/// graph-identical to two separate rules.
///
/// opt_facts drops the body vertex of facts and recolours the head atom's
/// positive vertex to colour 4. opt_unary replaces the body vertex of
/// single-head rules with exactly one body literal by a direct edge from the
/// literal vertex to the head's positive vertex (or to bottom when the head is
/// empty); the self-referential rule a <- a keeps its body vertex to avoid a
/// self-loop.
BuildResult build_graph(const Program& p, const BuildOptions& opts = {});

/// Evaluates the closed-form size (m + 2n, l + n) of the unoptimized graph:
/// m rules, n atoms, l literal occurrences. Only valid for programs without
/// integrity constraints (the bottom vertex is outside the formula); throws
/// FormulaInapplicable otherwise.
std::pair<std::size_t, std::size_t> graph_size_check(const Program& p);

/// Line-based debug dump: `v <id> <colour>` per vertex, then `e <src> <dst>`
/// per edge.
std::string dump_graph(const ColouredDigraph& g);

} // namespace lpsym
