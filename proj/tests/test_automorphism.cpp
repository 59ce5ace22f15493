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
#include <lpsym/automorphism.h>
#include <lpsym/benchmarks.h>
#include <lpsym/errors.h>
#include <lpsym/graph.h>

#include "corpus.h"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace lpsym;

namespace {

ColouredDigraph make_graph(std::uint32_t n, std::vector<std::pair<VertexId, VertexId>> edges,
                           std::vector<int> colours = {}) {
    ColouredDigraph g;
    g.vertex_count = n;
    g.colour = colours.empty() ? std::vector<int>(n, 1) : std::move(colours);
    std::sort(edges.begin(), edges.end());
    g.edges = std::move(edges);
    return g;
}

// closes a set of vertex permutations under composition
std::set<VertexPermutation> vertex_closure(const std::vector<VertexPermutation>& gens,
                                           std::uint32_t n) {
    VertexPermutation id(n);
    std::iota(id.begin(), id.end(), 0);
    std::set<VertexPermutation> group{id};
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<VertexPermutation> snapshot(group.begin(), group.end());
        for (const auto& a : snapshot) {
            for (const auto& g : gens) {
                VertexPermutation c(n);
                for (std::uint32_t v = 0; v < n; ++v) {
                    c[v] = g[a[v]];
                }
                grew = group.insert(c).second || grew;
            }
        }
    }
    return group;
}

} // namespace

TEST_CASE("refining a directed path discretizes it by degree signature") {
    auto g = make_graph(3, {{0, 1}, {1, 2}});
    OrderedPartition unit{{0, 1, 2}};
    OrderedPartition refined = refine(g, unit);
    REQUIRE(refined.size() == 3);
    // sub-cells come out sorted by signature: sink (0 out, 1 in) first, then
    // source (1 out, 0 in), then the middle vertex (1 out, 1 in)
    CHECK(refined[0] == std::vector<VertexId>{2});
    CHECK(refined[1] == std::vector<VertexId>{0});
    CHECK(refined[2] == std::vector<VertexId>{1});
}

TEST_CASE("a directed cycle is equitable already") {
    auto g = make_graph(3, {{0, 1}, {1, 2}, {2, 0}});
    OrderedPartition refined = refine(g, {{0, 1, 2}});
    REQUIRE(refined.size() == 1);
    CHECK(refined[0] == std::vector<VertexId>{0, 1, 2});
}

TEST_CASE("the colour partition of p1's graph is already equitable") {
    auto [g, vm] = build_graph(test::p1(), BuildOptions{false, false});
    OrderedPartition refined = refine(g, colour_partition(g));
    REQUIRE(refined.size() == 3);
    for (const auto& cell : refined) {
        CHECK(cell.size() == 2);
    }
}

TEST_CASE("refine is idempotent and only splits") {
    for (const auto& [name, program] : test::micro_corpus()) {
        CAPTURE(name);
        auto [g, vm] = build_graph(program);
        OrderedPartition once = refine(g, colour_partition(g));
        CHECK(refine(g, once) == once);
        // every cell of the refinement lies inside one colour class
        for (const auto& cell : once) {
            for (VertexId v : cell) {
                CHECK(g.colour[v] == g.colour[cell[0]]);
            }
        }
    }
}

TEST_CASE("brute force on trivial graphs") {
    auto single = make_graph(1, {});
    CHECK(brute_force_automorphisms(single).size() == 1);
    auto two = make_graph(2, {});
    CHECK(brute_force_automorphisms(two).size() == 2);
    auto too_big = make_graph(11, {});
    CHECK_THROWS_AS(brute_force_automorphisms(too_big), TooLarge);
}

TEST_CASE("a rigid colouring yields no generators") {
    auto g = make_graph(3, {{0, 1}, {1, 2}}, {1, 2, 3});
    CHECK(automorphism_generators(g).empty());
}

TEST_CASE("the rotation group of a directed triangle has order three") {
    auto g = make_graph(3, {{0, 1}, {1, 2}, {2, 0}});
    auto gens = automorphism_generators(g);
    CHECK_FALSE(gens.empty());
    CHECK(vertex_closure(gens, 3).size() == 3);
    CHECK(brute_force_automorphisms(g).size() == 3);
}

TEST_CASE("generators of p1's graph generate a group of order two") {
    auto [g, vm] = build_graph(test::p1(), BuildOptions{false, false});
    auto gens = automorphism_generators(g);
    REQUIRE(gens.size() == 1);
    const auto& gamma = gens[0];
    CHECK(gamma[vm.atom_pos.at(1)] == vm.atom_pos.at(2));
    CHECK(gamma[vm.atom_neg.at(1)] == vm.atom_neg.at(2));
    CHECK(gamma[*vm.body_of_rule[0]] == *vm.body_of_rule[1]);
    CHECK(vertex_closure(gens, g.vertex_count).size() == 2);
}

TEST_CASE("engine output always verifies as colour-preserving automorphisms") {
    for (const auto& [name, program] : test::micro_corpus()) {
        CAPTURE(name);
        auto [g, vm] = build_graph(program);
        for (const auto& gamma : automorphism_generators(g)) {
            CHECK(is_automorphism(g, gamma));
        }
    }
}

TEST_CASE("engine agrees with brute force on all small corpus graphs") {
    std::size_t compared = 0;
    for (const auto& [name, program] : test::micro_corpus()) {
        for (bool optimize : {true, false}) {
            auto [g, vm] = build_graph(program, BuildOptions{optimize, optimize});
            if (g.vertex_count > 10) {
                continue;
            }
            CAPTURE(name);
            auto all = brute_force_automorphisms(g);
            auto generated = vertex_closure(automorphism_generators(g), g.vertex_count);
            CHECK(generated == std::set<VertexPermutation>(all.begin(), all.end()));
            ++compared;
        }
    }
    CHECK(compared > 0);
}

TEST_CASE("the node budget aborts the search cleanly") {
    auto [g, vm] = build_graph(pigeon(4));
    SearchLimits limits;
    limits.max_nodes = 3;
    CHECK_THROWS_AS(automorphism_generators(g, limits), SearchBudgetExceeded);
}

TEST_CASE("results are deterministic") {
    auto [g, vm] = build_graph(test::random_micro_programs()[3]);
    CHECK(automorphism_generators(g) == automorphism_generators(g));
}
