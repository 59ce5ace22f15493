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
#include <lpsym/symmetry.h>

#include <lpsym/errors.h>

#include <chrono>
#include <unordered_map>
#include <utility>

namespace lpsym {

AtomPermutation project(const VertexPermutation& gamma, const VertexMap& vm) {
    std::unordered_map<VertexId, AtomId> atom_of_pos;
    atom_of_pos.reserve(vm.atom_pos.size());
    for (const auto& [atom, vertex] : vm.atom_pos) {
        atom_of_pos.emplace(vertex, atom);
    }
    std::vector<std::pair<AtomId, AtomId>> pairs;
    for (AtomId a : vm.atom_order) {
        VertexId image = gamma[vm.atom_pos.at(a)];
        auto it = atom_of_pos.find(image);
        if (it == atom_of_pos.end()) {
            throw InconsistentAutomorphism("positive literal vertex mapped outside its class");
        }
        AtomId b = it->second;
        if (gamma[vm.atom_neg.at(a)] != vm.atom_neg.at(b)) {
            throw InconsistentAutomorphism("negative literal does not follow its atom");
        }
        if (a != b) {
            pairs.emplace_back(a, b);
        }
    }
    return AtomPermutation::from_pairs(pairs);
}

DetectionResult detect_symmetries(const Program& p, const BuildOptions& opts,
                                  const SearchLimits& limits, std::size_t closure_bound) {
    using clock = std::chrono::steady_clock;
    auto seconds_since = [](clock::time_point t0) {
        return std::chrono::duration<double>(clock::now() - t0).count();
    };
    DetectionResult out;

    auto t0 = clock::now();
    BuildResult built = build_graph(p, opts);
    out.stats.graph_vertices = built.graph.vertex_count;
    out.stats.graph_edges = built.graph.edges.size();
    out.stats.seconds_build = seconds_since(t0);

    t0 = clock::now();
    std::vector<VertexPermutation> raw = automorphism_generators(built.graph, limits);
    out.stats.raw_generators = raw.size();
    out.stats.seconds_search = seconds_since(t0);

    t0 = clock::now();
    std::vector<AtomPermutation> verified;
    for (const auto& gamma : raw) {
        AtomPermutation pi = project(gamma, built.map);
        if (pi.is_identity()) {
            ++out.stats.identity_skipped;
            continue;
        }
        if (!is_symmetry(p, pi)) { // defense in depth; a hit means an engine bug
            ++out.stats.discarded;
            continue;
        }
        verified.push_back(std::move(pi));
    }
    out.stats.seconds_project = seconds_since(t0);

    t0 = clock::now();
    out.generators = reduce_generators(verified, closure_bound);
    out.stats.kept = out.generators.size();
    out.stats.seconds_reduce = seconds_since(t0);
    return out;
}

} // namespace lpsym
