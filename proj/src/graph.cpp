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
#include <lpsym/graph.h>

#include <lpsym/errors.h>

#include <algorithm>
#include <cassert>
#include <sstream>

namespace lpsym {

BuildResult build_graph(const Program& p, const BuildOptions& opts) {
    BuildResult out;
    ColouredDigraph& g = out.graph;
    VertexMap& vm = out.map;

    vm.atom_order = p.atoms();
    for (AtomId a : vm.atom_order) {
        VertexId pos = g.vertex_count++;
        VertexId neg = g.vertex_count++;
        g.colour.push_back(colour_pos_lit);
        g.colour.push_back(colour_neg_lit);
        vm.atom_pos.emplace(a, pos);
        vm.atom_neg.emplace(a, neg);
        g.edges.emplace_back(pos, neg); // consistency edge
    }

    auto bottom = [&]() -> VertexId {
        if (!vm.bottom) {
            vm.bottom = g.vertex_count++;
            g.colour.push_back(colour_bottom);
        }
        return *vm.bottom;
    };
    auto literal_vertex = [&](AtomId a, bool negated) {
        return negated ? vm.atom_neg.at(a) : vm.atom_pos.at(a);
    };

    vm.body_of_rule.resize(p.rules.size());
    for (std::size_t ri = 0; ri < p.rules.size(); ++ri) {
        const Rule& r = p.rules[ri];
        if (opts.opt_facts && r.is_fact()) {
            g.colour[vm.atom_pos.at(r.head[0])] = colour_fact;
            continue;
        }
        if (opts.opt_unary && r.head.size() <= 1 && r.body_size() == 1) {
            VertexId src = r.body_pos.empty() ? literal_vertex(r.body_neg[0], true)
                                              : literal_vertex(r.body_pos[0], false);
            VertexId dst = r.head.empty() ? bottom() : vm.atom_pos.at(r.head[0]);
            if (src != dst) { // a <- a would be a self-loop; keep its body vertex
                g.edges.emplace_back(src, dst);
                continue;
            }
        }
        VertexId body = g.vertex_count++;
        g.colour.push_back(colour_body);
        vm.body_of_rule[ri] = body;
        for (AtomId a : r.body_pos) {
            g.edges.emplace_back(literal_vertex(a, false), body);
        }
        for (AtomId a : r.body_neg) {
            g.edges.emplace_back(literal_vertex(a, true), body);
        }
        if (r.head.empty()) {
            g.edges.emplace_back(body, bottom());
        }
        for (AtomId a : r.head) {
            g.edges.emplace_back(body, vm.atom_pos.at(a));
        }
    }

    std::sort(g.edges.begin(), g.edges.end());
    assert(std::adjacent_find(g.edges.begin(), g.edges.end()) == g.edges.end());
    return out;
}

std::pair<std::size_t, std::size_t> graph_size_check(const Program& p) {
    std::size_t literals = 0;
    for (const auto& r : p.rules) {
        if (r.is_constraint()) {
            throw FormulaInapplicable("size formula does not cover integrity constraints");
        }
        literals += r.literal_count();
    }
    std::size_t m = p.rules.size();
    std::size_t n = p.atoms().size();
    return {m + 2 * n, literals + n};
}

std::string dump_graph(const ColouredDigraph& g) {
    std::ostringstream os;
    for (VertexId v = 0; v < g.vertex_count; ++v) {
        os << "v " << v << ' ' << g.colour[v] << '\n';
    }
    for (const auto& [src, dst] : g.edges) {
        os << "e " << src << ' ' << dst << '\n';
    }
    return os.str();
}

} // namespace lpsym
