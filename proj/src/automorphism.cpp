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

#include <lpsym/errors.h>

#include <algorithm>
#include <array>
#include <cassert>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

namespace lpsym {

namespace {

struct Adjacency {
    std::vector<std::vector<VertexId>> out;
    std::vector<std::vector<VertexId>> in;
    std::unordered_set<std::uint64_t> edge_set;
    std::uint32_t v = 0;

    explicit Adjacency(const ColouredDigraph& g) : v(g.vertex_count) {
        out.resize(v);
        in.resize(v);
        edge_set.reserve(g.edges.size() * 2);
        for (const auto& [s, d] : g.edges) {
            out[s].push_back(d);
            in[d].push_back(s);
            edge_set.insert(static_cast<std::uint64_t>(s) * v + d);
        }
    }
    bool has_edge(VertexId s, VertexId d) const {
        return edge_set.count(static_cast<std::uint64_t>(s) * v + d) != 0;
    }
};

// One pass of signature-based splitting; returns true if any cell split.
bool refine_pass(const Adjacency& adj, OrderedPartition& p) {
    std::vector<std::uint32_t> cell_of(adj.v);
    for (std::uint32_t c = 0; c < p.size(); ++c) {
        for (VertexId v : p[c]) {
            cell_of[v] = c;
        }
    }
    // signature of v: per-cell (out, in) degree counts, sparse and sorted
    using Sig = std::vector<std::array<std::uint32_t, 3>>;
    auto signature = [&](VertexId v) {
        std::map<std::uint32_t, std::array<std::uint32_t, 3>> counts;
        for (VertexId w : adj.out[v]) {
            auto& e = counts.try_emplace(cell_of[w], std::array<std::uint32_t, 3>{cell_of[w], 0, 0})
                          .first->second;
            ++e[1];
        }
        for (VertexId w : adj.in[v]) {
            auto& e = counts.try_emplace(cell_of[w], std::array<std::uint32_t, 3>{cell_of[w], 0, 0})
                          .first->second;
            ++e[2];
        }
        Sig sig;
        sig.reserve(counts.size());
        for (const auto& [cell, entry] : counts) {
            sig.push_back(entry);
        }
        return sig;
    };

    OrderedPartition next;
    next.reserve(p.size());
    bool split = false;
    for (const auto& cell : p) {
        if (cell.size() == 1) {
            next.push_back(cell);
            continue;
        }
        std::map<Sig, std::vector<VertexId>> groups; // sub-cells in signature order
        for (VertexId v : cell) {
            groups[signature(v)].push_back(v);
        }
        if (groups.size() == 1) {
            next.push_back(cell);
            continue;
        }
        split = true;
        for (auto& [sig, members] : groups) {
            next.push_back(std::move(members));
        }
    }
    if (split) {
        p = std::move(next);
    }
    return split;
}

OrderedPartition refine_impl(const Adjacency& adj, OrderedPartition p) {
    while (refine_pass(adj, p)) {
    }
    return p;
}

bool is_discrete(const OrderedPartition& p) {
    return std::all_of(p.begin(), p.end(), [](const auto& c) { return c.size() == 1; });
}

std::vector<VertexId> flatten(const OrderedPartition& p) {
    std::vector<VertexId> seq;
    seq.reserve(p.size());
    for (const auto& c : p) {
        seq.push_back(c[0]);
    }
    return seq;
}

bool check_automorphism(const ColouredDigraph& g, const Adjacency& adj,
                        const VertexPermutation& gamma) {
    for (VertexId v = 0; v < g.vertex_count; ++v) {
        if (g.colour[v] != g.colour[gamma[v]]) {
            return false;
        }
    }
    for (const auto& [s, d] : g.edges) {
        if (!adj.has_edge(gamma[s], gamma[d])) {
            return false;
        }
    }
    return true;
}

class Search {
public:
    Search(const ColouredDigraph& g, const SearchLimits& limits)
        : g_(g), adj_(g), limits_(limits) {}

    std::vector<VertexPermutation> run() {
        OrderedPartition root = refine_impl(adj_, colour_partition(g_));
        dfs(root, true);
        return generators_;
    }

private:
    // Returns true when an automorphism was found somewhere below; callers off
    // the leftmost path abandon their remaining children on that signal.
    bool dfs(const OrderedPartition& p, bool leftmost) {
        if (++nodes_ > limits_.max_nodes) {
            throw SearchBudgetExceeded("automorphism search exceeded its node budget");
        }
        if (is_discrete(p)) {
            return handle_leaf(p);
        }
        std::size_t target = 0;
        while (p[target].size() == 1) {
            ++target;
        }
        std::vector<VertexId> tried;
        bool found_any = false;
        bool first_child = true;
        for (VertexId v : p[target]) {
            if (leftmost && !first_child && in_explored_orbit(v, tried)) {
                continue;
            }
            OrderedPartition child;
            child.reserve(p.size() + 1);
            for (std::size_t c = 0; c < target; ++c) {
                child.push_back(p[c]);
            }
            child.push_back({v});
            std::vector<VertexId> rest;
            for (VertexId w : p[target]) {
                if (w != v) {
                    rest.push_back(w);
                }
            }
            child.push_back(std::move(rest));
            for (std::size_t c = target + 1; c < p.size(); ++c) {
                child.push_back(p[c]);
            }
            child = refine_impl(adj_, std::move(child));

            bool child_leftmost = leftmost && first_child;
            if (child_leftmost) {
                prefix_.push_back(v);
            }
            bool found = dfs(child, child_leftmost);
            if (child_leftmost) {
                prefix_.pop_back();
            }
            first_child = false;
            found_any = found_any || found;
            if (found && !leftmost) {
                return true; // backjump to the deepest leftmost ancestor
            }
            if (leftmost) {
                tried.push_back(v);
            }
        }
        return found_any;
    }

    bool handle_leaf(const OrderedPartition& p) {
        std::vector<VertexId> seq = flatten(p);
        if (first_leaf_.empty()) {
            first_leaf_ = std::move(seq);
            return false;
        }
        VertexPermutation gamma(g_.vertex_count);
        bool identity = true;
        for (std::size_t i = 0; i < seq.size(); ++i) {
            gamma[first_leaf_[i]] = seq[i];
            identity = identity && first_leaf_[i] == seq[i];
        }
        if (identity || !check_automorphism(g_, adj_, gamma)) {
            return false;
        }
        if (known_.insert(gamma).second) {
            generators_.push_back(gamma);
        }
        return true;
    }

    // Orbit pruning on the leftmost path: skip v when a generator chain that
    // fixes the whole individualized prefix maps it into an already-tried
    // sibling. Only generators fixing the prefix pointwise may be used here.
    bool in_explored_orbit(VertexId v, const std::vector<VertexId>& tried) const {
        if (tried.empty() || generators_.empty()) {
            return false;
        }
        std::vector<const VertexPermutation*> usable;
        for (const auto& gen : generators_) {
            bool fixes = true;
            for (VertexId u : prefix_) {
                if (gen[u] != u) {
                    fixes = false;
                    break;
                }
            }
            if (fixes) {
                usable.push_back(&gen);
            }
        }
        if (usable.empty()) {
            return false;
        }
        std::set<VertexId> orbit{v};
        std::vector<VertexId> queue{v};
        std::set<VertexId> tried_set(tried.begin(), tried.end());
        while (!queue.empty()) {
            VertexId cur = queue.back();
            queue.pop_back();
            if (tried_set.count(cur)) {
                return true;
            }
            for (const auto* gen : usable) {
                if (orbit.insert((*gen)[cur]).second) {
                    queue.push_back((*gen)[cur]);
                }
            }
        }
        return false;
    }

    const ColouredDigraph& g_;
    Adjacency adj_;
    SearchLimits limits_;
    std::uint64_t nodes_ = 0;
    std::vector<VertexId> first_leaf_;
    std::vector<VertexId> prefix_; // individualized vertices along the leftmost path
    std::vector<VertexPermutation> generators_;
    std::set<VertexPermutation> known_;
};

} // namespace

OrderedPartition colour_partition(const ColouredDigraph& g) {
    std::map<int, std::vector<VertexId>> by_colour;
    for (VertexId v = 0; v < g.vertex_count; ++v) {
        by_colour[g.colour[v]].push_back(v);
    }
    OrderedPartition p;
    for (auto& [colour, cell] : by_colour) {
        p.push_back(std::move(cell));
    }
    return p;
}

OrderedPartition refine(const ColouredDigraph& g, OrderedPartition p) {
    Adjacency adj(g);
    return refine_impl(adj, std::move(p));
}

std::vector<VertexPermutation> automorphism_generators(const ColouredDigraph& g,
                                                       const SearchLimits& limits) {
    if (g.vertex_count == 0) {
        return {};
    }
    Search search(g, limits);
    return search.run();
}

bool is_automorphism(const ColouredDigraph& g, const VertexPermutation& gamma) {
    if (gamma.size() != g.vertex_count) {
        return false;
    }
    std::vector<bool> hit(g.vertex_count, false);
    for (VertexId img : gamma) {
        if (img >= g.vertex_count || hit[img]) {
            return false;
        }
        hit[img] = true;
    }
    Adjacency adj(g);
    return check_automorphism(g, adj, gamma);
}

std::vector<VertexPermutation> brute_force_automorphisms(const ColouredDigraph& g) {
    if (g.vertex_count > 10) {
        throw TooLarge("brute-force automorphism enumeration is guarded to 10 vertices");
    }
    Adjacency adj(g);
    OrderedPartition classes = colour_partition(g);
    std::vector<VertexPermutation> result;
    VertexPermutation gamma(g.vertex_count);

    // Enumerate the cartesian product of per-class permutations.
    std::vector<std::vector<VertexId>> images(classes.size());
    auto assign = [&](auto&& self, std::size_t k) -> void {
        if (k == classes.size()) {
            if (check_automorphism(g, adj, gamma)) {
                result.push_back(gamma);
            }
            return;
        }
        std::vector<VertexId>& img = images[k];
        img = classes[k];
        do {
            for (std::size_t i = 0; i < img.size(); ++i) {
                gamma[classes[k][i]] = img[i];
            }
            self(self, k + 1);
        } while (std::next_permutation(img.begin(), img.end()));
    };
    assign(assign, 0);
    std::sort(result.begin(), result.end());
    return result;
}

} // namespace lpsym
