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
#include <lpsym/permutation.h>

#include <lpsym/errors.h>

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace lpsym {

namespace {

void trim_identity(std::vector<AtomId>& image) {
    while (!image.empty() && image.back() == image.size() - 1) {
        image.pop_back();
    }
    if (image.size() == 1) { // only the unused slot 0 left
        image.clear();
    }
}

void check_bijection(const std::vector<AtomId>& image) {
    if (image.empty()) {
        return;
    }
    if (image[0] != 0) {
        throw PermutationDomainError("image table must fix index 0");
    }
    std::vector<bool> hit(image.size(), false);
    for (std::size_t a = 1; a < image.size(); ++a) {
        AtomId b = image[a];
        if (b == 0 || b >= image.size() || hit[b]) {
            throw PermutationDomainError("atom image table is not a bijection");
        }
        hit[b] = true;
    }
}

struct VecHash {
    std::size_t operator()(const std::vector<AtomId>& v) const {
        std::size_t h = 0xcbf29ce484222325ull;
        for (AtomId x : v) {
            h = (h ^ x) * 0x100000001b3ull;
        }
        return h;
    }
};

} // namespace

AtomPermutation::AtomPermutation(std::vector<AtomId> image) : image_(std::move(image)) {
    if (!image_.empty() && image_[0] != 0) {
        // tolerate tables that start at index 0 with a dummy value
        image_[0] = 0;
    }
    check_bijection(image_);
    trim_identity(image_);
}

AtomPermutation AtomPermutation::from_pairs(const std::vector<std::pair<AtomId, AtomId>>& pairs) {
    AtomId max = 0;
    for (const auto& [a, b] : pairs) {
        if (a == 0 || b == 0) {
            throw PermutationDomainError("atom ids must be positive");
        }
        max = std::max({max, a, b});
    }
    std::vector<AtomId> image(max + 1);
    std::iota(image.begin(), image.end(), 0);
    for (const auto& [a, b] : pairs) {
        image[a] = b;
    }
    check_bijection(image);
    AtomPermutation out;
    out.image_ = std::move(image);
    trim_identity(out.image_);
    return out;
}

AtomPermutation AtomPermutation::from_cycle(const std::vector<AtomId>& cycle) {
    std::vector<std::pair<AtomId, AtomId>> pairs;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        pairs.emplace_back(cycle[i], cycle[(i + 1) % cycle.size()]);
    }
    return from_pairs(pairs);
}

std::vector<AtomId> AtomPermutation::support() const {
    std::vector<AtomId> out;
    for (std::size_t a = 1; a < image_.size(); ++a) {
        if (image_[a] != a) {
            out.push_back(static_cast<AtomId>(a));
        }
    }
    return out;
}

std::vector<std::vector<AtomId>> AtomPermutation::cycles() const {
    std::vector<std::vector<AtomId>> out;
    std::vector<bool> seen(image_.size(), false);
    for (std::size_t a = 1; a < image_.size(); ++a) {
        if (seen[a] || image_[a] == a) {
            continue;
        }
        std::vector<AtomId> cycle;
        AtomId cur = static_cast<AtomId>(a); // minimal element, the scan is ascending
        while (!seen[cur]) {
            seen[cur] = true;
            cycle.push_back(cur);
            cur = image_[cur];
        }
        out.push_back(std::move(cycle));
    }
    return out;
}

AtomPermutation AtomPermutation::inverse() const {
    std::vector<AtomId> inv(image_.size());
    for (std::size_t a = 1; a < image_.size(); ++a) {
        inv[image_[a]] = static_cast<AtomId>(a);
    }
    AtomPermutation out;
    out.image_ = std::move(inv);
    trim_identity(out.image_);
    return out;
}

AtomPermutation compose(const AtomPermutation& outer, const AtomPermutation& inner) {
    std::size_t n = std::max(outer.image().size(), inner.image().size());
    std::vector<AtomId> image(n);
    for (std::size_t a = 1; a < n; ++a) {
        image[a] = outer(inner(static_cast<AtomId>(a)));
    }
    AtomPermutation out;
    return n == 0 ? out : AtomPermutation(std::move(image));
}

std::string cycles_to_string(const AtomPermutation& pi,
                             const std::map<AtomId, std::string>* symbols) {
    auto cs = pi.cycles();
    if (cs.empty()) {
        return "()";
    }
    std::ostringstream os;
    auto name = [&](AtomId a) {
        if (symbols) {
            auto it = symbols->find(a);
            if (it != symbols->end()) {
                os << it->second;
                return;
            }
        }
        os << a;
    };
    for (const auto& c : cs) {
        os << '(';
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) {
                os << ' ';
            }
            name(c[i]);
        }
        os << ')';
    }
    return os.str();
}

std::optional<std::vector<AtomPermutation>> closure(const std::vector<AtomPermutation>& gens,
                                                    std::size_t bound) {
    std::unordered_set<std::vector<AtomId>, VecHash> seen;
    std::vector<AtomPermutation> elements;
    std::deque<std::size_t> todo;
    auto push = [&](const AtomPermutation& p) {
        if (seen.insert(p.image()).second) {
            elements.push_back(p);
            todo.push_back(elements.size() - 1);
        }
    };
    push(AtomPermutation());
    while (!todo.empty()) {
        if (elements.size() > bound) {
            return std::nullopt;
        }
        std::size_t idx = todo.front();
        todo.pop_front();
        for (const auto& g : gens) {
            AtomPermutation next = compose(elements[idx], g);
            push(next);
            if (elements.size() > bound) {
                return std::nullopt;
            }
        }
    }
    return elements;
}

std::vector<AtomPermutation> reduce_generators(const std::vector<AtomPermutation>& gens,
                                               std::size_t bound) {
    // Without an enumerable closure we can only drop identities and duplicates.
    if (!closure(gens, bound)) {
        std::vector<AtomPermutation> out;
        for (const auto& g : gens) {
            if (!g.is_identity() && std::find(out.begin(), out.end(), g) == out.end()) {
                out.push_back(g);
            }
        }
        return out;
    }
    // Forward pass: keep a generator only if it enlarges the subgroup built so
    // far. Each kept generator at least doubles the subgroup order, which
    // bounds the result by log2 of the group order.
    std::vector<AtomPermutation> kept;
    std::unordered_set<std::vector<AtomId>, VecHash> sub;
    auto rebuild = [&]() {
        sub.clear();
        auto cl = closure(kept, bound);
        for (const auto& e : *cl) {
            sub.insert(e.image());
        }
    };
    rebuild();
    for (const auto& g : gens) {
        if (g.is_identity() || sub.count(g.image())) {
            continue;
        }
        kept.push_back(g);
        rebuild();
    }
    // One backward sweep: drop members generated by the rest.
    for (std::size_t i = 0; i < kept.size();) {
        std::vector<AtomPermutation> rest;
        for (std::size_t j = 0; j < kept.size(); ++j) {
            if (j != i) {
                rest.push_back(kept[j]);
            }
        }
        auto cl = closure(rest, bound);
        bool redundant = false;
        if (cl) {
            redundant = std::find(cl->begin(), cl->end(), kept[i]) != cl->end();
        }
        if (redundant) {
            kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
        }
        else {
            ++i;
        }
    }
    return kept;
}

std::vector<AtomId> apply_to_set(const AtomPermutation& pi, const std::vector<AtomId>& set) {
    std::vector<AtomId> out;
    out.reserve(set.size());
    for (AtomId a : set) {
        out.push_back(pi(a));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<std::size_t>> orbit_of_set(const std::vector<std::vector<AtomId>>& sets,
                                                   const std::vector<AtomPermutation>& gens) {
    std::map<std::vector<AtomId>, std::size_t> index;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        index.emplace(sets[i], i);
    }
    std::vector<AtomPermutation> moves;
    for (const auto& g : gens) {
        moves.push_back(g);
        moves.push_back(g.inverse());
    }
    std::vector<bool> done(sets.size(), false);
    std::vector<std::vector<std::size_t>> orbits;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (done[i]) {
            continue;
        }
        std::vector<std::size_t> orbit;
        std::deque<std::size_t> queue{i};
        done[i] = true;
        while (!queue.empty()) {
            std::size_t cur = queue.front();
            queue.pop_front();
            orbit.push_back(cur);
            for (const auto& m : moves) {
                auto img = apply_to_set(m, sets[cur]);
                auto it = index.find(img);
                if (it != index.end() && !done[it->second]) {
                    done[it->second] = true;
                    queue.push_back(it->second);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

} // namespace lpsym
