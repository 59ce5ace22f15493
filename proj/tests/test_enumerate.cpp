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
#include <lpsym/benchmarks.h>
#include <lpsym/enumerate.h>
#include <lpsym/errors.h>
#include <lpsym/sbc.h>
#include <lpsym/symmetry.h>

#include "corpus.h"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace lpsym;
using test::p1;
using test::p2;

namespace {

// plain check used to cross-validate the production minimality search
bool subset_enumeration_is_answer_set(const Program& p, const std::vector<AtomId>& m) {
    auto satisfied = [](const Rule& r, const std::set<AtomId>& s) {
        bool body = std::all_of(r.body_pos.begin(), r.body_pos.end(),
                                [&](AtomId a) { return s.count(a) != 0; }) &&
                    std::none_of(r.body_neg.begin(), r.body_neg.end(),
                                 [&](AtomId a) { return s.count(a) != 0; });
        return !body || std::any_of(r.head.begin(), r.head.end(),
                                    [&](AtomId a) { return s.count(a) != 0; });
    };
    Program red = reduct(p, m);
    std::set<AtomId> mm(m.begin(), m.end());
    if (!std::all_of(red.rules.begin(), red.rules.end(),
                     [&](const Rule& r) { return satisfied(r, mm); })) {
        return false;
    }
    std::vector<AtomId> v(m.begin(), m.end());
    for (std::uint64_t mask = 0; mask + 1 < (std::uint64_t(1) << v.size()); ++mask) {
        std::set<AtomId> sub;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (mask & (std::uint64_t(1) << i)) {
                sub.insert(v[i]);
            }
        }
        if (std::all_of(red.rules.begin(), red.rules.end(),
                        [&](const Rule& r) { return satisfied(r, sub); })) {
            return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("reduct deletes blocked rules and strips negation") {
    Program red = reduct(p1(), {1});
    REQUIRE(red.rules.size() == 1);
    CHECK(red.rules[0] == Rule({1}, {}, {}));

    CHECK(reduct(p2(), {1}) == p2()); // no negative literals anywhere
    Program negfree;
    negfree.rules.push_back(Rule({1}, {2}, {}));
    negfree.normalize();
    CHECK(reduct(negfree, {1, 2}) == negfree);
}

TEST_CASE("answer-set checking on the worked examples") {
    CHECK(is_answer_set(p1(), {1}));
    CHECK(is_answer_set(p1(), {2}));
    CHECK_FALSE(is_answer_set(p1(), {1, 2}));
    CHECK_FALSE(is_answer_set(p1(), {}));
    CHECK(is_answer_set(p2(), {1}));
    CHECK_FALSE(is_answer_set(p2(), {1, 2}));
    Program empty;
    CHECK(is_answer_set(empty, {}));
}

TEST_CASE("the guard rejects oversized programs") {
    CHECK_THROWS_AS(answer_sets(allint(5)), TooLarge);      // 41 atoms > default 25
    CHECK_THROWS_AS(is_answer_set(allint(5), {}), TooLarge);
    CHECK_NOTHROW(answer_sets(allint(5), 64));
}

TEST_CASE("answer sets of the worked examples") {
    CHECK(answer_sets(p1()) == std::vector<std::vector<AtomId>>{{1}, {2}});
    CHECK(answer_sets(p2()) == std::vector<std::vector<AtomId>>{{1}, {2}});
    Program constrained = p1();
    constrained.rules.push_back(Rule({}, {2}, {1}));
    constrained.normalize();
    CHECK(answer_sets(constrained) == std::vector<std::vector<AtomId>>{{1}});
    CHECK(answer_sets(pigeon(3)).empty());
}

TEST_CASE("enumeration agrees with membership checking") {
    for (const auto& [name, program] : test::micro_corpus()) {
        if (program.atoms().size() > 8) {
            continue;
        }
        CAPTURE(name);
        auto atoms = program.atoms();
        auto models = answer_sets(program);
        std::set<std::vector<AtomId>> model_set(models.begin(), models.end());
        for (std::uint32_t mask = 0; mask < (1u << atoms.size()); ++mask) {
            std::vector<AtomId> m;
            for (std::size_t i = 0; i < atoms.size(); ++i) {
                if (mask & (1u << i)) {
                    m.push_back(atoms[i]);
                }
            }
            CHECK(is_answer_set(program, m) == (model_set.count(m) != 0));
        }
    }
}

TEST_CASE("the minimality search agrees with plain subset enumeration") {
    for (const auto& [name, program] : test::micro_corpus()) {
        if (program.atoms().size() > 8) {
            continue;
        }
        CAPTURE(name);
        auto atoms = program.atoms();
        for (std::uint32_t mask = 0; mask < (1u << atoms.size()); ++mask) {
            std::vector<AtomId> m;
            for (std::size_t i = 0; i < atoms.size(); ++i) {
                if (mask & (1u << i)) {
                    m.push_back(atoms[i]);
                }
            }
            CHECK(is_answer_set(program, m) == subset_enumeration_is_answer_set(program, m));
        }
    }
}

TEST_CASE("compression on the p1 example") {
    Program broken = build_sbc(p1(), {AtomPermutation::from_cycle({1, 2})}, std::nullopt);
    CompressionReport rep = compression(p1(), broken);
    CHECK(rep.total_models == 2);
    CHECK(rep.surviving_models == 1);
    CHECK(rep.compression == doctest::Approx(0.5));
}

TEST_CASE("compression of a program against itself is zero") {
    CompressionReport rep = compression(p2(), p2());
    CHECK(rep.total_models == rep.surviving_models);
    CHECK(rep.compression == 0.0);
}

TEST_CASE("compression handles unsatisfiable programs") {
    Program pg = pigeon(3);
    auto detected = detect_symmetries(pg);
    Program broken = build_sbc(pg, detected.generators, std::nullopt);
    CompressionReport rep = compression(pg, broken, 40);
    CHECK(rep.total_models == 0);
    CHECK(rep.surviving_models == 0);
    CHECK(rep.compression == 0.0);
}
