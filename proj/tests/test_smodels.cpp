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
#include <lpsym/errors.h>
#include <lpsym/smodels.h>

#include "corpus.h"

#include <doctest.h>

using namespace lpsym;

namespace {
// hand-written file for p1 as a grounder would emit it
const char* p1_file =
    "1 1 1 1 2\n"
    "1 2 1 1 1\n"
    "0\n"
    "1 a\n"
    "2 b\n"
    "0\n"
    "B+\n"
    "0\n"
    "B-\n"
    "0\n"
    "1\n";
} // namespace

TEST_CASE("parses a basic two-rule program") {
    Program p = parse_smodels(p1_file);
    CHECK(p.rules.size() == 2);
    CHECK(p.atoms() == std::vector<AtomId>{1, 2});
    CHECK(p.symbols.at(1) == "a");
    CHECK(p.symbols.at(2) == "b");
    CHECK(p.models == 1);
    CHECK(p == test::p1());
}

TEST_CASE("parses an empty rule section") {
    Program p = parse_smodels("0\n0\nB+\n0\nB-\n0\n1\n");
    CHECK(p.rules.empty());
    CHECK(p.atoms().empty());
}

TEST_CASE("rejects choice rules as unsupported") {
    CHECK_THROWS_AS(parse_smodels("3 1 2 0 0\n0\n0\nB+\n0\nB-\n0\n1\n"), UnsupportedRuleType);
    try {
        parse_smodels("3 1 2 0 0\n0\n0\nB+\n0\nB-\n0\n1\n");
    }
    catch (const UnsupportedRuleType& e) {
        CHECK(e.rule_type == 3);
        CHECK(std::string(e.what()).find("choice") != std::string::npos);
    }
}

TEST_CASE("rejects the other extended rule types") {
    CHECK_THROWS_AS(parse_smodels("2 1 1 0 1 2\n0\n0\nB+\n0\nB-\n0\n1\n"), UnsupportedRuleType);
    CHECK_THROWS_AS(parse_smodels("5 1 1 1 0 2\n0\n0\nB+\n0\nB-\n0\n1\n"), UnsupportedRuleType);
    CHECK_THROWS_AS(parse_smodels("6 0 1 0 2 1\n0\n0\nB+\n0\nB-\n0\n1\n"), UnsupportedRuleType);
}

TEST_CASE("rejects malformed input") {
    CHECK_THROWS_AS(parse_smodels("1 1 2 0 3\n"), MalformedFile);          // truncated body
    CHECK_THROWS_AS(parse_smodels("1 0 0 0\n0\n0\nB+\n0\nB-\n0\n1\n"), MalformedFile); // head 0
    CHECK_THROWS_AS(parse_smodels("1 1 1 2 2\n0\n0\nB+\n0\nB-\n0\n1\n"), MalformedFile);
    CHECK_THROWS_AS(parse_smodels("9 1 1 0 0\n0\n0\nB+\n0\nB-\n0\n1\n"), MalformedFile);
    CHECK_THROWS_AS(parse_smodels("0\n0\nBPLUS\n0\nB-\n0\n1\n"), MalformedFile);
}

TEST_CASE("integrity constraints come in through the false marker") {
    // <- a, b encoded with hidden marker atom 3; a;b <- as a disjunctive rule
    const char* file =
        "8 2 1 2 0 0\n"
        "1 3 2 0 1 2\n"
        "0\n"
        "1 a\n"
        "2 b\n"
        "0\n"
        "B+\n"
        "0\n"
        "B-\n"
        "3\n"
        "0\n"
        "1\n";
    Program p = parse_smodels(file);
    CHECK(p == [] {
        Program q = test::p2();
        q.false_atom = 3;
        q.max_atom_id = 3;
        return q;
    }());
    CHECK(p.rules.size() == 2);
    CHECK(p.rules[0].is_constraint()); // sorts first
    CHECK(p.compute_neg.empty());
    CHECK(p.false_atom == 3);
}

TEST_CASE("a B- atom that occurs in bodies is not a false marker") {
    const char* file =
        "1 3 2 0 1 2\n"
        "1 1 1 0 3\n"
        "0\n0\nB+\n0\nB-\n3\n0\n1\n";
    Program p = parse_smodels(file);
    CHECK_FALSE(p.false_atom.has_value());
    CHECK(p.compute_neg == std::vector<AtomId>{3});
    for (const auto& r : p.rules) {
        CHECK_FALSE(r.is_constraint());
    }
}

TEST_CASE("writing p2 emits one disjunctive rule and one marker constraint") {
    std::string text = write_smodels(test::p2());
    CHECK(text ==
          "1 3 2 0 1 2\n"
          "8 2 1 2 0 0\n"
          "0\n"
          "1 a\n"
          "2 b\n"
          "0\n"
          "B+\n"
          "0\n"
          "B-\n"
          "3\n"
          "0\n"
          "1\n");
}

TEST_CASE("a fresh hidden marker is allocated for constraint re-encoding") {
    Program p = test::p2();
    CHECK_FALSE(p.false_atom.has_value());
    Program again = parse_smodels(write_smodels(p));
    CHECK(again.rules == p.rules);
    CHECK(again.false_atom == 3);
    CHECK(again.compute_neg.empty());
}

TEST_CASE("round-trip is the identity on the corpus") {
    for (const auto& [name, program] : test::micro_corpus()) {
        CAPTURE(name);
        Program parsed = parse_smodels(write_smodels(program));
        Program reparsed = parse_smodels(write_smodels(parsed));
        CHECK(parsed == reparsed);
        CHECK(parsed.rules == program.rules);
        CHECK(write_smodels(parsed) == write_smodels(program));
    }
}

TEST_CASE("compute sections and model count pass through") {
    Program p = test::p1();
    p.compute_pos = {1};
    p.compute_neg = {2};
    p.models = 0;
    p.normalize();
    Program q = parse_smodels(write_smodels(p));
    CHECK(q.compute_pos == std::vector<AtomId>{1});
    CHECK(q.compute_neg == std::vector<AtomId>{2});
    CHECK(q.models == 0);
}
