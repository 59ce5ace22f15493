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

#include <lpsym/permutation.h>
#include <lpsym/program.h>

#include <string>
#include <vector>

namespace lpsym::test {

struct NamedProgram {
    std::string name;
    Program program;
};

/// {a <- not b.  b <- not a.} with a=1, b=2.
Program p1();

/// {a;b <-.  <- a,b.} with a=1, b=2.
Program p2();

/// Ten fixed-seed random programs with <= 8 atoms and <= 12 rules.
std::vector<Program> random_micro_programs();

/// The full verification corpus: p1, p2, pigeon(2..4), allint(4..5), and the
/// ten random programs.
std::vector<NamedProgram> micro_corpus();

/// All permutations of atoms(p) that are symmetries of p, by brute force.
/// Intended for programs with at most 8 atoms.
std::vector<AtomPermutation> brute_force_symmetries(const Program& p);

} // namespace lpsym::test
