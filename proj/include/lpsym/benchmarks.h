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

namespace lpsym {

/// Pigeon-hole instance: n pigeons into n-1 holes, support encoding of the
/// all-different constraint. Atoms p(i,j) for pigeon i in hole j, numbered
/// row-major by pigeon. Per pigeon one disjunctive value rule; per hole and
/// unordered pigeon pair one binary constraint. Unsatisfiable for every n.
/// Requires n >= 2.
Program pigeon(std::uint32_t n);

/// All-interval instance over 0..n-1: atoms v(i,j) for variable i taking
/// value j (row-major, first) and d(i,l) for the i-th adjacent difference
/// taking value l. Rules: one disjunctive value rule per variable, at-most-one
/// value per variable, pairwise all-different across variables, difference
/// definitions d(i,|j-k|) <- v(i,j), v(i+1,k), and at-most-one/all-different
/// on the difference atoms. Answer sets correspond exactly to all-interval
/// series. Requires n >= 3.
Program allint(std::uint32_t n);

} // namespace lpsym
