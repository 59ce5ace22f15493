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

#include <iosfwd>
#include <string>

namespace lpsym {

// Reader/writer for the smodels intermediate format restricted to basic (1)
// and disjunctive (8) rules:
//
//   1 head #lits #neg neg... pos...
//   8 #heads heads... #lits #neg neg... pos...
//   0
//   <atom> <name>        (symbol table)
//   0
//   B+                   (atoms one per line)
//   0
//   B-
//   0
//   <number of models>
//
// Choice (3), cardinality (2), weight (5) and minimize (6) rules raise
// UnsupportedRuleType; anything else that breaks the grammar raises
// MalformedFile.
//
// Integrity constraints have no native encoding in the format. On input, an
// atom that has no symbol-table entry, is listed in B-, and occurs only as the
// single head atom of rules is treated as the false marker: its rules are
// normalized to head = {} and the marker is dropped from compute_neg. On
// output, head = {} rules are re-encoded through the remembered marker, or a
// fresh hidden atom if the program has none.

/// Parses a complete smodels document.
Program parse_smodels(std::istream& in);
Program parse_smodels(const std::string& text);

/// Emits the program. Output is byte-deterministic: rules in normalized
/// order, single spaces, every line newline-terminated.
void write_smodels(const Program& p, std::ostream& out);
std::string write_smodels(const Program& p);

} // namespace lpsym
