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

#include <stdexcept>
#include <string>

namespace lpsym {

/// Base class for all lpsym errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input is not a well-formed smodels file (count mismatch, bad atom id, truncation).
class MalformedFile : public Error {
public:
    using Error::Error;
};

/// Input uses a rule type outside the supported fragment (basic and disjunctive).
class UnsupportedRuleType : public Error {
public:
    UnsupportedRuleType(int type, const std::string& what) : Error(what), rule_type(type) {}
    int rule_type;
};

/// A permutation is not a bijection on the required domain.
class PermutationDomainError : public Error {
public:
    using Error::Error;
};

/// A graph automorphism violated the consistency-edge discipline during projection.
class InconsistentAutomorphism : public Error {
public:
    using Error::Error;
};

/// The automorphism search exceeded its node budget; results would be incomplete.
class SearchBudgetExceeded : public Error {
public:
    using Error::Error;
};

/// An exhaustive procedure was asked to run beyond its size guard.
class TooLarge : public Error {
public:
    using Error::Error;
};

/// The closed-form size formula does not apply to the given program.
class FormulaInapplicable : public Error {
public:
    using Error::Error;
};

/// A permutation constraint was requested for the identity permutation.
class EmptyIndex : public Error {
public:
    using Error::Error;
};

} // namespace lpsym
