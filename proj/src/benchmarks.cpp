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

#include <lpsym/errors.h>

#include <cstdlib>
#include <sstream>

namespace lpsym {

namespace {
std::string atom_name(const char* pred, std::uint32_t i, std::uint32_t j) {
    std::ostringstream os;
    os << pred << '(' << i << ',' << j << ')';
    return os.str();
}
} // namespace

Program pigeon(std::uint32_t n) {
    if (n < 2) {
        throw Error("pigeon requires n >= 2");
    }
    std::uint32_t holes = n - 1;
    Program p;
    auto atom = [&](std::uint32_t i, std::uint32_t j) { // pigeon i in hole j, row-major
        return static_cast<AtomId>((i - 1) * holes + j);
    };
    for (std::uint32_t i = 1; i <= n; ++i) {
        for (std::uint32_t j = 1; j <= holes; ++j) {
            p.symbols[atom(i, j)] = atom_name("p", i, j);
        }
    }
    for (std::uint32_t i = 1; i <= n; ++i) {
        std::vector<AtomId> head;
        for (std::uint32_t j = 1; j <= holes; ++j) {
            head.push_back(atom(i, j));
        }
        p.rules.push_back(Rule(std::move(head), {}, {}));
    }
    for (std::uint32_t j = 1; j <= holes; ++j) {
        for (std::uint32_t i = 1; i <= n; ++i) {
            for (std::uint32_t k = i + 1; k <= n; ++k) {
                p.rules.push_back(Rule({}, {atom(i, j), atom(k, j)}, {}));
            }
        }
    }
    p.normalize();
    return p;
}

Program allint(std::uint32_t n) {
    if (n < 3) {
        throw Error("allint requires n >= 3");
    }
    Program p;
    auto v = [&](std::uint32_t i, std::uint32_t j) { // variable i in 1..n, value j in 0..n-1
        return static_cast<AtomId>((i - 1) * n + j + 1);
    };
    auto d = [&](std::uint32_t i, std::uint32_t l) { // difference i in 1..n-1, value l in 1..n-1
        return static_cast<AtomId>(n * n + (i - 1) * (n - 1) + l);
    };
    for (std::uint32_t i = 1; i <= n; ++i) {
        for (std::uint32_t j = 0; j < n; ++j) {
            p.symbols[v(i, j)] = atom_name("v", i, j);
        }
    }
    for (std::uint32_t i = 1; i < n; ++i) {
        for (std::uint32_t l = 1; l < n; ++l) {
            p.symbols[d(i, l)] = atom_name("d", i, l);
        }
    }

    // one value per variable
    for (std::uint32_t i = 1; i <= n; ++i) {
        std::vector<AtomId> head;
        for (std::uint32_t j = 0; j < n; ++j) {
            head.push_back(v(i, j));
        }
        p.rules.push_back(Rule(std::move(head), {}, {}));
        for (std::uint32_t j = 0; j < n; ++j) {
            for (std::uint32_t k = j + 1; k < n; ++k) {
                p.rules.push_back(Rule({}, {v(i, j), v(i, k)}, {}));
            }
        }
    }
    // all-different across variables
    for (std::uint32_t j = 0; j < n; ++j) {
        for (std::uint32_t i = 1; i <= n; ++i) {
            for (std::uint32_t k = i + 1; k <= n; ++k) {
                p.rules.push_back(Rule({}, {v(i, j), v(k, j)}, {}));
            }
        }
    }
    // adjacent differences
    for (std::uint32_t i = 1; i < n; ++i) {
        for (std::uint32_t j = 0; j < n; ++j) {
            for (std::uint32_t k = 0; k < n; ++k) {
                if (j == k) {
                    continue;
                }
                std::uint32_t diff = j > k ? j - k : k - j;
                p.rules.push_back(Rule({d(i, diff)}, {v(i, j), v(i + 1, k)}, {}));
            }
        }
    }
    // one value per difference, all-different across differences
    for (std::uint32_t i = 1; i < n; ++i) {
        for (std::uint32_t l = 1; l < n; ++l) {
            for (std::uint32_t m = l + 1; m < n; ++m) {
                p.rules.push_back(Rule({}, {d(i, l), d(i, m)}, {}));
            }
        }
    }
    for (std::uint32_t l = 1; l < n; ++l) {
        for (std::uint32_t i = 1; i < n; ++i) {
            for (std::uint32_t k = i + 1; k < n; ++k) {
                p.rules.push_back(Rule({}, {d(i, l), d(k, l)}, {}));
            }
        }
    }
    p.normalize();
    return p;
}

} // namespace lpsym
