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
#include <lpsym/smodels.h>

#include <lpsym/errors.h>

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

namespace lpsym {

namespace {

class TokenReader {
public:
    explicit TokenReader(std::istream& in) : in_(in) {}

    long long next_int(const char* what) {
        long long v;
        if (!(in_ >> v)) {
            throw MalformedFile(std::string("unexpected end of input while reading ") + what);
        }
        return v;
    }

    AtomId next_atom(const char* what) {
        long long v = next_int(what);
        if (v <= 0) {
            throw MalformedFile(std::string("non-positive atom id in ") + what);
        }
        return static_cast<AtomId>(v);
    }

    std::size_t next_count(const char* what) {
        long long v = next_int(what);
        if (v < 0) {
            throw MalformedFile(std::string("negative count in ") + what);
        }
        return static_cast<std::size_t>(v);
    }

    /// Remainder of the current line with surrounding whitespace stripped.
    std::string rest_of_line() {
        std::string s;
        std::getline(in_, s);
        std::size_t b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos) {
            return "";
        }
        std::size_t e = s.find_last_not_of(" \t\r");
        return s.substr(b, e - b + 1);
    }

    void expect_line(const char* text) {
        std::string s;
        if (!(in_ >> s) || s != text) {
            throw MalformedFile(std::string("expected '") + text + "' section marker");
        }
    }

private:
    std::istream& in_;
};

const char* rule_type_name(long long t) {
    switch (t) {
        case 2: return "cardinality";
        case 3: return "choice";
        case 5: return "weight";
        case 6: return "minimize";
        default: return "unknown";
    }
}

Rule read_body_into(TokenReader& tok, std::vector<AtomId> head) {
    std::size_t n_lits = tok.next_count("body size");
    std::size_t n_neg = tok.next_count("negative body size");
    if (n_neg > n_lits) {
        throw MalformedFile("negative body larger than body");
    }
    std::vector<AtomId> neg, pos;
    for (std::size_t i = 0; i < n_neg; ++i) {
        neg.push_back(tok.next_atom("negative body"));
    }
    for (std::size_t i = 0; i < n_lits - n_neg; ++i) {
        pos.push_back(tok.next_atom("positive body"));
    }
    return Rule(std::move(head), std::move(pos), std::move(neg));
}

} // namespace

Program parse_smodels(std::istream& in) {
    TokenReader tok(in);
    Program p;

    for (;;) {
        long long type = tok.next_int("rule type");
        if (type == 0) {
            break;
        }
        if (type == 1) {
            AtomId h = tok.next_atom("rule head");
            p.rules.push_back(read_body_into(tok, {h}));
        }
        else if (type == 8) {
            std::size_t n_heads = tok.next_count("head count");
            if (n_heads == 0) {
                throw MalformedFile("disjunctive rule with empty head list");
            }
            std::vector<AtomId> head;
            for (std::size_t i = 0; i < n_heads; ++i) {
                head.push_back(tok.next_atom("rule head"));
            }
            p.rules.push_back(read_body_into(tok, std::move(head)));
        }
        else if (type == 2 || type == 3 || type == 5 || type == 6) {
            std::ostringstream os;
            os << "unsupported rule type " << type << " (" << rule_type_name(type) << ")";
            throw UnsupportedRuleType(static_cast<int>(type), os.str());
        }
        else {
            std::ostringstream os;
            os << "unknown rule type " << type;
            throw MalformedFile(os.str());
        }
    }

    for (;;) {
        long long id = tok.next_int("symbol table");
        if (id == 0) {
            break;
        }
        if (id < 0) {
            throw MalformedFile("non-positive atom id in symbol table");
        }
        std::string name = tok.rest_of_line();
        if (name.empty()) {
            throw MalformedFile("symbol table entry without a name");
        }
        p.symbols[static_cast<AtomId>(id)] = name;
    }

    tok.expect_line("B+");
    for (;;) {
        long long id = tok.next_int("compute-positive section");
        if (id == 0) {
            break;
        }
        if (id < 0) {
            throw MalformedFile("non-positive atom id in compute-positive section");
        }
        p.compute_pos.push_back(static_cast<AtomId>(id));
    }
    tok.expect_line("B-");
    for (;;) {
        long long id = tok.next_int("compute-negative section");
        if (id == 0) {
            break;
        }
        if (id < 0) {
            throw MalformedFile("non-positive atom id in compute-negative section");
        }
        p.compute_neg.push_back(static_cast<AtomId>(id));
    }

    long long models = tok.next_int("model count");
    if (models < 0) {
        throw MalformedFile("negative model count");
    }
    p.models = static_cast<std::uint32_t>(models);

    // Recognize the false marker used for integrity constraints: no symbol
    // entry, listed in B-, and occurring only as the single head atom of
    // rules. All rules headed by such an atom become head = {} rules.
    std::set<AtomId> neg_set(p.compute_neg.begin(), p.compute_neg.end());
    std::set<AtomId> candidates;
    for (AtomId a : neg_set) {
        if (!p.symbols.count(a)) {
            candidates.insert(a);
        }
    }
    for (const auto& r : p.rules) {
        for (AtomId a : r.body_pos) {
            candidates.erase(a);
        }
        for (AtomId a : r.body_neg) {
            candidates.erase(a);
        }
        if (r.head.size() != 1) {
            for (AtomId a : r.head) {
                candidates.erase(a);
            }
        }
    }
    std::set<AtomId> markers;
    for (auto& r : p.rules) {
        if (r.head.size() == 1 && candidates.count(r.head[0])) {
            markers.insert(r.head[0]);
            r.head.clear();
        }
    }
    if (!markers.empty()) {
        p.false_atom = *markers.begin();
        std::erase_if(p.compute_neg, [&](AtomId a) { return markers.count(a) != 0; });
    }

    p.normalize();
    return p;
}

Program parse_smodels(const std::string& text) {
    std::istringstream in(text);
    return parse_smodels(in);
}

void write_smodels(const Program& p, std::ostream& out) {
    Program norm = p;
    norm.normalize();

    bool has_constraint = std::any_of(norm.rules.begin(), norm.rules.end(),
                                      [](const Rule& r) { return r.is_constraint(); });
    std::optional<AtomId> marker = norm.false_atom;
    if (has_constraint && !marker) {
        marker = norm.max_atom_id + 1; // fresh hidden atom
    }

    auto write_body = [&out](const Rule& r) {
        out << ' ' << r.body_size() << ' ' << r.body_neg.size();
        for (AtomId a : r.body_neg) {
            out << ' ' << a;
        }
        for (AtomId a : r.body_pos) {
            out << ' ' << a;
        }
        out << '\n';
    };
    for (const auto& r : norm.rules) {
        if (r.head.size() >= 2) {
            out << 8 << ' ' << r.head.size();
            for (AtomId a : r.head) {
                out << ' ' << a;
            }
        }
        else {
            out << 1 << ' ' << (r.head.empty() ? *marker : r.head[0]);
        }
        write_body(r);
    }
    out << 0 << '\n';

    for (const auto& [atom, name] : norm.symbols) {
        out << atom << ' ' << name << '\n';
    }
    out << 0 << '\n';

    out << "B+" << '\n';
    for (AtomId a : norm.compute_pos) {
        out << a << '\n';
    }
    out << 0 << '\n';
    out << "B-" << '\n';
    std::vector<AtomId> neg = norm.compute_neg;
    if (has_constraint) {
        neg.push_back(*marker);
        std::sort(neg.begin(), neg.end());
    }
    for (AtomId a : neg) {
        out << a << '\n';
    }
    out << 0 << '\n';
    out << norm.models << '\n';
}

std::string write_smodels(const Program& p) {
    std::ostringstream os;
    write_smodels(p, os);
    return os.str();
}

} // namespace lpsym
