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
#include <lpsym/enumerate.h>

#include <lpsym/errors.h>

#include <algorithm>
#include <set>
#include <unordered_map>

namespace lpsym {

namespace {

bool contains(const std::vector<AtomId>& sorted, AtomId a) {
    return std::binary_search(sorted.begin(), sorted.end(), a);
}

/// Classical satisfaction of one rule by a set: body satisfied implies some
/// head atom in the set (an empty head can never be satisfied).
bool rule_satisfied(const Rule& r, const std::vector<AtomId>& m) {
    bool body = std::all_of(r.body_pos.begin(), r.body_pos.end(),
                            [&](AtomId a) { return contains(m, a); }) &&
                std::none_of(r.body_neg.begin(), r.body_neg.end(),
                             [&](AtomId a) { return contains(m, a); });
    if (!body) {
        return true;
    }
    return std::any_of(r.head.begin(), r.head.end(), [&](AtomId a) { return contains(m, a); });
}

bool is_model(const Program& p, const std::vector<AtomId>& m) {
    return std::all_of(p.rules.begin(), p.rules.end(),
                       [&](const Rule& r) { return rule_satisfied(r, m); });
}

} // namespace

Program reduct(const Program& p, const std::vector<AtomId>& m) {
    Program out = p;
    out.rules.clear();
    for (const auto& r : p.rules) {
        bool blocked = std::any_of(r.body_neg.begin(), r.body_neg.end(),
                                   [&](AtomId a) { return contains(m, a); });
        if (!blocked) {
            out.rules.push_back(Rule(r.head, r.body_pos, {}));
        }
    }
    out.normalize();
    return out;
}

namespace {

/// Exact minimality check: searches for a model of the (negation-free) reduct
/// that is a proper subset of m. Grows candidate models by forward chaining
/// from the empty set, branching only where a fired rule offers several head
/// atoms inside m; every minimal model below m is reachable this way, so m is
/// minimal iff every branch either dies or reproduces m itself.
class MinimalityCheck {
public:
    MinimalityCheck(const Program& red, const std::vector<AtomId>& m) {
        for (std::size_t i = 0; i < m.size(); ++i) {
            index_.emplace(m[i], i);
        }
        for (const auto& r : red.rules) {
            // rules with body atoms outside m can never fire below m
            bool in = std::all_of(r.body_pos.begin(), r.body_pos.end(),
                                  [&](AtomId a) { return index_.count(a) != 0; });
            if (!in) {
                continue;
            }
            CompiledRule cr;
            for (AtomId a : r.body_pos) {
                cr.body.push_back(index_.at(a));
            }
            for (AtomId a : r.head) {
                auto it = index_.find(a);
                if (it != index_.end()) {
                    cr.head.push_back(it->second);
                }
            }
            rules_.push_back(std::move(cr));
        }
        size_ = m.size();
    }

    bool has_proper_submodel() {
        std::vector<bool> in(size_, false);
        return grow(in, 0);
    }

private:
    struct CompiledRule {
        std::vector<std::size_t> body, head;
    };

    bool fires(const CompiledRule& r, const std::vector<bool>& in) const {
        return std::all_of(r.body.begin(), r.body.end(), [&](std::size_t i) { return in[i]; }) &&
               std::none_of(r.head.begin(), r.head.end(), [&](std::size_t i) { return in[i]; });
    }

    bool grow(std::vector<bool>& in, std::size_t members) {
        if (++steps_ > step_budget_) {
            throw TooLarge("minimality check beyond the search budget");
        }
        for (;;) {
            const CompiledRule* choice = nullptr;
            bool changed = false;
            for (const auto& r : rules_) {
                if (!fires(r, in)) {
                    continue;
                }
                if (r.head.empty()) {
                    return false; // a constraint fires below every extension
                }
                if (r.head.size() == 1) {
                    in[r.head[0]] = true;
                    ++members;
                    changed = true;
                }
                else if (!choice) {
                    choice = &r;
                }
            }
            if (changed) {
                continue; // forced atoms may have defused or armed other rules
            }
            if (!choice) {
                return members < size_; // fixpoint model; proper iff smaller
            }
            for (std::size_t h : choice->head) {
                std::vector<bool> copy = in;
                copy[h] = true;
                if (grow(copy, members + 1)) {
                    return true;
                }
            }
            return false;
        }
    }

    std::map<AtomId, std::size_t> index_;
    std::vector<CompiledRule> rules_;
    std::size_t size_ = 0;
    std::uint64_t steps_ = 0;
    static constexpr std::uint64_t step_budget_ = 1u << 22;
};

} // namespace

bool is_answer_set(const Program& p, const std::vector<AtomId>& m, std::size_t max_atoms) {
    if (p.atoms().size() > max_atoms) {
        throw TooLarge("answer-set check beyond the enumeration guard");
    }
    std::vector<AtomId> cand = m;
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

    Program red = reduct(p, cand);
    if (!is_model(red, cand)) {
        return false;
    }
    // Atoms of the candidate that no reduct rule can derive make it
    // non-minimal right away (dropping one leaves a model).
    std::set<AtomId> heads;
    for (const auto& r : red.rules) {
        heads.insert(r.head.begin(), r.head.end());
    }
    for (AtomId a : cand) {
        if (!heads.count(a)) {
            return false;
        }
    }
    MinimalityCheck check(red, cand);
    return !check.has_proper_submodel();
}

namespace {

/// DFS over truth assignments in ascending atom order. A rule is checked as
/// soon as its last atom is assigned; a true atom is checked against its
/// possible supports as soon as all their body atoms are assigned. Both checks
/// only prune, every surviving leaf still goes through the full reduct +
/// minimality test.
class Enumerator {
public:
    explicit Enumerator(const Program& p) : program_(p), atoms_(p.atoms()) {
        std::unordered_map<AtomId, std::size_t> index;
        for (std::size_t i = 0; i < atoms_.size(); ++i) {
            index.emplace(atoms_[i], i);
        }
        rule_check_at_.resize(atoms_.size());
        support_check_at_.resize(atoms_.size());
        rules_.reserve(p.rules.size());
        for (const auto& r : p.rules) {
            CompiledRule cr;
            std::size_t last = 0;
            auto take = [&](const std::vector<AtomId>& v, std::vector<std::size_t>& outv) {
                for (AtomId a : v) {
                    std::size_t i = index.at(a);
                    outv.push_back(i);
                    last = std::max(last, i);
                }
            };
            take(r.head, cr.head);
            take(r.body_pos, cr.pos);
            take(r.body_neg, cr.neg);
            rules_.push_back(cr);
            if (!atoms_.empty()) {
                rule_check_at_[last].push_back(rules_.size() - 1);
            }
        }
        // supports[i]: rules with atom i in the head; an atom's support check
        // fires once all those rules' bodies are decided
        supports_.resize(atoms_.size());
        for (std::size_t ri = 0; ri < rules_.size(); ++ri) {
            for (std::size_t h : rules_[ri].head) {
                supports_[h].push_back(ri);
            }
        }
        for (std::size_t i = 0; i < atoms_.size(); ++i) {
            std::size_t last = i;
            for (std::size_t ri : supports_[i]) {
                for (std::size_t b : rules_[ri].pos) {
                    last = std::max(last, b);
                }
                for (std::size_t b : rules_[ri].neg) {
                    last = std::max(last, b);
                }
            }
            support_check_at_[last].push_back(i);
        }
    }

    std::vector<std::vector<AtomId>> run(std::size_t max_atoms) {
        if (atoms_.size() > max_atoms) {
            throw TooLarge("answer-set enumeration beyond the guard");
        }
        truth_.assign(atoms_.size(), false);
        results_.clear();
        // a rule over no atoms is an unconditionally violated constraint
        for (const auto& r : rules_) {
            if (r.head.empty() && r.pos.empty() && r.neg.empty()) {
                return {};
            }
        }
        descend(0);
        std::sort(results_.begin(), results_.end());
        return results_;
    }

private:
    struct CompiledRule {
        std::vector<std::size_t> head, pos, neg;
    };

    bool rule_violated(const CompiledRule& r) const {
        for (std::size_t i : r.pos) {
            if (!truth_[i]) {
                return false;
            }
        }
        for (std::size_t i : r.neg) {
            if (truth_[i]) {
                return false;
            }
        }
        for (std::size_t i : r.head) {
            if (truth_[i]) {
                return false;
            }
        }
        return true;
    }

    bool body_holds(const CompiledRule& r) const {
        for (std::size_t i : r.pos) {
            if (!truth_[i]) {
                return false;
            }
        }
        for (std::size_t i : r.neg) {
            if (truth_[i]) {
                return false;
            }
        }
        return true;
    }

    bool prune_after(std::size_t i) const {
        for (std::size_t ri : rule_check_at_[i]) {
            if (rule_violated(rules_[ri])) {
                return true;
            }
        }
        for (std::size_t atom : support_check_at_[i]) {
            if (!truth_[atom]) {
                continue;
            }
            bool supported = false;
            for (std::size_t ri : supports_[atom]) {
                if (body_holds(rules_[ri])) {
                    supported = true;
                    break;
                }
            }
            if (!supported) {
                return true;
            }
        }
        return false;
    }

    void descend(std::size_t i) {
        if (i == atoms_.size()) {
            std::vector<AtomId> m;
            for (std::size_t j = 0; j < atoms_.size(); ++j) {
                if (truth_[j]) {
                    m.push_back(atoms_[j]);
                }
            }
            if (is_answer_set(program_, m, atoms_.size())) {
                results_.push_back(std::move(m));
            }
            return;
        }
        for (bool value : {false, true}) {
            truth_[i] = value;
            if (!prune_after(i)) {
                descend(i + 1);
            }
        }
        truth_[i] = false;
    }

    const Program& program_;
    std::vector<AtomId> atoms_;
    std::vector<CompiledRule> rules_;
    std::vector<std::vector<std::size_t>> rule_check_at_;    // by last atom index
    std::vector<std::vector<std::size_t>> support_check_at_; // by last deciding index
    std::vector<std::vector<std::size_t>> supports_;         // atom index -> head rules
    std::vector<bool> truth_;
    std::vector<std::vector<AtomId>> results_;
};

} // namespace

std::vector<std::vector<AtomId>> answer_sets(const Program& p, std::size_t max_atoms) {
    Enumerator e(p);
    return e.run(max_atoms);
}

CompressionReport compression(const Program& p, const Program& p_sbc, std::size_t max_atoms) {
    CompressionReport rep;
    auto original = answer_sets(p, max_atoms);
    rep.total_models = original.size();

    std::vector<AtomId> base = p.atoms();
    std::set<std::vector<AtomId>> projected;
    for (const auto& m : answer_sets(p_sbc, max_atoms)) {
        std::vector<AtomId> proj;
        for (AtomId a : m) {
            if (contains(base, a)) {
                proj.push_back(a);
            }
        }
        projected.insert(proj);
    }
    rep.surviving_models = projected.size();
    rep.compression =
        rep.total_models == 0
            ? 0.0
            : 1.0 - static_cast<double>(rep.surviving_models) / static_cast<double>(rep.total_models);
    return rep;
}

} // namespace lpsym
