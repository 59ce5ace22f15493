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
#include <lpsym/smodels.h>
#include <lpsym/symmetry.h>

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

namespace {

using namespace lpsym;

Program read_program(const std::string& path) {
    if (path.empty() || path == "-") {
        return parse_smodels(std::cin);
    }
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open input file: " + path);
    }
    return parse_smodels(in);
}

void write_output(const Program& p, const std::string& path) {
    if (path.empty() || path == "-") {
        write_smodels(p, std::cout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot open output file: " + path);
    }
    write_smodels(p, out);
}

TruncationK parse_k(const std::string& text) {
    if (text == "inf" || text == "INF" || text.empty()) {
        return std::nullopt;
    }
    try {
        unsigned long v = std::stoul(text);
        if (v == 0) {
            throw Error("--k must be at least 1 (or 'inf')");
        }
        return static_cast<std::uint32_t>(v);
    }
    catch (const std::invalid_argument&) {
        throw Error("--k expects a positive integer or 'inf'");
    }
}

struct VerifyOutcome {
    bool ok = true;
    std::string report;
};

// Oracle-backed checks on a small instance: enumerate answer sets with and
// without the constraints, verify survivors stay answer sets, every orbit
// keeps a representative, and existence is preserved.
VerifyOutcome run_oracle_checks(const Program& p, const std::vector<AtomPermutation>& gens,
                                const Program& p_sbc, std::size_t max_atoms) {
    VerifyOutcome out;
    std::ostringstream os;
    auto original = answer_sets(p, max_atoms);
    auto augmented = answer_sets(p_sbc, max_atoms);

    std::vector<AtomId> base = p.atoms();
    std::set<std::vector<AtomId>> survivors;
    for (const auto& m : augmented) {
        std::vector<AtomId> proj;
        for (AtomId a : m) {
            if (std::binary_search(base.begin(), base.end(), a)) {
                proj.push_back(a);
            }
        }
        survivors.insert(proj);
    }

    std::set<std::vector<AtomId>> original_set(original.begin(), original.end());
    bool sound = std::all_of(survivors.begin(), survivors.end(),
                             [&](const auto& m) { return original_set.count(m) != 0; });

    bool orbits_ok = true;
    for (const auto& orbit : orbit_of_set(original, gens)) {
        bool hit = std::any_of(orbit.begin(), orbit.end(),
                               [&](std::size_t i) { return survivors.count(original[i]) != 0; });
        if (!hit) {
            orbits_ok = false;
            break;
        }
    }
    bool existence = original.empty() == survivors.empty();

    double compr = original.empty()
                       ? 0.0
                       : 1.0 - static_cast<double>(survivors.size()) /
                                   static_cast<double>(original.size());
    os << original.size() << " models -> " << survivors.size() << " models, compression "
       << static_cast<int>(compr * 100.0 + 0.5) << "%\n";
    os << "survivors are answer sets: " << (sound ? "yes" : "NO") << "\n";
    os << "orbits preserved: " << (orbits_ok ? "yes" : "NO") << "\n";
    os << "existence preserved: " << (existence ? "yes" : "NO") << "\n";
    out.ok = sound && orbits_ok && existence;
    out.report = os.str();
    return out;
}

int run_preprocess(const std::string& input, const std::string& output, const std::string& k_text,
                   bool print_generators, bool stats, bool no_opt_facts, bool no_opt_unary,
                   std::uint64_t budget, bool verify, bool name_sbc_atoms,
                   const std::string& dump_graph_path, std::size_t verify_max_atoms) {
    using clock = std::chrono::steady_clock;
    auto t0 = clock::now();
    TruncationK k = parse_k(k_text);

    Program p = read_program(input);
    double t_parse = std::chrono::duration<double>(clock::now() - t0).count();

    BuildOptions opts;
    opts.opt_facts = !no_opt_facts;
    opts.opt_unary = !no_opt_unary;
    SearchLimits limits;
    limits.max_nodes = budget;

    if (!dump_graph_path.empty()) {
        std::ofstream dump(dump_graph_path, std::ios::binary);
        if (!dump) {
            throw Error("cannot open graph dump file: " + dump_graph_path);
        }
        dump << lpsym::dump_graph(build_graph(p, opts).graph);
    }

    DetectionResult detection;
    try {
        detection = detect_symmetries(p, opts, limits);
    }
    catch (const SearchBudgetExceeded& e) {
        std::cerr << "lpsym: warning: " << e.what() << "; passing the program through unchanged\n";
        write_output(p, output);
        return 2;
    }

    if (detection.stats.discarded != 0) {
        std::cerr << "lpsym: warning: " << detection.stats.discarded
                  << " projected generator(s) failed verification and were dropped\n";
    }
    if (print_generators) {
        std::size_t i = 0;
        for (const auto& g : detection.generators) {
            std::cerr << "lpsym: generator " << ++i << ": " << cycles_to_string(g, &p.symbols)
                      << "\n";
        }
    }

    t0 = clock::now();
    Program augmented = build_sbc(p, detection.generators, k, name_sbc_atoms);
    double t_sbc = std::chrono::duration<double>(clock::now() - t0).count();

    if (verify) {
        VerifyOutcome outcome = run_oracle_checks(p, detection.generators, augmented,
                                                  verify_max_atoms);
        std::cerr << outcome.report;
        if (!outcome.ok) {
            std::cerr << "lpsym: error: oracle checks failed; refusing to emit\n";
            return 1;
        }
    }

    t0 = clock::now();
    write_output(augmented, output);
    double t_emit = std::chrono::duration<double>(clock::now() - t0).count();

    if (stats) {
        const DetectionStats& s = detection.stats;
        std::cerr << "lpsym: atoms " << p.atoms().size() << ", rules " << p.rules.size() << "\n";
        std::cerr << "lpsym: graph " << s.graph_vertices << " vertices, " << s.graph_edges
                  << " edges\n";
        std::cerr << "lpsym: generators kept " << s.kept << " (found " << s.raw_generators
                  << ", identity " << s.identity_skipped << ", discarded " << s.discarded
                  << ")\n";
        std::cerr << "lpsym: sbc +" << (augmented.rules.size() - p.rules.size()) << " rules, +"
                  << (augmented.max_atom_id - p.max_atom_id) << " chain atoms (k="
                  << (k ? std::to_string(*k) : std::string("inf")) << ")\n";
        std::cerr << "lpsym: time parse " << t_parse << "s, build " << s.seconds_build
                  << "s, search " << s.seconds_search << "s, project " << s.seconds_project
                  << "s, reduce " << s.seconds_reduce << "s, sbc " << t_sbc << "s, emit "
                  << t_emit << "s\n";
    }
    return 0;
}

int run_verify_command(const std::string& input, std::size_t max_atoms) {
    Program p = read_program(input);
    DetectionResult detection = detect_symmetries(p);
    Program augmented = build_sbc(p, detection.generators, std::nullopt);
    VerifyOutcome outcome = run_oracle_checks(p, detection.generators, augmented, max_atoms);
    std::cout << "generators: " << detection.generators.size() << "\n" << outcome.report;
    return outcome.ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"symmetry detection and lex-leader symmetry breaking for ground logic programs "
                 "in smodels format"};
    app.require_subcommand(0, 1);

    std::string input;
    std::string output;
    std::string k_text = "inf";
    bool print_generators = false;
    bool stats = false;
    bool no_opt_facts = false;
    bool no_opt_unary = false;
    std::uint64_t budget = SearchLimits{}.max_nodes;
    bool verify = false;
    bool name_sbc_atoms = false;
    std::string dump_graph_path;
    std::size_t max_atoms = default_enumeration_guard;

    app.add_option("input", input, "input file ('-' or absent: stdin)");
    app.add_option("-o,--output", output, "output file (default: stdout)");
    app.add_option("--k", k_text, "truncate each constraint to its first K positions, or 'inf'")
        ->capture_default_str();
    app.add_flag("--print-generators", print_generators, "print generators in cycle notation");
    app.add_flag("--stats", stats, "print pipeline statistics to stderr");
    app.add_flag("--no-opt-facts", no_opt_facts, "disable the fact-colour optimization");
    app.add_flag("--no-opt-unary", no_opt_unary, "disable the unary-body optimization");
    app.add_option("--budget", budget, "automorphism search node budget")->capture_default_str();
    app.add_flag("--verify", verify, "run oracle checks before emitting (small inputs only)");
    app.add_flag("--name-sbc-atoms", name_sbc_atoms, "give chain atoms symbol-table entries");
    app.add_option("--dump-graph", dump_graph_path, "write the detection graph to a file");
    app.add_option("--max-atoms", max_atoms, "atom guard for oracle checks")
        ->capture_default_str();

    auto* gen = app.add_subcommand("gen", "generate a benchmark instance");
    std::string family;
    std::uint32_t size = 0;
    std::string gen_output;
    gen->add_option("family", family, "pigeon or allint")->required();
    gen->add_option("n", size, "instance size")->required();
    gen->add_option("-o,--output", gen_output, "output file (default: stdout)");

    auto* ver = app.add_subcommand("verify", "report oracle checks for an instance");
    std::string verify_input;
    std::size_t verify_atoms = default_enumeration_guard;
    ver->add_option("input", verify_input, "input file ('-' or absent: stdin)");
    ver->add_option("--max-atoms", verify_atoms, "atom guard for oracle checks")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            Program p;
            if (family == "pigeon") {
                p = pigeon(size);
            }
            else if (family == "allint") {
                p = allint(size);
            }
            else {
                throw Error("unknown benchmark family: " + family + " (use pigeon or allint)");
            }
            write_output(p, gen_output);
            return 0;
        }
        if (ver->parsed()) {
            return run_verify_command(verify_input, verify_atoms);
        }
        return run_preprocess(input, output, k_text, print_generators, stats, no_opt_facts,
                              no_opt_unary, budget, verify, name_sbc_atoms, dump_graph_path,
                              max_atoms);
    }
    catch (const UnsupportedRuleType& e) {
        std::cerr << "lpsym: error: " << e.what() << "\n";
        return 1;
    }
    catch (const Error& e) {
        std::cerr << "lpsym: error: " << e.what() << "\n";
        return 1;
    }
    catch (const std::exception& e) {
        std::cerr << "lpsym: unexpected error: " << e.what() << "\n";
        return 1;
    }
}
