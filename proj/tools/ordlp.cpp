/*
 *  Copyright (C) 2026  The ordlp authors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 *
 */

#include "ordlp/oracles.hpp"
#include "ordlp/parser.hpp"
#include "ordlp/pipeline.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

using namespace ordlp;

namespace {

enum Exit { kSuccess = 0, kNone = 1, kInput = 2, kResource = 3 };

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// Label of rule i in witness output.
std::string label(const Program& p, std::size_t i, std::size_t source_size) {
    const Rule& r = p[i];
    if (r.name) return to_string(*r.name);
    if (i < source_size) return "#" + std::to_string(i + 1);
    if (r.head && r.head->negated) {
        const auto& a = r.head->atom.args;
        return "as(" + to_string(a[1]) + "," + to_string(a[0]) + ")";
    }
    if (r.pbody.size() == 2) {
        const auto& x = r.pbody[0].atom.args;
        const auto& y = r.pbody[1].atom.args;
        return "t(" + to_string(x[0]) + "," + to_string(x[1]) + "," + to_string(y[1]) + ")";
    }
    return "#" + std::to_string(i + 1);
}

int run_compile(const std::string& in, Strategy s, Dialect d, bool tag, const std::string& out) {
    LoadedProgram prog = load_file(in);
    Compiled c = compile(prog.ground, s, tag);
    std::string text = emit(c.program, d, c.emit);
    if (out.empty() || out == "-") {
        std::cout << text;
    } else {
        std::ofstream o(out);
        if (!o) throw ValidationError("cannot write " + out);
        o << text;
    }
    return kSuccess;
}

int run_solve(const std::string& in, const std::string& strategy, bool nice, std::size_t max_models, bool tag) {
    LoadedProgram prog = load_file(in);
    std::optional<Strategy> s;
    if (!strategy.empty()) s = parse_strategy(strategy);
    SearchOptions opts;
    opts.max_models = max_models;
    auto sets = solve(prog, s, nice, tag, opts);
    for (const auto& x : sets) std::cout << display(x, prog.map) << '\n';
    return sets.empty() ? kNone : kSuccess;
}

int run_check(const std::string& in, Criterion c, const std::string& candidate_file) {
    LoadedProgram prog = load_file(in);
    LiteralSet x = flatten_literals(parse_literal_set(slurp(candidate_file), candidate_file));
    try {
        if (c == Criterion::Dynamic) {
            auto w = check_dynamic_preserving(prog.ground, x);
            if (!w) {
                std::cout << "rejected\n";
                return kNone;
            }
            Program ta = ta_closure(prog.ground).rules;
            std::cout << "accepted\n<";
            for (std::size_t k = 0; k < w->ordering.size(); ++k)
                std::cout << (k ? ", " : "") << label(ta, w->ordering[k], prog.ground.rules.size());
            std::cout << ">\n";
            return kSuccess;
        }
        StaticSplit split = split_static(prog.ground);
        if (c == Criterion::BEOriginal) {
            if (!is_answer_set(split.rules, x)) throw NotAnswerSetError("candidate is not an answer set");
            bool ok = be_preferred(split.rules, split.order, x);
            std::cout << (ok ? "accepted\n" : "rejected\n");
            return ok ? kSuccess : kNone;
        }
        std::optional<EnumerationWitness> w;
        if (c == Criterion::Static) w = check_static_preserving(split.rules, split.order, x);
        if (c == Criterion::WZL) w = check_wzl_preserving(split.rules, split.order, x);
        if (c == Criterion::BEEnum) w = check_be_preserving(split.rules, split.order, x);
        if (!w) {
            std::cout << "rejected\n";
            return kNone;
        }
        std::cout << "accepted\n<";
        for (std::size_t k = 0; k < w->ordering.size(); ++k)
            std::cout << (k ? ", " : "") << label(split.rules, w->ordering[k], split.rules.size());
        std::cout << ">\n";
        return kSuccess;
    } catch (const NotAnswerSetError& e) {
        std::cout << "rejected: " << e.what() << '\n';
        return kNone;
    }
}

std::string join(const std::vector<LiteralSet>& sets, const FlatteningMap& map) {
    if (sets.empty()) return "-";
    std::string out;
    for (const auto& x : sets) out += (out.empty() ? "" : " ") + display(x, map);
    return out;
}

int run_compare(const std::string& in, bool tag) {
    LoadedProgram prog = load_file(in);
    std::vector<LiteralSet> standard = solve(prog, std::nullopt, true, tag);
    std::cout << std::left << std::setw(10) << "AS" << join(standard, prog.map) << '\n';
    for (Strategy s : all_strategies()) {
        std::cout << std::setw(10) << to_string(s);
        try {
            std::cout << join(solve(prog, s, true, tag), prog.map) << '\n';
        } catch (const ValidationError& e) {
            std::cout << "n/a (" << e.what() << ")\n";
        }
    }
    if (!is_statically_ordered(prog.ground)) return kSuccess;

    StaticSplit split = split_static(prog.ground);
    std::cout << "\ncandidate: dst-static wzl be-enum be-original\n";
    bool chain = true;
    for (const auto& x : answer_sets_search(split.rules)) {
        if (x.is_inconsistent()) continue;
        bool dst = check_static_preserving(split.rules, split.order, x).has_value();
        bool wzl = check_wzl_preserving(split.rules, split.order, x).has_value();
        bool enm = check_be_preserving(split.rules, split.order, x).has_value();
        bool be = be_preferred(split.rules, split.order, x);
        chain = chain && (!dst || wzl) && (!wzl || be);
        auto yn = [](bool b) { return b ? "yes" : "no"; };
        std::cout << display(nice_filter(x, prog.language), prog.map) << ": " << yn(dst) << ' ' << yn(wzl) << ' '
                  << yn(enm) << ' ' << yn(be) << '\n';
    }
    std::cout << "hierarchy dst-static <= wzl <= be-original <= AS: " << (chain ? "holds" : "violated") << '\n';
    return kSuccess;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Compiler and checker for ordered logic programs"};
    app.require_subcommand(1);

    std::string input, strategy, dialect = "intermediate", output, criterion, candidate;
    bool tag = false, nice = false;
    std::size_t max_models = 0;

    std::vector<std::string> strategies;
    for (Strategy s : all_strategies()) strategies.push_back(to_string(s));

    auto* c = app.add_subcommand("compile", "Translate a program into a plain extended logic program");
    c->add_option("input", input, "Input .lp or .vlp file")->required();
    c->add_option("--strategy", strategy, "Translation")->required()->check(CLI::IsMember(strategies));
    c->add_option("--dialect", dialect, "Output dialect")->check(CLI::IsMember({"intermediate", "dlv", "smodels"}));
    c->add_flag("--tag-all", tag, "Name every unnamed rule");
    c->add_option("-o", output, "Output file (default stdout)");

    auto* s = app.add_subcommand("solve", "Print answer sets, one per line");
    s->add_option("input", input, "Input .lp or .vlp file")->required();
    s->add_option("--strategy", strategy, "Translation (default: none)")->check(CLI::IsMember(strategies));
    s->add_flag("--nice", nice, "Keep only literals of the source language");
    s->add_option("--max-models", max_models, "Stop after N answer sets (0: all)");
    s->add_flag("--tag-all", tag, "Name every unnamed rule");

    auto* k = app.add_subcommand("check", "Check a candidate answer set against an order criterion");
    k->add_option("input", input, "Input .lp or .vlp file")->required();
    k->add_option("--criterion", criterion, "Criterion")
        ->required()
        ->check(CLI::IsMember({"dst-static", "dst-dynamic", "wzl", "be-enum", "be-original"}));
    k->add_option("--candidate", candidate, "File with the candidate literals")->required();

    auto* m = app.add_subcommand("compare", "Answer sets per strategy with hierarchy annotations");
    m->add_option("input", input, "Input .lp or .vlp file")->required();
    m->add_flag("--tag-all", tag, "Name every unnamed rule");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kSuccess : kInput;
    }

    try {
        if (c->parsed()) return run_compile(input, *parse_strategy(strategy), *parse_dialect(dialect), tag, output);
        if (s->parsed()) return run_solve(input, strategy, nice, max_models, tag);
        if (k->parsed()) return run_check(input, *parse_criterion(criterion), candidate);
        if (m->parsed()) return run_compare(input, tag);
    } catch (const ResourceLimitError& e) {
        std::cerr << "ordlp: " << e.what() << '\n';
        return kResource;
    } catch (const Error& e) {
        std::cerr << "ordlp: " << e.what() << '\n';
        return kInput;
    }
    return kInput;
}
