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

#include "ordlp/pipeline.hpp"

#include "ordlp/parser.hpp"

#include <fstream>
#include <sstream>

namespace ordlp {

LoadedProgram load_program(const std::string& text, const std::string& origin, bool allow_variables,
                           const GroundingConfig& cfg) {
    LoadedProgram out;
    out.source = parse_program(SourceProgram{text, origin});
    if (!allow_variables)
        for (const auto& r : out.source.rules)
            if (!r.is_ground())
                throw ValidationError(origin + ": variables need a .vlp input file");
    Flattened g = ground(out.source, cfg);
    out.ground = std::move(g.program);
    out.map = std::move(g.map);
    out.language = user_language(out.source);
    return out;
}

LoadedProgram load_file(const std::string& path, const GroundingConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read " + path);
    std::ostringstream text;
    text << in.rdbuf();
    bool vlp = path.size() >= 4 && path.compare(path.size() - 4, 4, ".vlp") == 0;
    return load_program(text.str(), path, vlp, cfg);
}

Compiled compile(const OrderedProgram& ground, Strategy s, bool auto_name) {
    OrderedProgram p = auto_name ? tag_all(ground) : ground;
    Compiled out{s, transform(p, s), {}};
    out.emit.names = p.names();
    out.emit.constrain_all_atoms = true;
    out.emit.show = user_language(p);
    return out;
}

std::vector<LiteralSet> solve(const LoadedProgram& in, std::optional<Strategy> s, bool nice, bool auto_name,
                              const SearchOptions& opts) {
    Program p = s ? compile(in.ground, *s, auto_name).program : in.ground.rules;
    std::vector<LiteralSet> sets = answer_sets_search(p, opts);
    if (!nice) return sets;
    std::vector<LiteralSet> out;
    for (const auto& x : sets) out.push_back(nice_filter(x, in.language));
    return out;
}

namespace {
Term flatten_term(const Term& t) {
    if (t.args.empty()) return t;
    std::string s = t.symbol;
    for (const auto& a : t.args) s += "_" + flatten_term(a).symbol;
    return Term::constant(s);
}
} // namespace

Literal flatten_literal(const Literal& l) {
    Literal out = l;
    for (auto& a : out.atom.args) a = flatten_term(a);
    return out;
}

LiteralSet flatten_literals(const LiteralSet& x) {
    if (x.is_inconsistent()) return x;
    std::set<Literal> out;
    for (const auto& l : x.literals()) out.insert(flatten_literal(l));
    return LiteralSet(std::move(out));
}

std::string display(const LiteralSet& x, const FlatteningMap& map) { return to_string(map.restore(x)); }

} // namespace ordlp
