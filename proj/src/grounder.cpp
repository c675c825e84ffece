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

#include "ordlp/grounder.hpp"

#include <algorithm>
#include <functional>

namespace ordlp {

namespace {

void constants_of(const Term& t, std::set<Term>& out) {
    if (t.kind == Term::Kind::Constant) out.insert(t);
    for (const auto& a : t.args) constants_of(a, out);
}

void variables_of(const Term& t, std::vector<std::string>& out) {
    if (t.is_variable()) {
        if (std::find(out.begin(), out.end(), t.symbol) == out.end()) out.push_back(t.symbol);
        return;
    }
    for (const auto& a : t.args) variables_of(a, out);
}

template <class F>
void for_each_term(const Rule& r, F f) {
    if (r.name) f(*r.name);
    auto lit = [&](const Literal& l) {
        for (const auto& a : l.atom.args) f(a);
    };
    if (r.head) lit(*r.head);
    for (const auto& l : r.pbody) lit(l);
    for (const auto& l : r.nbody) lit(l);
}

std::vector<std::string> rule_variables(const Rule& r) {
    std::vector<std::string> out;
    for_each_term(r, [&](const Term& t) { variables_of(t, out); });
    return out;
}

Term substitute(const Term& t, const std::map<std::string, Term>& s) {
    if (t.is_variable()) {
        auto it = s.find(t.symbol);
        return it == s.end() ? t : it->second;
    }
    if (t.args.empty()) return t;
    Term out = t;
    for (auto& a : out.args) a = substitute(a, s);
    return out;
}

Literal substitute(const Literal& l, const std::map<std::string, Term>& s) {
    Literal out = l;
    for (auto& a : out.atom.args) a = substitute(a, s);
    return out;
}

Rule substitute(const Rule& r, const std::map<std::string, Term>& s) {
    Rule out;
    if (r.name) out.name = substitute(*r.name, s);
    if (r.head) out.head = substitute(*r.head, s);
    for (const auto& l : r.pbody) out.pbody.push_back(substitute(l, s));
    for (const auto& l : r.nbody) out.nbody.push_back(substitute(l, s));
    return out;
}

// c^k, saturating at limit + 1.
std::size_t instances(std::size_t c, std::size_t k, std::size_t limit) {
    std::size_t n = 1;
    for (std::size_t i = 0; i < k; ++i) {
        n *= c;
        if (n > limit) return limit + 1;
    }
    return n;
}

void check_names(const OrderedProgram& p) {
    std::set<Term> seen;
    for (const auto& r : p.rules)
        if (r.name && !seen.insert(*r.name).second)
            throw GroundingError("rule name " + to_string(*r.name) + " is not unique after instantiation");
}

} // namespace

std::set<Term> herbrand_constants(const OrderedProgram& p) {
    std::set<Term> out;
    for (const auto& r : p.rules) for_each_term(r, [&](const Term& t) { constants_of(t, out); });
    return out;
}

OrderedProgram instantiate(const OrderedProgram& p, const GroundingConfig& cfg) {
    if (cfg.max_instantiations == 0) throw ValidationError("max_instantiations must be positive");
    std::set<Term> universe_set = herbrand_constants(p);
    std::vector<Term> universe(universe_set.begin(), universe_set.end());

    std::size_t total = 0;
    for (const auto& r : p.rules) {
        total += instances(universe.size(), rule_variables(r).size(), cfg.max_instantiations);
        if (total > cfg.max_instantiations)
            throw ResourceLimitError("grounding exceeds " + std::to_string(cfg.max_instantiations) +
                                     " rule instances");
    }

    OrderedProgram out;
    out.rules.reserve(total);
    for (const auto& r : p.rules) {
        std::vector<std::string> vars = rule_variables(r);
        if (vars.empty()) {
            out.rules.push_back(r);
            continue;
        }
        std::map<std::string, Term> subst;
        std::function<void(std::size_t)> expand = [&](std::size_t i) {
            if (i == vars.size()) {
                out.rules.push_back(substitute(r, subst));
                return;
            }
            for (const auto& c : universe) {
                subst[vars[i]] = c;
                expand(i + 1);
            }
        };
        expand(0);
    }
    check_names(out);
    return out;
}

Term FlatteningMap::restore(const Term& t) const {
    if (t.kind == Term::Kind::Constant) {
        auto it = original.find(t.symbol);
        if (it != original.end()) return it->second;
        return t;
    }
    Term out = t;
    for (auto& a : out.args) a = restore(a);
    return out;
}

Literal FlatteningMap::restore(const Literal& l) const {
    Literal out = l;
    for (auto& a : out.atom.args) a = restore(a);
    return out;
}

LiteralSet FlatteningMap::restore(const LiteralSet& x) const {
    if (x.is_inconsistent()) return x;
    std::set<Literal> out;
    for (const auto& l : x.literals()) out.insert(restore(l));
    return LiteralSet(std::move(out));
}

namespace {

class Flattener {
public:
    explicit Flattener(const OrderedProgram& p) : plain_(herbrand_constants(p)) {}

    Term flat(const Term& t) {
        if (t.is_variable()) throw GroundingError("cannot flatten non-ground term " + to_string(t));
        if (t.args.empty()) return t;
        std::string s = t.symbol;
        for (const auto& a : t.args) s += "_" + flat(a).symbol;
        if (plain_.count(Term::constant(s)))
            throw GroundingError("flattened term " + to_string(t) + " collides with constant " + s);
        auto [it, fresh] = map_.original.emplace(s, t);
        if (!fresh && it->second != t)
            throw GroundingError("terms " + to_string(it->second) + " and " + to_string(t) +
                                 " both flatten to " + s);
        return Term::constant(s);
    }

    Literal flat(const Literal& l) {
        Literal out = l;
        for (auto& a : out.atom.args) a = flat(a);
        return out;
    }

    FlatteningMap take() { return std::move(map_); }

private:
    std::set<Term> plain_;
    FlatteningMap map_;
};

} // namespace

Flattened flatten_terms(const OrderedProgram& p) {
    Flattener f(p);
    Flattened out;
    for (const auto& r : p.rules) {
        Rule q;
        if (r.name) q.name = f.flat(*r.name);
        if (r.head) q.head = f.flat(*r.head);
        for (const auto& l : r.pbody) q.pbody.push_back(f.flat(l));
        for (const auto& l : r.nbody) q.nbody.push_back(f.flat(l));
        out.program.rules.push_back(std::move(q));
    }
    out.map = f.take();
    check_names(out.program);
    return out;
}

Flattened ground(const OrderedProgram& p, const GroundingConfig& cfg) {
    OrderedProgram g = instantiate(p, cfg);
    if (!cfg.flatten) return Flattened{std::move(g), {}};
    return flatten_terms(g);
}

} // namespace ordlp
