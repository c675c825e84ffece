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

#include "ordlp/emit.hpp"

#include "ordlp/transforms.hpp"

#include <map>
#include <sstream>

namespace ordlp {

std::string to_string(Dialect d) {
    switch (d) {
    case Dialect::Intermediate: return "intermediate";
    case Dialect::Dlv: return "dlv";
    case Dialect::Smodels: return "smodels";
    }
    return "?";
}

std::optional<Dialect> parse_dialect(std::string_view s) {
    for (Dialect d : {Dialect::Intermediate, Dialect::Dlv, Dialect::Smodels})
        if (to_string(d) == s) return d;
    return std::nullopt;
}

UserLanguage user_language(const OrderedProgram& source) {
    UserLanguage out;
    for (const auto& a : program_atoms(source.rules))
        if (!a.is_preference()) out.predicates.emplace(a.predicate, a.arity());
    return out;
}

namespace {

void put_term(std::ostream& os, const Term& t) {
    os << t.symbol;
    if (t.args.empty()) return;
    os << '(';
    for (std::size_t i = 0; i < t.args.size(); ++i) {
        if (i) os << ", ";
        put_term(os, t.args[i]);
    }
    os << ')';
}

void put_atom(std::ostream& os, const Atom& a) {
    os << a.predicate;
    if (a.args.empty()) return;
    os << '(';
    for (std::size_t i = 0; i < a.args.size(); ++i) {
        if (i) os << ", ";
        put_term(os, a.args[i]);
    }
    os << ')';
}

bool is_fresh(const Atom& a) { return a.predicate.rfind(kFreshPrefix, 0) == 0; }

bool is_preference_like(const Atom& a) {
    return a.arity() == 2 && (a.predicate == kPrec || a.predicate == kPrecPrimed);
}

Rule consistency(const Atom& a) {
    Rule r;
    r.pbody = {Literal::pos(a), Literal::neg(a)};
    return r;
}

} // namespace

std::string emit_literal(const Literal& l) {
    std::ostringstream os;
    if (l.negated) os << "neg_";
    put_atom(os, l.atom);
    return os.str();
}

std::string emit_rule(const Rule& r, Dialect d) {
    std::ostringstream os;
    if (r.head)
        os << emit_literal(*r.head);
    else
        os << (d == Dialect::Intermediate ? "false" : "");
    if (!r.pbody.empty() || !r.nbody.empty()) {
        os << (r.head || d == Dialect::Intermediate ? " :- " : ":- ");
        bool first = true;
        for (const auto& l : r.pbody) {
            os << (first ? "" : ", ") << emit_literal(l);
            first = false;
        }
        for (const auto& l : r.nbody) {
            os << (first ? "" : ", ") << "not " << emit_literal(l);
            first = false;
        }
    }
    os << '.';
    return os.str();
}

std::string emit(const Program& p, Dialect d, const EmitOptions& opts) {
    for (const auto& r : p)
        if (!r.is_ground()) throw ValidationError("cannot emit a non-ground rule");

    std::ostringstream os;
    if (d != Dialect::Intermediate && opts.show) {
        std::vector<std::string> shown;
        for (const auto& [pred, arity] : opts.show->predicates) {
            std::string args;
            for (std::size_t i = 0; i < arity; ++i) args += (i ? "," : "(") + std::string("X") + std::to_string(i + 1);
            if (arity) args += ")";
            shown.push_back(pred + args);
        }
        if (d == Dialect::Dlv) {
            os << "% filter:";
            for (const auto& [pred, arity] : opts.show->predicates) os << ' ' << pred << ' ' << "neg_" << pred;
            os << '\n';
        } else {
            os << "hide.\n";
            for (const auto& s : shown) os << "show " << s << ".\n" << "show neg_" << s << ".\n";
        }
    }
    for (const auto& r : p) os << emit_rule(r, d) << '\n';
    for (const auto& n : opts.names) {
        Rule fact;
        fact.head = Literal::pos(Atom{kName, {n}});
        os << emit_rule(fact, d) << '\n';
    }

    // Consistency constraints for strong negation.
    std::vector<Atom> atoms = program_atoms(p);
    std::set<Atom> plain;
    std::set<std::string> preference_predicates;
    std::set<Atom> positive, negative;
    for (const auto& r : p) {
        auto note = [&](const Literal& l) { (l.negated ? negative : positive).insert(l.atom); };
        if (r.head) note(*r.head);
        for (const auto& l : r.pbody) note(l);
        for (const auto& l : r.nbody) note(l);
    }
    for (const auto& a : atoms) {
        if (tag::is_tag(a) || is_fresh(a)) continue;
        if (opts.constrain_all_atoms && is_preference_like(a) && !opts.names.empty()) {
            preference_predicates.insert(a.predicate);
            continue;
        }
        if (opts.constrain_all_atoms || (positive.count(a) && negative.count(a))) plain.insert(a);
    }
    for (const auto& a : plain) os << emit_rule(consistency(a), d) << '\n';
    for (const auto& pred : preference_predicates)
        for (const auto& x : opts.names)
            for (const auto& y : opts.names) os << emit_rule(consistency(Atom{pred, {x, y}}), d) << '\n';
    return os.str();
}

LiteralSet nice_filter(const LiteralSet& x, const UserLanguage& language) {
    if (x.is_inconsistent()) return x;
    std::set<Literal> out;
    for (const auto& l : x.literals())
        if (language.contains(l.atom) && !is_primed(l.atom) && !tag::is_tag(l.atom)) out.insert(l);
    return LiteralSet(std::move(out));
}

} // namespace ordlp
