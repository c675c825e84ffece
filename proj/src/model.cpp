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

#include "ordlp/model.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

namespace ordlp {

std::strong_ordering Term::operator<=>(const Term& o) const {
    if (auto c = kind <=> o.kind; c != 0) return c;
    if (auto c = symbol <=> o.symbol; c != 0) return c;
    return std::lexicographical_compare_three_way(args.begin(), args.end(), o.args.begin(), o.args.end());
}

bool Term::is_ground() const {
    if (kind == Kind::Variable) return false;
    return std::all_of(args.begin(), args.end(), [](const Term& t) { return t.is_ground(); });
}

bool Atom::is_ground() const {
    return std::all_of(args.begin(), args.end(), [](const Term& t) { return t.is_ground(); });
}

Literal complement(const Literal& l) { return Literal{l.atom, !l.negated}; }

bool Rule::is_ground() const {
    if (name && !name->is_ground()) return false;
    if (head && !head->atom.is_ground()) return false;
    auto ground = [](const Literal& l) { return l.atom.is_ground(); };
    return std::all_of(pbody.begin(), pbody.end(), ground) &&
           std::all_of(nbody.begin(), nbody.end(), ground);
}

namespace {
void dedupe(std::vector<Literal>& v) {
    std::vector<Literal> out;
    std::set<Literal> seen;
    for (auto& l : v)
        if (seen.insert(l).second) out.push_back(std::move(l));
    v = std::move(out);
}
} // namespace

void Rule::normalize() {
    dedupe(pbody);
    dedupe(nbody);
}

std::vector<Term> OrderedProgram::names() const {
    std::vector<Term> out;
    for (const auto& r : rules)
        if (r.name) out.push_back(*r.name);
    return out;
}

bool is_consistent(const std::set<Literal>& lits) {
    for (const auto& l : lits)
        if (!l.negated && lits.count(complement(l))) return false;
    return true;
}

LiteralSet::LiteralSet(std::set<Literal> lits) : lits_(std::move(lits)) {
    if (!is_consistent(lits_)) {
        inconsistent_ = true;
        lits_.clear();
    }
}

LiteralSet LiteralSet::inconsistent() {
    LiteralSet x;
    x.inconsistent_ = true;
    return x;
}

PreferenceOrder strictify(const PreferenceOrder& order) {
    std::set<Term> nodes;
    for (const auto& [a, b] : order.pairs) {
        nodes.insert(a);
        nodes.insert(b);
    }
    std::vector<Term> idx(nodes.begin(), nodes.end());
    std::map<Term, std::size_t> pos;
    for (std::size_t i = 0; i < idx.size(); ++i) pos[idx[i]] = i;
    const std::size_t n = idx.size();
    std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
    for (const auto& [a, b] : order.pairs) reach[pos[a]][pos[b]] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (reach[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (reach[k][j]) reach[i][j] = 1;
    PreferenceOrder out;
    for (std::size_t i = 0; i < n; ++i) {
        if (reach[i][i])
            throw ValidationError("preference order is cyclic at " + to_string(idx[i]));
        for (std::size_t j = 0; j < n; ++j)
            if (reach[i][j]) out.pairs.emplace(idx[i], idx[j]);
    }
    return out;
}

bool defeated(const Rule& r, const LiteralSet& x) {
    if (r.nbody.empty()) return false;
    if (x.is_inconsistent()) return true;
    return std::any_of(r.nbody.begin(), r.nbody.end(), [&](const Literal& l) { return x.contains(l); });
}

namespace {
bool mentions_preference(const Rule& r) {
    auto pref = [](const Literal& l) { return l.atom.is_preference(); };
    return std::any_of(r.pbody.begin(), r.pbody.end(), pref) ||
           std::any_of(r.nbody.begin(), r.nbody.end(), pref);
}

bool is_preference_fact(const Rule& r) {
    return r.is_fact() && !r.name && !r.head->negated && r.head->atom.is_preference();
}
} // namespace

bool is_statically_ordered(const OrderedProgram& p) {
    for (const auto& r : p.rules) {
        if (mentions_preference(r)) return false;
        if (r.head && r.head->atom.is_preference() && !is_preference_fact(r)) return false;
    }
    return true;
}

StaticSplit split_static(const OrderedProgram& p) {
    if (!is_statically_ordered(p))
        throw ValidationError("program is not statically ordered: preference atoms occur outside facts");
    StaticSplit out;
    PreferenceOrder raw;
    for (const auto& r : p.rules) {
        if (is_preference_fact(r))
            raw.pairs.emplace(r.head->atom.args[0], r.head->atom.args[1]);
        else
            out.rules.push_back(r);
    }
    out.order = strictify(raw);
    return out;
}

OrderedProgram join_static(const Program& rules, const PreferenceOrder& order) {
    OrderedProgram out{rules};
    for (const auto& [lo, hi] : order.pairs) {
        Rule fact;
        fact.head = Literal::pos(Atom::prec(lo, hi));
        out.rules.push_back(std::move(fact));
    }
    return out;
}

namespace {
void collect_symbols(const Term& t, std::set<std::string>& out) {
    out.insert(t.symbol);
    for (const auto& a : t.args) collect_symbols(a, out);
}

void collect_symbols(const Literal& l, std::set<std::string>& out) {
    out.insert(l.atom.predicate);
    for (const auto& a : l.atom.args) collect_symbols(a, out);
}
} // namespace

FreshAtoms::FreshAtoms(const Program& p) {
    for (const auto& r : p) {
        if (r.head) collect_symbols(*r.head, used_);
        for (const auto& l : r.pbody) collect_symbols(l, used_);
        for (const auto& l : r.nbody) collect_symbols(l, used_);
    }
}

Atom FreshAtoms::next() {
    for (;;) {
        std::string s = kFreshPrefix + std::to_string(counter_++);
        if (used_.insert(s).second) return Atom::prop(std::move(s));
    }
}

Rule desugar_constraint(const Rule& r, const Atom& fresh, const Program& context) {
    if (r.head) throw ValidationError("desugar_constraint: rule has a head");
    std::set<std::string> used;
    for (const auto& q : context) {
        if (q.head) collect_symbols(*q.head, used);
        for (const auto& l : q.pbody) collect_symbols(l, used);
        for (const auto& l : q.nbody) collect_symbols(l, used);
    }
    if (used.count(fresh.predicate))
        throw ValidationError("fresh atom " + fresh.predicate + " already occurs in the program");
    Rule out = r;
    out.head = Literal::pos(fresh);
    out.nbody.push_back(Literal::pos(fresh));
    return out;
}

Program desugar_constraints(const Program& p) {
    FreshAtoms fresh(p);
    Program out;
    out.reserve(p.size());
    for (const auto& r : p) {
        if (r.head) {
            out.push_back(r);
            continue;
        }
        Rule d = r;
        Atom a = fresh.next();
        d.head = Literal::pos(a);
        d.nbody.push_back(Literal::pos(a));
        out.push_back(std::move(d));
    }
    return out;
}

bool is_reserved_predicate(const std::string& predicate, std::size_t arity) {
    if (predicate.find("__") != std::string::npos) return true;
    static const std::set<std::pair<std::string, std::size_t>> reserved = {
        {kApplied, 1}, {kBlocked, 1}, {kBlockedPrereq, 1}, {kOk, 1}, {kReady, 2},
        {kName, 1},    {"neg_prec", 2}, {kPrecPrimed, 2},
    };
    return reserved.count({predicate, arity}) > 0;
}

std::string ValidationReport::to_string() const {
    std::ostringstream os;
    for (const auto& v : violations) os << "rule " << v.rule + 1 << ": " << v.message << '\n';
    return os.str();
}

ValidationReport validate_ordered(const OrderedProgram& p) {
    ValidationReport report;
    std::map<Term, std::size_t> first_use;
    for (std::size_t i = 0; i < p.rules.size(); ++i) {
        const auto& r = p.rules[i];
        if (!r.name) continue;
        auto [it, fresh] = first_use.emplace(*r.name, i);
        if (!fresh)
            report.violations.push_back({Violation::Kind::DuplicateName, i,
                                         "name " + ordlp::to_string(*r.name) + " already used by rule " +
                                             std::to_string(it->second + 1)});
    }
    auto check_literal = [&](std::size_t i, const Literal& l) {
        const auto& a = l.atom;
        if (is_reserved_predicate(a.predicate, a.arity()))
            report.violations.push_back({Violation::Kind::ReservedPredicate, i,
                                         "reserved predicate " + a.predicate + "/" +
                                             std::to_string(a.arity())});
        if (a.is_preference() && a.is_ground())
            for (const auto& n : a.args)
                if (!first_use.count(n))
                    report.violations.push_back({Violation::Kind::UnknownPreferenceName, i,
                                                 "preference atom refers to unknown rule name " +
                                                     ordlp::to_string(n)});
    };
    for (std::size_t i = 0; i < p.rules.size(); ++i) {
        const auto& r = p.rules[i];
        if (r.head) check_literal(i, *r.head);
        for (const auto& l : r.pbody) check_literal(i, l);
        for (const auto& l : r.nbody) check_literal(i, l);
    }
    return report;
}

std::vector<Atom> program_atoms(const Program& p) {
    std::vector<Atom> out;
    std::set<Atom> seen;
    auto add = [&](const Literal& l) {
        if (seen.insert(l.atom).second) out.push_back(l.atom);
    };
    for (const auto& r : p) {
        if (r.head) add(*r.head);
        for (const auto& l : r.pbody) add(l);
        for (const auto& l : r.nbody) add(l);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Term& t) {
    os << t.symbol;
    if (!t.args.empty()) {
        os << '(';
        for (std::size_t i = 0; i < t.args.size(); ++i) os << (i ? "," : "") << t.args[i];
        os << ')';
    }
    return os;
}

std::ostream& operator<<(std::ostream& os, const Atom& a) {
    os << a.predicate;
    if (!a.args.empty()) {
        os << '(';
        for (std::size_t i = 0; i < a.args.size(); ++i) os << (i ? "," : "") << a.args[i];
        os << ')';
    }
    return os;
}

std::ostream& operator<<(std::ostream& os, const Literal& l) {
    if (l.negated) os << "neg_";
    return os << l.atom;
}

std::ostream& operator<<(std::ostream& os, const LiteralSet& x) {
    if (x.is_inconsistent()) return os << "Lit";
    os << '{';
    bool first = true;
    for (const auto& l : x.literals()) {
        os << (first ? "" : ", ") << l;
        first = false;
    }
    return os << '}';
}

std::string to_string(const Term& t) {
    std::ostringstream os;
    os << t;
    return os.str();
}

std::string to_string(const Literal& l) {
    std::ostringstream os;
    os << l;
    return os.str();
}

std::string to_string(const LiteralSet& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

} // namespace ordlp
