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

#include "ordlp/transforms.hpp"

#include <algorithm>
#include <set>

namespace ordlp {

const std::vector<Strategy>& all_strategies() {
    static const std::vector<Strategy> all = {Strategy::T, Strategy::Tstatic, Strategy::W, Strategy::WTA,
                                              Strategy::U, Strategy::V,       Strategy::S};
    return all;
}

std::string to_string(Strategy s) {
    switch (s) {
    case Strategy::T: return "T";
    case Strategy::Tstatic: return "Tstatic";
    case Strategy::W: return "W";
    case Strategy::WTA: return "WTA";
    case Strategy::U: return "U";
    case Strategy::V: return "V";
    case Strategy::S: return "S";
    }
    return "?";
}

std::optional<Strategy> parse_strategy(std::string_view s) {
    for (Strategy x : all_strategies())
        if (to_string(x) == s) return x;
    return std::nullopt;
}

namespace tag {
Atom ap(const Term& n) { return Atom{kApplied, {n}}; }
Atom bl(const Term& n) { return Atom{kBlocked, {n}}; }
Atom blp(const Term& n) { return Atom{kBlockedPrereq, {n}}; }
Atom ok(const Term& n) { return Atom{kOk, {n}}; }
Atom rdy(const Term& n, const Term& m) { return Atom{kReady, {n, m}}; }
Atom prec(const Term& n, const Term& m) { return Atom::prec(n, m); }
Atom precp(const Term& n, const Term& m) { return Atom{kPrecPrimed, {n, m}}; }

bool is_tag(const Atom& a) {
    static const std::set<std::pair<std::string, std::size_t>> tags = {
        {kApplied, 1}, {kBlocked, 1}, {kBlockedPrereq, 1}, {kOk, 1}, {kReady, 2}, {kName, 1}};
    return tags.count({a.predicate, a.arity()}) > 0;
}
} // namespace tag

namespace {
const std::string kSuffix = kPrimeSuffix;

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}
} // namespace

bool is_primed(const Atom& a) { return ends_with(a.predicate, kSuffix) || a.predicate == kPrecPrimed; }

Literal prime(const Literal& l, bool prime_prec) {
    if (is_primed(l.atom)) throw ValidationError("literal " + to_string(l) + " is already primed");
    Literal out = l;
    if (l.atom.is_preference()) {
        if (prime_prec) out.atom.predicate = kPrecPrimed;
        return out;
    }
    if (tag::is_tag(l.atom)) throw ValidationError("tag atom " + to_string(l) + " cannot be primed");
    out.atom.predicate += kSuffix;
    return out;
}

Rule prime(const Rule& r, bool prime_prec) {
    Rule out;
    out.name = r.name;
    if (r.head) out.head = prime(*r.head, prime_prec);
    for (const auto& l : r.pbody) out.pbody.push_back(prime(l, prime_prec));
    for (const auto& l : r.nbody) out.nbody.push_back(prime(l, prime_prec));
    return out;
}

Literal unprime(const Literal& l) {
    Literal out = l;
    if (l.atom.predicate == kPrecPrimed && l.atom.arity() == 2)
        out.atom.predicate = kPrec;
    else if (ends_with(l.atom.predicate, kSuffix))
        out.atom.predicate.resize(l.atom.predicate.size() - kSuffix.size());
    else
        throw ValidationError("literal " + to_string(l) + " is not primed");
    return out;
}

namespace {

Rule make(std::optional<Literal> head, std::vector<Literal> pbody = {}, std::vector<Literal> nbody = {}) {
    Rule r;
    r.head = std::move(head);
    r.pbody = std::move(pbody);
    r.nbody = std::move(nbody);
    return r;
}

Literal pos(Atom a) { return Literal::pos(std::move(a)); }

template <class V>
void append(V& out, const V& more) {
    out.insert(out.end(), more.begin(), more.end());
}

void require_translatable(const OrderedProgram& p) {
    for (const auto& r : p.rules)
        if (!r.is_ground()) throw ValidationError("program must be ground before translation");
    ValidationReport report = validate_ordered(p);
    if (!report.ok()) throw ValidationError("invalid ordered program:\n" + report.to_string());
}

// Variants of the dynamic translation sharing its tag machinery.
enum class TFlavour { T, W, WTA };

Program tau_family(const Rule& r, const std::vector<Term>& universe, const OrderedProgram* source,
                   TFlavour flavour) {
    if (!r.name) throw ValidationError("tau: rule is unnamed");
    const Term& n = *r.name;
    Program out;
    Literal okn = pos(tag::ok(n));

    out.push_back(make(r.head, {pos(tag::ap(n))}));
    {
        std::vector<Literal> pb{okn};
        append(pb, r.pbody);
        out.push_back(make(pos(tag::ap(n)), pb, r.nbody));
    }
    for (const auto& l : r.pbody) out.push_back(make(pos(tag::bl(n)), {okn}, {l}));
    for (const auto& k : r.nbody) out.push_back(make(pos(tag::bl(n)), {okn, k}));
    if (flavour == TFlavour::WTA)
        for (const auto& l : r.pbody) out.push_back(make(pos(tag::blp(n)), {okn}, {l}));

    std::vector<Literal> ready;
    for (const auto& m : universe) ready.push_back(pos(tag::rdy(n, m)));
    out.push_back(make(okn, ready));
    for (const auto& m : universe) out.push_back(make(pos(tag::rdy(n, m)), {}, {pos(tag::prec(n, m))}));
    if (flavour != TFlavour::WTA)
        for (const auto& m : universe)
            out.push_back(make(pos(tag::rdy(n, m)), {pos(tag::prec(n, m)), pos(tag::ap(m))}));
    for (const auto& m : universe) {
        Atom blocked = flavour == TFlavour::WTA ? tag::blp(m) : tag::bl(m);
        out.push_back(make(pos(tag::rdy(n, m)), {pos(tag::prec(n, m)), pos(blocked)}));
    }
    if (flavour == TFlavour::W && source)
        for (const auto& s : source->rules)
            if (s.name && s.head)
                out.push_back(make(pos(tag::rdy(n, *s.name)), {pos(tag::prec(n, *s.name)), *s.head}));
    return out;
}

Program t_family(const OrderedProgram& p, TFlavour flavour) {
    require_translatable(p);
    std::vector<Term> names = p.names();
    Program out;
    for (const auto& r : p.rules) {
        if (!r.name) {
            out.push_back(r);
            continue;
        }
        append(out, tau_family(r, names, &p, flavour));
    }
    append(out, ta_rules(names));
    return out;
}

enum class BEFlavour { U, V, S };

Program be_family(const OrderedProgram& p, BEFlavour flavour) {
    require_translatable(p);
    const bool pp = flavour == BEFlavour::V;
    const std::string pref = pp ? kPrecPrimed : kPrec;
    auto P = [&](const Term& a, const Term& b) { return pos(Atom{pref, {a, b}}); };
    auto primed = [&](const std::vector<Literal>& v) {
        std::vector<Literal> out;
        for (const auto& l : v) out.push_back(prime(l, pp));
        return out;
    };

    std::vector<Term> names = p.names();
    FreshAtoms fresh(p.rules);
    Program out = p.rules;
    for (const auto& r : p.rules) {
        if (!r.name) {
            if (!r.head) continue;
            Rule m = r;
            m.name.reset();
            m.head = prime(*r.head, pp);
            if (flavour == BEFlavour::S)
                append(m.pbody, primed(r.pbody));
            append(m.nbody, primed(r.nbody));
            Rule plain = r;
            plain.name.reset();
            m.normalize();
            if (m != plain) out.push_back(std::move(m));
            continue;
        }
        const Term& n = *r.name;
        Literal okn = pos(tag::ok(n));
        std::optional<Literal> head;
        if (r.head) head = prime(*r.head, pp);
        out.push_back(make(head, {pos(tag::ap(n))}));
        {
            std::vector<Literal> pb{okn};
            append(pb, r.pbody);
            std::vector<Literal> nb = r.nbody;
            if (flavour == BEFlavour::S) append(pb, primed(r.pbody));
            append(nb, primed(r.nbody));
            out.push_back(make(pos(tag::ap(n)), pb, nb));
        }
        for (const auto& l : r.pbody) out.push_back(make(pos(tag::bl(n)), {okn}, {l, prime(l, pp)}));
        for (const auto& k : r.nbody) out.push_back(make(pos(tag::bl(n)), {okn, k, prime(k, pp)}));

        std::vector<Literal> ready;
        for (const auto& m : names) ready.push_back(pos(tag::rdy(n, m)));
        out.push_back(make(okn, ready));
        for (const auto& m : names) out.push_back(make(pos(tag::rdy(n, m)), {}, {P(n, m)}));
        for (const auto& m : names) out.push_back(make(pos(tag::rdy(n, m)), {P(n, m), pos(tag::ap(m))}));
        for (const auto& m : names) out.push_back(make(pos(tag::rdy(n, m)), {P(n, m), pos(tag::bl(m))}));
        if (flavour != BEFlavour::S)
            for (const auto& s : p.rules)
                if (s.name && s.head)
                    for (const auto& j : s.nbody) out.push_back(make(pos(tag::rdy(n, *s.name)), {*s.head, j}));
        Atom f = fresh.next();
        out.push_back(make(pos(f), {}, {okn, pos(f)}));
    }
    append(out, ta_rules(names));
    if (pp) append(out, ta_rules(names, kPrecPrimed));
    return out;
}

} // namespace

Program tau_T(const Rule& r, const std::vector<Term>& universe) {
    return tau_family(r, universe, nullptr, TFlavour::T);
}

Program ta_rules(const std::vector<Term>& names, const std::string& predicate) {
    Program out;
    auto A = [&](const Term& a, const Term& b) { return Atom{predicate, {a, b}}; };
    for (const auto& x : names)
        for (const auto& y : names)
            for (const auto& z : names)
                out.push_back(make(pos(A(x, z)), {pos(A(x, y)), pos(A(y, z))}));
    for (const auto& x : names)
        for (const auto& y : names)
            out.push_back(make(Literal::neg(A(y, x)), {pos(A(x, y))}));
    return out;
}

OrderedProgram ta_closure(const OrderedProgram& p) {
    OrderedProgram out = p;
    append(out.rules, ta_rules(p.names()));
    return out;
}

OrderedProgram tag_all(const OrderedProgram& p) {
    std::set<Term> used;
    for (const auto& r : p.rules)
        if (r.name) used.insert(*r.name);
    OrderedProgram out = p;
    for (std::size_t i = 0; i < out.rules.size(); ++i) {
        auto& r = out.rules[i];
        if (r.name) continue;
        std::string base = "r" + std::to_string(i + 1);
        Term name = Term::constant(base);
        for (int k = 1; used.count(name); ++k) name = Term::constant(base + "_" + std::to_string(k));
        used.insert(name);
        r.name = name;
    }
    return out;
}

Program transform_T(const OrderedProgram& p) { return t_family(p, TFlavour::T); }
Program transform_W(const OrderedProgram& p) { return t_family(p, TFlavour::W); }
Program transform_WTA(const OrderedProgram& p) { return t_family(p, TFlavour::WTA); }

Program transform_T_static(const Program& rules, const PreferenceOrder& order) {
    OrderedProgram src{rules};
    require_translatable(src);
    PreferenceOrder strict = strictify(order);
    std::set<Term> named;
    for (const auto& r : rules)
        if (r.name) named.insert(*r.name);
    for (const auto& [lo, hi] : strict.pairs)
        if (!named.count(lo) || !named.count(hi))
            throw ValidationError("preference order mentions unknown rule name");
    for (const auto& r : rules)
        if (r.head && r.head->atom.is_preference())
            throw ValidationError("static translation expects preference atoms only in the order");

    Program out;
    for (const auto& r : rules) {
        if (!r.name) {
            out.push_back(r);
            continue;
        }
        const Term& n = *r.name;
        Literal okn = pos(tag::ok(n));
        std::vector<Term> higher;
        for (const auto& [lo, hi] : strict.pairs)
            if (lo == n) higher.push_back(hi);
        out.push_back(make(r.head, {pos(tag::ap(n))}));
        std::vector<Literal> pb{okn};
        append(pb, r.pbody);
        out.push_back(make(pos(tag::ap(n)), pb, r.nbody));
        for (const auto& l : r.pbody) out.push_back(make(pos(tag::bl(n)), {okn}, {l}));
        for (const auto& k : r.nbody) out.push_back(make(pos(tag::bl(n)), {okn, k}));
        std::vector<Literal> ready;
        for (const auto& m : higher) ready.push_back(pos(tag::rdy(n, m)));
        out.push_back(make(okn, ready));
        for (const auto& m : higher) out.push_back(make(pos(tag::rdy(n, m)), {pos(tag::ap(m))}));
        for (const auto& m : higher) out.push_back(make(pos(tag::rdy(n, m)), {pos(tag::bl(m))}));
    }
    return out;
}

Program transform_T_static(const OrderedProgram& p) {
    StaticSplit split = split_static(p);
    return transform_T_static(split.rules, split.order);
}

Program transform_U(const OrderedProgram& p) { return be_family(p, BEFlavour::U); }
Program transform_V(const OrderedProgram& p) { return be_family(p, BEFlavour::V); }
Program transform_S(const OrderedProgram& p) { return be_family(p, BEFlavour::S); }

Program transform(const OrderedProgram& p, Strategy s) {
    switch (s) {
    case Strategy::T: return transform_T(p);
    case Strategy::Tstatic: return transform_T_static(p);
    case Strategy::W: return transform_W(p);
    case Strategy::WTA: return transform_WTA(p);
    case Strategy::U: return transform_U(p);
    case Strategy::V: return transform_V(p);
    case Strategy::S: return transform_S(p);
    }
    throw ValidationError("unknown strategy");
}

} // namespace ordlp
