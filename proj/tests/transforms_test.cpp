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
#include "ordlp/parser.hpp"
#include "ordlp/pipeline.hpp"
#include "ordlp/semantics.hpp"
#include "ordlp/transforms.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace ordlp;

namespace {

OrderedProgram parse(const std::string& text) { return parse_program({text, "<test>"}); }
LiteralSet set(const std::string& text) { return parse_literal_set(text); }
Literal lit(const std::string& text) { return *set(text).literals().begin(); }

std::vector<LiteralSet> nice(const std::string& text, Strategy s) {
    return solve(load_program(text, "<test>", false), s, true);
}

std::vector<LiteralSet> raw(const std::string& text, Strategy s) {
    return solve(load_program(text, "<test>", false), s, false);
}

std::vector<std::string> lines(const Program& p) {
    std::vector<std::string> out;
    for (const auto& r : p) out.push_back(emit_rule(r, Dialect::Intermediate));
    return out;
}

bool has_line(const Program& p, const std::string& line) {
    auto l = lines(p);
    return std::find(l.begin(), l.end(), line) != l.end();
}

std::vector<Term> names(std::initializer_list<const char*> ns) {
    std::vector<Term> out;
    for (auto n : ns) out.push_back(Term::constant(n));
    return out;
}

const char* kDynamic = "neg a :- name(n1). b :- name(n2), neg a, not c. c :- name(n3), not b. "
                       "(n3 < n2) :- name(n4), not d.";
const char* kBirds = "neg f :- [n1], p, not f. w :- [n2], b, not neg w. f :- [n3], w, not neg f. "
                     "b :- [n4], p. p :- [n5]. (n2 < n1).";
const char* kHeadShared = "a :- name(n1), not neg a. b :- name(n2), a, not neg b. b :- name(n3). (n1 < n2).";
const char* kChain = "b :- name(n1), a, not neg b. neg b :- name(n2), not b. a :- name(n3), not neg a. "
                     "(n2 < n1). (n3 < n1). (n3 < n2).";
const char* kNoPreferred = "a :- name(n1), not b. neg a :- name(n2), not a. a :- name(n3), not neg a. "
                           "b :- name(n4), not neg b. (n2 < n1). (n3 < n1). (n4 < n1). (n3 < n2). (n4 < n2). "
                           "(n4 < n3).";
const char* kDynFacts = "a :- name(n1), not neg a. b :- name(n2), not neg b. (n1 < n2) :- name(n3). "
                        "(n3 < n1) :- name(n4).";
const char* kDynRule = "a :- name(n1), not neg a. b :- name(n2), not neg b. (n1 < n2) :- name(n3), a, b.";
const char* kAnimals = "w :- name(n1), a, not neg w. f :- name(n2), b, not neg f. s :- name(n3), p, not neg s. "
                       "a :- b. b :- p. p. neg s. (n1 < n2). (n2 < n3).";

} // namespace

TEST(StrategyNames, RoundTrip) {
    for (Strategy s : all_strategies()) EXPECT_EQ(parse_strategy(to_string(s)), s);
    EXPECT_EQ(all_strategies().size(), 7u);
    EXPECT_FALSE(parse_strategy("X"));
}

TEST(TauT, RuleImageLines) {
    OrderedProgram p = parse(kDynamic);
    Program img = tau_T(p.rules[1], p.names());
    EXPECT_EQ(lines(img)[0], "b :- ap(n2).");
    EXPECT_EQ(lines(img)[1], "ap(n2) :- ok(n2), neg_a, not c.");
    EXPECT_EQ(lines(img)[2], "bl(n2) :- ok(n2), not neg_a.");
    EXPECT_EQ(lines(img)[3], "bl(n2) :- ok(n2), c.");
    EXPECT_EQ(lines(img)[4], "ok(n2) :- rdy(n2, n1), rdy(n2, n2), rdy(n2, n3), rdy(n2, n4).");
    EXPECT_TRUE(has_line(img, "rdy(n2, n3) :- not prec(n2, n3)."));
    EXPECT_TRUE(has_line(img, "rdy(n2, n3) :- prec(n2, n3), ap(n3)."));
    EXPECT_TRUE(has_line(img, "rdy(n2, n3) :- prec(n2, n3), bl(n3)."));
}

TEST(TauT, FactImage) {
    Rule f = parse("p :- name(n1).").rules[0];
    Program img = tau_T(f, names({"n1"}));
    EXPECT_EQ(lines(img)[0], "p :- ap(n1).");
    EXPECT_EQ(lines(img)[1], "ap(n1) :- ok(n1).");
    EXPECT_EQ(lines(img)[2], "ok(n1) :- rdy(n1, n1).");
    EXPECT_EQ(img.size(), 2u + 1u + 3u);
}

TEST(TauT, SizeFormula) {
    OrderedProgram p = parse(kBirds);
    auto u = split_static(p).rules;
    std::vector<Term> universe = p.names();
    for (const auto& r : u) {
        std::size_t body = r.pbody.size() + r.nbody.size();
        EXPECT_EQ(tau_T(r, universe).size(), 2 + body + 1 + 3 * universe.size());
    }
    Rule unnamed = parse("a :- b.").rules[0];
    EXPECT_THROW(tau_T(unnamed, universe), ValidationError);
}

TEST(TransformT, DynamicProgramAnswer) {
    auto sets = raw(kDynamic, Strategy::T);
    ASSERT_EQ(sets.size(), 1u);
    LiteralSet user = nice_filter(sets[0], user_language(parse(kDynamic)));
    EXPECT_EQ(user, set("neg_a b"));
    EXPECT_TRUE(sets[0].contains(lit("prec(n3,n2)")));
}

TEST(TransformT, UnnamedRulesPassThrough) {
    OrderedProgram p = parse("neg a. b :- name(n2), neg a, not c. c :- name(n3), not b. (n3 < n2) :- not d.");
    Program t = transform_T(p);
    EXPECT_EQ(t.front(), p.rules[0]);
    EXPECT_TRUE(std::find(t.begin(), t.end(), p.rules[3]) != t.end());
    EXPECT_EQ(nice(format_program(p), Strategy::T), std::vector<LiteralSet>{set("neg_a b")});
}

TEST(TransformT, NoPreferencesIsConservative) {
    const char* text = "a :- name(n1), not b. b :- name(n2), not a. c :- name(n3), a.";
    auto standard = answer_sets_search(parse(text).rules);
    for (Strategy s : all_strategies()) EXPECT_EQ(nice(text, s), standard) << to_string(s);
}

TEST(TransformT, InconsistentProgramLosesLit) {
    const char* text = "p :- name(n1). neg p :- name(n2).";
    EXPECT_EQ(answer_sets_search(parse(text).rules), std::vector<LiteralSet>{LiteralSet::inconsistent()});
    EXPECT_TRUE(nice(text, Strategy::T).empty());
    EXPECT_EQ(nice(text, Strategy::Tstatic), std::vector<LiteralSet>{LiteralSet::inconsistent()});
}

TEST(TransformTStatic, BirdsOnlyFirst) {
    EXPECT_EQ(nice(kBirds, Strategy::Tstatic), std::vector<LiteralSet>{set("p b w neg_f")});
}

TEST(TransformTStatic, NoPreferenceAtomsAndEmptyOrder) {
    Program t = transform_T_static(parse(kBirds));
    for (const auto& r : t) {
        auto pref = [](const Literal& l) { return l.atom.predicate == kPrec; };
        if (r.head) EXPECT_FALSE(pref(*r.head));
        EXPECT_TRUE(std::none_of(r.pbody.begin(), r.pbody.end(), pref));
        EXPECT_TRUE(std::none_of(r.nbody.begin(), r.nbody.end(), pref));
    }
    StaticSplit s = split_static(parse(kBirds));
    Program empty = transform_T_static(s.rules, PreferenceOrder{});
    for (const char* n : {"n1", "n2", "n3", "n4", "n5"})
        EXPECT_TRUE(has_line(empty, std::string("ok(") + n + ")."));
}

TEST(TransformTStatic, ReadinessOnlyTowardsPreferred) {
    Program t = transform_T_static(parse(kBirds));
    EXPECT_TRUE(has_line(t, "ok(n2) :- rdy(n2, n1)."));
    EXPECT_TRUE(has_line(t, "rdy(n2, n1) :- ap(n1)."));
    EXPECT_TRUE(has_line(t, "rdy(n2, n1) :- bl(n1)."));
    EXPECT_TRUE(has_line(t, "ok(n1)."));
}

TEST(TransformTStatic, RejectsDynamic) { EXPECT_THROW(transform_T_static(parse(kDynamic)), ValidationError); }

TEST(TransformW, HeadSharing) {
    EXPECT_EQ(nice(kHeadShared, Strategy::W), std::vector<LiteralSet>{set("a b")});
    EXPECT_TRUE(nice(kHeadShared, Strategy::T).empty());
    Program w = transform_W(parse(kHeadShared));
    EXPECT_TRUE(has_line(w, "rdy(n1, n2) :- prec(n1, n2), b."));
}

TEST(TransformWTA, Chain) {
    EXPECT_EQ(nice(kAnimals, Strategy::WTA), std::vector<LiteralSet>{set("p b a neg_s")});
    Program w = transform_WTA(parse(kAnimals));
    for (const auto& r : w) {
        if (!r.head || r.head->atom.predicate != kReady) continue;
        for (const auto& l : r.pbody) EXPECT_NE(l.atom.predicate, kApplied) << emit_rule(r, Dialect::Intermediate);
    }
}

TEST(TransformWTA, SingleRuleUnchanged) {
    EXPECT_EQ(nice("a :- name(n1), not b.", Strategy::WTA), std::vector<LiteralSet>{set("a")});
}

TEST(Prime, Mirror) {
    EXPECT_EQ(prime(lit("b")), Literal::pos(Atom::prop("b__p")));
    EXPECT_EQ(unprime(prime(lit("neg_b"))), lit("neg_b"));
    EXPECT_TRUE(is_primed(prime(lit("b")).atom));
    Rule r1 = parse("b :- name(n1), a, not neg b.").rules[0];
    Rule p1 = prime(r1);
    EXPECT_EQ(emit_rule(p1, Dialect::Intermediate), "b__p :- a__p, not neg_b__p.");
    EXPECT_THROW(prime(prime(lit("b"))), ValidationError);
    Literal pr = lit("prec(n1,n2)");
    EXPECT_EQ(prime(pr), pr);
    EXPECT_EQ(prime(pr, true).atom.predicate, kPrecPrimed);
}

TEST(TransformU, ChainKeepsFirst) {
    EXPECT_EQ(nice(kChain, Strategy::U), std::vector<LiteralSet>{set("a b")});
}

TEST(TransformU, NoPreferred) { EXPECT_TRUE(nice(kNoPreferred, Strategy::U).empty()); }

TEST(TransformU, DynamicFacts) {
    auto sets = raw(kDynFacts, Strategy::U);
    ASSERT_EQ(sets.size(), 1u);
    for (const char* l : {"a", "b", "prec(n3,n1)", "prec(n1,n2)"}) EXPECT_TRUE(sets[0].contains(lit(l))) << l;
}

TEST(TransformU, StructureAndOrder) {
    OrderedProgram p = parse(kChain);
    Program u = transform_U(p);
    StaticSplit s = split_static(p);
    for (std::size_t i = 0; i < p.rules.size(); ++i) EXPECT_EQ(u[i], p.rules[i]);
    EXPECT_TRUE(has_line(u, "b__p :- ap(n1)."));
    EXPECT_TRUE(has_line(u, "ap(n1) :- ok(n1), a, not neg_b, not neg_b__p."));
    EXPECT_TRUE(has_line(u, "bl(n1) :- ok(n1), not a, not a__p."));
    EXPECT_TRUE(has_line(u, "bl(n1) :- ok(n1), neg_b, neg_b__p."));
    EXPECT_TRUE(has_line(u, "rdy(n1, n2) :- neg_b, b."));
    auto l = lines(u);
    auto pos = [&](const std::string& x) { return std::find(l.begin(), l.end(), x) - l.begin(); };
    EXPECT_LT(pos("b__p :- ap(n1)."), pos("ap(n1) :- ok(n1), a, not neg_b, not neg_b__p."));
    EXPECT_LT(pos("ok(n1) :- rdy(n1, n1), rdy(n1, n2), rdy(n1, n3)."), pos("rdy(n1, n1) :- not prec(n1, n1)."));
    EXPECT_LT(pos("rdy(n1, n2) :- neg_b, b."), pos("__c0 :- not ok(n1), not __c0."));
    (void)s;
}

TEST(TransformV, DynamicFactsDenied) { EXPECT_TRUE(raw(kDynFacts, Strategy::V).empty()); }

TEST(TransformV, DynamicRule) {
    for (Strategy s : {Strategy::U, Strategy::V, Strategy::S}) {
        auto sets = raw(kDynRule, s);
        ASSERT_EQ(sets.size(), 1u) << to_string(s);
        for (const char* l : {"a", "b", "prec(n1,n2)"}) EXPECT_TRUE(sets[0].contains(lit(l))) << l;
    }
    EXPECT_TRUE(raw(kDynRule, Strategy::T).empty());
}

TEST(TransformV, PrimedPreferences) {
    Program v = transform_V(parse(kDynRule));
    EXPECT_TRUE(has_line(v, "rdy(n1, n2) :- not precp(n1, n2)."));
    EXPECT_TRUE(has_line(v, "rdy(n1, n2) :- precp(n1, n2), ap(n2)."));
    EXPECT_TRUE(has_line(v, "neg_precp(n2, n1) :- precp(n1, n2)."));
    EXPECT_TRUE(has_line(v, "precp(n1, n2) :- ap(n3)."));
}

TEST(TransformS, Variants) {
    auto facts = raw(kDynFacts, Strategy::S);
    ASSERT_EQ(facts.size(), 1u);
    EXPECT_TRUE(facts[0].contains(lit("a")));
    EXPECT_TRUE(facts[0].contains(lit("b")));
    EXPECT_EQ(nice(kBirds, Strategy::S), std::vector<LiteralSet>{set("p b w neg_f")});
    Program s = transform_S(parse(kChain));
    EXPECT_TRUE(has_line(s, "ap(n1) :- ok(n1), a, a__p, not neg_b, not neg_b__p."));
    EXPECT_FALSE(has_line(s, "rdy(n1, n2) :- neg_b, b."));
}

TEST(TaClosure, Counts) {
    EXPECT_EQ(ta_rules(names({"n1", "n2"})).size(), 8u + 4u);
    Program ta = ta_rules(names({"n1", "n2"}));
    std::size_t as = std::count_if(ta.begin(), ta.end(), [](const Rule& r) { return r.head->negated; });
    EXPECT_EQ(as, 4u);
    OrderedProgram p = parse(kDynamic);
    OrderedProgram c = ta_closure(p);
    EXPECT_EQ(c.rules.size(), p.rules.size() + 64u + 16u);
    EXPECT_TRUE(std::equal(p.rules.begin(), p.rules.end(), c.rules.begin()));
}

TEST(TaClosure, InertWithoutPreferences) {
    OrderedProgram p = parse("a :- name(n1), not b. b :- name(n2), not a.");
    auto closed = answer_sets_search(ta_closure(p).rules);
    EXPECT_EQ(closed, answer_sets_search(p.rules));
}

TEST(TagAll, NamesEveryRule) {
    OrderedProgram p = tag_all(parse("a. b :- name(n2), a. c :- b."));
    EXPECT_EQ(p.names(), names({"r1", "n2", "r3"}));
}
