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
#include "ordlp/semantics.hpp"
#include "ordlp/transforms.hpp"

#include "ordlp_test/brute_enumeration.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace ordlp;
using ordlp::testing::brute_preserving;

namespace {

OrderedProgram parse(const std::string& text) { return parse_program({text, "<test>"}); }
LiteralSet set(const std::string& text) { return parse_literal_set(text); }

const char* kBirds = "neg f :- [n1], p, not f. w :- [n2], b, not neg w. f :- [n3], w, not neg f. "
                     "b :- [n4], p. p :- [n5]. (n2 < n1).";
const char* kHeadShared = "a :- name(n1), not neg a. b :- name(n2), a, not neg b. b :- name(n3). (n1 < n2).";
const char* kChain = "b :- name(n1), a, not neg b. neg b :- name(n2), not b. a :- name(n3), not neg a. "
                     "(n2 < n1). (n3 < n1). (n3 < n2).";
const char* kNoPreferred = "a :- name(n1), not b. neg a :- name(n2), not a. a :- name(n3), not neg a. "
                           "b :- name(n4), not neg b. (n2 < n1). (n3 < n1). (n4 < n1). (n3 < n2). (n4 < n2). "
                           "(n4 < n3).";

std::vector<std::string> labels(const Program& p, const std::vector<std::size_t>& ord) {
    std::vector<std::string> out;
    for (auto i : ord) out.push_back(p[i].name ? to_string(*p[i].name) : "#" + std::to_string(i));
    return out;
}

using Labels = std::vector<std::string>;

TotalOrder descending(std::vector<std::size_t> most_preferred_first) {
    std::reverse(most_preferred_first.begin(), most_preferred_first.end());
    return TotalOrder{most_preferred_first};
}

} // namespace

TEST(StaticPreserving, BirdsFirstAccepted) {
    StaticSplit s = split_static(parse(kBirds));
    LiteralSet x1 = set("p b w neg_f");
    auto w = check_static_preserving(s.rules, s.order, x1);
    ASSERT_TRUE(w);
    EXPECT_EQ(w->criterion, Criterion::Static);
    EXPECT_TRUE(verify_witness(s.rules, s.order, x1, *w));
    EXPECT_TRUE(brute_preserving(s.rules, s.order, x1, Criterion::Static));

    EnumerationOptions prio;
    prio.priority = {4, 3, 0, 1};
    auto w2 = check_static_preserving(s.rules, s.order, x1, prio);
    ASSERT_TRUE(w2);
    EXPECT_EQ(labels(s.rules, w2->ordering), (Labels{"n5", "n4", "n1", "n2"}));
}

TEST(StaticPreserving, BirdsSecondRejected) {
    StaticSplit s = split_static(parse(kBirds));
    EXPECT_FALSE(check_static_preserving(s.rules, s.order, set("p b w f")));
    EXPECT_FALSE(brute_preserving(s.rules, s.order, set("p b w f"), Criterion::Static));
}

TEST(StaticPreserving, EmptyOrderAlwaysWitnessed) {
    StaticSplit s = split_static(parse(kBirds));
    for (const auto& x : answer_sets_search(s.rules)) {
        auto w = check_static_preserving(s.rules, PreferenceOrder{}, x);
        ASSERT_TRUE(w);
        EXPECT_TRUE(verify_witness(s.rules, PreferenceOrder{}, x, *w));
    }
}

TEST(StaticPreserving, NotAnAnswerSet) {
    StaticSplit s = split_static(parse(kBirds));
    EXPECT_THROW(check_static_preserving(s.rules, s.order, set("p")), NotAnswerSetError);
}

TEST(WzlPreserving, HeadShared) {
    StaticSplit s = split_static(parse(kHeadShared));
    LiteralSet x = set("a b");
    EXPECT_FALSE(check_static_preserving(s.rules, s.order, x));
    EnumerationOptions prio;
    prio.priority = {2, 1, 0};
    auto w = check_wzl_preserving(s.rules, s.order, x, prio);
    ASSERT_TRUE(w);
    EXPECT_EQ(labels(s.rules, w->ordering), (Labels{"n3", "n2", "n1"}));
    EXPECT_TRUE(verify_witness(s.rules, s.order, x, *w));
    EXPECT_TRUE(be_preferred(s.rules, s.order, x));
}

TEST(WzlPreserving, EmptyOrder) {
    StaticSplit s = split_static(parse(kChain));
    for (const auto& x : answer_sets_search(s.rules)) EXPECT_TRUE(check_wzl_preserving(s.rules, {}, x));
}

TEST(BePreserving, BirdsBoth) {
    StaticSplit s = split_static(parse(kBirds));
    LiteralSet x2 = set("p b w f");
    EnumerationOptions prio;
    prio.priority = {4, 3, 2, 1};
    auto w = check_be_preserving(s.rules, s.order, x2, prio);
    ASSERT_TRUE(w);
    EXPECT_EQ(labels(s.rules, w->ordering), (Labels{"n5", "n4", "n3", "n2"}));
    EXPECT_TRUE(verify_witness(s.rules, s.order, x2, *w));
    EXPECT_TRUE(check_be_preserving(s.rules, s.order, set("p b w neg_f")));
    EXPECT_TRUE(be_preferred(s.rules, s.order, x2));
    EXPECT_TRUE(be_preferred(s.rules, s.order, set("p b w neg_f")));
}

TEST(BePreserving, ChainSecondRejected) {
    StaticSplit s = split_static(parse(kChain));
    EXPECT_FALSE(check_be_preserving(s.rules, s.order, set("a neg_b")));
    EXPECT_TRUE(check_be_preserving(s.rules, s.order, set("a b")));
}

TEST(VerifyWitness, RejectsTamperedOrder) {
    StaticSplit s = split_static(parse(kBirds));
    LiteralSet x1 = set("p b w neg_f");
    EnumerationWitness bad{{4, 3, 1, 0}, Criterion::Static};
    EXPECT_FALSE(verify_witness(s.rules, s.order, x1, bad));
    EnumerationWitness ungrounded{{0, 4, 3, 1}, Criterion::Static};
    EXPECT_FALSE(verify_witness(s.rules, s.order, x1, ungrounded));
    EnumerationWitness missing{{4, 3, 0}, Criterion::Static};
    EXPECT_FALSE(verify_witness(s.rules, s.order, x1, missing));
}

TEST(DynamicPreserving, OnlyWhenPreferenceFollowsPreferredRule) {
    LiteralSet x = set("a b prec(n1,n2) neg_prec(n2,n1)");
    OrderedProgram b = parse("a :- name(n1), not neg a. b :- name(n2), not neg b. (n1 < n2) :- name(n3), b.");
    OrderedProgram a = parse("a :- name(n1), not neg a. b :- name(n2), not neg b. (n1 < n2) :- name(n3), a.");
    auto w = check_dynamic_preserving(b, x);
    ASSERT_TRUE(w);
    EXPECT_TRUE(verify_witness(ta_closure(b).rules, {}, x, *w));
    EXPECT_FALSE(check_dynamic_preserving(a, x));
}

TEST(DynamicPreserving, MotivatingProgram) {
    OrderedProgram p = parse("neg a :- name(n1). b :- name(n2), neg a, not c. c :- name(n3), not b. "
                             "(n3 < n2) :- name(n4), not d.");
    LiteralSet x = set("neg_a b prec(n3,n2) neg_prec(n2,n3)");
    Program ta = ta_closure(p).rules;
    auto w = check_dynamic_preserving(p, x);
    ASSERT_TRUE(w);
    EXPECT_TRUE(verify_witness(ta, {}, x, *w));

    EnumerationOptions prio;
    prio.priority = {0, 3, 1, 2};
    auto w2 = check_dynamic_preserving(p, x, prio);
    ASSERT_TRUE(w2);
    EXPECT_TRUE(verify_witness(ta, {}, x, *w2));
    std::vector<std::size_t> source;
    for (auto i : w2->ordering)
        if (i < p.rules.size()) source.push_back(i);
    EXPECT_EQ(source, (std::vector<std::size_t>{0, 3, 1, 2}));
    EXPECT_FALSE(check_dynamic_preserving(p, set("neg_a c prec(n3,n2) neg_prec(n2,n3)")));
}

TEST(DynamicPreserving, RelaxedPreferenceDerivation) {
    OrderedProgram p = parse("a :- name(n1), not neg a. b :- name(n2), not neg b. (n1 < n2) :- name(n3). "
                             "(n3 < n1) :- name(n4).");
    LiteralSet x = set("a b prec(n1,n2) prec(n3,n1) prec(n3,n2) neg_prec(n2,n1) neg_prec(n1,n3) neg_prec(n2,n3)");
    ASSERT_TRUE(is_answer_set(ta_closure(p).rules, x));
    EXPECT_FALSE(check_dynamic_preserving(p, x));
    EnumerationOptions relaxed;
    relaxed.require_preference_derivation = false;
    auto w = check_dynamic_preserving(p, x, relaxed);
    ASSERT_TRUE(w);
    EXPECT_TRUE(verify_witness(ta_closure(p).rules, {}, x, *w, false));
}

TEST(COperator, NoPreferredTrace) {
    Program p = split_static(parse(kNoPreferred)).rules;
    LiteralSet x = set("a b");
    EXPECT_EQ(be_C_operator(p, x), set("neg_a b"));
    EXPECT_EQ(be_C_operator(p, x, false), set("a b"));
    EXPECT_EQ(be_C_operator({}, x), LiteralSet{});
    Program pre = parse("a :- b.").rules;
    EXPECT_THROW(be_C_operator(pre, x), ValidationError);
}

TEST(BePreferred, Chain) {
    StaticSplit s = split_static(parse(kChain));
    EXPECT_TRUE(be_preferred(s.rules, s.order, set("a b")));
    EXPECT_FALSE(be_preferred(s.rules, s.order, set("a neg_b")));
    EXPECT_FALSE(be_preferred(s.rules, s.order, set("a")));
}

TEST(BePreferred, NoPreferred) {
    StaticSplit s = split_static(parse(kNoPreferred));
    for (const auto& x : answer_sets_search(s.rules)) EXPECT_FALSE(be_preferred(s.rules, s.order, x));
}

TEST(BePreferred, GuardTrips) {
    std::string text = kNoPreferred;
    for (int i = 1; i <= 6; ++i) text += " f" + std::to_string(i) + " :- name(m" + std::to_string(i) + ").";
    StaticSplit s = split_static(parse(text));
    LiteralSet x = set("a b f1 f2 f3 f4 f5 f6");
    ASSERT_TRUE(is_answer_set(s.rules, x));
    EXPECT_THROW(be_preferred(s.rules, s.order, x), ResourceLimitError);
    EXPECT_FALSE(be_preferred(s.rules, s.order, x, 200000));
}

TEST(BeCharacterisation, Chain) {
    Program p = split_static(parse(kChain)).rules;
    TotalOrder total = descending({0, 1, 2});
    EXPECT_TRUE(be_characterisation(p, total, set("a b")));
    EXPECT_FALSE(be_characterisation(p, total, set("a neg_b")));
    Program plain = parse("a. b :- a.").rules;
    EXPECT_TRUE(be_characterisation(plain, descending({0, 1}), set("a b")));
}

TEST(BeReduce, KeepsMostPreferredPreimage) {
    Program p = parse("a :- name(n1), not b. a :- name(n2), c, not b. x :- name(n3), d.").rules;
    Program red = be_reduce(p, descending({1, 2, 0}), set("a c"));
    ASSERT_EQ(red.size(), 1u);
    EXPECT_TRUE(red[0].pbody.empty());
    EXPECT_EQ(red[0].nbody.size(), 1u);
}

TEST(Extensions, Counts) {
    Program three = parse("a :- name(r1). b :- name(r2). c :- name(r3).").rules;
    EXPECT_EQ(total_extensions({}, three).size(), 6u);
    PreferenceOrder chain = strictify(
        PreferenceOrder{{{Term::constant("r1"), Term::constant("r2")}, {Term::constant("r2"), Term::constant("r3")}}});
    auto one = total_extensions(chain, three);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0].ascending, (std::vector<std::size_t>{0, 1, 2}));
    StaticSplit birds = split_static(parse(kBirds));
    auto ext = total_extensions(birds.order, birds.rules);
    EXPECT_EQ(ext.size(), 60u);
    for (const auto& t : ext) EXPECT_TRUE(t.less(1, 0));
}

TEST(Extensions, CycleIsError) {
    Program two = parse("a :- name(r1). b :- name(r2).").rules;
    PreferenceOrder cyc{{{Term::constant("r1"), Term::constant("r2")}, {Term::constant("r2"), Term::constant("r1")}}};
    EXPECT_THROW(total_extensions(cyc, two), ValidationError);
}

TEST(CriterionNames, RoundTrip) {
    for (Criterion c : {Criterion::Static, Criterion::Dynamic, Criterion::WZL, Criterion::BEEnum,
                        Criterion::BEOriginal})
        EXPECT_EQ(parse_criterion(to_string(c)), c);
    EXPECT_EQ(to_string(Criterion::Static), "dst-static");
}
