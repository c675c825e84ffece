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

#ifndef ORDLP_MODEL_HPP
#define ORDLP_MODEL_HPP

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ordlp {

// Base class of every error the library reports.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

// A configurable guard (grounding size, extension count, ...) was exceeded.
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

// Terms name objects and rules. Variables start with an uppercase letter.
struct Term {
    enum class Kind { Constant, Variable, Compound };

    Kind kind = Kind::Constant;
    std::string symbol;
    std::vector<Term> args;

    static Term constant(std::string s) { return Term{Kind::Constant, std::move(s), {}}; }
    static Term variable(std::string s) { return Term{Kind::Variable, std::move(s), {}}; }
    static Term compound(std::string f, std::vector<Term> a) {
        return Term{Kind::Compound, std::move(f), std::move(a)};
    }

    bool is_variable() const { return kind == Kind::Variable; }
    bool is_ground() const;

    std::strong_ordering operator<=>(const Term& o) const;
    bool operator==(const Term&) const = default;
};

// Reserved predicate symbols.
inline constexpr const char* kPrec = "prec";        // n < m, m has higher priority
inline constexpr const char* kPrecPrimed = "precp"; // primed preference atom
inline constexpr const char* kApplied = "ap";
inline constexpr const char* kBlocked = "bl";
inline constexpr const char* kBlockedPrereq = "blp";
inline constexpr const char* kOk = "ok";
inline constexpr const char* kReady = "rdy";
inline constexpr const char* kName = "name";
// Suffix marking the primed mirror language, and prefix of fresh constraint atoms.
inline constexpr const char* kPrimeSuffix = "__p";
inline constexpr const char* kFreshPrefix = "__c";

struct Atom {
    std::string predicate;
    std::vector<Term> args;

    static Atom prop(std::string p) { return Atom{std::move(p), {}}; }
    static Atom prec(Term lower, Term higher) {
        return Atom{kPrec, {std::move(lower), std::move(higher)}};
    }

    std::size_t arity() const { return args.size(); }
    bool is_ground() const;
    bool is_preference() const { return predicate == kPrec && args.size() == 2; }

    std::strong_ordering operator<=>(const Atom&) const = default;
    bool operator==(const Atom&) const = default;
};

struct Literal {
    Atom atom;
    bool negated = false; // strong negation

    static Literal pos(Atom a) { return Literal{std::move(a), false}; }
    static Literal neg(Atom a) { return Literal{std::move(a), true}; }

    std::strong_ordering operator<=>(const Literal&) const = default;
    bool operator==(const Literal&) const = default;
};

Literal complement(const Literal& l);

// head <- pbody, not nbody. A missing head makes the rule an integrity constraint.
struct Rule {
    std::optional<Term> name;
    std::optional<Literal> head;
    std::vector<Literal> pbody;
    std::vector<Literal> nbody;

    bool is_constraint() const { return !head.has_value(); }
    bool is_fact() const { return head && pbody.empty() && nbody.empty(); }
    bool is_basic() const { return nbody.empty(); }
    bool is_prerequisite_free() const { return pbody.empty(); }
    bool is_ground() const;

    // Removes duplicate body literals, keeping first occurrences.
    void normalize();

    std::strong_ordering operator<=>(const Rule&) const = default;
    bool operator==(const Rule&) const = default;
};

using Program = std::vector<Rule>;

// A program whose rules may carry names. Naming lives on the rules themselves.
struct OrderedProgram {
    Program rules;

    std::vector<Term> names() const;
    bool operator==(const OrderedProgram&) const = default;
};

// Either a consistent set of literals or the inconsistent closure Lit.
class LiteralSet {
public:
    LiteralSet() = default;
    explicit LiteralSet(std::set<Literal> lits);
    LiteralSet(std::initializer_list<Literal> lits) : LiteralSet(std::set<Literal>(lits)) {}

    static LiteralSet inconsistent();

    bool is_inconsistent() const { return inconsistent_; }
    bool contains(const Literal& l) const { return inconsistent_ || lits_.count(l) > 0; }
    // Literals of a consistent set; empty for Lit.
    const std::set<Literal>& literals() const { return lits_; }
    std::size_t size() const { return lits_.size(); }

    std::strong_ordering operator<=>(const LiteralSet&) const = default;
    bool operator==(const LiteralSet&) const = default;

private:
    bool inconsistent_ = false;
    std::set<Literal> lits_;
};

bool is_consistent(const std::set<Literal>& lits);

// Pairs (lower, higher): the second name has priority over the first.
struct PreferenceOrder {
    std::set<std::pair<Term, Term>> pairs;

    bool prefers(const Term& lower, const Term& higher) const {
        return pairs.count({lower, higher}) > 0;
    }
    bool empty() const { return pairs.empty(); }
    bool operator==(const PreferenceOrder&) const = default;
};

// Transitive closure; throws ValidationError when the result is not irreflexive.
PreferenceOrder strictify(const PreferenceOrder& order);

bool defeated(const Rule& r, const LiteralSet& x);

// Makes the pieces of an ordered program that are not rules.
struct StaticSplit {
    Program rules;          // every rule except the preference facts
    PreferenceOrder order;  // strict partial order induced by the facts
};

// True iff preference atoms occur only as positive facts.
bool is_statically_ordered(const OrderedProgram& p);
StaticSplit split_static(const OrderedProgram& p);
OrderedProgram join_static(const Program& rules, const PreferenceOrder& order);

// Deterministic generator of fresh atoms __c0, __c1, ... not used by a program.
class FreshAtoms {
public:
    explicit FreshAtoms(const Program& p);
    Atom next();

private:
    std::set<std::string> used_;
    std::size_t counter_ = 0;
};

// fresh <- body, not fresh. Throws ValidationError on a head or a used symbol.
Rule desugar_constraint(const Rule& r, const Atom& fresh, const Program& context);
Program desugar_constraints(const Program& p);

struct Violation {
    enum class Kind { DuplicateName, UnknownPreferenceName, ReservedPredicate };
    Kind kind;
    std::size_t rule;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

bool is_reserved_predicate(const std::string& predicate, std::size_t arity);
ValidationReport validate_ordered(const OrderedProgram& p);

// Atoms (with sign stripped) of a program, in order of first occurrence.
std::vector<Atom> program_atoms(const Program& p);

std::ostream& operator<<(std::ostream& os, const Term& t);
std::ostream& operator<<(std::ostream& os, const Atom& a);
std::ostream& operator<<(std::ostream& os, const Literal& l);
std::ostream& operator<<(std::ostream& os, const LiteralSet& x);
std::string to_string(const Term& t);
std::string to_string(const Literal& l);
std::string to_string(const LiteralSet& x);

} // namespace ordlp

#endif
