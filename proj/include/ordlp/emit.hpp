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

#ifndef ORDLP_EMIT_HPP
#define ORDLP_EMIT_HPP

#include "ordlp/model.hpp"

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ordlp {

enum class Dialect { Intermediate, Dlv, Smodels };

std::string to_string(Dialect d);
std::optional<Dialect> parse_dialect(std::string_view s);

// Predicates (symbol, arity) of the source language, preference atoms excluded.
struct UserLanguage {
    std::set<std::pair<std::string, std::size_t>> predicates;
    bool contains(const Atom& a) const { return predicates.count({a.predicate, a.arity()}) > 0; }
};

UserLanguage user_language(const OrderedProgram& source);

struct EmitOptions {
    // Named rules; each gets a name(n) fact.
    std::vector<Term> names;
    // When set, every non-tag atom gets a consistency constraint, and preference
    // atoms get one for each pair of names. Otherwise only atoms occurring with
    // both signs do.
    bool constrain_all_atoms = false;
    // Shown predicates for the solver dialects.
    std::optional<UserLanguage> show;
};

std::string emit_literal(const Literal& l);
std::string emit_rule(const Rule& r, Dialect d);

// Ground program text; ValidationError on a non-ground program.
std::string emit(const Program& p, Dialect d, const EmitOptions& opts = {});

LiteralSet nice_filter(const LiteralSet& x, const UserLanguage& language);

} // namespace ordlp

#endif
