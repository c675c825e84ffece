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

#ifndef ORDLP_TRANSFORMS_HPP
#define ORDLP_TRANSFORMS_HPP

#include "ordlp/model.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ordlp {

enum class Strategy { T, Tstatic, W, WTA, U, V, S };

const std::vector<Strategy>& all_strategies();
std::string to_string(Strategy s);
std::optional<Strategy> parse_strategy(std::string_view s);

namespace tag {
Atom ap(const Term& n);
Atom bl(const Term& n);
Atom blp(const Term& n);  // blocked for a missing prerequisite
Atom ok(const Term& n);
Atom rdy(const Term& n, const Term& m);
Atom prec(const Term& n, const Term& m);
Atom precp(const Term& n, const Term& m);
bool is_tag(const Atom& a);  // ap, bl, blp, ok, rdy, name
} // namespace tag

// Renames into the primed language: p becomes p__p, sign kept. Preference atoms
// stay shared unless prime_prec is set, in which case prec becomes precp.
// Priming a primed literal throws ValidationError.
Literal prime(const Literal& l, bool prime_prec = false);
Rule prime(const Rule& r, bool prime_prec = false);
bool is_primed(const Atom& a);
Literal unprime(const Literal& l);

// The image of one named rule under the dynamic translation, over the given names.
Program tau_T(const Rule& r, const std::vector<Term>& universe);

// t and as rules over all triples and pairs of names; no de-duplication.
Program ta_rules(const std::vector<Term>& names, const std::string& predicate = kPrec);
OrderedProgram ta_closure(const OrderedProgram& p);

// Gives every unnamed rule a fresh name r<k> (k its 1-based position).
OrderedProgram tag_all(const OrderedProgram& p);

Program transform_T(const OrderedProgram& p);
Program transform_T_static(const Program& rules, const PreferenceOrder& order);
Program transform_T_static(const OrderedProgram& p);
Program transform_W(const OrderedProgram& p);
Program transform_WTA(const OrderedProgram& p);
Program transform_U(const OrderedProgram& p);
Program transform_V(const OrderedProgram& p);
Program transform_S(const OrderedProgram& p);

Program transform(const OrderedProgram& p, Strategy s);

} // namespace ordlp

#endif
