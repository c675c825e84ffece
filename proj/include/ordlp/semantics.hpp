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

#ifndef ORDLP_SEMANTICS_HPP
#define ORDLP_SEMANTICS_HPP

#include "ordlp/model.hpp"

#include <optional>
#include <vector>

namespace ordlp {

// A program whose rules have empty nbody.
using BasicProgram = Program;

struct DerivationTrace {
    // T^0 = {} is implicit; stages[i] is T^(i+1).
    std::vector<LiteralSet> stages;
};

// Gelfond-Lifschitz reduct. Integrity constraints survive like other rules.
BasicProgram reduct(const Program& p, const LiteralSet& x);

// Smallest logically closed set closed under b; headless rules are ignored here.
LiteralSet th_closure(const BasicProgram& b);

DerivationTrace tp_trace(const BasicProgram& b);

// Least i >= 1 with l in T^i.
std::optional<std::size_t> stage_of(const DerivationTrace& trace, const Literal& l);

// Th(p^x) = x, and for consistent x no integrity constraint of p is violated.
// Constraints behave like their desugared form fresh <- body, not fresh.
bool is_answer_set(const Program& p, const LiteralSet& x);

// All X within the head literals of p; ResourceLimitError when there are more than
// bound distinct head literals. Canonically sorted.
std::vector<LiteralSet> answer_sets_bruteforce(const Program& p, std::size_t bound = 20);

struct SearchOptions {
    std::size_t max_models = 0; // 0: all
};

// Backtracking over the literals occurring weakly negated, with bound propagation.
// Canonically sorted.
std::vector<LiteralSet> answer_sets_search(const Program& p, const SearchOptions& opts = {});

// Rules r with pbody(r) within x and nbody(r) disjoint from x.
std::vector<std::size_t> generating_rule_indices(const Program& p, const LiteralSet& x);
Program generating_rules(const Program& p, const LiteralSet& x);

// Head literals of p, in first-occurrence order.
std::vector<Literal> head_literals(const Program& p);

} // namespace ordlp

#endif
