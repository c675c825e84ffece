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

#ifndef ORDLP_ORACLES_HPP
#define ORDLP_ORACLES_HPP

#include "ordlp/model.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ordlp {

// The candidate handed to an oracle is not an answer set of the relevant program.
class NotAnswerSetError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

enum class Criterion { Static, Dynamic, WZL, BEEnum, BEOriginal };

std::string to_string(Criterion c);
std::optional<Criterion> parse_criterion(std::string_view s);

struct EnumerationWitness {
    std::vector<std::size_t> ordering; // rule indices, first placed first
    Criterion criterion;
};

// Ties among placeable rules are broken by position in `priority` (rules not listed
// come after, in index order). Every criterion below is monotone in the placed set,
// so greedy placement finds a witness whenever one exists.
struct EnumerationOptions {
    std::vector<std::size_t> priority;
    bool require_preference_derivation = true; // condition 2 of the dynamic criterion
};

// Rules are compared through their names; unnamed rules are incomparable.
std::optional<EnumerationWitness> check_static_preserving(const Program& p, const PreferenceOrder& order,
                                                          const LiteralSet& x,
                                                          const EnumerationOptions& opts = {});
std::optional<EnumerationWitness> check_wzl_preserving(const Program& p, const PreferenceOrder& order,
                                                       const LiteralSet& x,
                                                       const EnumerationOptions& opts = {});
std::optional<EnumerationWitness> check_be_preserving(const Program& p, const PreferenceOrder& order,
                                                      const LiteralSet& x,
                                                      const EnumerationOptions& opts = {});

// Enumerates all of ta_closure(p); witness indices refer to ta_closure(p).rules.
std::optional<EnumerationWitness> check_dynamic_preserving(const OrderedProgram& p, const LiteralSet& x,
                                                           const EnumerationOptions& opts = {});

// Re-checks a witness against the definition, position by position. For Dynamic,
// `p` must be ta_closure of the ordered program and `order` is ignored.
bool verify_witness(const Program& p, const PreferenceOrder& order, const LiteralSet& x,
                    const EnumerationWitness& w, bool require_preference_derivation = true);

// Rule indices in ascending priority: the last entry is the most preferred rule.
struct TotalOrder {
    std::vector<std::size_t> ascending;
    bool less(std::size_t a, std::size_t b) const; // a has lower priority than b
};

// Calls visit on every linear extension of `order` over the rules of `universe`,
// in a fixed order, until visit returns false. Throws ResourceLimitError once more
// than `guard` extensions would be produced.
void for_each_extension(const PreferenceOrder& order, const Program& universe,
                        const std::function<bool(const TotalOrder&)>& visit, std::size_t guard = 40320);
std::vector<TotalOrder> total_extensions(const PreferenceOrder& order, const Program& universe,
                                         std::size_t guard = 40320);

// rules: prerequisite-free, most preferred first. With second_case off, the rule
// "skip if head in x and defeated by x" is not applied.
LiteralSet be_C_operator(const Program& rules, const LiteralSet& x, bool second_case = true);

// (Pi_X, <<_X): rules with pbody within x, reduced to head <- not nbody, most
// preferred first, each reduced rule positioned by its most preferred preimage.
Program be_reduce(const Program& p, const TotalOrder& total, const LiteralSet& x);

bool be_preferred_total(const Program& p, const TotalOrder& total, const LiteralSet& x);
bool be_preferred(const Program& p, const PreferenceOrder& order, const LiteralSet& x,
                  std::size_t guard = 40320);

bool be_characterisation(const Program& p, const TotalOrder& total, const LiteralSet& x);

// Index pairs (lower, higher) of rules related by the order through their names.
std::vector<std::pair<std::size_t, std::size_t>> rule_order(const Program& p, const PreferenceOrder& order);

} // namespace ordlp

#endif
