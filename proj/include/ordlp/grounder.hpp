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

#ifndef ORDLP_GROUNDER_HPP
#define ORDLP_GROUNDER_HPP

#include "ordlp/model.hpp"

#include <map>
#include <set>
#include <string>

namespace ordlp {

class GroundingError : public Error {
public:
    using Error::Error;
};

struct GroundingConfig {
    std::size_t max_instantiations = 100000;
    bool flatten = true;
};

// Constants occurring anywhere in p, including leaves of compound terms and names.
std::set<Term> herbrand_constants(const OrderedProgram& p);

// Naive cross product: every rule is replaced by all substitutions of its variables,
// taken in order of first occurrence, over the Herbrand constants. Variables that
// occur only in the head or name range over the whole universe as well.
// Throws ResourceLimitError past cfg.max_instantiations, GroundingError on a
// name collision between instances.
OrderedProgram instantiate(const OrderedProgram& p, const GroundingConfig& cfg = {});

// Flat constant -> original compound term.
struct FlatteningMap {
    std::map<std::string, Term> original;

    Term restore(const Term& t) const;
    Literal restore(const Literal& l) const;
    LiteralSet restore(const LiteralSet& x) const;
};

struct Flattened {
    OrderedProgram program;
    FlatteningMap map;
};

// f(a) becomes f_a, g(f(a)) becomes g_f_a. Collisions with existing constants or
// between distinct terms raise GroundingError.
Flattened flatten_terms(const OrderedProgram& p);

// instantiate, then flatten when cfg.flatten is set.
Flattened ground(const OrderedProgram& p, const GroundingConfig& cfg = {});

} // namespace ordlp

#endif
