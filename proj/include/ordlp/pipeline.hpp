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

#ifndef ORDLP_PIPELINE_HPP
#define ORDLP_PIPELINE_HPP

#include "ordlp/emit.hpp"
#include "ordlp/grounder.hpp"
#include "ordlp/model.hpp"
#include "ordlp/semantics.hpp"
#include "ordlp/transforms.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ordlp {

// A parsed, ground and flattened input.
struct LoadedProgram {
    OrderedProgram source;
    OrderedProgram ground;
    FlatteningMap map;
    UserLanguage language;
};

// Variables are accepted only when allow_variables is set (.vlp input).
LoadedProgram load_program(const std::string& text, const std::string& origin, bool allow_variables,
                           const GroundingConfig& cfg = {});
// Reads a .lp or .vlp file; the extension decides whether variables are allowed.
LoadedProgram load_file(const std::string& path, const GroundingConfig& cfg = {});

struct Compiled {
    Strategy strategy;
    Program program;
    EmitOptions emit;
};

Compiled compile(const OrderedProgram& ground, Strategy s, bool auto_name = false);

// Answer sets of the compiled program, or of the ground program without a strategy.
std::vector<LiteralSet> solve(const LoadedProgram& in, std::optional<Strategy> s, bool nice,
                              bool auto_name = false, const SearchOptions& opts = {});

// Maps user-level literals to the flattened spelling used by the ground program.
Literal flatten_literal(const Literal& l);
LiteralSet flatten_literals(const LiteralSet& x);

std::string display(const LiteralSet& x, const FlatteningMap& map);

} // namespace ordlp

#endif
