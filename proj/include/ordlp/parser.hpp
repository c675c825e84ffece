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

#ifndef ORDLP_PARSER_HPP
#define ORDLP_PARSER_HPP

#include "ordlp/model.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace ordlp {

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& origin, int line, int column, const std::string& what);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

struct SourceProgram {
    std::string text;
    std::string origin = "<stdin>";
};

struct ParseOptions {
    // Reads emitted intermediate code: reserved predicates are ordinary atoms and
    // name(...) in a body is a plain literal rather than a naming annotation.
    bool intermediate = false;
};

/// Parses the surface syntax of ordered logic programs.
///
///   b :- name(n2), neg a, not c.      named rule; `[n2]` is an alternative naming form
///   (n3 < n2) :- not d.               preference atom prec(n3,n2)
///   false :- a, b.   or   :- a, b.    integrity constraint
///
/// `neg`/`-` and a `neg_` identifier prefix denote strong negation, `not`/`~` weak
/// negation, `%` starts a comment. Variables start with an uppercase letter.
OrderedProgram parse_program(const SourceProgram& src, const ParseOptions& opts = {});

/// Parses whitespace- or comma-separated literals, optionally wrapped in braces.
/// `Lit` denotes the inconsistent closure.
LiteralSet parse_literal_set(std::string_view text, const std::string& origin = "<candidate>");

std::string format_literal(const Literal& l);
std::string format_rule(const Rule& r);
/// Prints a program in the surface syntax; one rule per line.
std::string format_program(const OrderedProgram& p);

} // namespace ordlp

#endif
