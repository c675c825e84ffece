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

#include "ordlp/parser.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace ordlp {

SyntaxError::SyntaxError(const std::string& origin, int line, int column, const std::string& what)
    : Error(origin + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      line_(line), column_(column) {}

namespace {

enum class Tok { Ident, Var, Number, LParen, RParen, LBrack, RBrack, LBrace, RBrace, Comma, Dot,
                 If, Less, Minus, Tilde, Semi, Bar, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

class Lexer {
public:
    Lexer(std::string_view text, std::string origin) : text_(text), origin_(std::move(origin)) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_blank();
            Token t{Tok::End, "", line_, col_};
            if (pos_ >= text_.size()) {
                out.push_back(t);
                return out;
            }
            char c = text_[pos_];
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::size_t start = pos_;
                while (pos_ < text_.size() &&
                       (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                    advance();
                t.text = std::string(text_.substr(start, pos_ - start));
                t.kind = (std::isupper(static_cast<unsigned char>(c)) || c == '_') ? Tok::Var : Tok::Ident;
                if (c == '_' && t.text.size() > 1 && t.text[1] == '_') t.kind = Tok::Ident;
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t start = pos_;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) advance();
                t.text = std::string(text_.substr(start, pos_ - start));
                t.kind = Tok::Number;
            } else if (c == ':' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
                advance();
                advance();
                t.kind = Tok::If;
                t.text = ":-";
            } else {
                static const std::map<char, Tok> single = {
                    {'(', Tok::LParen}, {')', Tok::RParen}, {'[', Tok::LBrack}, {']', Tok::RBrack},
                    {'{', Tok::LBrace}, {'}', Tok::RBrace}, {',', Tok::Comma},  {'.', Tok::Dot},
                    {'<', Tok::Less},   {'-', Tok::Minus},  {'~', Tok::Tilde},  {';', Tok::Semi},
                    {'|', Tok::Bar}};
                auto it = single.find(c);
                if (it == single.end())
                    throw SyntaxError(origin_, line_, col_, std::string("unexpected character '") + c + "'");
                t.kind = it->second;
                t.text = std::string(1, c);
                advance();
            }
            out.push_back(std::move(t));
        }
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_blank() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    std::string origin_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    Parser(std::vector<Token> toks, std::string origin, ParseOptions opts)
        : toks_(std::move(toks)), origin_(std::move(origin)), opts_(opts) {}

    OrderedProgram program() {
        OrderedProgram out;
        std::map<Term, int> names;
        while (peek().kind != Tok::End) {
            const Token& start = peek();
            Rule r = rule();
            if (r.name && r.name->is_ground()) {
                auto [it, fresh] = names.emplace(*r.name, start.line);
                if (!fresh)
                    fail(start, "duplicate rule name " + to_string(*r.name) + " (first used on line " +
                                    std::to_string(it->second) + ")");
            }
            out.rules.push_back(std::move(r));
        }
        return out;
    }

    LiteralSet literal_set() {
        std::set<Literal> lits;
        bool braces = accept(Tok::LBrace);
        bool lit_marker = false;
        while (peek().kind != Tok::End && peek().kind != Tok::RBrace) {
            if (peek().kind == Tok::Ident && peek().text == "Lit") {
                next();
                lit_marker = true;
            } else if (peek().kind == Tok::Var && peek().text == "Lit") {
                next();
                lit_marker = true;
            } else {
                lits.insert(literal());
            }
            accept(Tok::Comma);
        }
        if (braces) expect(Tok::RBrace, "'}'");
        if (peek().kind != Tok::End) fail(peek(), "trailing input after literal set");
        if (lit_marker) return LiteralSet::inconsistent();
        return LiteralSet(std::move(lits));
    }

private:
    const Token& peek(std::size_t k = 0) const {
        std::size_t i = std::min(pos_ + k, toks_.size() - 1);
        return toks_[i];
    }
    const Token& next() {
        const Token& t = toks_[pos_];
        if (pos_ + 1 < toks_.size()) ++pos_;
        return t;
    }
    bool accept(Tok k) {
        if (peek().kind != k) return false;
        next();
        return true;
    }
    const Token& expect(Tok k, const char* what) {
        if (peek().kind != k) fail(peek(), std::string("expected ") + what + describe(peek()));
        return next();
    }
    std::string describe(const Token& t) const {
        if (t.kind == Tok::End) return ", found end of input";
        return ", found '" + t.text + "'";
    }
    [[noreturn]] void fail(const Token& t, const std::string& msg) const {
        throw SyntaxError(origin_, t.line, t.column, msg);
    }

    void check_symbol(const Token& t, const std::string& predicate, std::size_t arity) const {
        if (opts_.intermediate) return;
        if (t.text.find("__") != std::string::npos)
            fail(t, "identifiers containing '__' are reserved: " + t.text);
        if (t.text == "neg_prec" || is_reserved_predicate(predicate, arity))
            fail(t, "reserved predicate " + t.text + "/" + std::to_string(arity) + " in user input");
    }

    bool is_disjunction(const Token& t) const {
        return t.kind == Tok::Semi || t.kind == Tok::Bar || (t.kind == Tok::Ident && t.text == "v");
    }

    Rule rule() {
        Rule r;
        const Token& start = peek();
        if (accept(Tok::If)) {
            body(r, start);
            expect(Tok::Dot, "'.'");
            return r;
        }
        if (peek().kind == Tok::Ident && peek().text == "false" && peek(1).kind == Tok::If) {
            next();
            next();
            body(r, start);
            expect(Tok::Dot, "'.'");
            return r;
        }
        r.head = literal();
        if (is_disjunction(peek()))
            fail(peek(), "disjunctive heads are not supported");
        if (accept(Tok::If)) body(r, start);
        expect(Tok::Dot, "'.'");
        return r;
    }

    void body(Rule& r, const Token& start) {
        do {
            const Token& t = peek();
            if (!opts_.intermediate && t.kind == Tok::LBrack) {
                next();
                set_name(r, term(), t);
                expect(Tok::RBrack, "']'");
            } else if (!opts_.intermediate && t.kind == Tok::Ident && t.text == "name" &&
                       peek(1).kind == Tok::LParen) {
                next();
                next();
                set_name(r, term(), t);
                expect(Tok::RParen, "')'");
            } else if ((t.kind == Tok::Ident && t.text == "not") || t.kind == Tok::Tilde) {
                next();
                r.nbody.push_back(literal());
            } else {
                r.pbody.push_back(literal());
            }
        } while (accept(Tok::Comma));
        if (!r.head && r.pbody.empty() && r.nbody.empty())
            fail(start, "integrity constraint needs a nonempty body");
    }

    void set_name(Rule& r, Term name, const Token& at) {
        if (r.name) fail(at, "rule carries more than one name");
        r.name = std::move(name);
    }

    Literal literal() {
        const Token& t = peek();
        if ((t.kind == Tok::Ident && t.text == "neg") || t.kind == Tok::Minus) {
            next();
            return Literal::neg(atom_after_neg());
        }
        if (t.kind == Tok::LParen) return Literal::pos(preference());
        if (t.kind != Tok::Ident) fail(t, "expected a literal" + describe(t));
        if (t.text == "not") fail(t, "'not' is not allowed here");
        Atom a = plain_atom();
        if (a.predicate.size() > 4 && a.predicate.compare(0, 4, "neg_") == 0) {
            a.predicate.erase(0, 4);
            return Literal::neg(std::move(a));
        }
        return Literal::pos(std::move(a));
    }

    // neg (x < y), neg(p), neg p
    Atom atom_after_neg() {
        if (peek().kind != Tok::LParen) return plain_atom();
        if (peek(2).kind == Tok::Less || peek(1).kind == Tok::LParen) return preference();
        next();
        Atom a = plain_atom();
        expect(Tok::RParen, "')'");
        return a;
    }

    Atom preference() {
        expect(Tok::LParen, "'('");
        Term lo = term();
        expect(Tok::Less, "'<'");
        Term hi = term();
        expect(Tok::RParen, "')'");
        return Atom::prec(std::move(lo), std::move(hi));
    }

    Atom plain_atom() {
        const Token& t = peek();
        if (t.kind != Tok::Ident) fail(t, "expected an atom" + describe(t));
        next();
        Atom a{t.text, {}};
        if (accept(Tok::LParen)) {
            do {
                a.args.push_back(term());
            } while (accept(Tok::Comma));
            expect(Tok::RParen, "')'");
        }
        check_symbol(t, a.predicate, a.arity());
        return a;
    }

    Term term() {
        const Token& t = peek();
        switch (t.kind) {
        case Tok::Var:
            next();
            return Term::variable(t.text);
        case Tok::Number:
            next();
            return Term::constant(t.text);
        case Tok::Ident: {
            next();
            if (!opts_.intermediate && t.text.find("__") != std::string::npos)
                fail(t, "identifiers containing '__' are reserved: " + t.text);
            if (!accept(Tok::LParen)) return Term::constant(t.text);
            std::vector<Term> args;
            do {
                args.push_back(term());
            } while (accept(Tok::Comma));
            expect(Tok::RParen, "')'");
            return Term::compound(t.text, std::move(args));
        }
        default:
            fail(t, "expected a term" + describe(t));
        }
    }

    std::vector<Token> toks_;
    std::string origin_;
    ParseOptions opts_;
    std::size_t pos_ = 0;
};

} // namespace

OrderedProgram parse_program(const SourceProgram& src, const ParseOptions& opts) {
    Parser p(Lexer(src.text, src.origin).run(), src.origin, opts);
    return p.program();
}

LiteralSet parse_literal_set(std::string_view text, const std::string& origin) {
    ParseOptions opts;
    opts.intermediate = true;
    Parser p(Lexer(text, origin).run(), origin, opts);
    return p.literal_set();
}

namespace {
std::string format_term(const Term& t) { return to_string(t); }

std::string format_atom(const Atom& a) {
    if (a.is_preference()) return "(" + format_term(a.args[0]) + " < " + format_term(a.args[1]) + ")";
    std::ostringstream os;
    os << a;
    return os.str();
}
} // namespace

std::string format_literal(const Literal& l) {
    if (!l.negated) return format_atom(l.atom);
    return "neg " + format_atom(l.atom);
}

std::string format_rule(const Rule& r) {
    std::string out = r.head ? format_literal(*r.head) : "false";
    std::vector<std::string> elems;
    if (r.name) elems.push_back("name(" + format_term(*r.name) + ")");
    for (const auto& l : r.pbody) elems.push_back(format_literal(l));
    for (const auto& l : r.nbody) elems.push_back("not " + format_literal(l));
    if (!elems.empty()) {
        out += " :- ";
        for (std::size_t i = 0; i < elems.size(); ++i) out += (i ? ", " : "") + elems[i];
    }
    return out + ".";
}

std::string format_program(const OrderedProgram& p) {
    std::string out;
    for (const auto& r : p.rules) out += format_rule(r) + "\n";
    return out;
}

} // namespace ordlp
