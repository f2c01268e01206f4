#pragma once

// A small first-order language over finite sets, maps and relations, with a
// hand-written parser that reports line:column positions on every error.
//
// Grammar (binders reach as far right as possible, -> is right-associative,
// & binds tighter than ->):
//
//   formula := "exists" IDENT ":" IDENT "." formula
//            | "forall" IDENT ":" IDENT "." formula
//            | implies
//   implies := conj ( "->" formula )?
//   conj    := atom ( "&" atom )*
//   atom    := "T"
//            | "(" formula ")"
//            | IDENT "(" term ("," term)* ")"      -- when IDENT names a relation
//            | term "=" term
//   term    := IDENT | IDENT "(" term ")"          -- map applications, variable innermost
//
// Identifiers are [A-Za-z_][A-Za-z0-9_']*.  Whether an IDENT is a relation,
// a map or a variable is resolved against a symbol table at parse time.

#include <exfin/presub.hpp>

#include <map>
#include <memory>
#include <optional>

namespace exfin {

class parse_error : public error {
public:
    parse_error(int line, int col, const std::string& what_arg)
        : error(std::to_string(line) + ":" + std::to_string(col) + ": " + what_arg),
          line_(line), col_(col) {}
    int line() const { return line_; }
    int column() const { return col_; }

private:
    int line_, col_;
};

struct Term {
    std::string var;                    // innermost variable
    std::vector<FiniteMap> apps;        // maps applied, innermost first
    std::vector<std::string> app_names; // parallel to apps, for printing

    std::string describe() const {
        std::string s = var;
        for (const auto& n : app_names) s = n + "(" + s + ")"; // innermost first
        return s;
    }
};

struct NamedRelation {
    std::string name;
    std::vector<FiniteSet> feet;
    Presubobject psub; // target must be the tuple product of the feet

    NamedRelation(std::string nm, std::vector<FiniteSet> ft, Presubobject ps)
        : name(std::move(nm)), feet(std::move(ft)), psub(std::move(ps)) {
        if (psub.target != tuple_product(feet).object)
            throw error("relation \"" + name + "\" must live over the product of its feet");
    }
};

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

class Formula {
public:
    enum class Kind { Truth, Eq, And, Implies, Exists, Forall, Rel };

    Kind kind;
    Term lhs, rhs;                       // Eq
    FormulaPtr a, b;                     // And / Implies children; quantifier body in a
    std::string bound_var;               // Exists / Forall
    FiniteSet bound_type;                // Exists / Forall
    std::optional<NamedRelation> rel;    // Rel
    std::vector<Term> args;              // Rel

    std::string describe() const {
        switch (kind) {
        case Kind::Truth: return "T";
        case Kind::Eq: return lhs.describe() + " = " + rhs.describe();
        case Kind::And: return "(" + a->describe() + " & " + b->describe() + ")";
        case Kind::Implies: return "(" + a->describe() + " -> " + b->describe() + ")";
        case Kind::Exists: return "exists " + bound_var + ":" + bound_type.describe() +
                                  ". " + a->describe();
        case Kind::Forall: return "forall " + bound_var + ":" + bound_type.describe() +
                                  ". " + a->describe();
        case Kind::Rel: {
            std::string s = rel->name + "(";
            for (std::size_t i = 0; i < args.size(); ++i) {
                if (i) s += ", ";
                s += args[i].describe();
            }
            return s + ")";
        }
        }
        return "?";
    }
};

inline FormulaPtr f_truth() {
    auto f = std::make_shared<Formula>();
    f->kind = Formula::Kind::Truth;
    return f;
}
inline FormulaPtr f_eq(Term l, Term r) {
    auto f = std::make_shared<Formula>();
    f->kind = Formula::Kind::Eq;
    f->lhs = std::move(l);
    f->rhs = std::move(r);
    return f;
}
inline FormulaPtr f_and(FormulaPtr x, FormulaPtr y) {
    auto f = std::make_shared<Formula>();
    f->kind = Formula::Kind::And;
    f->a = std::move(x);
    f->b = std::move(y);
    return f;
}
inline FormulaPtr f_implies(FormulaPtr x, FormulaPtr y) {
    auto f = std::make_shared<Formula>();
    f->kind = Formula::Kind::Implies;
    f->a = std::move(x);
    f->b = std::move(y);
    return f;
}
inline FormulaPtr f_exists(std::string var, FiniteSet type, FormulaPtr body) {
    auto f = std::make_shared<Formula>();
    f->kind = Formula::Kind::Exists;
    f->bound_var = std::move(var);
    f->bound_type = std::move(type);
    f->a = std::move(body);
    return f;
}
inline FormulaPtr f_forall(std::string var, FiniteSet type, FormulaPtr body) {
    auto f = std::make_shared<Formula>();
    f->kind = Formula::Kind::Forall;
    f->bound_var = std::move(var);
    f->bound_type = std::move(type);
    f->a = std::move(body);
    return f;
}
inline FormulaPtr f_rel(NamedRelation r, std::vector<Term> args) {
    if (args.size() != r.feet.size())
        throw error("relation \"" + r.name + "\" takes " + std::to_string(r.feet.size()) +
                    " arguments, got " + std::to_string(args.size()));
    auto f = std::make_shared<Formula>();
    f->kind = Formula::Kind::Rel;
    f->rel = std::move(r);
    f->args = std::move(args);
    return f;
}

// Symbol table the parser resolves identifiers against.
struct SymbolTable {
    std::map<std::string, FiniteSet> sets;
    std::map<std::string, FiniteMap> maps;
    std::map<std::string, NamedRelation> relations;
};

namespace detail {

struct Token {
    enum class Kind { Ident, LParen, RParen, Comma, Colon, Dot, Equals, Amp, Arrow, End };
    Kind kind;
    std::string text;
    int line, col;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    static bool ident_start(char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
    }
    static bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9') || c == '\''; }

    void advance() {
        while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t' ||
                                      src_[pos_] == '\r' || src_[pos_] == '\n')) {
            if (src_[pos_] == '\n') { ++line_; col_ = 1; } else ++col_;
            ++pos_;
        }
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= src_.size()) { tok_.kind = Token::Kind::End; tok_.text.clear(); return; }
        char c = src_[pos_];
        auto one = [&](Token::Kind k) {
            tok_.kind = k;
            tok_.text = std::string(1, c);
            ++pos_; ++col_;
        };
        switch (c) {
        case '(': one(Token::Kind::LParen); return;
        case ')': one(Token::Kind::RParen); return;
        case ',': one(Token::Kind::Comma); return;
        case ':': one(Token::Kind::Colon); return;
        case '.': one(Token::Kind::Dot); return;
        case '=': one(Token::Kind::Equals); return;
        case '&': one(Token::Kind::Amp); return;
        case '-':
            if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
                tok_.kind = Token::Kind::Arrow;
                tok_.text = "->";
                pos_ += 2; col_ += 2;
                return;
            }
            throw parse_error(line_, col_, "stray '-' (did you mean \"->\"?)");
        default: break;
        }
        if (!ident_start(c))
            throw parse_error(line_, col_, std::string("unexpected character '") + c + "'");
        std::size_t start = pos_;
        while (pos_ < src_.size() && ident_char(src_[pos_])) { ++pos_; ++col_; }
        tok_.kind = Token::Kind::Ident;
        tok_.text = src_.substr(start, pos_ - start);
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_{Token::Kind::End, "", 1, 1};
};

class Parser {
public:
    Parser(const std::string& src, const SymbolTable& syms) : lex_(src), syms_(syms) {}

    FormulaPtr parse() {
        FormulaPtr f = formula();
        expect(Token::Kind::End, "end of formula");
        return f;
    }

private:
    [[noreturn]] void fail(const Token& t, const std::string& msg) {
        throw parse_error(t.line, t.col, msg);
    }

    Token expect(Token::Kind k, const std::string& what) {
        if (lex_.peek().kind != k) {
            const Token& t = lex_.peek();
            std::string got = t.kind == Token::Kind::End ? "end of input" : "\"" + t.text + "\"";
            fail(t, "expected " + what + ", got " + got);
        }
        return lex_.take();
    }

    FormulaPtr formula() {
        const Token& t = lex_.peek();
        if (t.kind == Token::Kind::Ident && (t.text == "exists" || t.text == "forall")) {
            Token q = lex_.take();
            Token var = expect(Token::Kind::Ident, "a variable name after \"" + q.text + "\"");
            if (syms_.maps.count(var.text) || syms_.relations.count(var.text) ||
                var.text == "exists" || var.text == "forall" || var.text == "T")
                fail(var, "variable \"" + var.text + "\" shadows another symbol");
            expect(Token::Kind::Colon, "\":\" after the bound variable");
            Token ty = expect(Token::Kind::Ident, "a set name after \":\"");
            auto it = syms_.sets.find(ty.text);
            if (it == syms_.sets.end()) fail(ty, "unknown set \"" + ty.text + "\"");
            expect(Token::Kind::Dot, "\".\" before the body");
            FormulaPtr body = formula();
            return q.text == "exists" ? f_exists(var.text, it->second, body)
                                      : f_forall(var.text, it->second, body);
        }
        return implies();
    }

    FormulaPtr implies() {
        FormulaPtr left = conj();
        if (lex_.peek().kind == Token::Kind::Arrow) {
            lex_.take();
            return f_implies(std::move(left), formula()); // right-assoc; binders allowed
        }
        return left;
    }

    FormulaPtr conj() {
        FormulaPtr left = atom();
        while (lex_.peek().kind == Token::Kind::Amp) {
            lex_.take();
            left = f_and(std::move(left), atom());
        }
        return left;
    }

    FormulaPtr atom() {
        const Token& t = lex_.peek();
        if (t.kind == Token::Kind::LParen) {
            lex_.take();
            FormulaPtr f = formula();
            expect(Token::Kind::RParen, "\")\"");
            return f;
        }
        if (t.kind != Token::Kind::Ident)
            fail(t, "expected an atom, got " +
                        (t.kind == Token::Kind::End ? "end of input" : "\"" + t.text + "\""));
        if (t.text == "T") {
            lex_.take();
            return f_truth();
        }
        if (t.text == "exists" || t.text == "forall")
            fail(t, "\"" + t.text + "\" must be parenthesized here");
        auto rit = syms_.relations.find(t.text);
        if (rit != syms_.relations.end()) {
            Token name = lex_.take();
            expect(Token::Kind::LParen, "\"(\" after relation \"" + name.text + "\"");
            std::vector<Term> args;
            args.push_back(term());
            while (lex_.peek().kind == Token::Kind::Comma) {
                lex_.take();
                args.push_back(term());
            }
            Token close = expect(Token::Kind::RParen, "\")\" closing the argument list");
            if (args.size() != rit->second.feet.size())
                fail(close, "relation \"" + name.text + "\" takes " +
                                std::to_string(rit->second.feet.size()) + " arguments, got " +
                                std::to_string(args.size()));
            return f_rel(rit->second, std::move(args));
        }
        Term l = term();
        expect(Token::Kind::Equals, "\"=\" after a term");
        Term r = term();
        return f_eq(std::move(l), std::move(r));
    }

    Term term() {
        Token id = expect(Token::Kind::Ident, "a term");
        if (id.text == "exists" || id.text == "forall" || id.text == "T")
            fail(id, "\"" + id.text + "\" cannot start a term");
        if (lex_.peek().kind == Token::Kind::LParen) {
            auto mit = syms_.maps.find(id.text);
            if (mit == syms_.maps.end()) fail(id, "unknown map \"" + id.text + "\"");
            lex_.take();
            Term inner = term();
            expect(Token::Kind::RParen, "\")\" closing the application");
            inner.apps.push_back(mit->second);
            inner.app_names.push_back(id.text);
            return inner;
        }
        if (syms_.maps.count(id.text))
            fail(id, "map \"" + id.text + "\" needs an argument");
        if (syms_.relations.count(id.text))
            fail(id, "relation \"" + id.text + "\" cannot be used as a term");
        Term v;
        v.var = id.text;
        return v;
    }

    Lexer lex_;
    const SymbolTable& syms_;
};

} // namespace detail

inline FormulaPtr parse_formula(const std::string& src, const SymbolTable& syms) {
    return detail::Parser(src, syms).parse();
}

// Typing context for free variables, outermost first.
using Context = std::vector<std::pair<std::string, FiniteSet>>;

// Parses "x:X, y:Y" against the symbol table's sets.
inline Context parse_context(const std::string& src, const SymbolTable& syms) {
    detail::Lexer lex(src);
    Context ctx;
    if (lex.peek().kind == detail::Token::Kind::End) return ctx;
    while (true) {
        detail::Token var = lex.take();
        if (var.kind != detail::Token::Kind::Ident)
            throw parse_error(var.line, var.col, "expected a variable name");
        if (syms.maps.count(var.text) || syms.relations.count(var.text) ||
            var.text == "exists" || var.text == "forall" || var.text == "T")
            throw parse_error(var.line, var.col,
                              "variable \"" + var.text + "\" shadows another symbol");
        for (const auto& [n, s] : ctx)
            if (n == var.text)
                throw parse_error(var.line, var.col, "variable \"" + var.text + "\" repeats");
        detail::Token colon = lex.take();
        if (colon.kind != detail::Token::Kind::Colon)
            throw parse_error(colon.line, colon.col, "expected \":\" after the variable");
        detail::Token ty = lex.take();
        if (ty.kind != detail::Token::Kind::Ident)
            throw parse_error(ty.line, ty.col, "expected a set name");
        auto it = syms.sets.find(ty.text);
        if (it == syms.sets.end())
            throw parse_error(ty.line, ty.col, "unknown set \"" + ty.text + "\"");
        ctx.emplace_back(var.text, it->second);
        if (lex.peek().kind == detail::Token::Kind::End) break;
        detail::Token comma = lex.take();
        if (comma.kind != detail::Token::Kind::Comma)
            throw parse_error(comma.line, comma.col, "expected \",\" between context entries");
    }
    return ctx;
}

} // namespace exfin
