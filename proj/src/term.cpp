#include "mbal/term.hpp"

#include <cctype>
#include <optional>

namespace mbal {

// ---------------------------------------------------------------------------
// Construction

TermPtr Term::literal(Rational value)
{
    return TermPtr{new Term{Kind::literal, std::move(value), {}, {}}};
}

TermPtr Term::variable(std::string name)
{
    if (name.empty() || name == "box" || name == "dia") {
        throw InputError("invalid variable name '" + name + "'");
    }
    return TermPtr{new Term{Kind::variable, {}, std::move(name), {}}};
}

TermPtr Term::binary(Kind kind, TermPtr lhs, TermPtr rhs)
{
    if (kind != Kind::add && kind != Kind::sub && kind != Kind::mul && kind != Kind::meet && kind != Kind::join) {
        throw InputError("not a binary term kind");
    }
    if (kind == Kind::mul && lhs->kind() == Kind::literal) {
        return scale(lhs->value(), std::move(rhs));
    }
    return TermPtr{new Term{kind, {}, {}, {std::move(lhs), std::move(rhs)}}};
}

TermPtr Term::scale(Rational factor, TermPtr operand)
{
    return TermPtr{new Term{Kind::scale, std::move(factor), {}, {std::move(operand)}}};
}

TermPtr Term::unary(Kind kind, TermPtr operand)
{
    if (kind != Kind::box && kind != Kind::dia && kind != Kind::pos && kind != Kind::neg && kind != Kind::abs) {
        throw InputError("not a unary term kind");
    }
    return TermPtr{new Term{kind, {}, {}, {std::move(operand)}}};
}

bool operator==(const Term& a, const Term& b)
{
    if (a.kind_ != b.kind_ || a.value_ != b.value_ || a.name_ != b.name_ || a.args_.size() != b.args_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.args_.size(); ++i) {
        if (!(*a.args_[i] == *b.args_[i])) {
            return false;
        }
    }
    return true;
}

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : InputError(std::to_string(line) + ":" + std::to_string(column) + ": " + message), line_{line}, column_{column}
{
}

// ---------------------------------------------------------------------------
// Lexing

namespace {

enum class Tok {
    number,
    ident,
    kw_box,
    kw_dia,
    plus,
    minus,
    star,
    meet,
    join,
    pos,
    neg,
    lparen,
    rparen,
    bar,
    end,
};

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

std::string_view describe(Tok t)
{
    switch (t) {
    case Tok::number:
        return "number";
    case Tok::ident:
        return "identifier";
    case Tok::kw_box:
        return "'box'";
    case Tok::kw_dia:
        return "'dia'";
    case Tok::plus:
        return "'+'";
    case Tok::minus:
        return "'-'";
    case Tok::star:
        return "'*'";
    case Tok::meet:
        return "'/\\'";
    case Tok::join:
        return "'\\/'";
    case Tok::pos:
        return "'^+'";
    case Tok::neg:
        return "'^-'";
    case Tok::lparen:
        return "'('";
    case Tok::rparen:
        return "')'";
    case Tok::bar:
        return "'|'";
    case Tok::end:
        return "end of input";
    }
    return "token";
}

std::vector<Token> lex(std::string_view src)
{
    std::vector<Token> out;
    std::size_t i = 0;
    std::size_t line = 1;
    std::size_t col = 1;
    auto advance = [&](std::size_t k) {
        for (std::size_t j = 0; j < k; ++j) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++i;
        }
    };
    auto push = [&](Tok kind, std::size_t len) {
        out.push_back({kind, std::string(src.substr(i, len)), line, col});
        advance(len);
    };
    auto is_digit = [&](std::size_t k) { return k < src.size() && std::isdigit(static_cast<unsigned char>(src[k])); };

    while (i < src.size()) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (is_digit(j)) {
                ++j;
            }
            if (j < src.size() && src[j] == '/' && is_digit(j + 1)) {
                ++j;
                while (is_digit(j)) {
                    ++j;
                }
            }
            push(Tok::number, j - i);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) {
                ++j;
            }
            std::string_view word = src.substr(i, j - i);
            push(word == "box" ? Tok::kw_box : word == "dia" ? Tok::kw_dia : Tok::ident, j - i);
            continue;
        }
        if (src.substr(i, 2) == "/\\") {
            push(Tok::meet, 2);
        } else if (src.substr(i, 2) == "\\/") {
            push(Tok::join, 2);
        } else if (src.substr(i, 2) == "^+") {
            push(Tok::pos, 2);
        } else if (src.substr(i, 2) == "^-") {
            push(Tok::neg, 2);
        } else if (src.substr(i, 2) == "\xC2\xB7") {
            out.push_back({Tok::star, "*", line, col});
            i += 2;
            ++col;
        } else if (c == '+') {
            push(Tok::plus, 1);
        } else if (c == '-') {
            push(Tok::minus, 1);
        } else if (c == '*') {
            push(Tok::star, 1);
        } else if (c == '(') {
            push(Tok::lparen, 1);
        } else if (c == ')') {
            push(Tok::rparen, 1);
        } else if (c == '|') {
            push(Tok::bar, 1);
        } else {
            throw ParseError("unknown token '" + std::string(1, c) + "'", line, col);
        }
    }
    out.push_back({Tok::end, "", line, col});
    return out;
}

// ---------------------------------------------------------------------------
// Parsing

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_{std::move(toks)} {}

    TermPtr parse_all()
    {
        TermPtr t = sum();
        if (peek().kind != Tok::end) {
            fail("unexpected " + std::string(describe(peek().kind)));
        }
        return t;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& take() { return toks_[pos_++]; }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().line, peek().column); }

    void expect(Tok kind)
    {
        if (peek().kind != kind) {
            fail("expected " + std::string(describe(kind)) + ", found " + std::string(describe(peek().kind)));
        }
        ++pos_;
    }

    TermPtr sum()
    {
        TermPtr lhs = product();
        // Operator family fixed by the first operator of the chain.
        std::optional<Tok> family;
        for (;;) {
            const Tok k = peek().kind;
            if (k != Tok::plus && k != Tok::minus && k != Tok::meet && k != Tok::join) {
                return lhs;
            }
            const Tok fam = (k == Tok::minus) ? Tok::plus : k;
            if (family && *family != fam) {
                fail("mixing " + std::string(describe(*family)) + " and " + std::string(describe(k)) +
                     " requires parentheses");
            }
            family = fam;
            take();
            TermPtr rhs = product();
            Term::Kind kind = k == Tok::plus    ? Term::Kind::add
                              : k == Tok::minus ? Term::Kind::sub
                              : k == Tok::meet  ? Term::Kind::meet
                                                : Term::Kind::join;
            lhs = Term::binary(kind, std::move(lhs), std::move(rhs));
        }
    }

    TermPtr product()
    {
        TermPtr lhs = prefix();
        while (peek().kind == Tok::star) {
            take();
            lhs = Term::binary(Term::Kind::mul, std::move(lhs), prefix());
        }
        return lhs;
    }

    TermPtr prefix()
    {
        switch (peek().kind) {
        case Tok::kw_box:
            take();
            return Term::unary(Term::Kind::box, prefix());
        case Tok::kw_dia:
            take();
            return Term::unary(Term::Kind::dia, prefix());
        case Tok::minus: {
            take();
            TermPtr operand = prefix();
            if (operand->kind() == Term::Kind::literal) {
                return Term::literal(-operand->value());
            }
            return Term::scale(Rational{-1}, std::move(operand));
        }
        default:
            return postfix();
        }
    }

    TermPtr postfix()
    {
        TermPtr t = atom();
        for (;;) {
            if (peek().kind == Tok::pos) {
                take();
                t = Term::unary(Term::Kind::pos, std::move(t));
            } else if (peek().kind == Tok::neg) {
                take();
                t = Term::unary(Term::Kind::neg, std::move(t));
            } else {
                return t;
            }
        }
    }

    TermPtr atom()
    {
        const Token& tok = peek();
        switch (tok.kind) {
        case Tok::number: {
            take();
            try {
                return Term::literal(Rational::parse(tok.text));
            } catch (const InputError& e) {
                throw ParseError(e.what(), tok.line, tok.column);
            }
        }
        case Tok::ident:
            take();
            return Term::variable(tok.text);
        case Tok::lparen: {
            take();
            TermPtr t = sum();
            expect(Tok::rparen);
            return t;
        }
        case Tok::bar: {
            take();
            TermPtr t = sum();
            expect(Tok::bar);
            return Term::unary(Term::Kind::abs, std::move(t));
        }
        default:
            fail("expected a term, found " + std::string(describe(tok.kind)));
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Printing

enum Level { kSum = 1, kProduct = 2, kPrefix = 3, kPostfix = 4, kAtom = 5 };

Level level_of(const Term& t)
{
    using K = Term::Kind;
    switch (t.kind()) {
    case K::add:
    case K::sub:
    case K::meet:
    case K::join:
        return kSum;
    case K::mul:
    case K::scale:
        return kProduct;
    case K::box:
    case K::dia:
        return kPrefix;
    case K::literal:
        return t.value().sign() < 0 ? kPrefix : kAtom;
    case K::pos:
    case K::neg:
        return kPostfix;
    case K::variable:
    case K::abs:
        return kAtom;
    }
    return kAtom;
}

bool same_sum_family(Term::Kind a, Term::Kind b)
{
    using K = Term::Kind;
    auto fam = [](K k) { return k == K::sub ? K::add : k; };
    return fam(a) == fam(b);
}

void emit(const Term& t, std::string& out);

void emit_at(const Term& t, int min_level, std::string& out)
{
    if (level_of(t) < min_level) {
        out += '(';
        emit(t, out);
        out += ')';
    } else {
        emit(t, out);
    }
}

void emit(const Term& t, std::string& out)
{
    using K = Term::Kind;
    switch (t.kind()) {
    case K::literal:
        out += t.value().str();
        return;
    case K::variable:
        out += t.name();
        return;
    case K::add:
    case K::sub:
    case K::meet:
    case K::join: {
        const Term& l = *t.args()[0];
        const Term& r = *t.args()[1];
        // Left operand may continue a chain of the same family; anything else at
        // sum level, and every right operand at sum level, is parenthesized.
        if (level_of(l) == kSum && !same_sum_family(l.kind(), t.kind())) {
            out += '(';
            emit(l, out);
            out += ')';
        } else {
            emit_at(l, kSum, out);
        }
        out += t.kind() == K::add ? " + " : t.kind() == K::sub ? " - " : t.kind() == K::meet ? " /\\ " : " \\/ ";
        emit_at(r, kProduct, out);
        return;
    }
    case K::mul:
        emit_at(*t.args()[0], kProduct, out);
        out += " * ";
        emit_at(*t.args()[1], kPrefix, out);
        return;
    case K::scale:
        out += t.value().str();
        out += " * ";
        emit_at(*t.args()[0], kPrefix, out);
        return;
    case K::box:
    case K::dia:
        out += t.kind() == K::box ? "box " : "dia ";
        emit_at(*t.args()[0], kPrefix, out);
        return;
    case K::pos:
    case K::neg:
        emit_at(*t.args()[0], kPostfix, out);
        out += t.kind() == K::pos ? "^+" : "^-";
        return;
    case K::abs:
        out += '|';
        emit(*t.args()[0], out);
        out += '|';
        return;
    }
}

} // namespace

TermPtr parse(std::string_view text) { return Parser{lex(text)}.parse_all(); }

std::string print(const Term& t)
{
    std::string out;
    emit(t, out);
    return out;
}

// ---------------------------------------------------------------------------
// Evaluation

Func eval(const Term& t, const Environment& env, const FramePtr& frame)
{
    using K = Term::Kind;
    auto arg = [&](std::size_t i) { return eval(*t.args()[i], env, frame); };
    switch (t.kind()) {
    case K::literal:
        return Func::constant(frame, t.value());
    case K::variable: {
        auto it = env.find(t.name());
        if (it == env.end()) {
            throw InputError("unbound variable '" + t.name() + "'");
        }
        require_on_frame(it->second, *frame);
        return it->second;
    }
    case K::add:
        return arg(0) + arg(1);
    case K::sub:
        return arg(0) - arg(1);
    case K::mul:
        return arg(0) * arg(1);
    case K::scale:
        return t.value() * arg(0);
    case K::meet:
        return meet(arg(0), arg(1));
    case K::join:
        return join(arg(0), arg(1));
    case K::box:
        return box_r(*frame, arg(0));
    case K::dia:
        return diamond_r(*frame, arg(0));
    case K::pos:
        return pos_part(arg(0));
    case K::neg:
        return neg_part(arg(0));
    case K::abs:
        return abs(arg(0));
    }
    throw InvariantViolation("unhandled term kind");
}

ModalOperator term_operator(TermPtr t, std::string variable, FramePtr frame, Environment fixed)
{
    ModalOperator::Eval fn = [t, variable, frame, fixed = std::move(fixed)](const Func& a) {
        Environment env = fixed;
        env.insert_or_assign(variable, a);
        return eval(*t, env, frame);
    };
    return ModalOperator{frame, std::move(fn), TermDefined{t, variable}};
}

} // namespace mbal
