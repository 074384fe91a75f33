#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "mbal/errors.hpp"
#include "mbal/frame.hpp"
#include "mbal/func.hpp"
#include "mbal/modal.hpp"
#include "mbal/rational.hpp"

namespace mbal {

class Term;
using TermPtr = std::shared_ptr<const Term>;

/// Syntax tree of an ℓ-modal term.
///
/// Construction goes through the static factories, which keep the tree in the
/// one shape the parser produces: a product whose left factor is a literal is
/// always a `scale` node, so printing and reparsing give back the same tree.
class Term {
public:
    enum class Kind {
        literal,
        variable,
        add,
        sub,
        mul,
        scale,
        meet,
        join,
        box,
        dia,
        pos,
        neg,
        abs,
    };

    static TermPtr literal(Rational value);
    static TermPtr variable(std::string name);
    /// `kind` must be add, sub, mul, meet or join.
    static TermPtr binary(Kind kind, TermPtr lhs, TermPtr rhs);
    static TermPtr scale(Rational factor, TermPtr operand);
    /// `kind` must be box, dia, pos, neg or abs.
    static TermPtr unary(Kind kind, TermPtr operand);

    [[nodiscard]] Kind kind() const { return kind_; }
    /// Literal value, or the factor of a scale node.
    [[nodiscard]] const Rational& value() const { return value_; }
    [[nodiscard]] const std::string& name() const { return name_; }
    [[nodiscard]] const std::vector<TermPtr>& args() const { return args_; }

    friend bool operator==(const Term& a, const Term& b);

private:
    Term(Kind kind, Rational value, std::string name, std::vector<TermPtr> args)
        : kind_{kind}, value_{std::move(value)}, name_{std::move(name)}, args_{std::move(args)}
    {
    }

    Kind kind_;
    Rational value_;
    std::string name_;
    std::vector<TermPtr> args_;
};

/// Syntax error with a 1-based source position.
class ParseError : public InputError {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column);

    [[nodiscard]] std::size_t line() const { return line_; }
    [[nodiscard]] std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Grammar, loosest to tightest binding:
///
///     sum     := product (('+' | '-') product)*
///              | product ('/\' product)*
///              | product ('\/' product)*
///     product := prefix ('*' prefix)*
///     prefix  := ('box' | 'dia' | '-') prefix | postfix
///     postfix := atom ('^+' | '^-')*
///     atom    := rational | identifier | '(' sum ')' | '|' sum '|'
///
/// A chain mixing +/- with /\ or \/ (or /\ with \/) needs parentheses.
/// Rationals are written p or p/q without spaces; `·` is accepted for `*`.
/// Unary minus on a literal folds into a negative literal and otherwise
/// becomes scale(-1, ...).
[[nodiscard]] TermPtr parse(std::string_view text);

/// Inverse of parse: parse(print(t)) == t for every tree built by the factories.
[[nodiscard]] std::string print(const Term& t);

using Environment = std::map<std::string, Func, std::less<>>;

/// Structural evaluation; box and dia use the frame's relation. Throws
/// InputError on an unbound variable or a binding that lives on another frame.
[[nodiscard]] Func eval(const Term& t, const Environment& env, const FramePtr& frame);

/// The operator a ↦ t[variable := a] over `frame`. Other free variables are
/// resolved from `fixed`.
[[nodiscard]] ModalOperator term_operator(TermPtr t, std::string variable, FramePtr frame, Environment fixed = {});

} // namespace mbal
