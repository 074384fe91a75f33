#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "mbal/errors.hpp"
#include "mbal/term.hpp"

using namespace mbal;
using testing::f1;
using testing::fn;
using K = Term::Kind;

TEST_CASE("parse shapes")
{
    auto f = Term::variable("f");
    auto g = Term::variable("g");
    CHECK(*parse("box (f /\\ g)") == *Term::unary(K::box, Term::binary(K::meet, f, g)));
    CHECK(*parse("box(f + 1/2)") ==
          *Term::unary(K::box, Term::binary(K::add, f, Term::literal(Rational(1, 2)))));
    CHECK(*parse("1 - box(1 - f)") ==
          *Term::binary(K::sub, Term::literal(1),
                        Term::unary(K::box, Term::binary(K::sub, Term::literal(1), f))));
    CHECK(*parse("2 * f") == *Term::scale(2, f));
    CHECK(*parse("2 · f") == *Term::scale(2, f));
    CHECK(*parse("-f") == *Term::scale(-1, f));
    CHECK(*parse("-3") == *Term::literal(-3));
    CHECK(*parse("|f|^+") == *Term::unary(K::pos, Term::unary(K::abs, f)));
    CHECK(*parse("f - g - f") == *Term::binary(K::sub, Term::binary(K::sub, f, g), f));
    CHECK(*parse("box f * g") == *Term::binary(K::mul, Term::unary(K::box, f), g));
    CHECK(*parse("dia f^-") == *Term::unary(K::dia, Term::unary(K::neg, f)));
}

TEST_CASE("parse errors carry positions")
{
    CHECK_THROWS_AS((void)parse(""), ParseError);
    CHECK_THROWS_AS((void)parse("f + "), ParseError);
    CHECK_THROWS_AS((void)parse("f /\\ g + h"), ParseError);
    CHECK_THROWS_AS((void)parse("f /\\ g \\/ h"), ParseError);
    CHECK_THROWS_AS((void)parse("(f"), ParseError);
    CHECK_THROWS_AS((void)parse("f # g"), ParseError);
    CHECK_THROWS_AS((void)parse("1/0"), InputError);
    CHECK_THROWS_AS((void)parse("f / g"), ParseError);
    try {
        (void)parse("f +\n  ) ");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 3);
    }
    CHECK_NOTHROW((void)parse("(f /\\ g) + h"));
}

TEST_CASE("eval")
{
    const auto fr = f1();
    Environment env{{"f", fn(fr, {5, 2, 7})}};
    CHECK(eval(*parse("box f"), env, fr) == fn(fr, {2, 2, 1}));
    CHECK(eval(*parse("1 - box(1 - f)"), env, fr) == fn(fr, {7, 2, 0}));
    Environment neg{{"f", fn(fr, {-1, 2, -3})}};
    CHECK(eval(*parse("(f)^+ "), neg, fr) == fn(fr, {0, 2, 0}));
    CHECK(eval(*parse("|f| - f^+ - f^-"), neg, fr) == Func::zero(fr));
    CHECK_THROWS_AS((void)eval(*parse("box g"), env, fr), InputError);
    Environment other{{"f", Func::one(share(identity_frame(3)))}};
    CHECK_THROWS_AS((void)eval(*parse("box f"), other, fr), InputError);
}

TEST_CASE("diamond as a term matches diamond_r on sampled functions and frames")
{
    const TermPtr t = parse("1 - box(1 - f)");
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto fr = share(random_frame(1 + seed % 6, 0.4, seed));
        Rng rng{seed};
        const Func f = random_func(fr, rng);
        REQUIRE(eval(*t, {{"f", f}}, fr) == diamond_r(*fr, f));
    }
}

TEST_CASE("term operators")
{
    const auto fr = f1();
    const ModalOperator op = term_operator(parse("box a"), "a", fr);
    const SamplePool pool = make_pool(fr, 20, 1);
    for (Law law : axiom_laws()) {
        CHECK(check_law(op, law, pool).holds_on_samples());
    }
    const ModalOperator shifted = term_operator(parse("box a + 1"), "a", fr);
    CHECK_FALSE(check_law(shifted, Law::M2, pool).holds_on_samples());
    const ModalOperator with_env = term_operator(parse("box (a /\\ c)"), "a", fr, {{"c", Func::constant(fr, 10)}});
    CHECK(with_env(fn(fr, {5, 2, 7})) == fn(fr, {2, 2, 1}));
}

namespace {

TermPtr random_term(std::mt19937_64& rng, int depth)
{
    static const char* names[] = {"a", "b", "f", "xs"};
    const auto leaf = [&]() -> TermPtr {
        if (rng() % 2 == 0) {
            return Term::variable(names[rng() % 4]);
        }
        const auto num = static_cast<std::int64_t>(rng() % 21) - 10;
        const auto den = static_cast<std::int64_t>(1 + rng() % 6);
        return Term::literal(Rational(num, den));
    };
    if (depth == 0) {
        return leaf();
    }
    switch (rng() % 12) {
    case 0:
        return leaf();
    case 1:
        return Term::binary(K::add, random_term(rng, depth - 1), random_term(rng, depth - 1));
    case 2:
        return Term::binary(K::sub, random_term(rng, depth - 1), random_term(rng, depth - 1));
    case 3:
        return Term::binary(K::mul, random_term(rng, depth - 1), random_term(rng, depth - 1));
    case 4:
        return Term::scale(Rational(static_cast<std::int64_t>(rng() % 9) - 4, 1 + rng() % 3),
                           random_term(rng, depth - 1));
    case 5:
        return Term::binary(K::meet, random_term(rng, depth - 1), random_term(rng, depth - 1));
    case 6:
        return Term::binary(K::join, random_term(rng, depth - 1), random_term(rng, depth - 1));
    case 7:
        return Term::unary(K::box, random_term(rng, depth - 1));
    case 8:
        return Term::unary(K::dia, random_term(rng, depth - 1));
    case 9:
        return Term::unary(K::pos, random_term(rng, depth - 1));
    case 10:
        return Term::unary(K::neg, random_term(rng, depth - 1));
    default:
        return Term::unary(K::abs, random_term(rng, depth - 1));
    }
}

} // namespace

TEST_CASE("parse inverts print on 10^4 random terms")
{
    std::mt19937_64 rng{99};
    for (int i = 0; i < 10000; ++i) {
        const TermPtr t = random_term(rng, 1 + i % 5);
        const std::string text = print(*t);
        CAPTURE(text);
        REQUIRE(*parse(text) == *t);
        REQUIRE(print(*parse(text)) == text);
    }
}
