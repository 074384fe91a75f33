#include <doctest.h>

#include <limits>
#include <random>

#include "mbal/errors.hpp"
#include "mbal/rational.hpp"

using mbal::Rational;

TEST_CASE("rational normal form")
{
    CHECK(Rational(6, 4).str() == "3/2");
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational(0, -5).str() == "0");
    CHECK(Rational(10, 5).str() == "2");
    CHECK(Rational(10, 5).is_integer());
    CHECK(Rational(-7).str() == "-7");
    CHECK_THROWS_AS(Rational(1, 0), mbal::InputError);
}

TEST_CASE("rational parse")
{
    CHECK(Rational::parse("3/6") == Rational(1, 2));
    CHECK(Rational::parse("-12") == Rational(-12));
    CHECK(Rational::parse("+5") == Rational(5));
    CHECK(Rational::parse("123456789012345678901234567890").str() == "123456789012345678901234567890");
    for (const char* bad : {"", "1/0", "a", "1/", "/2", "1.5", "1 /2", "--1", "1/-2"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(Rational::parse(bad), mbal::InputError);
    }
}

TEST_CASE("rational arithmetic matches GMP, including overflow")
{
    std::mt19937_64 rng{7};
    const std::int64_t big = std::numeric_limits<std::int64_t>::max();
    std::vector<Rational> pool{Rational(big), Rational(-big), Rational(std::numeric_limits<std::int64_t>::min()),
                               Rational(big, big - 1), Rational(1, big), Rational(0), Rational(1)};
    for (int i = 0; i < 40; ++i) {
        const auto num = static_cast<std::int64_t>(rng());
        auto den = static_cast<std::int64_t>(rng() >> 1);
        pool.emplace_back(num, den == 0 ? 1 : den);
    }
    for (const Rational& a : pool) {
        for (const Rational& b : pool) {
            const mpq_class qa = a.to_mpq();
            const mpq_class qb = b.to_mpq();
            CHECK((a + b).to_mpq() == qa + qb);
            CHECK((a - b).to_mpq() == qa - qb);
            CHECK((a * b).to_mpq() == qa * qb);
            if (!b.is_zero()) {
                CHECK((a / b).to_mpq() == qa / qb);
            }
            CHECK((a < b) == (qa < qb));
            CHECK((a == b) == (qa == qb));
        }
    }
}

TEST_CASE("big values demote when they fit again")
{
    const Rational big = Rational(std::numeric_limits<std::int64_t>::max()) * Rational(4);
    CHECK_FALSE(big.is_small());
    const Rational back = big / Rational(4);
    CHECK(back.is_small());
    CHECK(back == Rational(std::numeric_limits<std::int64_t>::max()));
    CHECK(-Rational(std::numeric_limits<std::int64_t>::min()) > Rational(0));
    CHECK_THROWS_AS((void)(Rational(1) / Rational(0)), mbal::InputError);
}
