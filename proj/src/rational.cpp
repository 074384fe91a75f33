#include "mbal/rational.hpp"

#include <cctype>
#include <limits>
#include <numeric>
#include <ostream>

#include "mbal/errors.hpp"

namespace mbal {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

u128 gcd_wide(u128 a, u128 b)
{
    while (b != 0) {
        if (a <= std::numeric_limits<std::uint64_t>::max() && b <= std::numeric_limits<std::uint64_t>::max()) {
            return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
        }
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

u128 magnitude(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

mpz_class to_mpz(i128 v)
{
    u128 m = magnitude(v);
    auto hi = static_cast<std::uint64_t>(m >> 64);
    auto lo = static_cast<std::uint64_t>(m);
    mpz_class r{hi};
    r <<= 64;
    r += mpz_class{lo};
    if (v < 0) {
        r = -r;
    }
    return r;
}

// num_ never holds INT64_MIN so negation and abs stay inside the inline range.
bool fits_small(i128 v) { return v >= -static_cast<i128>(kMax) && v <= static_cast<i128>(kMax); }

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

} // namespace

Rational::Rational(std::int64_t num, std::int64_t den)
{
    if (den == 0) {
        throw InputError("rational with zero denominator");
    }
    i128 n = num;
    i128 d = den;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    *this = from_wide(n, d);
}

Rational::Rational(const mpq_class& value) { *this = from_mpq(value); }

Rational Rational::from_wide(i128 num, i128 den)
{
    if (den != 1) {
        u128 g = gcd_wide(magnitude(num), static_cast<u128>(den));
        if (g > 1) {
            num /= static_cast<i128>(g);
            den /= static_cast<i128>(g);
        }
    }
    Rational r;
    if (fits_small(num) && fits_small(den)) {
        r.num_ = static_cast<std::int64_t>(num);
        r.den_ = static_cast<std::int64_t>(den);
        return r;
    }
    mpq_class q{to_mpz(num), to_mpz(den)};
    q.canonicalize();
    r.big_ = std::make_shared<const mpq_class>(std::move(q));
    return r;
}

Rational Rational::from_mpq(mpq_class value)
{
    value.canonicalize();
    const mpz_class& n = value.get_num();
    const mpz_class& d = value.get_den();
    Rational r;
    if (n.fits_slong_p() && d.fits_slong_p() && n.get_si() != std::numeric_limits<long>::min()) {
        r.num_ = n.get_si();
        r.den_ = d.get_si();
        return r;
    }
    r.big_ = std::make_shared<const mpq_class>(std::move(value));
    return r;
}

Rational Rational::parse(std::string_view text)
{
    auto bad = [&] { return InputError("malformed rational '" + std::string(text) + "'"); };
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
    }
    std::size_t j = text.size();
    while (j > i && std::isspace(static_cast<unsigned char>(text[j - 1]))) {
        --j;
    }
    std::string_view body = text.substr(i, j - i);
    if (body.empty()) {
        throw bad();
    }
    std::size_t slash = body.find('/');
    std::string_view num_part = body.substr(0, slash);
    std::string_view den_part = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);

    auto digits_ok = [](std::string_view s, bool allow_sign) {
        std::size_t k = 0;
        if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) {
            k = 1;
        }
        if (k == s.size()) {
            return false;
        }
        for (; k < s.size(); ++k) {
            if (!std::isdigit(static_cast<unsigned char>(s[k]))) {
                return false;
            }
        }
        return true;
    };
    if (!digits_ok(num_part, true) || !digits_ok(den_part, false)) {
        throw bad();
    }
    std::string num_str{num_part};
    if (num_str[0] == '+') {
        num_str.erase(0, 1);
    }
    mpz_class n{num_str, 10};
    mpz_class d{std::string{den_part}, 10};
    if (d == 0) {
        throw InputError("rational with zero denominator: '" + std::string(text) + "'");
    }
    return from_mpq(mpq_class{n, d});
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const
{
    if (big_) {
        return sgn(*big_);
    }
    return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const
{
    if (big_) {
        return *big_;
    }
    return mpq_class{mpz_class{num_}, mpz_class{den_}};
}

std::string Rational::str() const
{
    if (big_) {
        return big_->get_str();
    }
    if (den_ == 1) {
        return std::to_string(num_);
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b)
{
    if (a.big_ || b.big_) {
        return Rational::from_mpq(a.to_mpq() + b.to_mpq());
    }
    if (a.den_ == b.den_) {
        return Rational::from_wide(static_cast<i128>(a.num_) + b.num_, a.den_);
    }
    i128 n = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
    i128 d = static_cast<i128>(a.den_) * b.den_;
    return Rational::from_wide(n, d);
}

Rational Rational::operator-() const
{
    if (big_) {
        return from_mpq(-*big_);
    }
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b)
{
    if (a.big_ || b.big_) {
        return Rational::from_mpq(a.to_mpq() * b.to_mpq());
    }
    if (a.num_ == 0 || b.num_ == 0) {
        return Rational{};
    }
    // Cross-cancel first so the product is already in lowest terms.
    std::int64_t g1 = gcd64(a.num_, b.den_);
    std::int64_t g2 = gcd64(b.num_, a.den_);
    i128 n = static_cast<i128>(a.num_ / g1) * (b.num_ / g2);
    i128 d = static_cast<i128>(a.den_ / g2) * (b.den_ / g1);
    if (fits_small(n) && fits_small(d)) {
        Rational r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }
    return Rational::from_wide(n, d);
}

Rational operator/(const Rational& a, const Rational& b)
{
    if (b.is_zero()) {
        throw InputError("division by zero");
    }
    return Rational::from_mpq(a.to_mpq() / b.to_mpq());
}

bool operator==(const Rational& a, const Rational& b)
{
    if (!a.big_ && !b.big_) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    // A value that fits inline is never stored big, so mixed forms differ.
    if (a.big_ && b.big_) {
        return *a.big_ == *b.big_;
    }
    return false;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    if (!a.big_ && !b.big_) {
        if (a.den_ == b.den_) {
            return a.num_ <=> b.num_;
        }
        i128 l = static_cast<i128>(a.num_) * b.den_;
        i128 r = static_cast<i128>(b.num_) * a.den_;
        return l <=> r;
    }
    int c = cmp(a.to_mpq(), b.to_mpq());
    return c <=> 0;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace mbal
