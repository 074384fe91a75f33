#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace mbal {

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in 64 bits are kept inline and
/// combined with 128-bit intermediates; anything larger is promoted to a GMP
/// rational and demoted again as soon as it fits. Callers never see which
/// representation is in use.
class Rational {
public:
    Rational() = default;
    // Implicit so integer literals can stand in for scalars.
    Rational(std::int64_t value) : num_{value} // NOLINT(google-explicit-constructor)
    {
        if (value == std::numeric_limits<std::int64_t>::min()) {
            *this = Rational(value, 1);
        }
    }
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(const mpq_class& value);

    /// Parses "p", "-p", or "p/q" (q nonzero). Throws InputError otherwise.
    static Rational parse(std::string_view text);

    [[nodiscard]] bool is_small() const { return big_ == nullptr; }
    [[nodiscard]] bool is_integer() const;
    [[nodiscard]] int sign() const;
    [[nodiscard]] bool is_zero() const { return sign() == 0; }
    [[nodiscard]] mpq_class to_mpq() const;

    /// Canonical text: "p" for integers, "p/q" otherwise.
    [[nodiscard]] std::string str() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const;

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    static Rational from_wide(__int128 num, __int128 den);
    static Rational from_mpq(mpq_class value);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

[[nodiscard]] Rational abs(const Rational& r);
[[nodiscard]] inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
[[nodiscard]] inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace mbal
