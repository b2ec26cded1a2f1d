#pragma once

// Exact rational numbers over 64-bit integers.
//
// Values are kept in lowest terms with a positive denominator, so equality is
// structural. Intermediate products are formed in 128 bits; a result that does
// not fit back into 64 bits raises std::overflow_error instead of wrapping.
// Comparison never overflows: a/b <=> c/d is decided on a*d <=> c*b in 128 bits.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace rankrep {

class Rational {
public:
    using int_type = std::int64_t;

    constexpr Rational() noexcept = default;
    constexpr Rational(int_type n) noexcept : num_(n) {}  // NOLINT: implicit by design of the number tower
    Rational(int_type n, int_type d);

    [[nodiscard]] constexpr int_type numerator() const noexcept { return num_; }
    [[nodiscard]] constexpr int_type denominator() const noexcept { return den_; }

    [[nodiscard]] constexpr bool is_zero() const noexcept { return num_ == 0; }
    [[nodiscard]] constexpr bool is_integer() const noexcept { return den_ == 1; }
    [[nodiscard]] constexpr bool is_negative() const noexcept { return num_ < 0; }

    // Largest integer <= value / smallest integer >= value.
    [[nodiscard]] int_type floor() const noexcept;
    [[nodiscard]] int_type ceil() const noexcept;

    [[nodiscard]] double to_double() const noexcept {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    // "p" for integers, "p/q" otherwise.
    [[nodiscard]] std::string to_string() const;

    // Accepts "p", "p/q", and terminating decimals with an optional exponent
    // ("0.25", "-3.5e-2"). Throws std::invalid_argument on malformed input and
    // std::overflow_error when the exact value does not fit.
    static Rational parse(std::string_view text);

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend constexpr bool operator==(const Rational&, const Rational&) noexcept = default;
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) noexcept {
        const __int128 l = static_cast<__int128>(lhs.num_) * rhs.den_;
        const __int128 r = static_cast<__int128>(rhs.num_) * lhs.den_;
        return l <=> r;
    }

private:
    static Rational from_wide(__int128 n, __int128 d);

    int_type num_ = 0;
    int_type den_ = 1;
};

[[nodiscard]] inline Rational abs(const Rational& r) { return r.is_negative() ? -r : r; }

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace rankrep
