#include "rankrep/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace rankrep {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        const __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits64(__int128 v) {
    return v >= std::numeric_limits<std::int64_t>::min() &&
           v <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace

Rational::Rational(int_type n, int_type d) {
    *this = from_wide(n, d);
}

Rational Rational::from_wide(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (n == 0) {
        d = 1;
    } else {
        const __int128 g = gcd128(n, d);
        n /= g;
        d /= g;
    }
    if (!fits64(n) || !fits64(d)) throw std::overflow_error("rational overflow");
    Rational r;
    r.num_ = static_cast<int_type>(n);
    r.den_ = static_cast<int_type>(d);
    return r;
}

Rational::int_type Rational::floor() const noexcept {
    int_type q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

Rational::int_type Rational::ceil() const noexcept {
    int_type q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
    return from_wide(-static_cast<__int128>(num_), den_);
}

Rational& Rational::operator+=(const Rational& rhs) {
    const __int128 n = static_cast<__int128>(num_) * rhs.den_ + static_cast<__int128>(rhs.num_) * den_;
    const __int128 d = static_cast<__int128>(den_) * rhs.den_;
    return *this = from_wide(n, d);
}

Rational& Rational::operator-=(const Rational& rhs) {
    return *this += -rhs;
}

Rational& Rational::operator*=(const Rational& rhs) {
    // Cross-reduce first so products of already-reduced operands stay small.
    const __int128 g1 = gcd128(num_, rhs.den_);
    const __int128 g2 = gcd128(rhs.num_, den_);
    const __int128 n = (num_ / (g1 == 0 ? 1 : g1)) * (rhs.num_ / (g2 == 0 ? 1 : g2));
    const __int128 d = (den_ / (g2 == 0 ? 1 : g2)) * (rhs.den_ / (g1 == 0 ? 1 : g1));
    return *this = from_wide(n, d);
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.num_ == 0) throw std::domain_error("rational division by zero");
    Rational inv;
    inv.num_ = rhs.num_ < 0 ? -rhs.den_ : rhs.den_;
    inv.den_ = rhs.num_ < 0 ? -rhs.num_ : rhs.num_;
    return *this *= inv;
}

Rational Rational::parse(std::string_view text) {
    auto fail = [&]() -> Rational {
        throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
    };
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) return fail();

    constexpr __int128 limit = static_cast<__int128>(1) << 100;

    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const Rational n = parse(text.substr(0, slash));
        const Rational d = parse(text.substr(slash + 1));
        if (!n.is_integer() || !d.is_integer()) return fail();
        if (d.is_zero()) throw std::domain_error("rational with zero denominator");
        return Rational(n.numerator(), d.numerator());
    }

    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
        negative = text[pos] == '-';
        ++pos;
    }
    __int128 mantissa = 0;
    int frac_digits = 0;
    bool seen_digit = false;
    bool seen_point = false;
    for (; pos < text.size(); ++pos) {
        const char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            seen_digit = true;
            mantissa = mantissa * 10 + (c - '0');
            if (mantissa > limit) throw std::overflow_error("rational overflow parsing '" + std::string(text) + "'");
            if (seen_point) ++frac_digits;
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    if (!seen_digit) return fail();

    long exponent = 0;
    if (pos < text.size()) {
        if (text[pos] != 'e' && text[pos] != 'E') return fail();
        ++pos;
        bool exp_negative = false;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            exp_negative = text[pos] == '-';
            ++pos;
        }
        if (pos >= text.size()) return fail();
        for (; pos < text.size(); ++pos) {
            const char c = text[pos];
            if (!std::isdigit(static_cast<unsigned char>(c))) return fail();
            exponent = exponent * 10 + (c - '0');
            if (exponent > 40) throw std::overflow_error("rational overflow parsing '" + std::string(text) + "'");
        }
        if (exp_negative) exponent = -exponent;
    }

    exponent -= frac_digits;
    __int128 den = 1;
    for (; exponent > 0; --exponent) {
        mantissa *= 10;
        if (mantissa > limit) throw std::overflow_error("rational overflow parsing '" + std::string(text) + "'");
    }
    for (; exponent < 0; ++exponent) {
        den *= 10;
        if (den > limit) throw std::overflow_error("rational overflow parsing '" + std::string(text) + "'");
    }
    return from_wide(negative ? -mantissa : mantissa, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

}  // namespace rankrep
