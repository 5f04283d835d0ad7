#pragma once

// Exact fixed-point helpers. Every decimal quantity in the model is an
// integer count of some unit (cents, millionths); nothing here touches
// binary floating point.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace litigacost {

__extension__ typedef __int128 Wide;
__extension__ typedef unsigned __int128 UWide;

namespace detail {

constexpr std::int64_t pow10(int n) {
    std::int64_t v = 1;
    for (int i = 0; i < n; ++i) v *= 10;
    return v;
}

inline std::string wide_to_string(Wide v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    UWide u = neg ? static_cast<UWide>(-(v + 1)) + 1 : static_cast<UWide>(v);
    std::string digits;
    while (u != 0) {
        digits.insert(digits.begin(), static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    return neg ? "-" + digits : digits;
}

}  // namespace detail

/// num / den rounded to the nearest integer, ties to even. den != 0.
constexpr Wide round_half_even_div(Wide num, Wide den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    Wide q = num / den;
    Wide r = num % den;
    // Normalise to floor division so the remainder is non-negative.
    if (r < 0) {
        q -= 1;
        r += den;
    }
    Wide twice = 2 * r;
    if (twice > den || (twice == den && (q % 2 != 0))) q += 1;
    return q;
}

/// Parses "[-+]digits[.digits]" into value * 10^places. More fractional
/// digits than `places`, exponents, stray characters, and magnitudes above
/// `limit` are rejected.
inline std::optional<std::int64_t> parse_scaled(std::string_view text, int places,
                                                std::int64_t limit = detail::pow10(17)) {
    if (text.empty()) return std::nullopt;
    bool neg = false;
    if (text.front() == '-' || text.front() == '+') {
        neg = text.front() == '-';
        text.remove_prefix(1);
    }
    auto dot = text.find('.');
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if (whole.empty() && frac.empty()) return std::nullopt;
    if (dot != std::string_view::npos && frac.empty()) return std::nullopt;
    if (static_cast<int>(frac.size()) > places) return std::nullopt;

    Wide value = 0;
    for (char c : whole) {
        if (c < '0' || c > '9') return std::nullopt;
        value = value * 10 + (c - '0');
        if (value > limit) return std::nullopt;
    }
    for (int i = 0; i < places; ++i) {
        int digit = 0;
        if (i < static_cast<int>(frac.size())) {
            char c = frac[static_cast<std::size_t>(i)];
            if (c < '0' || c > '9') return std::nullopt;
            digit = c - '0';
        }
        value = value * 10 + digit;
    }
    if (value > limit) return std::nullopt;
    return static_cast<std::int64_t>(neg ? -value : value);
}

/// Formats value / 10^places with exactly `places` fractional digits.
inline std::string format_scaled(Wide value, int places) {
    bool neg = value < 0;
    std::string digits = detail::wide_to_string(neg ? -value : value);
    if (static_cast<int>(digits.size()) <= places)
        digits.insert(0, static_cast<std::size_t>(places + 1) - digits.size(), '0');
    if (places > 0) digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
    return neg ? "-" + digits : digits;
}

/// Formats num / den rounded half-even to `places` decimals.
inline std::string format_ratio(Wide num, Wide den, int places) {
    return format_scaled(round_half_even_div(num * detail::pow10(places), den), places);
}

/// Signed decimal with a resolution of one millionth.
class Decimal {
public:
    static constexpr int kPlaces = 6;
    static constexpr std::int64_t kScale = detail::pow10(kPlaces);

    constexpr Decimal() = default;
    static constexpr Decimal from_micros(std::int64_t micros) { return Decimal(micros); }

    static std::optional<Decimal> parse(std::string_view text) {
        auto v = parse_scaled(text, kPlaces, detail::pow10(15));
        if (!v) return std::nullopt;
        return Decimal(*v);
    }

    constexpr std::int64_t micros() const noexcept { return micros_; }

    /// Rounded half-even to `places` (<= 6) decimals.
    std::string to_string(int places = 4) const {
        return format_ratio(micros_, kScale, places);
    }

    /// Shortest exact representation ("0.8", "1", "0.123456").
    std::string canonical() const {
        std::string s = format_scaled(micros_, kPlaces);
        while (s.back() == '0') s.pop_back();
        if (s.back() == '.') s.pop_back();
        return s;
    }

    constexpr auto operator<=>(const Decimal&) const = default;

private:
    constexpr explicit Decimal(std::int64_t micros) : micros_(micros) {}
    std::int64_t micros_ = 0;
};

/// A Decimal constrained to [0, 1].
class Fraction {
public:
    constexpr Fraction() = default;

    static constexpr std::optional<Fraction> make(Decimal d) {
        if (d.micros() < 0 || d.micros() > Decimal::kScale) return std::nullopt;
        return Fraction(d);
    }
    static std::optional<Fraction> parse(std::string_view text) {
        auto d = Decimal::parse(text);
        if (!d) return std::nullopt;
        return make(*d);
    }
    static constexpr std::optional<Fraction> from_micros(std::int64_t micros) {
        return make(Decimal::from_micros(micros));
    }

    constexpr Decimal value() const noexcept { return value_; }
    constexpr std::int64_t micros() const noexcept { return value_.micros(); }
    std::string to_string(int places = 4) const { return value_.to_string(places); }
    std::string canonical() const { return value_.canonical(); }

    constexpr auto operator<=>(const Fraction&) const = default;

private:
    constexpr explicit Fraction(Decimal d) : value_(d) {}
    Decimal value_;
};

}  // namespace litigacost
