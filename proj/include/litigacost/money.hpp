#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "litigacost/decimal.hpp"
#include "litigacost/error.hpp"

namespace litigacost {

/// ISO-4217-style three letter code. All currencies are treated as having
/// two minor digits.
class Currency {
public:
    static std::optional<Currency> make(std::string_view code) {
        if (code.size() != 3) return std::nullopt;
        Currency c;
        for (std::size_t i = 0; i < 3; ++i) {
            if (code[i] < 'A' || code[i] > 'Z') return std::nullopt;
            c.code_[i] = code[i];
        }
        return c;
    }

    std::string str() const { return std::string(code_.data(), code_.size()); }

    bool operator==(const Currency&) const = default;

private:
    std::array<char, 3> code_{'X', 'X', 'X'};
};

inline constexpr int kMinorDigits = 2;
/// Largest accepted magnitude in minor units (10 trillion major units).
inline constexpr std::int64_t kMaxMinorUnits = detail::pow10(15);

/// An exact amount of money in minor units (cents).
class MonetaryAmount {
public:
    MonetaryAmount(std::int64_t minor_units, Currency currency)
        : minor_units_(minor_units), currency_(currency) {}

    std::int64_t minor_units() const noexcept { return minor_units_; }
    Currency currency() const noexcept { return currency_; }

    /// Major units with exactly two decimals, e.g. "4000.00".
    std::string to_string() const { return format_scaled(minor_units_, kMinorDigits); }

    MonetaryAmount operator+(const MonetaryAmount& rhs) const {
        require_same(rhs);
        return {minor_units_ + rhs.minor_units_, currency_};
    }
    MonetaryAmount operator-(const MonetaryAmount& rhs) const {
        require_same(rhs);
        return {minor_units_ - rhs.minor_units_, currency_};
    }
    MonetaryAmount operator*(std::int64_t factor) const { return {minor_units_ * factor, currency_}; }
    MonetaryAmount operator-() const { return {-minor_units_, currency_}; }

    bool operator==(const MonetaryAmount&) const = default;

private:
    void require_same(const MonetaryAmount& rhs) const {
        if (!(currency_ == rhs.currency_))
            throw Error(ErrorCode::CurrencyMismatch,
                        "cannot combine " + currency_.str() + " with " + rhs.currency_.str());
    }

    std::int64_t minor_units_;
    Currency currency_;
};

/// Decimal text in major units, optionally suffixed by a currency code:
/// "100000", "100000.5", "9000.00 EUR". At most two decimals.
struct ParsedAmount {
    std::int64_t minor_units;
    std::optional<std::string> currency;
};

inline std::optional<ParsedAmount> parse_amount(std::string_view text) {
    std::optional<std::string> currency;
    auto space = text.find(' ');
    if (space != std::string_view::npos) {
        currency = std::string(text.substr(space + 1));
        text = text.substr(0, space);
    }
    auto minor = parse_scaled(text, kMinorDigits, kMaxMinorUnits);
    if (!minor) return std::nullopt;
    return ParsedAmount{*minor, currency};
}

}  // namespace litigacost
