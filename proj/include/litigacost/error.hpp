#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace litigacost {

enum class ErrorCode {
    // scenario validation
    NonPositiveClaim,
    NegativeCost,
    CurrencyMismatch,
    FractionOutOfRange,
    InvalidIndicators,
    TdOverrideOutOfRange,
    InvalidCurrency,
    // policy
    InvalidPolicy,
    // analysis
    InvalidRange,
    NoSolution,
    ZeroRiskCoefficient,
    TdOverridePresent,
    UnknownParameter,
    UnknownPreset,
    UnknownScenario,
    // documents / transport
    MalformedJson,
    UnknownSchemaVersion,
    MissingField,
    InvalidValue,
    DuplicateId,
    IoError,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NonPositiveClaim: return "NonPositiveClaim";
        case ErrorCode::NegativeCost: return "NegativeCost";
        case ErrorCode::CurrencyMismatch: return "CurrencyMismatch";
        case ErrorCode::FractionOutOfRange: return "FractionOutOfRange";
        case ErrorCode::InvalidIndicators: return "InvalidIndicators";
        case ErrorCode::TdOverrideOutOfRange: return "TdOverrideOutOfRange";
        case ErrorCode::InvalidCurrency: return "InvalidCurrency";
        case ErrorCode::InvalidPolicy: return "InvalidPolicy";
        case ErrorCode::InvalidRange: return "InvalidRange";
        case ErrorCode::NoSolution: return "NoSolution";
        case ErrorCode::ZeroRiskCoefficient: return "ZeroRiskCoefficient";
        case ErrorCode::TdOverridePresent: return "TdOverridePresent";
        case ErrorCode::UnknownParameter: return "UnknownParameter";
        case ErrorCode::UnknownPreset: return "UnknownPreset";
        case ErrorCode::UnknownScenario: return "UnknownScenario";
        case ErrorCode::MalformedJson: return "MalformedJson";
        case ErrorCode::UnknownSchemaVersion: return "UnknownSchemaVersion";
        case ErrorCode::MissingField: return "MissingField";
        case ErrorCode::InvalidValue: return "InvalidValue";
        case ErrorCode::DuplicateId: return "DuplicateId";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

/// One reported problem. `field_path` is a dotted path relative to the
/// document root (e.g. "scenarios[2].indicators"); `scenario_id` is set
/// when the problem belongs to a named scenario.
struct Issue {
    ErrorCode code;
    std::string message;
    std::string field_path;
    std::string scenario_id;

    bool operator==(const Issue&) const = default;
};

inline std::string describe(const Issue& issue) {
    std::string out(to_string(issue.code));
    if (!issue.scenario_id.empty()) out += " [" + issue.scenario_id + "]";
    if (!issue.field_path.empty()) out += " at " + issue.field_path;
    out += ": " + issue.message;
    return out;
}

/// Thrown by the pure model operations when a precondition is violated.
class Error : public std::runtime_error {
public:
    explicit Error(Issue issue)
        : std::runtime_error(describe(issue)), issues_{std::move(issue)} {}
    explicit Error(std::vector<Issue> issues)
        : std::runtime_error(issues.empty() ? std::string("error") : describe(issues.front())),
          issues_(std::move(issues)) {}
    Error(ErrorCode code, std::string message, std::string field_path = {})
        : Error(Issue{code, std::move(message), std::move(field_path), {}}) {}

    ErrorCode code() const noexcept { return issues_.front().code; }
    const std::vector<Issue>& issues() const noexcept { return issues_; }

private:
    std::vector<Issue> issues_;
};

/// Either a value or the complete list of issues that prevented it.
template <class T>
class Expected {
public:
    Expected(T value) : state_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
    Expected(std::vector<Issue> issues) : state_(std::move(issues)) {}  // NOLINT
    Expected(Issue issue) : state_(std::vector<Issue>{std::move(issue)}) {}  // NOLINT

    bool has_value() const noexcept { return std::holds_alternative<T>(state_); }
    explicit operator bool() const noexcept { return has_value(); }

    const T& value() const& {
        if (!has_value()) throw Error(errors());
        return std::get<T>(state_);
    }
    T&& value() && {
        if (!has_value()) throw Error(errors());
        return std::get<T>(std::move(state_));
    }
    const T& operator*() const& { return value(); }
    const T* operator->() const { return &value(); }

    const std::vector<Issue>& errors() const {
        static const std::vector<Issue> none;
        if (has_value()) return none;
        return std::get<std::vector<Issue>>(state_);
    }

private:
    std::variant<T, std::vector<Issue>> state_;
};

}  // namespace litigacost
