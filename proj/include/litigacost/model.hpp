#pragma once

// Transaction cost of enforcing a commercial contract through court.
//
//   C_fr = (Z + Kb + t_long) - (Y + Ka + t_short)                 risk coefficient
//   TC   = [(T_p - T_d) - (c_tp1 + c_td1)] * C_fr                 transaction cost
//   G    = (T_p - T_d) + (c_tp + c_td)                            settlement gain
//
// with T_p the claim and T_d = round_half_even(confirmation * claim) unless
// overridden. All arithmetic is exact in minor units.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "litigacost/decimal.hpp"
#include "litigacost/error.hpp"
#include "litigacost/money.hpp"

namespace litigacost {

/// The six binary determinants of the risk coefficient. Adverse:
/// z (unreliable forensic expertise), kb (unpredictable rulings),
/// t_long (trial over one year). Favorable: y (precautionary measures),
/// ka (predictable rulings), t_short (trial under one year).
struct RiskIndicators {
    bool z = false;
    bool kb = false;
    bool t_long = false;
    bool y = false;
    bool ka = false;
    bool t_short = false;

    /// Exactly one of each complementary pair must be set.
    bool valid() const noexcept { return kb != ka && t_long != t_short; }

    bool operator==(const RiskIndicators&) const = default;
};

inline int risk_coefficient(const RiskIndicators& ind) {
    if (!ind.valid())
        throw Error(ErrorCode::InvalidIndicators,
                    "kb+ka and t_long+t_short must each equal 1", "indicators");
    return (int{ind.z} + int{ind.kb} + int{ind.t_long}) - (int{ind.y} + int{ind.ka} + int{ind.t_short});
}

// ---------------------------------------------------------------------------
// Raw (unvalidated) input

/// Amount as supplied by a caller; an empty currency means "the scenario's".
struct RawAmount {
    std::int64_t minor_units = 0;
    std::string currency;

    bool operator==(const RawAmount&) const = default;
};

/// Indicator values as supplied; anything other than 0/1 is rejected.
struct RawIndicators {
    std::int64_t z = 0, kb = 0, t_long = 0, y = 0, ka = 0, t_short = 0;

    bool operator==(const RawIndicators&) const = default;
};

struct RawScenario {
    std::string id;
    std::string currency;
    RawAmount claim;
    std::int64_t confirmation_micros = 0;
    std::optional<RawAmount> t_d_override;
    RawAmount plaintiff_trial_cost;
    RawAmount defendant_trial_cost;
    RawAmount plaintiff_settle_cost;
    RawAmount defendant_settle_cost;
    RawIndicators indicators;

    bool operator==(const RawScenario&) const = default;
};

// ---------------------------------------------------------------------------
// Validated scenario

class DisputeScenario;
Expected<DisputeScenario> validate_scenario(const RawScenario& raw);

/// One commercial dispute. Only obtainable through validate_scenario, so
/// every instance satisfies: claim > 0, costs >= 0, one currency, valid
/// indicators, 0 <= t_d_override <= claim.
class DisputeScenario {
public:
    const std::string& id() const noexcept { return id_; }
    Currency currency() const noexcept { return claim_.currency(); }
    const MonetaryAmount& claim() const noexcept { return claim_; }
    Fraction confirmation() const noexcept { return confirmation_; }
    const std::optional<MonetaryAmount>& t_d_override() const noexcept { return t_d_override_; }
    const MonetaryAmount& plaintiff_trial_cost() const noexcept { return plaintiff_trial_cost_; }
    const MonetaryAmount& defendant_trial_cost() const noexcept { return defendant_trial_cost_; }
    const MonetaryAmount& plaintiff_settle_cost() const noexcept { return plaintiff_settle_cost_; }
    const MonetaryAmount& defendant_settle_cost() const noexcept { return defendant_settle_cost_; }
    const RiskIndicators& indicators() const noexcept { return indicators_; }

    MonetaryAmount t_p() const { return claim_; }

    MonetaryAmount t_d() const {
        if (t_d_override_) return *t_d_override_;
        Wide product = Wide{confirmation_.micros()} * claim_.minor_units();
        return {static_cast<std::int64_t>(round_half_even_div(product, Decimal::kScale)), currency()};
    }

    DisputeScenario with_confirmation(Fraction f) const {
        DisputeScenario copy = *this;
        copy.confirmation_ = f;
        return copy;
    }

    DisputeScenario with_indicators(const RiskIndicators& ind) const {
        if (!ind.valid())
            throw Error(ErrorCode::InvalidIndicators,
                        "kb+ka and t_long+t_short must each equal 1", "indicators");
        DisputeScenario copy = *this;
        copy.indicators_ = ind;
        return copy;
    }

    DisputeScenario with_id(std::string id) const {
        DisputeScenario copy = *this;
        copy.id_ = std::move(id);
        return copy;
    }

    RawScenario to_raw() const {
        auto amount = [](const MonetaryAmount& m) { return RawAmount{m.minor_units(), {}}; };
        RawScenario raw;
        raw.id = id_;
        raw.currency = currency().str();
        raw.claim = amount(claim_);
        raw.confirmation_micros = confirmation_.micros();
        if (t_d_override_) raw.t_d_override = amount(*t_d_override_);
        raw.plaintiff_trial_cost = amount(plaintiff_trial_cost_);
        raw.defendant_trial_cost = amount(defendant_trial_cost_);
        raw.plaintiff_settle_cost = amount(plaintiff_settle_cost_);
        raw.defendant_settle_cost = amount(defendant_settle_cost_);
        raw.indicators = {indicators_.z, indicators_.kb, indicators_.t_long,
                          indicators_.y, indicators_.ka, indicators_.t_short};
        return raw;
    }

    bool operator==(const DisputeScenario&) const = default;

private:
    friend Expected<DisputeScenario> validate_scenario(const RawScenario& raw);

    DisputeScenario(std::string id, MonetaryAmount claim, Fraction confirmation,
                    std::optional<MonetaryAmount> t_d_override, MonetaryAmount c_tp1,
                    MonetaryAmount c_td1, MonetaryAmount c_tp, MonetaryAmount c_td,
                    RiskIndicators indicators)
        : id_(std::move(id)), claim_(claim), confirmation_(confirmation),
          t_d_override_(t_d_override), plaintiff_trial_cost_(c_tp1),
          defendant_trial_cost_(c_td1), plaintiff_settle_cost_(c_tp),
          defendant_settle_cost_(c_td), indicators_(indicators) {}

    std::string id_;
    MonetaryAmount claim_;
    Fraction confirmation_;
    std::optional<MonetaryAmount> t_d_override_;
    MonetaryAmount plaintiff_trial_cost_;
    MonetaryAmount defendant_trial_cost_;
    MonetaryAmount plaintiff_settle_cost_;
    MonetaryAmount defendant_settle_cost_;
    RiskIndicators indicators_;
};

/// Checks every invariant and reports all violations, not just the first.
inline Expected<DisputeScenario> validate_scenario(const RawScenario& raw) {
    std::vector<Issue> issues;
    auto report = [&](ErrorCode code, std::string message, std::string path) {
        issues.push_back({code, std::move(message), std::move(path), raw.id});
    };

    auto currency = Currency::make(raw.currency);
    if (!currency) report(ErrorCode::InvalidCurrency, "'" + raw.currency + "' is not a 3-letter code", "currency");

    auto check_currency = [&](const RawAmount& a, const char* path) {
        if (currency && !a.currency.empty() && a.currency != raw.currency)
            report(ErrorCode::CurrencyMismatch, a.currency + " differs from scenario currency " + raw.currency, path);
    };

    if (raw.claim.minor_units <= 0) report(ErrorCode::NonPositiveClaim, "claim must be positive", "claim");
    check_currency(raw.claim, "claim");

    auto confirmation = Fraction::from_micros(raw.confirmation_micros);
    if (!confirmation)
        report(ErrorCode::FractionOutOfRange, "confirmation must lie in [0, 1]", "confirmation");

    if (raw.t_d_override) {
        const auto& o = *raw.t_d_override;
        if (o.minor_units < 0 || o.minor_units > raw.claim.minor_units)
            report(ErrorCode::TdOverrideOutOfRange, "t_d_override must lie in [0, claim]", "t_d_override");
        check_currency(o, "t_d_override");
    }

    const std::pair<const RawAmount*, const char*> costs[] = {
        {&raw.plaintiff_trial_cost, "plaintiff_trial_cost"},
        {&raw.defendant_trial_cost, "defendant_trial_cost"},
        {&raw.plaintiff_settle_cost, "plaintiff_settle_cost"},
        {&raw.defendant_settle_cost, "defendant_settle_cost"},
    };
    for (const auto& [cost, path] : costs) {
        if (cost->minor_units < 0) report(ErrorCode::NegativeCost, "cost must not be negative", path);
        check_currency(*cost, path);
    }

    const std::pair<std::int64_t, const char*> bits[] = {
        {raw.indicators.z, "indicators.z"},         {raw.indicators.kb, "indicators.kb"},
        {raw.indicators.t_long, "indicators.t_long"}, {raw.indicators.y, "indicators.y"},
        {raw.indicators.ka, "indicators.ka"},       {raw.indicators.t_short, "indicators.t_short"},
    };
    bool all_bits = true;
    for (const auto& [bit, path] : bits) {
        if (bit != 0 && bit != 1) {
            report(ErrorCode::InvalidIndicators, "indicator must be 0 or 1", path);
            all_bits = false;
        }
    }
    RiskIndicators ind{raw.indicators.z == 1, raw.indicators.kb == 1, raw.indicators.t_long == 1,
                       raw.indicators.y == 1, raw.indicators.ka == 1, raw.indicators.t_short == 1};
    if (all_bits) {
        if (ind.kb == ind.ka) report(ErrorCode::InvalidIndicators, "exactly one of kb, ka must be 1", "indicators");
        if (ind.t_long == ind.t_short)
            report(ErrorCode::InvalidIndicators, "exactly one of t_long, t_short must be 1", "indicators");
    }

    if (!issues.empty()) return issues;

    auto money = [&](const RawAmount& a) { return MonetaryAmount(a.minor_units, *currency); };
    std::optional<MonetaryAmount> override_amount;
    if (raw.t_d_override) override_amount = money(*raw.t_d_override);
    return DisputeScenario(raw.id, money(raw.claim), *confirmation, override_amount,
                           money(raw.plaintiff_trial_cost), money(raw.defendant_trial_cost),
                           money(raw.plaintiff_settle_cost), money(raw.defendant_settle_cost), ind);
}

// ---------------------------------------------------------------------------
// Policy

/// Decision thresholds. The plaintiff proposes settlement once TC reaches
/// `plaintiff_settle_threshold` of the claim; a confirmation above
/// `defendant_settle_bound` marks the scenario implausible.
class PolicyConfig {
public:
    PolicyConfig() = default;

    static Expected<PolicyConfig> make(Decimal plaintiff_settle_threshold, Decimal defendant_settle_bound) {
        std::vector<Issue> issues;
        if (plaintiff_settle_threshold.micros() <= 0 || plaintiff_settle_threshold.micros() >= Decimal::kScale)
            issues.push_back({ErrorCode::InvalidPolicy, "must lie in (0, 1)", "plaintiff_settle_threshold", {}});
        if (defendant_settle_bound.micros() <= 0 || defendant_settle_bound.micros() > Decimal::kScale)
            issues.push_back({ErrorCode::InvalidPolicy, "must lie in (0, 1]", "defendant_settle_bound", {}});
        if (!issues.empty()) return issues;
        PolicyConfig p;
        p.plaintiff_settle_threshold_ = plaintiff_settle_threshold;
        p.defendant_settle_bound_ = defendant_settle_bound;
        return p;
    }

    Decimal plaintiff_settle_threshold() const noexcept { return plaintiff_settle_threshold_; }
    Decimal defendant_settle_bound() const noexcept { return defendant_settle_bound_; }

    bool operator==(const PolicyConfig&) const = default;

private:
    Decimal plaintiff_settle_threshold_ = Decimal::from_micros(250'000);
    Decimal defendant_settle_bound_ = Decimal::from_micros(800'000);
};

// ---------------------------------------------------------------------------
// Results

struct CostComponents {
    MonetaryAmount t_p;
    MonetaryAmount t_d;
    MonetaryAmount c_tp1;
    MonetaryAmount c_td1;

    bool operator==(const CostComponents&) const = default;
};

struct TransactionCostResult {
    int risk_coefficient;
    MonetaryAmount gross_margin;  // (T_p - T_d) - (c_tp1 + c_td1)
    MonetaryAmount tc;            // gross_margin * risk_coefficient
    CostComponents components;

    /// TC / claim rounded half-even to 4 decimals.
    Decimal tc_fraction_of_claim() const {
        auto ten_thousandths = round_half_even_div(Wide{tc.minor_units()} * 10'000, components.t_p.minor_units());
        return Decimal::from_micros(static_cast<std::int64_t>(ten_thousandths * 100));
    }

    /// Exact three-way comparison of TC / claim against `d`.
    int compare_fraction(Decimal d) const {
        Wide lhs = Wide{tc.minor_units()} * Decimal::kScale;
        Wide rhs = Wide{d.micros()} * components.t_p.minor_units();
        return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
    }

    bool operator==(const TransactionCostResult&) const = default;
};

/// Settlement costs are added to the gain as written in the model, not
/// subtracted.
inline MonetaryAmount settlement_gain(const DisputeScenario& s) {
    return (s.t_p() - s.t_d()) + (s.plaintiff_settle_cost() + s.defendant_settle_cost());
}

inline TransactionCostResult transaction_cost(const DisputeScenario& s) {
    const int c_fr = risk_coefficient(s.indicators());
    const MonetaryAmount t_p = s.t_p();
    const MonetaryAmount t_d = s.t_d();
    const MonetaryAmount margin = (t_p - t_d) - (s.plaintiff_trial_cost() + s.defendant_trial_cost());
    return {c_fr, margin, margin * c_fr, {t_p, t_d, s.plaintiff_trial_cost(), s.defendant_trial_cost()}};
}

enum class PlaintiffAction { Litigate, ProposeSettlement };
enum class DefendantAction { ProposeSettlement, Contest };

constexpr std::string_view to_string(PlaintiffAction a) noexcept {
    return a == PlaintiffAction::Litigate ? "Litigate" : "ProposeSettlement";
}
constexpr std::string_view to_string(DefendantAction a) noexcept {
    return a == DefendantAction::ProposeSettlement ? "ProposeSettlement" : "Contest";
}

namespace rationale {
inline constexpr std::string_view kTcBelowThreshold = "tc_fraction_below_threshold";
inline constexpr std::string_view kTcAtOrAboveThreshold = "tc_fraction_at_or_above_threshold";
inline constexpr std::string_view kGainPositive = "settlement_gain_positive";
inline constexpr std::string_view kGainNotPositive = "settlement_gain_not_positive";
inline constexpr std::string_view kAboveDefendantBound = "confirmation_above_defendant_bound";
inline constexpr std::string_view kRiskAdjustedSurplus = "risk_adjusted_surplus";
inline constexpr std::string_view kFavorableEnvironment = "favorable_institutional_environment";
}  // namespace rationale

struct Recommendation {
    PlaintiffAction plaintiff_action;
    DefendantAction defendant_action;
    bool implausible;
    std::vector<std::string> rationale;

    bool operator==(const Recommendation&) const = default;
};

inline Recommendation recommend(const DisputeScenario& s, const TransactionCostResult& cost,
                                const MonetaryAmount& gain, const PolicyConfig& p) {
    Recommendation rec{PlaintiffAction::Litigate, DefendantAction::Contest, false, {}};
    if (cost.compare_fraction(p.plaintiff_settle_threshold()) >= 0) {
        rec.plaintiff_action = PlaintiffAction::ProposeSettlement;
        rec.rationale.emplace_back(rationale::kTcAtOrAboveThreshold);
    } else {
        rec.rationale.emplace_back(rationale::kTcBelowThreshold);
    }
    if (gain.minor_units() > 0) {
        rec.defendant_action = DefendantAction::ProposeSettlement;
        rec.rationale.emplace_back(rationale::kGainPositive);
    } else {
        rec.rationale.emplace_back(rationale::kGainNotPositive);
    }
    if (s.confirmation().value() > p.defendant_settle_bound()) {
        rec.implausible = true;
        rec.rationale.emplace_back(rationale::kAboveDefendantBound);
    }
    // Negative TC is a surplus to the plaintiff, not a cost.
    if (cost.tc.minor_units() < 0) rec.rationale.emplace_back(rationale::kRiskAdjustedSurplus);
    if (cost.risk_coefficient < 0) rec.rationale.emplace_back(rationale::kFavorableEnvironment);
    return rec;
}

inline Recommendation recommend(const DisputeScenario& s, const PolicyConfig& p = {}) {
    return recommend(s, transaction_cost(s), settlement_gain(s), p);
}

/// Everything computed for one scenario.
struct Evaluation {
    DisputeScenario scenario;
    MonetaryAmount settlement_gain;
    TransactionCostResult cost;
    Recommendation recommendation;

    bool operator==(const Evaluation&) const = default;
};

inline Evaluation evaluate(const DisputeScenario& s, const PolicyConfig& p = {}) {
    auto cost = transaction_cost(s);
    auto gain = settlement_gain(s);
    auto rec = recommend(s, cost, gain, p);
    return {s, gain, std::move(cost), std::move(rec)};
}

}  // namespace litigacost
