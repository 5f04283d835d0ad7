#pragma once

// What-if analysis on top of the cost model: confirmation sweeps, break-even
// inversion, exhaustive indicator enumeration and regime comparison.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "litigacost/model.hpp"

namespace litigacost {

// ---------------------------------------------------------------------------
// Sweep

struct SweepPoint {
    Fraction parameter_value;
    TransactionCostResult cost;
    Recommendation recommendation;

    bool operator==(const SweepPoint&) const = default;
};

struct SweepSeries {
    std::string parameter_name;
    std::vector<SweepPoint> points;

    bool operator==(const SweepSeries&) const = default;
};

inline constexpr std::int64_t kMaxSweepSteps = 100'001;

/// Evaluates `steps` evenly spaced confirmations in [f_min, f_max], both
/// endpoints included. Grid values are rounded half-even to the Fraction
/// resolution, and the range must be wide enough that they stay distinct.
inline Expected<SweepSeries> sweep_confirmation(const DisputeScenario& s, Fraction f_min, Fraction f_max,
                                                std::int64_t steps, const PolicyConfig& p = {}) {
    if (!(f_min < f_max))
        return Issue{ErrorCode::InvalidRange, "min must be below max", "min", s.id()};
    if (steps < 2 || steps > kMaxSweepSteps)
        return Issue{ErrorCode::InvalidRange, "steps must lie in [2, " + std::to_string(kMaxSweepSteps) + "]",
                     "steps", s.id()};
    const std::int64_t span = f_max.micros() - f_min.micros();
    if (span < steps - 1)
        return Issue{ErrorCode::InvalidRange, "range too narrow for the requested number of steps", "steps", s.id()};
    if (s.t_d_override())
        return Issue{ErrorCode::TdOverridePresent, "t_d_override pins T_d; confirmation has no effect",
                     "t_d_override", s.id()};

    SweepSeries series{"confirmation", {}};
    series.points.reserve(static_cast<std::size_t>(steps));
    for (std::int64_t i = 0; i < steps; ++i) {
        auto offset = static_cast<std::int64_t>(round_half_even_div(Wide{span} * i, steps - 1));
        Fraction f = *Fraction::from_micros(f_min.micros() + offset);
        auto e = evaluate(s.with_confirmation(f), p);
        series.points.push_back({f, std::move(e.cost), std::move(e.recommendation)});
    }
    return series;
}

// ---------------------------------------------------------------------------
// Break-even

/// Confirmation f* at which TC / claim equals `target`.
///
/// TC(f) = C_fr * ((1 - f) * A - C) with A the claim and C the summed trial
/// costs, so f* = 1 - C / A - target / C_fr. Solved exactly and rounded
/// half-even to the Fraction resolution; NoSolution when f* falls outside
/// [0, 1].
inline Expected<Fraction> break_even_fraction(const DisputeScenario& s, Decimal target) {
    if (s.t_d_override())
        return Issue{ErrorCode::TdOverridePresent, "break-even requires T_d derived from confirmation",
                     "t_d_override", s.id()};
    const int c_fr = risk_coefficient(s.indicators());
    if (c_fr == 0)
        return Issue{ErrorCode::ZeroRiskCoefficient, "risk coefficient is 0; TC is constant", "indicators", s.id()};

    const Wide a = s.claim().minor_units();
    const Wide c = (s.plaintiff_trial_cost() + s.defendant_trial_cost()).minor_units();
    const Wide scale = Decimal::kScale;
    // f* * scale = num / den
    Wide num = scale * a * c_fr - scale * c * c_fr - Wide{target.micros()} * a;
    Wide den = a * c_fr;
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num < 0 || num > scale * den)
        return Issue{ErrorCode::NoSolution, "target is unreachable for confirmation in [0, 1]", "target_fraction",
                     s.id()};
    return *Fraction::from_micros(static_cast<std::int64_t>(round_half_even_div(num, den)));
}

// ---------------------------------------------------------------------------
// Indicator enumeration

struct IndicatorRow {
    RiskIndicators indicators;
    int risk_coefficient;
    MonetaryAmount tc;
};

/// All 16 valid indicator assignments (z, y free; one of kb/ka; one of
/// t_long/t_short) evaluated against the scenario's amounts.
inline std::vector<IndicatorRow> enumerate_indicator_space(const DisputeScenario& s) {
    std::vector<IndicatorRow> rows;
    rows.reserve(16);
    for (int mask = 0; mask < 16; ++mask) {
        const bool z = mask & 8, unpredictable = mask & 4, long_trial = mask & 2, y = mask & 1;
        RiskIndicators ind{z, unpredictable, long_trial, y, !unpredictable, !long_trial};
        auto cost = transaction_cost(s.with_indicators(ind));
        rows.push_back({ind, cost.risk_coefficient, cost.tc});
    }
    return rows;
}

// ---------------------------------------------------------------------------
// Regimes

/// Named institutional state. When `inherit_y` is set the precautionary
/// measures bit is taken from the scenario being compared.
struct RegimePreset {
    std::string name;
    RiskIndicators indicators;
    bool inherit_y = true;
    std::string description;

    RiskIndicators resolve(const DisputeScenario& s) const {
        RiskIndicators ind = indicators;
        if (inherit_y) ind.y = s.indicators().y;
        return ind;
    }

    /// `y` is not part of a preset's identity while it is inherited.
    bool operator==(const RegimePreset& o) const {
        RiskIndicators a = indicators, b = o.indicators;
        if (inherit_y) a.y = false;
        if (o.inherit_y) b.y = false;
        return name == o.name && a == b && inherit_y == o.inherit_y && description == o.description;
    }
};

inline const std::vector<RegimePreset>& builtin_presets() {
    static const std::vector<RegimePreset> presets{
        {"BG-pre-reform",
         {.z = true, .kb = true, .t_long = true, .y = false, .ka = false, .t_short = false},
         true,
         "Forensic accounting expertise unreliable (under-qualified expert witnesses; "
         "conflicts of interest in repeat expertise), unpredictable rulings, trials over one year"},
        {"reformed",
         {.z = false, .kb = false, .t_long = false, .y = false, .ka = true, .t_short = true},
         true,
         "Reliable expertise, predictable rulings, trials under one year"},
    };
    return presets;
}

/// Looks up `name` among `custom` first, then the built-in presets.
inline std::optional<RegimePreset> find_preset(std::string_view name, std::span<const RegimePreset> custom = {}) {
    for (const auto& p : custom)
        if (p.name == name) return p;
    for (const auto& p : builtin_presets())
        if (p.name == name) return p;
    return std::nullopt;
}

enum class ReformVerdict { ReformEffective, ReformIneffective };

constexpr std::string_view to_string(ReformVerdict v) noexcept {
    return v == ReformVerdict::ReformEffective ? "ReformEffective" : "ReformIneffective";
}

struct RegimeComparison {
    std::string scenario_id;
    std::string before_name;
    std::string after_name;
    RiskIndicators before_indicators;
    RiskIndicators after_indicators;
    MonetaryAmount tc_before;
    MonetaryAmount tc_after;
    MonetaryAmount delta;  // after - before
    ReformVerdict verdict;
};

/// A reform is effective only if it strictly lowers TC; no change counts
/// as ineffective.
inline RegimeComparison compare_regimes(const DisputeScenario& s, const RegimePreset& before,
                                        const RegimePreset& after) {
    const auto ind_before = before.resolve(s);
    const auto ind_after = after.resolve(s);
    const auto tc_before = transaction_cost(s.with_indicators(ind_before)).tc;
    const auto tc_after = transaction_cost(s.with_indicators(ind_after)).tc;
    const auto delta = tc_after - tc_before;
    return {s.id(),   before.name, after.name, ind_before, ind_after, tc_before, tc_after, delta,
            delta.minor_units() < 0 ? ReformVerdict::ReformEffective : ReformVerdict::ReformIneffective};
}

}  // namespace litigacost
