#pragma once

#include <algorithm>
#include <iomanip>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "litigacost/analysis.hpp"
#include "litigacost/document.hpp"
#include "litigacost/model.hpp"

namespace litigacost {

enum class Format { Table, Csv, Json };

inline std::optional<Format> parse_format(std::string_view name) {
    if (name == "table") return Format::Table;
    if (name == "csv") return Format::Csv;
    if (name == "json") return Format::Json;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// JSON payloads (shared by the CLI and the HTTP service)

inline Json cost_to_json(const TransactionCostResult& c) {
    return Json{{"risk_coefficient", c.risk_coefficient},
                {"gross_margin", c.gross_margin.to_string()},
                {"tc", c.tc.to_string()},
                {"tc_fraction_of_claim", c.tc_fraction_of_claim().to_string(4)},
                {"components",
                 {{"t_p", c.components.t_p.to_string()},
                  {"t_d", c.components.t_d.to_string()},
                  {"c_tp1", c.components.c_tp1.to_string()},
                  {"c_td1", c.components.c_td1.to_string()}}}};
}

inline void add_recommendation(Json& j, const Recommendation& r) {
    j["plaintiff_action"] = to_string(r.plaintiff_action);
    j["defendant_action"] = to_string(r.defendant_action);
    j["implausible"] = r.implausible;
    j["rationale"] = r.rationale;
}

/// Flat object: scenario identity, TransactionCostResult fields, settlement
/// gain, then Recommendation fields.
inline Json evaluation_to_json(const Evaluation& e) {
    Json j{{"id", e.scenario.id()},
           {"currency", e.scenario.currency().str()},
           {"claim", e.scenario.claim().to_string()},
           {"confirmation", e.scenario.confirmation().to_string(4)}};
    const Json cost = cost_to_json(e.cost);
    for (auto it = cost.begin(); it != cost.end(); ++it) j[it.key()] = it.value();
    j["settlement_gain"] = e.settlement_gain.to_string();
    add_recommendation(j, e.recommendation);
    return j;
}

inline Json sweep_to_json(const DisputeScenario& s, const SweepSeries& series) {
    Json points = Json::array();
    for (const auto& p : series.points) {
        Json point{{"parameter_value", p.parameter_value.to_string(4)},
                   {"risk_coefficient", p.cost.risk_coefficient},
                   {"tc", p.cost.tc.to_string()},
                   {"tc_fraction", p.cost.tc_fraction_of_claim().to_string(4)},
                   {"plaintiff_action", to_string(p.recommendation.plaintiff_action)},
                   {"defendant_action", to_string(p.recommendation.defendant_action)},
                   {"implausible", p.recommendation.implausible}};
        points.push_back(std::move(point));
    }
    return Json{{"scenario_id", s.id()},
                {"currency", s.currency().str()},
                {"parameter_name", series.parameter_name},
                {"points", std::move(points)}};
}

inline Json break_even_to_json(const DisputeScenario& s, Decimal target, Fraction f) {
    return Json{{"scenario_id", s.id()}, {"target_fraction", target.canonical()}, {"fraction", f.to_string(4)}};
}

inline Json comparison_to_json(const RegimeComparison& c, Currency currency) {
    return Json{{"scenario_id", c.scenario_id},
                {"currency", currency.str()},
                {"before", {{"name", c.before_name}, {"indicators", indicators_to_json(c.before_indicators)}}},
                {"after", {{"name", c.after_name}, {"indicators", indicators_to_json(c.after_indicators)}}},
                {"tc_before", c.tc_before.to_string()},
                {"tc_after", c.tc_after.to_string()},
                {"delta", c.delta.to_string()},
                {"verdict", to_string(c.verdict)}};
}

// ---------------------------------------------------------------------------
// Text formats

namespace render_detail {

inline std::string csv_field(std::string_view v) {
    if (v.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(v);
    std::string out = "\"";
    for (char c : v) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string csv_row(const std::vector<std::string>& fields) {
    std::string line;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) line += ',';
        line += csv_field(fields[i]);
    }
    return line + "\n";
}

/// Left-aligned first column, right-aligned remainder.
inline std::string table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());

    std::ostringstream os;
    auto emit = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) os << "  ";
            if (c == 0)
                os << std::left << std::setw(static_cast<int>(width[c])) << row[c];
            else
                os << std::right << std::setw(static_cast<int>(width[c])) << row[c];
        }
        os << '\n';
    };
    emit(header);
    std::vector<std::string> rule;
    for (auto w : width) rule.emplace_back(w, '-');
    emit(rule);
    for (const auto& row : rows) emit(row);
    return os.str();
}

inline std::string boolean(bool b) { return b ? "true" : "false"; }

}  // namespace render_detail

inline const std::vector<std::string>& evaluation_csv_header() {
    static const std::vector<std::string> header{"id", "currency", "claim", "confirmation", "c_fr",
                                                 "tc", "tc_fraction", "plaintiff_action",
                                                 "defendant_action", "implausible"};
    return header;
}

inline std::vector<std::string> evaluation_fields(const Evaluation& e) {
    return {e.scenario.id(),
            e.scenario.currency().str(),
            e.scenario.claim().to_string(),
            e.scenario.confirmation().to_string(4),
            std::to_string(e.cost.risk_coefficient),
            e.cost.tc.to_string(),
            e.cost.tc_fraction_of_claim().to_string(4),
            std::string(to_string(e.recommendation.plaintiff_action)),
            std::string(to_string(e.recommendation.defendant_action)),
            render_detail::boolean(e.recommendation.implausible)};
}

inline std::string render_results(std::span<const Evaluation> results, Format format) {
    switch (format) {
        case Format::Csv: {
            std::string out = render_detail::csv_row(evaluation_csv_header());
            for (const auto& e : results) out += render_detail::csv_row(evaluation_fields(e));
            return out;
        }
        case Format::Json: {
            Json arr = Json::array();
            for (const auto& e : results) arr.push_back(evaluation_to_json(e));
            return Json{{"results", std::move(arr)}}.dump(2) + "\n";
        }
        case Format::Table: {
            std::vector<std::vector<std::string>> rows;
            for (const auto& e : results) rows.push_back(evaluation_fields(e));
            return render_detail::table(evaluation_csv_header(), rows);
        }
    }
    return {};
}

inline std::string render_sweep(const DisputeScenario& s, const SweepSeries& series, Format format) {
    const std::vector<std::string> header{series.parameter_name, "c_fr", "tc", "tc_fraction",
                                          "plaintiff_action", "defendant_action", "implausible"};
    std::vector<std::vector<std::string>> rows;
    for (const auto& p : series.points)
        rows.push_back({p.parameter_value.to_string(4), std::to_string(p.cost.risk_coefficient),
                        p.cost.tc.to_string(), p.cost.tc_fraction_of_claim().to_string(4),
                        std::string(to_string(p.recommendation.plaintiff_action)),
                        std::string(to_string(p.recommendation.defendant_action)),
                        render_detail::boolean(p.recommendation.implausible)});
    switch (format) {
        case Format::Csv: {
            std::string out = render_detail::csv_row(header);
            for (const auto& r : rows) out += render_detail::csv_row(r);
            return out;
        }
        case Format::Json: return sweep_to_json(s, series).dump(2) + "\n";
        case Format::Table: return render_detail::table(header, rows);
    }
    return {};
}

inline std::string render_break_even(const DisputeScenario& s, Decimal target, Fraction f, Format format) {
    switch (format) {
        case Format::Json: return break_even_to_json(s, target, f).dump(2) + "\n";
        case Format::Csv:
            return render_detail::csv_row({"id", "target_fraction", "fraction"}) +
                   render_detail::csv_row({s.id(), target.canonical(), f.to_string(4)});
        case Format::Table: return f.to_string(4) + "\n";
    }
    return {};
}

inline std::string render_comparison(const RegimeComparison& c, Currency currency, Format format) {
    const std::vector<std::string> header{"id", "before", "after", "tc_before", "tc_after", "delta", "verdict"};
    const std::vector<std::string> row{c.scenario_id,          c.before_name,         c.after_name,
                                       c.tc_before.to_string(), c.tc_after.to_string(), c.delta.to_string(),
                                       std::string(to_string(c.verdict))};
    switch (format) {
        case Format::Json: return comparison_to_json(c, currency).dump(2) + "\n";
        case Format::Csv: return render_detail::csv_row(header) + render_detail::csv_row(row);
        case Format::Table: return render_detail::table(header, {row});
    }
    return {};
}

}  // namespace litigacost
