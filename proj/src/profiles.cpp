#include "solstor/profiles.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace solstor {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

int cell_index(Season s, DayType d) {
    return static_cast<int>(s) * kNumDayTypes + static_cast<int>(d);
}

}  // namespace

std::string season_name(Season s) {
    switch (s) {
        case Season::Winter: return "winter";
        case Season::Spring: return "spring";
        case Season::Summer: return "summer";
        case Season::HighSummer: return "high-summer";
        case Season::Autumn: return "autumn";
    }
    return "?";
}

Season season_from_name(const std::string& name) {
    const std::string n = lower(name);
    if (n == "winter") return Season::Winter;
    if (n == "spring") return Season::Spring;
    if (n == "summer") return Season::Summer;
    if (n == "high-summer" || n == "high_summer" || n == "highsummer") return Season::HighSummer;
    if (n == "autumn") return Season::Autumn;
    throw std::invalid_argument("unknown season: " + name);
}

std::string day_type_name(DayType d) {
    switch (d) {
        case DayType::Weekday: return "weekday";
        case DayType::Saturday: return "saturday";
        case DayType::Sunday: return "sunday";
    }
    return "?";
}

DayType day_type_from_name(const std::string& name) {
    const std::string n = lower(name);
    if (n == "weekday") return DayType::Weekday;
    if (n == "saturday") return DayType::Saturday;
    if (n == "sunday") return DayType::Sunday;
    throw std::invalid_argument("unknown day type: " + name);
}

ClassTemplate::ClassTemplate(int class_id) : class_id_(class_id) {
    if (class_id < 1 || class_id > 8) {
        throw std::invalid_argument("class id must be 1..8, got " + std::to_string(class_id));
    }
}

void ClassTemplate::set_cell(Season s, DayType d,
                             const std::array<double, kHalfHoursPerDay>& values) {
    for (double v : values) {
        if (!std::isfinite(v) || v < 0.0) {
            throw std::invalid_argument("template cell (" + season_name(s) + ", " +
                                        day_type_name(d) + ") has a non-finite or negative value");
        }
    }
    cells_[cell_index(s, d)] = values;
}

bool ClassTemplate::has_cell(Season s, DayType d) const {
    return cells_[cell_index(s, d)].has_value();
}

const std::array<double, kHalfHoursPerDay>& ClassTemplate::cell(Season s, DayType d) const {
    const auto& c = cells_[cell_index(s, d)];
    if (!c) {
        throw std::invalid_argument("class " + std::to_string(class_id_) +
                                    " template is missing cell (" + season_name(s) + ", " +
                                    day_type_name(d) + ")");
    }
    return *c;
}

bool ClassTemplate::complete() const {
    return std::all_of(cells_.begin(), cells_.end(), [](const auto& c) { return c.has_value(); });
}

void MeterCensus::validate() const {
    if (domestic_class1 < 0 || domestic_class2 < 0 || nondomestic_total < 0) {
        throw std::invalid_argument("meter counts must be non-negative");
    }
    for (double n : company_counts) {
        if (n < 0) throw std::invalid_argument("company counts must be non-negative");
    }
}

void CorrectionFactors::validate() const {
    for (const auto& [cls, factor] : f) {
        if (!(factor > 0.0) || !std::isfinite(factor)) {
            throw std::invalid_argument("correction factor for class " + std::to_string(cls) +
                                        " must be positive");
        }
    }
}

HourlySeries expand_class_profile(const ClassTemplate& tmpl, const SeasonCalendar& calendar,
                                  std::size_t horizon) {
    if (calendar.days.empty()) {
        throw std::invalid_argument("season calendar is empty");
    }
    if (horizon % 24 != 0 || calendar.days.size() != horizon / 24) {
        throw std::invalid_argument("calendar covers " + std::to_string(calendar.days.size()) +
                                    " days but the horizon needs " + std::to_string(horizon / 24));
    }

    std::vector<double> out;
    out.reserve(horizon);
    for (const auto& [season, day_type] : calendar.days) {
        const auto& half_hours = tmpl.cell(season, day_type);  // throws naming a missing cell
        for (int h = 0; h < 24; ++h) {
            // mean of the two half-hour powers, kW -> MW
            const double kw = 0.5 * (half_hours[2 * h] + half_hours[2 * h + 1]);
            out.push_back(kw / 1000.0);
        }
    }
    return HourlySeries(std::move(out), Unit::MW);
}

std::map<int, double> allocate_nondomestic_meters(const MeterCensus& census) {
    census.validate();
    std::map<int, double> meters;
    double total_companies = 0.0;
    for (double n : census.company_counts) total_companies += n;

    if (census.nondomestic_total == 0.0) {
        for (int cls = 3; cls <= 8; ++cls) meters[cls] = 0.0;
        return meters;
    }
    if (total_companies <= 0.0) {
        throw std::invalid_argument(
            "cannot apportion non-domestic meters: no company counts given");
    }
    for (int cls = 3; cls <= 8; ++cls) {
        meters[cls] = census.nondomestic_total * census.company_counts[cls - 3] / total_companies;
    }
    return meters;
}

HourlySeries compose_demand(const std::map<int, HourlySeries>& class_series,
                            const std::map<int, double>& meters,
                            const CorrectionFactors& factors) {
    factors.validate();
    std::size_t horizon = 0;
    for (const auto& [cls, series] : class_series) {
        if (horizon == 0) horizon = series.horizon();
        if (series.horizon() != horizon) {
            throw std::invalid_argument("class " + std::to_string(cls) +
                                        " series horizon does not match the others");
        }
    }
    if (horizon == 0) {
        throw std::invalid_argument("compose_demand needs at least one class series");
    }

    std::vector<double> demand(horizon, 0.0);
    for (const auto& [cls, meter_count] : meters) {
        if (meter_count == 0.0) continue;
        const auto series_it = class_series.find(cls);
        if (series_it == class_series.end()) {
            throw std::invalid_argument("class " + std::to_string(cls) +
                                        " has meters but no demand series");
        }
        const auto factor_it = factors.f.find(cls);
        if (factor_it == factors.f.end()) {
            throw std::invalid_argument("class " + std::to_string(cls) +
                                        " has meters but no correction factor");
        }
        const double scale = meter_count * factor_it->second;
        const auto& values = series_it->second.values();
        for (std::size_t t = 0; t < horizon; ++t) demand[t] += values[t] * scale;
    }
    return HourlySeries(std::move(demand), Unit::MW);
}

RegressionFit fit_correction_factor(std::span<const double> calculated_annuals,
                                    std::span<const double> actual_annuals) {
    if (calculated_annuals.size() != actual_annuals.size()) {
        throw std::invalid_argument("regression inputs must have equal length");
    }
    if (calculated_annuals.size() < 2) {
        throw std::invalid_argument("regression needs at least two points");
    }

    double sum_xx = 0.0, sum_xy = 0.0, sum_yy = 0.0;
    for (std::size_t i = 0; i < calculated_annuals.size(); ++i) {
        const double x = calculated_annuals[i];
        const double y = actual_annuals[i];
        sum_xx += x * x;
        sum_xy += x * y;
        sum_yy += y * y;
    }
    if (sum_xx == 0.0) {
        throw std::invalid_argument("calculated annual demands are all zero");
    }

    RegressionFit fit;
    fit.factor = sum_xy / sum_xx;

    double ss_res = 0.0;
    for (std::size_t i = 0; i < calculated_annuals.size(); ++i) {
        const double r = actual_annuals[i] - fit.factor * calculated_annuals[i];
        ss_res += r * r;
    }
    fit.r_square = (sum_yy > 0.0) ? 1.0 - ss_res / sum_yy : 1.0;
    return fit;
}

}  // namespace solstor
