#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "solstor/series.hpp"

namespace solstor {

enum class Season { Winter, Spring, Summer, HighSummer, Autumn };
enum class DayType { Weekday, Saturday, Sunday };

inline constexpr int kNumSeasons = 5;
inline constexpr int kNumDayTypes = 3;
inline constexpr int kHalfHoursPerDay = 48;

std::string season_name(Season s);
Season season_from_name(const std::string& name);
std::string day_type_name(DayType d);
DayType day_type_from_name(const std::string& name);

// Per-class settlement profile: one 48-value half-hourly shape (kW per meter)
// for each (season, day type) combination.
class ClassTemplate {
public:
    explicit ClassTemplate(int class_id);

    int class_id() const { return class_id_; }
    void set_cell(Season s, DayType d, const std::array<double, kHalfHoursPerDay>& values);
    bool has_cell(Season s, DayType d) const;
    const std::array<double, kHalfHoursPerDay>& cell(Season s, DayType d) const;
    bool complete() const;

private:
    int class_id_;
    std::array<std::optional<std::array<double, kHalfHoursPerDay>>,
               kNumSeasons * kNumDayTypes>
        cells_;
};

// Maps each day of the modeled year to the (season, day type) used to pick a
// template cell. Season boundaries and the weekday pattern are input data.
struct SeasonCalendar {
    std::vector<std::pair<Season, DayType>> days;
};

// Meter counts for the modeled district. Domestic classes 1 and 2 come with
// their own counts; non-domestic meters arrive as one total apportioned over
// classes 3-8 by company counts.
struct MeterCensus {
    double domestic_class1 = 0.0;
    double domestic_class2 = 0.0;
    double nondomestic_total = 0.0;
    std::array<double, 6> company_counts{};  // classes 3..8

    void validate() const;
};

struct CorrectionFactors {
    std::map<int, double> f;  // class_id -> positive multiplier

    void validate() const;
};

struct RegressionFit {
    double factor = 0.0;
    double r_square = 0.0;
};

// Expands a class template over a calendar into an hourly per-meter series in
// MW. Each pair of half-hourly kW values is power-averaged into one hour.
HourlySeries expand_class_profile(const ClassTemplate& tmpl, const SeasonCalendar& calendar,
                                  std::size_t horizon);

// Apportions the non-domestic meter total over classes 3-8 in proportion to
// company counts. Fractional meter counts are kept as weights.
std::map<int, double> allocate_nondomestic_meters(const MeterCensus& census);

// District demand: sum over classes of per-meter series * meter count *
// correction factor.
HourlySeries compose_demand(const std::map<int, HourlySeries>& class_series,
                            const std::map<int, double>& meters,
                            const CorrectionFactors& factors);

// Zero-intercept least squares of actual against calculated annual demand.
// factor = sum(x*y) / sum(x^2); r^2 is measured against the fitted line with
// the uncentered total sum of squares.
RegressionFit fit_correction_factor(std::span<const double> calculated_annuals,
                                    std::span<const double> actual_annuals);

}  // namespace solstor
