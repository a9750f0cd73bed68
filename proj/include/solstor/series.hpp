#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace solstor {

// Default modeled horizon: one non-leap year of hours.
inline constexpr std::size_t kDefaultHorizon = 8760;

// Hours per simulation step. All series are hourly.
inline constexpr double kStepHours = 1.0;

enum class Unit {
    MW,             // power (demand, generation)
    MWh,            // energy per step (import, curtailment)
    EurPerMwh,      // wholesale price
    Dimensionless,  // capacity factor, in [0, 1]
};

std::string unit_name(Unit unit);
Unit unit_from_name(const std::string& name);

// Fixed-length hourly sequence tagged with its unit. The common carrier for
// demand, capacity factor, generation, price, import, and curtailment series.
// Values are validated on construction: finite, non-negative, and within
// [0, 1] for dimensionless (capacity factor) series.
class HourlySeries {
public:
    HourlySeries(std::vector<double> values, Unit unit);

    static HourlySeries constant(std::size_t horizon, double value, Unit unit);

    std::size_t horizon() const { return values_.size(); }
    Unit unit() const { return unit_; }
    double operator[](std::size_t t) const { return values_[t]; }
    const std::vector<double>& values() const { return values_; }

private:
    std::vector<double> values_;
    Unit unit_;
};

// Total energy of a power series: sum of D(t) * dt over the horizon, in MWh.
double annual_energy(const HourlySeries& series);

}  // namespace solstor
