#include "solstor/series.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace solstor {

std::string unit_name(Unit unit) {
    switch (unit) {
        case Unit::MW: return "MW";
        case Unit::MWh: return "MWh";
        case Unit::EurPerMwh: return "EUR/MWh";
        case Unit::Dimensionless: return "dimensionless";
    }
    return "?";
}

Unit unit_from_name(const std::string& name) {
    if (name == "MW") return Unit::MW;
    if (name == "MWh") return Unit::MWh;
    if (name == "EUR/MWh") return Unit::EurPerMwh;
    if (name == "dimensionless") return Unit::Dimensionless;
    throw std::invalid_argument("unknown series unit: " + name);
}

HourlySeries::HourlySeries(std::vector<double> values, Unit unit)
    : values_(std::move(values)), unit_(unit) {
    if (values_.empty()) {
        throw std::invalid_argument("hourly series must not be empty");
    }
    for (std::size_t t = 0; t < values_.size(); ++t) {
        const double v = values_[t];
        if (!std::isfinite(v)) {
            throw std::invalid_argument("hourly series value at hour " + std::to_string(t) +
                                        " is not finite");
        }
        if (v < 0.0) {
            throw std::invalid_argument("hourly series value at hour " + std::to_string(t) +
                                        " is negative");
        }
        if (unit_ == Unit::Dimensionless && v > 1.0) {
            throw std::invalid_argument("capacity factor at hour " + std::to_string(t) +
                                        " exceeds 1");
        }
    }
}

HourlySeries HourlySeries::constant(std::size_t horizon, double value, Unit unit) {
    return HourlySeries(std::vector<double>(horizon, value), unit);
}

double annual_energy(const HourlySeries& series) {
    if (series.unit() != Unit::MW) {
        throw std::invalid_argument("annual_energy expects a power (MW) series, got " +
                                    unit_name(series.unit()));
    }
    double total = 0.0;
    for (double v : series.values()) total += v * kStepHours;
    return total;
}

}  // namespace solstor
