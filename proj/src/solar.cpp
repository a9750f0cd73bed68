#include "solstor/solar.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace solstor {

HourlySeries generation_profile(const HourlySeries& capacity_factor, double c_pv_mw) {
    if (capacity_factor.unit() != Unit::Dimensionless) {
        throw std::invalid_argument("generation_profile expects a dimensionless capacity factor");
    }
    if (!(c_pv_mw >= 0.0) || !std::isfinite(c_pv_mw)) {
        throw std::invalid_argument("PV capacity must be finite and non-negative");
    }
    std::vector<double> gen(capacity_factor.horizon());
    for (std::size_t t = 0; t < gen.size(); ++t) gen[t] = capacity_factor[t] * c_pv_mw;
    return HourlySeries(std::move(gen), Unit::MW);
}

double max_pv_capacity(const HourlySeries& demand, const HourlySeries& capacity_factor,
                       double f_epsilon) {
    if (demand.horizon() != capacity_factor.horizon()) {
        throw std::invalid_argument("demand and capacity factor horizons differ");
    }
    bool any_daylight = false;
    double bound = 0.0;
    for (std::size_t t = 0; t < demand.horizon(); ++t) {
        const double f = capacity_factor[t];
        if (f <= f_epsilon || f <= 0.0) continue;
        any_daylight = true;
        bound = std::max(bound, demand[t] / f);
    }
    if (!any_daylight) {
        throw std::invalid_argument("capacity factor has no daylight hours; PV bound undefined");
    }
    return bound;
}

}  // namespace solstor
