#pragma once

#include "solstor/series.hpp"

namespace solstor {

// Generation profile: capacity factor scaled by installed PV capacity (MW).
HourlySeries generation_profile(const HourlySeries& capacity_factor, double c_pv_mw);

// Analytical upper bound of the PV search range: the largest capacity needed
// to cover demand in any single daylight hour, max over {t : F(t) > f_epsilon}
// of D(t) / F(t). Hours at or below f_epsilon are treated as dark.
double max_pv_capacity(const HourlySeries& demand, const HourlySeries& capacity_factor,
                       double f_epsilon = 0.0);

}  // namespace solstor
