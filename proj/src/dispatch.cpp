#include "solstor/dispatch.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace solstor {

DispatchResult simulate(const HourlySeries& demand, const HourlySeries& generation,
                        double storage_size_mwh, const StorageParams& params,
                        double start_level_mwh) {
    params.validate();
    if (demand.horizon() != generation.horizon()) {
        throw std::invalid_argument("demand and generation horizons differ");
    }
    if (!(storage_size_mwh >= 0.0) || !std::isfinite(storage_size_mwh)) {
        throw std::invalid_argument("storage size must be finite and non-negative");
    }
    if (start_level_mwh < 0.0 || start_level_mwh > storage_size_mwh) {
        throw std::invalid_argument("start level must lie within [0, storage size]");
    }

    const std::size_t horizon = demand.horizon();
    std::vector<double> levels(horizon + 1);
    std::vector<double> imports(horizon);
    std::vector<double> curtailed(horizon);
    levels[0] = start_level_mwh;

    double level = start_level_mwh;
    for (std::size_t t = 0; t < horizon; ++t) {
        const double net = generation[t] - demand[t];
        double imported = 0.0;
        double wasted = 0.0;
        if (net > 0.0) {
            const double surplus = net * params.dt;
            const double headroom = storage_size_mwh - level;
            const double stored = std::min(surplus * params.eta_c, headroom);
            level += stored;
            wasted = surplus - stored / params.eta_c;
        } else if (net < 0.0) {
            const double deficit = -net * params.dt;
            const double drawdown = std::min(deficit / params.eta_d, level);
            level -= drawdown;
            imported = deficit - drawdown * params.eta_d;
        }
        // clip float dust so levels and flows stay physical
        level = std::clamp(level, 0.0, storage_size_mwh);
        imports[t] = std::max(imported, 0.0);
        curtailed[t] = std::max(wasted, 0.0);
        levels[t + 1] = level;
    }

    DispatchResult result{std::move(levels), HourlySeries(std::move(imports), Unit::MWh),
                          HourlySeries(std::move(curtailed), Unit::MWh), start_level_mwh, level};
    return result;
}

double sustainable_start(const HourlySeries& demand, const HourlySeries& generation,
                         double storage_size_mwh, const StorageParams& params,
                         int fixed_point_iters) {
    if (fixed_point_iters < 1) {
        throw std::invalid_argument("fixed_point_iters must be >= 1");
    }
    double start = 0.0;
    for (int pass = 0; pass < fixed_point_iters; ++pass) {
        const double end =
            simulate(demand, generation, storage_size_mwh, params, start).end_level;
        const bool converged = std::abs(end - start) < 1e-9;
        start = end;
        if (converged) break;
    }
    return start;
}

double annual_import(const DispatchResult& result) {
    double total = 0.0;
    for (double v : result.grid_import.values()) total += v;
    return total;
}

}  // namespace solstor
