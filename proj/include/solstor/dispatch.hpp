#pragma once

#include <vector>

#include "solstor/series.hpp"
#include "solstor/storage_sizing.hpp"

namespace solstor {

// Outcome of one constrained dispatch run. Storage levels stay within
// [0, size]; import and curtailment are per-hour energies.
struct DispatchResult {
    std::vector<double> storage_levels;  // length horizon + 1
    HourlySeries grid_import;            // MWh per hour
    HourlySeries curtailment;            // MWh per hour
    double start_level = 0.0;            // MWh
    double end_level = 0.0;              // MWh
};

// Conventional operation strategy: solar serves demand first; surplus charges
// storage at eta_c until full, the rest is curtailed; deficit discharges
// storage (a level drop of x delivers x * eta_d) until empty; what remains is
// imported from the grid in the same hour. The grid never charges storage.
DispatchResult simulate(const HourlySeries& demand, const HourlySeries& generation,
                        double storage_size_mwh, const StorageParams& params,
                        double start_level_mwh);

// Start level that makes the annual trajectory repeatable: simulate from
// zero and hand the end level back as the start. fixed_point_iters is the
// number of hand-off passes; with more than one, iteration stops early once
// |start - end| < 1e-9.
double sustainable_start(const HourlySeries& demand, const HourlySeries& generation,
                         double storage_size_mwh, const StorageParams& params,
                         int fixed_point_iters = 1);

// Total grid import over the horizon, MWh.
double annual_import(const DispatchResult& result);

}  // namespace solstor
