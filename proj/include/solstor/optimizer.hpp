#pragma once

#include <cstddef>
#include <vector>

#include "solstor/economics.hpp"
#include "solstor/series.hpp"
#include "solstor/storage_sizing.hpp"

namespace solstor {

struct SearchConfig {
    double pv_increment = 10.0;       // MW
    double storage_increment = 10.0;  // MWh
    int year_start = 2019;
    int year_end = 2019;
    double max_pv_override = 0.0;  // > 0 caps the analytical PV bound
    double f_epsilon = 0.0;        // capacity factors at or below this count as dark
    int fixed_point_iters = 1;     // hand-off passes inside sustainable_start

    void validate() const;
};

// One simulated (PV, storage) combination before pricing. The import cost is
// folded against the wholesale price during enumeration so the space can be
// re-priced per projection year without keeping per-point hourly series.
struct RawDesignPoint {
    double c_pv_mw = 0.0;
    double storage_size_mwh = 0.0;         // iterated size E
    double c_s_mwh = 0.0;                  // capacity, size / DoD
    double annual_import_mwh = 0.0;
    double annual_curtailment_mwh = 0.0;
    double import_cost_eur = 0.0;          // sum over hours of import * price
};

struct DesignPoint {
    double c_pv_mw = 0.0;
    double c_s_mwh = 0.0;
    double annual_import_mwh = 0.0;
    double lcoe = 0.0;  // EUR/MWh
    AnnualCostBreakdown breakdown;
};

struct OptimalResult {
    int year = 0;
    DesignPoint point;
    double grid_share = 0.0;  // fraction of annual demand met by import
};

// Per-PV-size sizing diagnostics collected during enumeration.
struct PvRowDiagnostics {
    double c_pv_mw = 0.0;
    double max_storage_size_mwh = 0.0;
    CriticalPointSet critical_points;
};

// Axis values 0 .. bound in steps of increment, with the bound itself always
// included even when it is not a multiple.
std::vector<double> search_axis(double bound, double increment);

// Nested search over the analytically bounded design space: PV capacities
// 0..C_PVMax, storage sizes 0..E_max(C_PV), one two-pass dispatch per point.
// Points come back ordered by (c_pv, storage size) regardless of thread
// count. OpenMP-parallel across points.
std::vector<RawDesignPoint> enumerate_design_space(const HourlySeries& demand,
                                                   const HourlySeries& capacity_factor,
                                                   const HourlySeries& price,
                                                   const StorageParams& params,
                                                   const SearchConfig& cfg,
                                                   std::vector<PvRowDiagnostics>* diagnostics = nullptr);

// Straightforward single-threaded nested loop over the same space; the
// reference the parallel kernel is tested and benchmarked against.
std::vector<RawDesignPoint> enumerate_design_space_reference(
    const HourlySeries& demand, const HourlySeries& capacity_factor, const HourlySeries& price,
    const StorageParams& params, const SearchConfig& cfg,
    std::vector<PvRowDiagnostics>* diagnostics = nullptr);

// Levelized cost of one raw point under the given cost assumptions.
DesignPoint price_point(const RawDesignPoint& raw, const CostAssumptions& costs,
                        double annual_demand_mwh, bool crf_paper_literal = false);

// Minimum-LCOE point of the space; ties prefer less storage, then less PV.
OptimalResult select_optimal(const std::vector<RawDesignPoint>& space,
                             const CostAssumptions& costs, double annual_demand_mwh,
                             int year = 0, bool crf_paper_literal = false);

// Enumerates the space once and re-prices it for every year in the range
// using projected costs.
std::vector<OptimalResult> multi_year_sweep(const HourlySeries& demand,
                                            const HourlySeries& capacity_factor,
                                            const StorageParams& params, const SearchConfig& cfg,
                                            const CostAssumptions& base_costs,
                                            const CostProjection& projection,
                                            const HourlySeries& price,
                                            bool crf_paper_literal = false);

}  // namespace solstor
