#include "solstor/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "solstor/dispatch.hpp"
#include "solstor/solar.hpp"

namespace solstor {

void SearchConfig::validate() const {
    if (!(pv_increment > 0.0) || !(storage_increment > 0.0)) {
        throw std::invalid_argument("search increments must be positive");
    }
    if (year_start > year_end) {
        throw std::invalid_argument("year range start exceeds end");
    }
    if (fixed_point_iters < 1) {
        throw std::invalid_argument("fixed_point_iters must be >= 1");
    }
    if (f_epsilon < 0.0) {
        throw std::invalid_argument("f_epsilon must be non-negative");
    }
}

std::vector<double> search_axis(double bound, double increment) {
    if (bound < 0.0) {
        throw std::invalid_argument("search axis bound must be non-negative");
    }
    std::vector<double> axis;
    const double eps = 1e-9 * std::max(1.0, bound);
    for (std::size_t k = 0; static_cast<double>(k) * increment <= bound + eps; ++k) {
        axis.push_back(static_cast<double>(k) * increment);
    }
    if (axis.empty() || bound - axis.back() > eps) {
        axis.push_back(bound);  // the analytical bound is always evaluated
    }
    return axis;
}

namespace {

struct PvRow {
    double c_pv = 0.0;
    double e_max = 0.0;
    std::vector<double> storage_sizes;
    std::size_t first_point_index = 0;  // offset into the flat point array
};

// Builds each PV row's generation-independent sizing data: E_max from the
// unconstrained profile's critical points, and the storage size axis.
std::vector<PvRow> build_rows(const HourlySeries& demand, const HourlySeries& capacity_factor,
                              const StorageParams& params, const SearchConfig& cfg,
                              std::vector<PvRowDiagnostics>* diagnostics) {
    double pv_max = max_pv_capacity(demand, capacity_factor, cfg.f_epsilon);
    if (cfg.max_pv_override > 0.0) pv_max = std::min(pv_max, cfg.max_pv_override);

    const std::vector<double> pv_axis = search_axis(pv_max, cfg.pv_increment);
    std::vector<PvRow> rows(pv_axis.size());
    if (diagnostics) diagnostics->resize(pv_axis.size());

    for (std::size_t i = 0; i < pv_axis.size(); ++i) {
        const double c_pv = pv_axis[i];
        const HourlySeries gen = generation_profile(capacity_factor, c_pv);
        const UnconstrainedProfile profile = unconstrained_profile(demand, gen, params);
        const CriticalPointSet cps = find_critical_points(profile);
        const DifferenceMatrix m =
            difference_matrix(cps, profile.start_level(), profile.end_level());
        const double e_max = storage_size(m, profile.start_level(), profile.end_level());

        rows[i].c_pv = c_pv;
        rows[i].e_max = e_max;
        rows[i].storage_sizes = search_axis(e_max, cfg.storage_increment);
        if (diagnostics) {
            (*diagnostics)[i] = PvRowDiagnostics{c_pv, e_max, cps};
        }
    }

    std::size_t offset = 0;
    for (auto& row : rows) {
        row.first_point_index = offset;
        offset += row.storage_sizes.size();
    }
    return rows;
}

RawDesignPoint evaluate_point(const HourlySeries& demand, const HourlySeries& capacity_factor,
                              const HourlySeries& price, const StorageParams& params,
                              const SearchConfig& cfg, double c_pv, double storage_size_mwh) {
    const HourlySeries gen = generation_profile(capacity_factor, c_pv);
    const double start =
        sustainable_start(demand, gen, storage_size_mwh, params, cfg.fixed_point_iters);
    const DispatchResult run = simulate(demand, gen, storage_size_mwh, params, start);

    RawDesignPoint point;
    point.c_pv_mw = c_pv;
    point.storage_size_mwh = storage_size_mwh;
    point.c_s_mwh = capacity_from_size(storage_size_mwh, params);
    for (std::size_t t = 0; t < demand.horizon(); ++t) {
        point.annual_import_mwh += run.grid_import[t];
        point.annual_curtailment_mwh += run.curtailment[t];
        point.import_cost_eur += run.grid_import[t] * price[t];
    }
    return point;
}

void check_inputs(const HourlySeries& demand, const HourlySeries& capacity_factor,
                  const HourlySeries& price, const StorageParams& params,
                  const SearchConfig& cfg) {
    params.validate();
    cfg.validate();
    if (demand.horizon() != capacity_factor.horizon() || demand.horizon() != price.horizon()) {
        throw std::invalid_argument("demand, capacity factor, and price horizons differ");
    }
}

}  // namespace

std::vector<RawDesignPoint> enumerate_design_space(const HourlySeries& demand,
                                                   const HourlySeries& capacity_factor,
                                                   const HourlySeries& price,
                                                   const StorageParams& params,
                                                   const SearchConfig& cfg,
                                                   std::vector<PvRowDiagnostics>* diagnostics) {
    check_inputs(demand, capacity_factor, price, params, cfg);
    const std::vector<PvRow> rows = build_rows(demand, capacity_factor, params, cfg, diagnostics);

    // Flatten (row, storage) pairs into one task list; rows vary wildly in
    // length, so scheduling over points balances better than over rows.
    std::vector<std::pair<std::size_t, std::size_t>> tasks;
    std::size_t total = 0;
    for (const auto& row : rows) total += row.storage_sizes.size();
    tasks.reserve(total);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].storage_sizes.size(); ++j) tasks.emplace_back(i, j);
    }

    std::vector<RawDesignPoint> points(total);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(tasks.size()); ++k) {
        const auto [i, j] = tasks[static_cast<std::size_t>(k)];
        const PvRow& row = rows[i];
        points[row.first_point_index + j] = evaluate_point(
            demand, capacity_factor, price, params, cfg, row.c_pv, row.storage_sizes[j]);
    }
    return points;
}

std::vector<RawDesignPoint> enumerate_design_space_reference(
    const HourlySeries& demand, const HourlySeries& capacity_factor, const HourlySeries& price,
    const StorageParams& params, const SearchConfig& cfg,
    std::vector<PvRowDiagnostics>* diagnostics) {
    check_inputs(demand, capacity_factor, price, params, cfg);
    const std::vector<PvRow> rows = build_rows(demand, capacity_factor, params, cfg, diagnostics);

    std::vector<RawDesignPoint> points;
    for (const auto& row : rows) {
        for (double e : row.storage_sizes) {
            points.push_back(
                evaluate_point(demand, capacity_factor, price, params, cfg, row.c_pv, e));
        }
    }
    return points;
}

DesignPoint price_point(const RawDesignPoint& raw, const CostAssumptions& costs,
                        double annual_demand_mwh, bool crf_paper_literal) {
    AnnualCostBreakdown breakdown;
    breakdown.pv_annualized =
        annualized_component_cost(raw.c_pv_mw, costs.pv_installed, costs.pv_om,
                                  costs.discount_rate, costs.pv_life, crf_paper_literal);
    breakdown.storage_annualized =
        annualized_component_cost(raw.c_s_mwh, costs.storage_installed, costs.storage_om,
                                  costs.discount_rate, costs.storage_life, crf_paper_literal);
    breakdown.import_cost = raw.import_cost_eur;
    breakdown.lcoe = lcoe(breakdown.pv_annualized, breakdown.storage_annualized,
                          breakdown.import_cost, annual_demand_mwh);

    DesignPoint point;
    point.c_pv_mw = raw.c_pv_mw;
    point.c_s_mwh = raw.c_s_mwh;
    point.annual_import_mwh = raw.annual_import_mwh;
    point.lcoe = breakdown.lcoe;
    point.breakdown = breakdown;
    return point;
}

OptimalResult select_optimal(const std::vector<RawDesignPoint>& space,
                             const CostAssumptions& costs, double annual_demand_mwh, int year,
                             bool crf_paper_literal) {
    if (space.empty()) {
        throw std::invalid_argument("cannot select an optimum from an empty design space");
    }
    costs.validate();

    std::size_t best = 0;
    DesignPoint best_point = price_point(space[0], costs, annual_demand_mwh, crf_paper_literal);
    for (std::size_t k = 1; k < space.size(); ++k) {
        DesignPoint candidate = price_point(space[k], costs, annual_demand_mwh, crf_paper_literal);
        const bool better =
            candidate.lcoe < best_point.lcoe ||
            (candidate.lcoe == best_point.lcoe &&
             (candidate.c_s_mwh < best_point.c_s_mwh ||
              (candidate.c_s_mwh == best_point.c_s_mwh && candidate.c_pv_mw < best_point.c_pv_mw)));
        if (better) {
            best = k;
            best_point = candidate;
        }
    }

    OptimalResult result;
    result.year = year;
    result.point = best_point;
    result.grid_share = space[best].annual_import_mwh / annual_demand_mwh;
    return result;
}

std::vector<OptimalResult> multi_year_sweep(const HourlySeries& demand,
                                            const HourlySeries& capacity_factor,
                                            const StorageParams& params, const SearchConfig& cfg,
                                            const CostAssumptions& base_costs,
                                            const CostProjection& projection,
                                            const HourlySeries& price, bool crf_paper_literal) {
    projection.validate();
    if (cfg.year_start < projection.first_year() || cfg.year_end > projection.last_year()) {
        throw std::invalid_argument("sweep years outside the projection's anchor range");
    }

    // Costs do not affect dispatch: enumerate once, re-price per year.
    const std::vector<RawDesignPoint> space =
        enumerate_design_space(demand, capacity_factor, price, params, cfg);
    const double demand_mwh = annual_energy(demand);

    std::vector<OptimalResult> results(static_cast<std::size_t>(cfg.year_end - cfg.year_start) + 1);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(results.size()); ++k) {
        const int year = cfg.year_start + static_cast<int>(k);
        const CostAssumptions costs = project_costs(base_costs, projection, year);
        results[static_cast<std::size_t>(k)] =
            select_optimal(space, costs, demand_mwh, year, crf_paper_literal);
    }
    return results;
}

}  // namespace solstor
