#include "solstor/economics.hpp"

#include <cmath>
#include <stdexcept>

namespace solstor {

void CostAssumptions::validate() const {
    if (pv_installed < 0 || pv_om < 0 || storage_installed < 0 || storage_om < 0) {
        throw std::invalid_argument("component costs must be non-negative");
    }
    if (pv_life < 1 || storage_life < 1) {
        throw std::invalid_argument("component lifetimes must be at least one year");
    }
    if (!(discount_rate > 0.0 && discount_rate < 1.0)) {
        throw std::invalid_argument("discount rate must lie in (0, 1)");
    }
}

void CostProjection::validate() const {
    if (anchors.empty()) {
        throw std::invalid_argument("cost projection has no anchors");
    }
    int prev_year = anchors.front().year - 1;
    bool has_base = false;
    for (const auto& a : anchors) {
        if (a.year <= prev_year) {
            throw std::invalid_argument("projection anchor years must be strictly increasing");
        }
        prev_year = a.year;
        for (double m : {a.pv_installed_mult, a.pv_om_mult, a.storage_mult}) {
            if (!(m > 0.0 && m <= 1.0)) {
                throw std::invalid_argument("projection multipliers must lie in (0, 1]");
            }
        }
        if (a.year == 2019) {
            has_base = a.pv_installed_mult == 1.0 && a.pv_om_mult == 1.0 && a.storage_mult == 1.0;
        }
    }
    if (!has_base) {
        throw std::invalid_argument("projection must anchor 2019 at multiplier 1");
    }
}

double capital_recovery_factor(double r, int n, bool paper_literal) {
    if (!(r > 0.0)) {
        throw std::invalid_argument("capital recovery factor needs a positive discount rate");
    }
    if (n < 1) {
        throw std::invalid_argument("capital recovery factor needs a lifetime of at least a year");
    }
    const double growth = std::pow(1.0 + r, n);
    const double denom = paper_literal ? growth + 1.0 : growth - 1.0;
    return r * growth / denom;
}

double annualized_component_cost(double capacity, double installed, double om, double r, int n,
                                 bool paper_literal) {
    if (capacity < 0.0) {
        throw std::invalid_argument("capacity must be non-negative");
    }
    return capacity * (installed * capital_recovery_factor(r, n, paper_literal) + om);
}

double import_cost(const HourlySeries& grid_import, const HourlySeries& price) {
    if (grid_import.horizon() != price.horizon()) {
        throw std::invalid_argument("import and price horizons differ");
    }
    double total = 0.0;
    for (std::size_t t = 0; t < price.horizon(); ++t) total += grid_import[t] * price[t];
    return total;
}

double lcoe(double pv_annualized, double storage_annualized, double import_cost_eur,
            double annual_demand_mwh) {
    if (!(annual_demand_mwh > 0.0)) {
        throw std::invalid_argument("LCOE needs a positive annual demand");
    }
    return (pv_annualized + storage_annualized + import_cost_eur) / annual_demand_mwh;
}

namespace {

double interpolate_multiplier(double m_a, double m_b, int year_a, int year_b, int year) {
    if (year == year_a) return m_a;
    if (year == year_b) return m_b;
    const double frac = static_cast<double>(year - year_a) / (year_b - year_a);
    return m_a * std::pow(m_b / m_a, frac);
}

}  // namespace

CostAssumptions project_costs(const CostAssumptions& base, const CostProjection& projection,
                              int year) {
    base.validate();
    projection.validate();
    if (year < projection.first_year() || year > projection.last_year()) {
        throw std::invalid_argument("projection year " + std::to_string(year) +
                                    " outside anchor range " +
                                    std::to_string(projection.first_year()) + ".." +
                                    std::to_string(projection.last_year()));
    }

    std::size_t hi = 1;
    while (hi < projection.anchors.size() && projection.anchors[hi].year < year) ++hi;
    if (hi == projection.anchors.size()) --hi;  // single-anchor projection
    const ProjectionAnchor& a = projection.anchors[hi == 0 ? 0 : hi - 1];
    const ProjectionAnchor& b = projection.anchors[hi];

    CostAssumptions out = base;
    out.pv_installed =
        base.pv_installed *
        interpolate_multiplier(a.pv_installed_mult, b.pv_installed_mult, a.year, b.year, year);
    out.pv_om = base.pv_om *
                interpolate_multiplier(a.pv_om_mult, b.pv_om_mult, a.year, b.year, year);
    const double storage_mult =
        interpolate_multiplier(a.storage_mult, b.storage_mult, a.year, b.year, year);
    out.storage_installed = base.storage_installed * storage_mult;
    out.storage_om = base.storage_om * storage_mult;
    return out;
}

CostProjection default_projection() {
    CostProjection p;
    p.anchors = {
        {2019, 1.0, 1.0, 1.0},
        {2030, 0.56, 0.73, 0.42},
        {2050, 0.46, 0.65, 0.32},
        {2100, 0.21, 0.48, 0.05},
    };
    return p;
}

}  // namespace solstor
