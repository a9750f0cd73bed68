#pragma once

#include <vector>

#include "solstor/series.hpp"

namespace solstor {

struct CostAssumptions {
    double pv_installed = 0.0;       // EUR/MW
    double pv_om = 0.0;              // EUR/MW/year
    double storage_installed = 0.0;  // EUR/MWh
    double storage_om = 0.0;         // EUR/MWh/year
    int pv_life = 1;                 // years
    int storage_life = 1;            // years
    double discount_rate = 0.03;     // fraction

    void validate() const;
};

struct ProjectionAnchor {
    int year = 0;
    double pv_installed_mult = 1.0;
    double pv_om_mult = 1.0;
    double storage_mult = 1.0;  // one track for storage installed and O&M
};

// Cost multipliers at anchor years; geometric (constant annual rate)
// interpolation between anchors. The base year 2019 must be present at 1.
struct CostProjection {
    std::vector<ProjectionAnchor> anchors;  // strictly increasing years

    void validate() const;
    int first_year() const { return anchors.front().year; }
    int last_year() const { return anchors.back().year; }
};

struct AnnualCostBreakdown {
    double pv_annualized = 0.0;      // EUR/year
    double storage_annualized = 0.0; // EUR/year
    double import_cost = 0.0;        // EUR/year
    double lcoe = 0.0;               // EUR/MWh
};

// Standard capital recovery factor r(1+r)^n / ((1+r)^n - 1). The
// paper_literal flag flips the denominator sign to +1 for audit runs that
// reproduce the published formula as printed.
double capital_recovery_factor(double r, int n, bool paper_literal = false);

// capacity * (installed * CRF + O&M), EUR/year.
double annualized_component_cost(double capacity, double installed, double om, double r, int n,
                                 bool paper_literal = false);

// Dot product of hourly import energy and wholesale price, EUR/year.
double import_cost(const HourlySeries& grid_import, const HourlySeries& price);

double lcoe(double pv_annualized, double storage_annualized, double import_cost_eur,
            double annual_demand_mwh);

// Cost assumptions scaled to a projection year. Anchor years reproduce their
// multipliers exactly; between anchors each multiplier follows a constant
// annual reduction rate.
CostAssumptions project_costs(const CostAssumptions& base, const CostProjection& projection,
                              int year);

// The paper-era anchor set: 2019 baseline, 2030, 2050, 2100.
CostProjection default_projection();

}  // namespace solstor
