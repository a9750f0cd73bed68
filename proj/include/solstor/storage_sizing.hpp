#pragma once

#include <cstddef>
#include <vector>

#include "solstor/series.hpp"

namespace solstor {

struct StorageParams {
    double eta_c = 1.0;  // charge efficiency, (0, 1]
    double eta_d = 1.0;  // discharge efficiency, (0, 1]
    double dod = 1.0;    // depth of discharge, (0, 1]
    double dt = kStepHours;

    void validate() const;
};

// Cumulative signed, efficiency-weighted surplus/deficit trace starting at
// zero, before any capacity bound is applied. Levels may go negative.
struct UnconstrainedProfile {
    std::vector<double> levels;  // length horizon + 1, levels[0] == 0

    double start_level() const { return levels.front(); }
    double end_level() const { return levels.back(); }
};

// Local extrema of the level sequence (plateau edges only) plus both
// endpoints; sizing works on pairwise differences of these levels.
struct CriticalPointSet {
    std::vector<std::size_t> times;  // strictly increasing, includes 0 and T
    std::vector<double> levels;      // matching storage levels
};

// Pairwise critical-level differences. Lower-left entries carry the wrap term
// end - start, pushing those pairs into the second analysis period.
class DifferenceMatrix {
public:
    DifferenceMatrix(std::size_t n, std::vector<double> entries);

    std::size_t size() const { return n_; }
    double at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    double min() const;
    double max() const;
    double max_abs() const;

private:
    std::size_t n_;
    std::vector<double> entries_;
};

UnconstrainedProfile unconstrained_profile(const HourlySeries& demand,
                                           const HourlySeries& generation,
                                           const StorageParams& params);

CriticalPointSet find_critical_points(const UnconstrainedProfile& profile);

DifferenceMatrix difference_matrix(const CriticalPointSet& cps, double s0, double sT);

// Three-case sizing rule on the difference matrix: largest decrease when the
// profile trends up, largest increase when it trends down, largest absolute
// change when balanced. Clamped at zero.
double storage_size(const DifferenceMatrix& m, double s0, double sT);

// Brute-force reference: the same case split applied to every hour pair of
// the full profile, O(T^2). Used by tests and the benchmark, never by the
// optimizer hot path.
double storage_size_oracle(const UnconstrainedProfile& profile);

// Convenience: profile -> critical points -> difference matrix -> size.
double max_storage_size(const UnconstrainedProfile& profile);

// Nominal capacity from usable size via depth of discharge.
double capacity_from_size(double size_mwh, const StorageParams& params);

}  // namespace solstor
