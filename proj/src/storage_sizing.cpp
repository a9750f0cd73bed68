#include "solstor/storage_sizing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace solstor {

void StorageParams::validate() const {
    if (!(eta_c > 0.0 && eta_c <= 1.0)) {
        throw std::invalid_argument("charge efficiency must be in (0, 1]");
    }
    if (!(eta_d > 0.0 && eta_d <= 1.0)) {
        throw std::invalid_argument("discharge efficiency must be in (0, 1]");
    }
    if (!(dod > 0.0 && dod <= 1.0)) {
        throw std::invalid_argument("depth of discharge must be in (0, 1]");
    }
    if (!(dt > 0.0)) {
        throw std::invalid_argument("time step must be positive");
    }
}

DifferenceMatrix::DifferenceMatrix(std::size_t n, std::vector<double> entries)
    : n_(n), entries_(std::move(entries)) {
    if (n_ < 2 || entries_.size() != n_ * n_) {
        throw std::invalid_argument("difference matrix needs n >= 2 and n*n entries");
    }
}

double DifferenceMatrix::min() const { return *std::min_element(entries_.begin(), entries_.end()); }

double DifferenceMatrix::max() const { return *std::max_element(entries_.begin(), entries_.end()); }

double DifferenceMatrix::max_abs() const {
    double m = 0.0;
    for (double v : entries_) m = std::max(m, std::abs(v));
    return m;
}

UnconstrainedProfile unconstrained_profile(const HourlySeries& demand,
                                           const HourlySeries& generation,
                                           const StorageParams& params) {
    params.validate();
    if (demand.horizon() != generation.horizon()) {
        throw std::invalid_argument("demand and generation horizons differ");
    }
    UnconstrainedProfile profile;
    profile.levels.resize(demand.horizon() + 1);
    profile.levels[0] = 0.0;
    double level = 0.0;
    for (std::size_t t = 0; t < demand.horizon(); ++t) {
        const double net = generation[t] - demand[t];
        if (net > 0.0) {
            level += net * params.eta_c * params.dt;  // surplus charges at eta_c
        } else if (net < 0.0) {
            level += net / params.eta_d * params.dt;  // deficit drains at 1/eta_d
        }
        profile.levels[t + 1] = level;
    }
    return profile;
}

CriticalPointSet find_critical_points(const UnconstrainedProfile& profile) {
    const auto& levels = profile.levels;
    if (levels.size() < 2) {
        throw std::invalid_argument("profile needs at least one step");
    }
    CriticalPointSet cps;
    cps.times.push_back(0);
    cps.levels.push_back(levels.front());
    const std::size_t last = levels.size() - 1;
    for (std::size_t i = 1; i < last; ++i) {
        const double prev = levels[i - 1];
        const double cur = levels[i];
        const double next = levels[i + 1];
        // Plateau interiors (both neighbors equal) carry no extra information;
        // the plateau edges are still emitted.
        if (cur == prev && cur == next) continue;
        const bool is_max = cur >= prev && cur >= next;
        const bool is_min = cur <= prev && cur <= next;
        if (is_max || is_min) {
            cps.times.push_back(i);
            cps.levels.push_back(cur);
        }
    }
    cps.times.push_back(last);
    cps.levels.push_back(levels.back());
    return cps;
}

DifferenceMatrix difference_matrix(const CriticalPointSet& cps, double s0, double sT) {
    const std::size_t n = cps.times.size();
    if (n < 2) {
        throw std::invalid_argument("difference matrix needs at least two critical points");
    }
    const double wrap = sT - s0;
    std::vector<double> entries(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double d = cps.levels[j] - cps.levels[i];
            if (i > j) d += wrap;  // pair continues into the second analysis period
            entries[i * n + j] = d;
        }
    }
    return DifferenceMatrix(n, std::move(entries));
}

namespace {

double apply_sizing_rule(double min_diff, double max_diff, double trend) {
    double size;
    if (trend > 0.0) {
        size = std::abs(min_diff);  // rising profile: size on the largest decrease
    } else if (trend < 0.0) {
        size = max_diff;  // falling profile: size on the largest increase
    } else {
        size = std::max(std::abs(min_diff), std::abs(max_diff));
    }
    return std::max(size, 0.0);
}

}  // namespace

double storage_size(const DifferenceMatrix& m, double s0, double sT) {
    return apply_sizing_rule(m.min(), m.max(), sT - s0);
}

double storage_size_oracle(const UnconstrainedProfile& profile) {
    const auto& levels = profile.levels;
    const double wrap = profile.end_level() - profile.start_level();
    double min_diff = 0.0, max_diff = 0.0;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        for (std::size_t j = 0; j < levels.size(); ++j) {
            double d = levels[j] - levels[i];
            if (i > j) d += wrap;
            min_diff = std::min(min_diff, d);
            max_diff = std::max(max_diff, d);
        }
    }
    return apply_sizing_rule(min_diff, max_diff, wrap);
}

double max_storage_size(const UnconstrainedProfile& profile) {
    const CriticalPointSet cps = find_critical_points(profile);
    const DifferenceMatrix m = difference_matrix(cps, profile.start_level(), profile.end_level());
    return storage_size(m, profile.start_level(), profile.end_level());
}

double capacity_from_size(double size_mwh, const StorageParams& params) {
    if (!(params.dod > 0.0)) {
        throw std::invalid_argument("depth of discharge must be positive");
    }
    if (size_mwh < 0.0) {
        throw std::invalid_argument("storage size must be non-negative");
    }
    return size_mwh / params.dod;
}

}  // namespace solstor
