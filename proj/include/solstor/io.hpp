#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "solstor/dispatch.hpp"
#include "solstor/economics.hpp"
#include "solstor/optimizer.hpp"
#include "solstor/profiles.hpp"
#include "solstor/series.hpp"

namespace solstor {

// Ingestion failure with the offending file and 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string file, std::size_t line, const std::string& message);

    const std::string& file() const { return file_; }
    std::size_t line() const { return line_; }

private:
    std::string file_;
    std::size_t line_;
};

// --- readers ----------------------------------------------------------
// All delimited inputs accept comma, semicolon, tab, or space separators,
// '#' comments, and an optional header line.

// Two columns: hour_index (0-based, contiguous) and value; exactly `horizon`
// rows.
HourlySeries read_series(const std::filesystem::path& path, Unit unit, std::size_t horizon);

// One row per (class_id, season, day_type) holding 48 half-hourly kW values;
// a header line is required.
std::map<int, ClassTemplate> read_class_templates(const std::filesystem::path& path);

// One row per day: day_index (0-based, contiguous), season, day_type.
SeasonCalendar read_calendar(const std::filesystem::path& path);

// Key-value lines for the seven cost assumption fields.
CostAssumptions read_costs(const std::filesystem::path& path);

// Rows: year, pv_installed_mult, pv_om_mult, storage_mult.
CostProjection read_projection(const std::filesystem::path& path);

// --- writers ----------------------------------------------------------
// All numeric output is fixed at six significant digits.

std::string format_value(double v);

void write_series(const std::filesystem::path& path, const HourlySeries& series);

void write_design_space(const std::filesystem::path& path, const std::vector<DesignPoint>& points);

void write_sweep(const std::filesystem::path& path, const std::vector<OptimalResult>& results);

void write_trace(const std::filesystem::path& path, const HourlySeries& demand,
                 const HourlySeries& generation, const DispatchResult& result);

void write_sizing_diagnostics(const std::filesystem::path& path,
                              const std::vector<PvRowDiagnostics>& diagnostics);

}  // namespace solstor
