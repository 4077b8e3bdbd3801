#pragma once

#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "asrc/simulator.hpp"

namespace asrc {

/// "%.9g" with "nan"/"inf" spelled out.
std::string format_float(double v);

/// Column names of trace.csv for a run; pose columns only when a pose track exists.
std::vector<std::string> trace_csv_columns(const SimTrace& trace);

/// One row per control tick.
void write_trace_csv(std::ostream& out, const SimTrace& trace);

/// t, theta0, theta1, theta2, gamma, K, rho_hat.
void write_gains_csv(std::ostream& out, const SimTrace& trace);

/// Two-column plot-ready series.
void write_series_csv(std::ostream& out, std::string_view x_name, std::string_view y_name,
                      std::span<const double> xs, std::span<const double> ys);

}  // namespace asrc
