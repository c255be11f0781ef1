#pragma once

#include <ostream>
#include <span>
#include <string>

#include "coauth/stats.hpp"

namespace coauth {

/// Real-number rendering for tables: fixed decimals (4 by default, matching
/// the published tables) or shortest round-trip.
struct NumberFormat {
  int decimals = 4;
  bool full_precision = false;

  std::string operator()(double value) const;
};

void write_metric_table_csv(std::ostream& out, const MetricTable& table,
                            const NumberFormat& fmt = {});
/// Always full precision.
void write_metric_table_json(std::ostream& out, const MetricTable& table);

void write_comparison_csv(std::ostream& out, const ComparisonReport& report,
                          const NumberFormat& fmt = {});

void write_correlation_csv(std::ostream& out, const CorrelationMatrix& matrix,
                           const NumberFormat& fmt = {});

/// Heatmap with a diverging ramp: -1 blue, 0 white, +1 red; cell values
/// printed at two decimals.
void write_correlation_svg(std::ostream& out, const CorrelationMatrix& matrix,
                           const std::string& title = {});

void write_ccdf_csv(std::ostream& out, std::span<const CcdfPoint> points,
                    const NumberFormat& fmt = {});

}  // namespace coauth
