#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coauth/metrics.hpp"

namespace coauth {

struct MetricTableRow {
  std::string author;
  MetricRow row;
};

/// A cohort: one MetricRow per author. Author labels are unique.
class MetricTable {
 public:
  MetricTable() = default;
  /// Throws Error{DuplicateAuthor} if an author label repeats.
  MetricTable(std::string cohort_name, std::vector<MetricTableRow> rows);

  const std::string& cohort_name() const noexcept { return cohort_name_; }
  std::span<const MetricTableRow> rows() const noexcept { return rows_; }
  std::size_t size() const noexcept { return rows_.size(); }

  /// Column values in row order; undefined entries are std::nullopt.
  std::vector<std::optional<double>> column(Metric m) const;

  /// Copy with rows ordered by author label (byte order).
  MetricTable sorted_by_author() const;

 private:
  std::string cohort_name_;
  std::vector<MetricTableRow> rows_;
};

/// Sample Pearson correlation. Requires equal lengths >= 3.
double pearson(std::span<const double> x, std::span<const double> y);

struct CorrelationMatrix {
  enum class Mode { WithinCohort, CrossCohort };
  Mode mode = Mode::WithinCohort;
  std::vector<Metric> row_labels;
  std::vector<Metric> col_labels;
  std::vector<double> entries;  // row-major

  double at(std::size_t row, std::size_t col) const {
    return entries[row * col_labels.size() + col];
  }
  double at(Metric row, Metric col) const;
};

/// 9x9 symmetric matrix over the table's metric columns.
CorrelationMatrix correlation_matrix(const MetricTable& a);

/// Entry (i, j) = pearson(a column i, b column j), rows aligned by index
/// after sorting both tables by author label.
CorrelationMatrix correlation_matrix(const MetricTable& a, const MetricTable& b);

enum class VarianceModel {
  Pooled,  // Student: df = n1 + n2 - 2
  Welch,   // Welch-Satterthwaite df
};

struct TTestResult {
  double t = 0;
  double df = 0;
  double p = 1;
};

/// Independent two-sample t-test of mean(a) - mean(b), two-sided p.
/// With zero variance: equal means give t = 0, p = 1; different means throw
/// Error{DegenerateTest}.
TTestResult t_test(std::span<const double> a, std::span<const double> b,
                   VarianceModel model = VarianceModel::Pooled);

/// (mean(a) - mean(b)) / pooled standard deviation.
double cohens_d(std::span<const double> a, std::span<const double> b);

struct MetricComparison {
  Metric metric;
  double t_statistic = 0;
  double p_value = 1;
  double cohens_d = 0;
  double df = 0;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
};

struct ComparisonReport {
  VarianceModel model = VarianceModel::Welch;
  std::vector<MetricComparison> rows;  // fixed order: kAllMetrics

  const MetricComparison& at(Metric m) const;
};

/// t-test and Cohen's d for every metric column, first cohort minus second.
/// Undefined values are dropped per metric and the effective n reported.
ComparisonReport compare_cohorts(const MetricTable& a, const MetricTable& b,
                                 VarianceModel model = VarianceModel::Welch);

struct CcdfPoint {
  double x;
  double fraction;  // P(X >= x)
  friend bool operator==(const CcdfPoint&, const CcdfPoint&) = default;
};

/// Empirical P(X >= x) at each distinct sample value, ascending in x.
std::vector<CcdfPoint> ccdf(std::span<const double> sample);

}  // namespace coauth
