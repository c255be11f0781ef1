#include "coauth/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "coauth/error.hpp"
#include "coauth/special.hpp"

namespace coauth {

namespace {

double mean(std::span<const double> x) {
  return std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
}

// Sample variance, n - 1 denominator.
double variance(std::span<const double> x, double m) {
  double ss = 0.0;
  for (double v : x) ss += (v - m) * (v - m);
  return ss / static_cast<double>(x.size() - 1);
}

void require_finite(std::span<const double> x, const char* what) {
  for (double v : x) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::ParseError, std::string(what) + ": non-finite value");
    }
  }
}

void require_two_samples(std::span<const double> a, std::span<const double> b,
                         const char* what) {
  if (a.size() < 2 || b.size() < 2) {
    throw Error(ErrorCode::TooSmall,
                std::string(what) + " needs at least 2 values per group");
  }
  require_finite(a, what);
  require_finite(b, what);
}

// Rows where both columns are defined.
void defined_pairs(const std::vector<std::optional<double>>& x,
                   const std::vector<std::optional<double>>& y,
                   std::vector<double>& xs, std::vector<double>& ys) {
  xs.clear();
  ys.clear();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] && y[i]) {
      xs.push_back(*x[i]);
      ys.push_back(*y[i]);
    }
  }
}

std::vector<double> defined(const std::vector<std::optional<double>>& x) {
  std::vector<double> out;
  for (const auto& v : x) {
    if (v) out.push_back(*v);
  }
  return out;
}

}  // namespace

MetricTable::MetricTable(std::string cohort_name, std::vector<MetricTableRow> rows)
    : cohort_name_(std::move(cohort_name)), rows_(std::move(rows)) {
  std::set<std::string> seen;
  for (const auto& r : rows_) {
    if (!seen.insert(r.author).second) {
      throw Error(ErrorCode::DuplicateAuthor,
                  "duplicate author '" + r.author + "' in table '" + cohort_name_ + "'");
    }
  }
}

std::vector<std::optional<double>> MetricTable::column(Metric m) const {
  std::vector<std::optional<double>> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r.row.value(m));
  return out;
}

MetricTable MetricTable::sorted_by_author() const {
  auto rows = rows_;
  std::sort(rows.begin(), rows.end(),
            [](const MetricTableRow& a, const MetricTableRow& b) {
              return a.author < b.author;
            });
  return MetricTable(cohort_name_, std::move(rows));
}

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::LengthMismatch,
                "pearson: series lengths differ (" + std::to_string(x.size()) +
                    " vs " + std::to_string(y.size()) + ")");
  }
  if (x.size() < 3) {
    throw Error(ErrorCode::TooSmall, "pearson needs at least 3 pairs");
  }
  require_finite(x, "pearson");
  require_finite(y, "pearson");
  const double mx = mean(x);
  const double my = mean(y);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw Error(ErrorCode::ZeroVariance, "pearson: constant series");
  }
  return sxy / std::sqrt(sxx * syy);
}

double CorrelationMatrix::at(Metric row, Metric col) const {
  auto r = std::find(row_labels.begin(), row_labels.end(), row);
  auto c = std::find(col_labels.begin(), col_labels.end(), col);
  if (r == row_labels.end() || c == col_labels.end()) {
    throw Error(ErrorCode::UnknownMetric, "metric not present in correlation matrix");
  }
  return at(static_cast<std::size_t>(r - row_labels.begin()),
            static_cast<std::size_t>(c - col_labels.begin()));
}

CorrelationMatrix correlation_matrix(const MetricTable& a) {
  const std::size_t k = kAllMetrics.size();
  CorrelationMatrix out;
  out.mode = CorrelationMatrix::Mode::WithinCohort;
  out.row_labels.assign(kAllMetrics.begin(), kAllMetrics.end());
  out.col_labels = out.row_labels;
  out.entries.assign(k * k, 0.0);

  std::vector<std::vector<std::optional<double>>> cols;
  for (Metric m : kAllMetrics) cols.push_back(a.column(m));
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      defined_pairs(cols[i], cols[j], xs, ys);
      const double r = pearson(xs, ys);
      out.entries[i * k + j] = r;
      out.entries[j * k + i] = r;
    }
  }
  return out;
}

CorrelationMatrix correlation_matrix(const MetricTable& a, const MetricTable& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::AlignmentError,
                "cross-cohort correlation needs equal row counts (" +
                    std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
  }
  const auto sa = a.sorted_by_author();
  const auto sb = b.sorted_by_author();
  const std::size_t k = kAllMetrics.size();
  CorrelationMatrix out;
  out.mode = CorrelationMatrix::Mode::CrossCohort;
  out.row_labels.assign(kAllMetrics.begin(), kAllMetrics.end());
  out.col_labels = out.row_labels;
  out.entries.assign(k * k, 0.0);

  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < k; ++i) {
    const auto x = sa.column(kAllMetrics[i]);
    for (std::size_t j = 0; j < k; ++j) {
      defined_pairs(x, sb.column(kAllMetrics[j]), xs, ys);
      out.entries[i * k + j] = pearson(xs, ys);
    }
  }
  return out;
}

TTestResult t_test(std::span<const double> a, std::span<const double> b,
                   VarianceModel model) {
  require_two_samples(a, b, "t_test");
  const auto n1 = static_cast<double>(a.size());
  const auto n2 = static_cast<double>(b.size());
  const double m1 = mean(a);
  const double m2 = mean(b);
  const double v1 = variance(a, m1);
  const double v2 = variance(b, m2);
  const double diff = m1 - m2;

  double se = 0.0;
  double df = 0.0;
  if (model == VarianceModel::Pooled) {
    df = n1 + n2 - 2.0;
    const double pooled = ((n1 - 1.0) * v1 + (n2 - 1.0) * v2) / df;
    se = std::sqrt(pooled * (1.0 / n1 + 1.0 / n2));
  } else {
    const double q1 = v1 / n1;
    const double q2 = v2 / n2;
    se = std::sqrt(q1 + q2);
    const double denom = q1 * q1 / (n1 - 1.0) + q2 * q2 / (n2 - 1.0);
    df = denom > 0.0 ? (q1 + q2) * (q1 + q2) / denom : n1 + n2 - 2.0;
  }

  if (se == 0.0) {
    if (diff == 0.0) return {0.0, df, 1.0};
    throw Error(ErrorCode::DegenerateTest,
                "t_test: zero variance in both groups but different means");
  }
  const double t = diff / se;
  return {t, df, student_t_two_sided_p(t, df)};
}

double cohens_d(std::span<const double> a, std::span<const double> b) {
  require_two_samples(a, b, "cohens_d");
  const auto n1 = static_cast<double>(a.size());
  const auto n2 = static_cast<double>(b.size());
  const double m1 = mean(a);
  const double m2 = mean(b);
  const double pooled =
      ((n1 - 1.0) * variance(a, m1) + (n2 - 1.0) * variance(b, m2)) / (n1 + n2 - 2.0);
  const double diff = m1 - m2;
  if (pooled == 0.0) {
    if (diff == 0.0) return 0.0;
    throw Error(ErrorCode::DegenerateTest,
                "cohens_d: zero pooled variance but different means");
  }
  return diff / std::sqrt(pooled);
}

const MetricComparison& ComparisonReport::at(Metric m) const {
  for (const auto& r : rows) {
    if (r.metric == m) return r;
  }
  throw Error(ErrorCode::UnknownMetric, "metric not present in comparison report");
}

ComparisonReport compare_cohorts(const MetricTable& a, const MetricTable& b,
                                 VarianceModel model) {
  if (a.size() == 0 || b.size() == 0) {
    throw Error(ErrorCode::Empty, "compare_cohorts: empty table");
  }
  ComparisonReport report;
  report.model = model;
  report.rows.resize(kAllMetrics.size());
  for (std::size_t i = 0; i < kAllMetrics.size(); ++i) {
    const Metric m = kAllMetrics[i];
    const auto xa = defined(a.column(m));
    const auto xb = defined(b.column(m));
    if (xa.empty() || xb.empty()) {
      throw Error(ErrorCode::EmptyColumn,
                  "compare_cohorts: column " + std::string(metric_id(m)) +
                      " has no defined values");
    }
    const auto tt = t_test(xa, xb, model);
    report.rows[i] = {m, tt.t, tt.p, cohens_d(xa, xb), tt.df, xa.size(), xb.size()};
  }
  return report;
}

std::vector<CcdfPoint> ccdf(std::span<const double> sample) {
  if (sample.empty()) throw Error(ErrorCode::Empty, "ccdf: empty sample");
  require_finite(sample, "ccdf");
  std::vector<double> sorted(sample.begin(), sample.end());
  std::sort(sorted.begin(), sorted.end());
  const auto n = static_cast<double>(sorted.size());
  std::vector<CcdfPoint> out;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i > 0 && sorted[i] == sorted[i - 1]) continue;
    out.push_back({sorted[i], static_cast<double>(sorted.size() - i) / n});
  }
  return out;
}

}  // namespace coauth
