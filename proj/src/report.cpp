#include "coauth/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>

#include <nlohmann/json.hpp>

#include "csv.hpp"

namespace coauth {

std::string NumberFormat::operator()(double value) const {
  char buf[64];
  if (full_precision) {
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
  }
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  std::string s(buf);
  // "-0.0000" -> "0.0000"
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

void write_metric_table_csv(std::ostream& out, const MetricTable& table,
                            const NumberFormat& fmt) {
  out << "author,ND,DC,WD,APL,AS,TR,CC,EC,BC,CL\n";
  for (const auto& r : table.rows()) {
    const auto& m = r.row;
    out << csv::escape(r.author) << ',' << m.diameter << ',' << fmt(m.avg_dc) << ','
        << fmt(m.avg_wd) << ',' << fmt(m.avg_apl) << ','
        << (m.assortativity ? fmt(*m.assortativity) : std::string()) << ','
        << fmt(m.transitivity) << ',' << fmt(m.avg_cc) << ',' << fmt(m.avg_ec) << ','
        << fmt(m.avg_bc) << ',' << fmt(m.avg_cl) << '\n';
  }
}

void write_metric_table_json(std::ostream& out, const MetricTable& table) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& r : table.rows()) {
    nlohmann::ordered_json row;
    row["author"] = r.author;
    row["ND"] = r.row.diameter;
    for (Metric m : kAllMetrics) {
      const auto v = r.row.value(m);
      row[std::string(metric_id(m))] =
          v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
    }
    rows.push_back(std::move(row));
  }
  nlohmann::ordered_json doc;
  doc["cohort"] = table.cohort_name();
  doc["rows"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

void write_comparison_csv(std::ostream& out, const ComparisonReport& report,
                          const NumberFormat& fmt) {
  out << "metric,t_statistic,p_value,cohens_d,df,n1,n2\n";
  for (const auto& r : report.rows) {
    out << metric_id(r.metric) << ',' << fmt(r.t_statistic) << ',' << fmt(r.p_value)
        << ',' << fmt(r.cohens_d) << ',' << fmt(r.df) << ',' << r.n1 << ',' << r.n2
        << '\n';
  }
}

void write_correlation_csv(std::ostream& out, const CorrelationMatrix& matrix,
                           const NumberFormat& fmt) {
  out << (matrix.mode == CorrelationMatrix::Mode::WithinCohort ? "metric" : "a\\b");
  for (Metric c : matrix.col_labels) out << ',' << metric_id(c);
  out << '\n';
  for (std::size_t i = 0; i < matrix.row_labels.size(); ++i) {
    out << metric_id(matrix.row_labels[i]);
    for (std::size_t j = 0; j < matrix.col_labels.size(); ++j) {
      out << ',' << fmt(matrix.at(i, j));
    }
    out << '\n';
  }
}

namespace {

std::string ramp_color(double r) {
  const double v = std::clamp(r, -1.0, 1.0);
  const auto fade = [](double t) {
    return static_cast<int>(std::lround(255.0 * (1.0 - t)));
  };
  int red = 255, green = 255, blue = 255;
  if (v >= 0) {
    green = blue = fade(v);
  } else {
    red = green = fade(-v);
  }
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", red, green, blue);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

}  // namespace

void write_correlation_svg(std::ostream& out, const CorrelationMatrix& matrix,
                           const std::string& title) {
  constexpr int cell = 48;
  constexpr int margin = 56;
  constexpr int top = 40;
  const auto rows = static_cast<int>(matrix.row_labels.size());
  const auto cols = static_cast<int>(matrix.col_labels.size());
  const int width = margin + cols * cell + 16;
  const int height = top + margin + rows * cell;
  const NumberFormat two{2, false};

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  if (!title.empty()) {
    out << "  <text x=\"" << width / 2 << "\" y=\"20\" text-anchor=\"middle\" "
        << "font-size=\"14\">" << xml_escape(title) << "</text>\n";
  }
  for (int j = 0; j < cols; ++j) {
    out << "  <text x=\"" << margin + j * cell + cell / 2 << "\" y=\"" << top + margin - 8
        << "\" text-anchor=\"middle\">" << metric_id(matrix.col_labels[static_cast<std::size_t>(j)])
        << "</text>\n";
  }
  for (int i = 0; i < rows; ++i) {
    const int y = top + margin + i * cell;
    out << "  <text x=\"" << margin - 6 << "\" y=\"" << y + cell / 2 + 4
        << "\" text-anchor=\"end\">" << metric_id(matrix.row_labels[static_cast<std::size_t>(i)])
        << "</text>\n";
    for (int j = 0; j < cols; ++j) {
      const double r = matrix.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      const int x = margin + j * cell;
      out << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell
          << "\" height=\"" << cell << "\" fill=\"" << ramp_color(r)
          << "\" stroke=\"#ffffff\"/>\n";
      out << "  <text x=\"" << x + cell / 2 << "\" y=\"" << y + cell / 2 + 4
          << "\" text-anchor=\"middle\">" << two(r) << "</text>\n";
    }
  }
  out << "</svg>\n";
}

void write_ccdf_csv(std::ostream& out, std::span<const CcdfPoint> points,
                    const NumberFormat& fmt) {
  out << "x,ccdf\n";
  for (const auto& p : points) out << fmt(p.x) << ',' << fmt(p.fraction) << '\n';
}

}  // namespace coauth
