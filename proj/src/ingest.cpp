#include "coauth/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "coauth/error.hpp"
#include "csv.hpp"

namespace coauth {

namespace {

std::string trim(std::string_view s) {
  auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string_view::npos) return {};
  auto end = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(begin, end - begin + 1));
}

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::Io, "cannot open '" + path.string() + "'");
  }
  return in;
}

std::vector<std::string> split_authors(std::string_view field) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = field.find(';', start);
    out.emplace_back(field.substr(start, pos == std::string_view::npos
                                             ? std::string_view::npos
                                             : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::optional<int> parse_year(std::string_view text, std::size_t line) {
  const auto t = trim(text);
  if (t.empty()) return std::nullopt;
  int year = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), year);
  if (ec != std::errc() || ptr != t.data() + t.size()) {
    parse_error(line, "year '" + t + "' is not an integer");
  }
  return year;
}

double parse_real(std::string_view text, std::size_t line, std::string_view column) {
  const auto t = trim(text);
  double value = 0.0;
  const char* first = t.data();
  const char* last = t.data() + t.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (t.empty() || ec != std::errc() || ptr != last || !std::isfinite(value)) {
    parse_error(line, "column " + std::string(column) + ": '" + t +
                          "' is not a finite number");
  }
  return value;
}

void add_record(std::vector<PublicationRecord>& records, std::set<std::string>& ids,
                PublicationRecord rec, std::size_t line) {
  if (rec.paper_id.empty()) parse_error(line, "empty paper_id");
  if (!ids.insert(rec.paper_id).second) {
    throw Error(ErrorCode::DuplicatePaperId,
                "line " + std::to_string(line) + ": duplicate paper_id '" +
                    rec.paper_id + "'");
  }
  records.push_back(std::move(rec));
}

PublicationRecord make_record(std::string id, const std::vector<std::string>& authors,
                              std::optional<int> year, std::size_t line) {
  try {
    return PublicationRecord::make(std::move(id), authors, year);
  } catch (const Error& e) {
    throw Error(e.code(), "line " + std::to_string(line) + ": " + e.what());
  }
}

}  // namespace

std::vector<PublicationRecord> parse_publications_csv(std::istream& in) {
  const auto rows = csv::read(in);
  if (rows.empty()) {
    throw Error(ErrorCode::ParseError, "publications file is empty (missing header)");
  }
  const auto& header = rows.front().fields;
  const bool has_year = header.size() == 3 && trim(header[2]) == "year";
  if (header.size() < 2 || header.size() > 3 || trim(header[0]) != "paper_id" ||
      trim(header[1]) != "authors" || (header.size() == 3 && !has_year)) {
    throw Error(ErrorCode::HeaderMismatch,
                "line 1: expected header 'paper_id,authors[,year]'");
  }

  std::vector<PublicationRecord> records;
  std::set<std::string> ids;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (r.fields.size() != header.size() &&
        !(has_year && r.fields.size() == 2)) {
      parse_error(r.line, "expected " + std::to_string(header.size()) +
                              " fields, got " + std::to_string(r.fields.size()));
    }
    std::optional<int> year;
    if (has_year && r.fields.size() == 3) year = parse_year(r.fields[2], r.line);
    add_record(records, ids,
               make_record(trim(r.fields[0]), split_authors(r.fields[1]), year, r.line),
               r.line);
  }
  return records;
}

std::vector<PublicationRecord> parse_publications_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("publications JSON: ") + e.what());
  }
  if (!doc.is_array()) {
    throw Error(ErrorCode::ParseError, "publications JSON: top level must be an array");
  }
  std::vector<PublicationRecord> records;
  std::set<std::string> ids;
  std::size_t index = 0;
  for (const auto& item : doc) {
    ++index;
    try {
      const auto id = trim(item.at("paper_id").get<std::string>());
      std::vector<std::string> authors;
      const auto& a = item.at("authors");
      if (a.is_string()) {
        authors = split_authors(a.get<std::string>());
      } else {
        authors = a.get<std::vector<std::string>>();
      }
      std::optional<int> year;
      if (item.contains("year") && !item["year"].is_null()) year = item["year"].get<int>();
      add_record(records, ids, make_record(id, authors, year, index), index);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::ParseError,
                  "publications JSON record " + std::to_string(index) + ": " + e.what());
    }
  }
  return records;
}

std::vector<PublicationRecord> parse_publications(const std::filesystem::path& path) {
  auto in = open_input(path);
  const std::string text{std::istreambuf_iterator<char>(in),
                         std::istreambuf_iterator<char>()};
  const auto first = text.find_first_not_of(" \t\r\n");
  const bool json = path.extension() == ".json" ||
                    (first != std::string::npos && text[first] == '[');
  if (json) return parse_publications_json(text);
  std::istringstream stream(text);
  return parse_publications_csv(stream);
}

void write_publications_csv(std::ostream& out,
                            std::span<const PublicationRecord> records) {
  out << "paper_id,authors,year\n";
  for (const auto& rec : records) {
    std::string joined;
    for (const auto& a : rec.authors) {
      if (!joined.empty()) joined.push_back(';');
      joined += a.str();
    }
    out << csv::escape(rec.paper_id) << ',' << csv::quote(joined) << ',';
    if (rec.year) out << *rec.year;
    out << '\n';
  }
}

MetricTable parse_metric_table(std::istream& in, std::string cohort_name) {
  const auto rows = csv::read(in);
  if (rows.empty()) {
    throw Error(ErrorCode::ParseError, "metric table is empty (missing header)");
  }
  std::vector<std::string> expected;
  {
    std::string h(kMetricTableHeader);
    std::istringstream hs(h);
    for (std::string col; std::getline(hs, col, ',');) expected.push_back(col);
  }
  std::vector<std::string> header;
  for (const auto& f : rows.front().fields) header.push_back(trim(f));
  if (header != expected) {
    throw Error(ErrorCode::HeaderMismatch,
                "line 1: expected header '" + std::string(kMetricTableHeader) + "'");
  }

  std::vector<MetricTableRow> out;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (r.fields.size() != expected.size()) {
      parse_error(r.line, "expected " + std::to_string(expected.size()) +
                              " fields, got " + std::to_string(r.fields.size()));
    }
    MetricTableRow row;
    try {
      row.author = AuthorLabel::normalize(r.fields[0]).str();
    } catch (const Error&) {
      parse_error(r.line, "empty author label");
    }
    const double nd = parse_real(r.fields[1], r.line, "ND");
    if (nd != std::floor(nd) || nd < 0) parse_error(r.line, "ND must be a non-negative integer");
    row.row.diameter = static_cast<int>(nd);
    row.row.avg_dc = parse_real(r.fields[2], r.line, "DC");
    row.row.avg_wd = parse_real(r.fields[3], r.line, "WD");
    row.row.avg_apl = parse_real(r.fields[4], r.line, "APL");
    if (!trim(r.fields[5]).empty()) {
      row.row.assortativity = parse_real(r.fields[5], r.line, "AS");
    }
    row.row.transitivity = parse_real(r.fields[6], r.line, "TR");
    row.row.avg_cc = parse_real(r.fields[7], r.line, "CC");
    row.row.avg_ec = parse_real(r.fields[8], r.line, "EC");
    row.row.avg_bc = parse_real(r.fields[9], r.line, "BC");
    row.row.avg_cl = parse_real(r.fields[10], r.line, "CL");
    out.push_back(std::move(row));
  }
  return MetricTable(std::move(cohort_name), std::move(out));
}

MetricTable parse_metric_table(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_metric_table(in, path.stem().string());
}

MetricTable load_fixture_table(const std::filesystem::path& path) {
  auto table = parse_metric_table(path);
  if (table.size() != 30) {
    throw Error(ErrorCode::ParseError, "fixture '" + path.string() + "' has " +
                                           std::to_string(table.size()) +
                                           " rows, expected 30");
  }
  for (const auto& r : table.rows()) {
    if (r.row.diameter != 2) {
      throw Error(ErrorCode::ParseError,
                  "fixture '" + path.string() + "': ND of '" + r.author + "' is not 2");
    }
  }
  return table;
}

CohortManifest parse_manifest(std::istream& in, const std::filesystem::path& base_dir) {
  CohortManifest manifest;
  std::set<std::string> seen;
  std::string line;
  std::size_t lineno = 0;
  bool have_name = false;
  while (std::getline(in, line)) {
    ++lineno;
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    if (!have_name) {
      constexpr std::string_view key = "cohort_name:";
      if (t.rfind(key, 0) != 0) {
        parse_error(lineno, "manifest must start with 'cohort_name:'");
      }
      manifest.cohort_name = trim(std::string_view(t).substr(key.size()));
      if (manifest.cohort_name.empty()) parse_error(lineno, "empty cohort_name");
      have_name = true;
      continue;
    }
    const auto eq = t.find('=');
    if (eq == std::string::npos) parse_error(lineno, "expected 'author = path'");
    std::string rhs = trim(std::string_view(t).substr(eq + 1));
    std::optional<ExpectedCounts> expected;
    if (auto bar = rhs.find('|'); bar != std::string::npos) {
      std::istringstream counts(rhs.substr(bar + 1));
      ExpectedCounts c;
      std::string extra;
      if (!(counts >> c.retracted >> c.non_retracted) || (counts >> extra)) {
        parse_error(lineno, "expected counts must be '| <retracted> <non_retracted>'");
      }
      expected = c;
      rhs = trim(rhs.substr(0, bar));
    }
    if (rhs.empty()) parse_error(lineno, "empty publications path");
    ManifestEntry entry{[&] {
                          try {
                            return AuthorLabel::normalize(std::string_view(t).substr(0, eq));
                          } catch (const Error&) {
                            parse_error(lineno, "empty author label");
                          }
                        }(),
                        std::filesystem::path(rhs), expected};
    if (entry.publications.is_relative()) entry.publications = base_dir / entry.publications;
    if (!seen.insert(entry.author.str()).second) {
      throw Error(ErrorCode::DuplicateAuthor, "line " + std::to_string(lineno) +
                                                  ": duplicate author '" +
                                                  entry.author.str() + "'");
    }
    manifest.entries.push_back(std::move(entry));
  }
  if (!have_name) throw Error(ErrorCode::ParseError, "manifest has no cohort_name");
  if (manifest.entries.empty()) throw Error(ErrorCode::ParseError, "manifest has no entries");
  return manifest;
}

CohortManifest parse_manifest(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_manifest(in, path.parent_path());
}

}  // namespace coauth
