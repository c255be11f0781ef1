#pragma once

#include <filesystem>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coauth/graph.hpp"
#include "coauth/stats.hpp"

namespace coauth {

// Publications ---------------------------------------------------------------
//
// CSV: header `paper_id,authors[,year]`, authors separated by ';'.
// JSON: array of {"paper_id": str, "authors": [str] | "A;B", "year": int?}.

std::vector<PublicationRecord> parse_publications(const std::filesystem::path& path);
std::vector<PublicationRecord> parse_publications_csv(std::istream& in);
std::vector<PublicationRecord> parse_publications_json(std::string_view text);

/// Canonical CSV: header `paper_id,authors,year`, authors field always
/// quoted, year empty when absent.
void write_publications_csv(std::ostream& out,
                            std::span<const PublicationRecord> records);

// Metric tables ---------------------------------------------------------------

inline constexpr std::string_view kMetricTableHeader =
    "author,ND,DC,WD,APL,AS,TR,CC,EC,BC,CL";

/// Cohort name defaults to the file stem.
MetricTable parse_metric_table(const std::filesystem::path& path);
MetricTable parse_metric_table(std::istream& in, std::string cohort_name);

/// Transcribed network-properties table: exactly 30 rows, every ND = 2.
/// Throws Error{ParseError} when the file breaks either rule.
MetricTable load_fixture_table(const std::filesystem::path& path);

// Cohort manifests --------------------------------------------------------------
//
//   cohort_name: retracted
//   # comment
//   Ali Nazari = pubs/ali_nazari.csv | 110 133
//
// The optional `| R N` suffix gives the expected retracted and non-retracted
// paper counts. Relative paths resolve against the manifest's directory.

struct ExpectedCounts {
  int retracted = 0;
  int non_retracted = 0;
};

struct ManifestEntry {
  AuthorLabel author;
  std::filesystem::path publications;
  std::optional<ExpectedCounts> expected;
};

struct CohortManifest {
  std::string cohort_name;
  std::vector<ManifestEntry> entries;
};

CohortManifest parse_manifest(const std::filesystem::path& path);
CohortManifest parse_manifest(std::istream& in, const std::filesystem::path& base_dir);

}  // namespace coauth
