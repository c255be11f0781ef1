#pragma once

// Minimal RFC 4180 reader/writer helpers shared by the ingest and report code.

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace coauth::csv {

struct Row {
  std::size_t line;  // 1-based line where the row starts
  std::vector<std::string> fields;
};

/// Reads every row. Quoted fields may contain commas, doubled quotes and
/// newlines. Blank lines are skipped. Throws Error{ParseError} on an
/// unterminated quote.
std::vector<Row> read(std::istream& in);

/// Quotes the field only when it contains a comma, quote or line break.
std::string escape(std::string_view field);

/// Always quotes.
std::string quote(std::string_view field);

}  // namespace coauth::csv
