#include "coauth/crossref.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>
#include <thread>

#include <nlohmann/json.hpp>

namespace coauth {

namespace {

constexpr int kMaxRows = 1000;
constexpr auto kDefaultRetryDelay = std::chrono::milliseconds(1000);

using nlohmann::json;

std::string author_name(const json& a) {
  auto text = [&](const char* key) -> std::string {
    if (a.contains(key) && a[key].is_string()) return a[key].get<std::string>();
    return {};
  };
  const auto given = text("given");
  const auto family = text("family");
  if (!family.empty()) return given.empty() ? family : given + " " + family;
  if (!given.empty()) return given;
  return text("name");
}

PublicationRecord map_work(const json& work) {
  if (!work.is_object() || !work.contains("DOI") || !work["DOI"].is_string()) {
    throw Error(ErrorCode::MappingError, "CrossRef work without DOI");
  }
  const auto doi = work["DOI"].get<std::string>();
  std::vector<std::string> names;
  if (work.contains("author") && work["author"].is_array()) {
    for (const auto& a : work["author"]) {
      if (!a.is_object()) continue;
      // ';' separates authors in the publications format.
      auto name = author_name(a);
      std::replace(name.begin(), name.end(), ';', ',');
      names.push_back(std::move(name));
    }
  }
  std::optional<int> year;
  if (work.contains("issued") && work["issued"].is_object()) {
    const auto& parts = work["issued"].value("date-parts", json::array());
    if (parts.is_array() && !parts.empty() && parts[0].is_array() && !parts[0].empty() &&
        parts[0][0].is_number_integer()) {
      year = parts[0][0].get<int>();
    }
  }
  try {
    return PublicationRecord::make(doi, names, year);
  } catch (const Error&) {
    throw Error(ErrorCode::MappingError, "CrossRef work " + doi + " has no authors");
  }
}

std::chrono::milliseconds parse_retry_after(const std::optional<std::string>& header) {
  if (!header) return kDefaultRetryDelay;
  try {
    const double seconds = std::stod(*header);
    if (seconds >= 0 && std::isfinite(seconds)) {
      return std::chrono::milliseconds(static_cast<std::int64_t>(seconds * 1000.0));
    }
  } catch (const std::exception&) {
    // HTTP-date form; fall through to the default delay.
  }
  return kDefaultRetryDelay;
}

}  // namespace

std::string url_encode(std::string_view text) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : text) {
    if (std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~') {
      out.push_back(static_cast<char>(c));
    } else {
      out.push_back('%');
      out.push_back(kHex[c >> 4]);
      out.push_back(kHex[c & 0xF]);
    }
  }
  return out;
}

PublicationRecord map_crossref_work(std::string_view work_json) {
  json work;
  try {
    work = json::parse(work_json);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::MappingError, std::string("CrossRef work: ") + e.what());
  }
  return map_work(work);
}

CrossrefPage parse_crossref_page(std::string_view body) {
  json doc;
  try {
    doc = json::parse(body);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::HttpError, std::string("CrossRef response is not JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("message") || !doc["message"].is_object()) {
    throw Error(ErrorCode::HttpError, "CrossRef response lacks a 'message' object");
  }
  const auto& msg = doc["message"];
  CrossrefPage page;
  if (msg.contains("next-cursor") && msg["next-cursor"].is_string()) {
    page.next_cursor = msg["next-cursor"].get<std::string>();
  }
  if (!msg.contains("items") || !msg["items"].is_array()) return page;
  for (const auto& item : msg["items"]) {
    ++page.item_count;
    try {
      page.records.push_back(map_work(item));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::MappingError) throw;
      ++page.skipped;
    }
  }
  return page;
}

std::vector<PublicationRecord> fetch_crossref(HttpTransport& transport,
                                              std::string_view author_query, int rows,
                                              const CrossrefOptions& options) {
  if (rows < 0 || rows > kMaxRows) {
    throw Error(ErrorCode::TooLarge, "rows must be in [0, 1000]");
  }
  std::vector<PublicationRecord> out;
  if (rows == 0) return out;

  auto sleep = options.sleep ? options.sleep : [](std::chrono::milliseconds d) {
    std::this_thread::sleep_for(d);
  };
  std::set<std::string> ids;
  std::string cursor = "*";
  while (static_cast<int>(out.size()) < rows) {
    std::string target = "/works?query.author=" + url_encode(author_query) +
                         "&rows=" + std::to_string(rows) +
                         "&select=DOI,author,issued&cursor=" + url_encode(cursor);
    if (!options.mailto.empty()) target += "&mailto=" + url_encode(options.mailto);

    HttpResponse resp;
    for (int attempt = 0;; ++attempt) {
      resp = transport.get(target);
      if (resp.status != 429) break;
      const auto delay = parse_retry_after(resp.retry_after);
      if (attempt >= options.max_retries) {
        throw RateLimitedError(delay, "CrossRef rate limit hit; retry after " +
                                          std::to_string(delay.count()) + " ms");
      }
      sleep(delay);
    }
    if (resp.status != 200) {
      throw Error(ErrorCode::HttpError,
                  "CrossRef request failed with HTTP status " + std::to_string(resp.status));
    }

    auto page = parse_crossref_page(resp.body);
    if (page.skipped > 0 && !options.skip_unmappable) {
      throw Error(ErrorCode::MappingError,
                  std::to_string(page.skipped) + " CrossRef work(s) lack a DOI or authors");
    }
    for (auto& rec : page.records) {
      if (static_cast<int>(out.size()) >= rows) break;
      if (ids.insert(rec.paper_id).second) out.push_back(std::move(rec));
    }
    if (page.item_count == 0 || !page.next_cursor || *page.next_cursor == cursor) break;
    cursor = *page.next_cursor;
  }
  return out;
}

}  // namespace coauth
