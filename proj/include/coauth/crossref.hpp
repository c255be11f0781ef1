#pragma once

// Best-effort CrossRef `/works` client producing publication records. The
// network transport is an interface so the mapping and pagination logic can
// be driven offline from stored responses.

#include <chrono>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coauth/error.hpp"
#include "coauth/graph.hpp"

namespace coauth {

struct HttpResponse {
  int status = 0;
  std::string body;
  std::optional<std::string> retry_after;  // raw Retry-After header
};

class HttpTransport {
 public:
  virtual ~HttpTransport() = default;
  /// GET of `target` (path plus query string) on the API host.
  virtual HttpResponse get(const std::string& target) = 0;
};

/// HTTPS transport to api.crossref.org. Throws Error{HttpError} when built
/// without TLS support.
std::unique_ptr<HttpTransport> make_crossref_transport(
    std::chrono::seconds timeout = std::chrono::seconds(30));

class RateLimitedError : public Error {
 public:
  RateLimitedError(std::chrono::milliseconds retry_after, const std::string& message)
      : Error(ErrorCode::RateLimited, message), retry_after_(retry_after) {}

  std::chrono::milliseconds retry_after() const noexcept { return retry_after_; }

 private:
  std::chrono::milliseconds retry_after_;
};

struct CrossrefPage {
  std::vector<PublicationRecord> records;
  std::optional<std::string> next_cursor;
  std::size_t item_count = 0;  // works in the response, mapped or not
  std::size_t skipped = 0;     // works without a DOI or usable authors
};

/// Maps one CrossRef work object (JSON text) to a record: DOI becomes the
/// paper id, "given family" names become authors. Throws Error{MappingError}
/// when the DOI or every author name is missing.
PublicationRecord map_crossref_work(std::string_view work_json);

/// Parses a `/works` response body. Unmappable works are skipped and counted.
CrossrefPage parse_crossref_page(std::string_view body);

struct CrossrefOptions {
  int max_retries = 3;               // 429 retries before RateLimitedError
  bool skip_unmappable = true;       // false: throw MappingError instead
  std::string mailto;                // CrossRef "polite pool" contact
  std::function<void(std::chrono::milliseconds)> sleep;  // default: sleep_for
};

/// Cursor-paginated `query.author` search returning at most `rows` records
/// (rows <= 1000) with unique paper ids.
std::vector<PublicationRecord> fetch_crossref(HttpTransport& transport,
                                              std::string_view author_query, int rows,
                                              const CrossrefOptions& options = {});

/// Percent-encodes a query-string component.
std::string url_encode(std::string_view text);

}  // namespace coauth
