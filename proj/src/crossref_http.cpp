#include "coauth/crossref.hpp"

#include <httplib.h>

namespace coauth {

namespace {

#ifdef CPPHTTPLIB_OPENSSL_SUPPORT
class CrossrefHttps final : public HttpTransport {
 public:
  explicit CrossrefHttps(std::chrono::seconds timeout) : client_("api.crossref.org") {
    client_.set_connection_timeout(timeout);
    client_.set_read_timeout(timeout);
    client_.set_follow_location(true);
    client_.set_default_headers({{"User-Agent", "coauthnet/0.1"}});
  }

  HttpResponse get(const std::string& target) override {
    auto res = client_.Get(target);
    if (!res) {
      throw Error(ErrorCode::HttpError,
                  "CrossRef request failed: " + httplib::to_string(res.error()));
    }
    HttpResponse out{res->status, res->body, std::nullopt};
    if (res->has_header("Retry-After")) out.retry_after = res->get_header_value("Retry-After");
    return out;
  }

 private:
  httplib::SSLClient client_;
};
#endif

}  // namespace

std::unique_ptr<HttpTransport> make_crossref_transport(std::chrono::seconds timeout) {
#ifdef CPPHTTPLIB_OPENSSL_SUPPORT
  return std::make_unique<CrossrefHttps>(timeout);
#else
  (void)timeout;
  throw Error(ErrorCode::HttpError, "built without TLS support; cannot reach CrossRef");
#endif
}

}  // namespace coauth
