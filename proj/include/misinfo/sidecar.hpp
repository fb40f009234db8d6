#pragma once

// JSON-over-HTTP client for the optional model sidecar.
//
//   POST /score  {"claim": str, "text": str}            -> {"label": L, "confidence": c}
//   POST /score  [{"claim":..., "text":...}, ...]       -> [{"label":..., "confidence":...}, ...]
//   POST /embed  {"text": str}                          -> {"vector": [D floats]}
//   POST /svo    {"text": str}                          -> {"subjects": [...], "objects": [...]}
//   GET  /health                                        -> {"ready": bool}
//
// Transport failures and 5xx responses are retried up to `retries` extra
// times; 4xx responses are protocol errors and are not retried.

#include <httplib.h>

#include <chrono>
#include <semaphore>
#include <string>
#include <thread>

#include "misinfo/error.hpp"
#include "misinfo/jsonl.hpp"

namespace misinfo {

struct SidecarOptions {
  std::string endpoint = "http://127.0.0.1:8080";
  int retries = 2;
  int timeout_ms = 10000;
  int backoff_ms = 100;
};

class SidecarClient {
 public:
  explicit SidecarClient(SidecarOptions options) : options_(std::move(options)) {}

  const SidecarOptions& options() const { return options_; }

  json post(const std::string& path, const json& body) const {
    std::string last_error;
    for (int attempt = 0; attempt <= options_.retries; ++attempt) {
      if (attempt > 0 && options_.backoff_ms > 0) {
        std::this_thread::sleep_for(std::chrono::milliseconds(options_.backoff_ms * attempt));
      }
      httplib::Client client(options_.endpoint);
      set_timeouts(client);
      auto res = client.Post(path, body.dump(), "application/json");
      if (!res) {
        last_error = "transport error: " + httplib::to_string(res.error());
        continue;
      }
      if (res->status >= 500) {
        last_error = "HTTP " + std::to_string(res->status);
        continue;
      }
      if (res->status >= 400) {
        throw Error(ErrorCode::kProtocol, path + " rejected request: HTTP " + std::to_string(res->status) +
                                              " " + res->body);
      }
      try {
        return json::parse(res->body);
      } catch (const json::exception& e) {
        throw Error(ErrorCode::kProtocol, path + " returned invalid JSON: " + e.what());
      }
    }
    throw Error(ErrorCode::kScorerUnavailable,
                options_.endpoint + path + " unreachable after " + std::to_string(options_.retries + 1) +
                    " attempt(s): " + last_error);
  }

  bool healthy() const {
    httplib::Client client(options_.endpoint);
    set_timeouts(client);
    auto res = client.Get("/health");
    if (!res || res->status != 200) return false;
    try {
      const auto j = json::parse(res->body);
      return j.value("ready", false);
    } catch (const json::exception&) {
      return false;
    }
  }

 private:
  void set_timeouts(httplib::Client& client) const {
    const auto secs = options_.timeout_ms / 1000;
    const auto usecs = (options_.timeout_ms % 1000) * 1000;
    client.set_connection_timeout(secs, usecs);
    client.set_read_timeout(secs, usecs);
    client.set_write_timeout(secs, usecs);
  }

  SidecarOptions options_;
};

// Caps concurrent requests across threads sharing one binding.
class InFlightLimiter {
 public:
  explicit InFlightLimiter(std::ptrdiff_t limit) : sem_(limit < 1 ? 1 : limit) {}

  template <typename F>
  auto run(F&& f) {
    sem_.acquire();
    struct Release {
      std::counting_semaphore<>& s;
      ~Release() { s.release(); }
    } guard{sem_};
    return f();
  }

 private:
  std::counting_semaphore<> sem_;
};

}  // namespace misinfo
