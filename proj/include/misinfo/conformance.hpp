#pragma once

// Wire-protocol conformance checks for a scorer sidecar. Any endpoint that
// passes every check can stand in for the baseline scorer.

#include <httplib.h>

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "misinfo/external.hpp"

namespace misinfo {

struct ConformanceCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ConformanceReport {
  std::vector<ConformanceCheck> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return !checks.empty();
  }
  std::string to_text() const {
    std::string out;
    for (const auto& c : checks) {
      out += (c.passed ? "PASS " : "FAIL ") + c.name;
      if (!c.detail.empty()) out += ": " + c.detail;
      out += '\n';
    }
    return out;
  }
};

struct ConformanceOptions {
  SidecarOptions sidecar;
  std::size_t embed_dim = 0;  // 0 skips the /embed checks
  bool check_svo = false;
};

namespace detail {

inline int raw_post_status(const SidecarOptions& o, const std::string& path, const std::string& body) {
  httplib::Client client(o.endpoint);
  client.set_connection_timeout(o.timeout_ms / 1000, (o.timeout_ms % 1000) * 1000);
  client.set_read_timeout(o.timeout_ms / 1000, (o.timeout_ms % 1000) * 1000);
  auto res = client.Post(path, body, "application/json");
  return res ? res->status : -1;
}

}  // namespace detail

inline ConformanceReport run_conformance(const ConformanceOptions& opt) {
  ConformanceReport rep;
  auto check = [&](const std::string& name, const std::function<std::string()>& body) {
    ConformanceCheck c{name, false, ""};
    try {
      c.detail = body();
      c.passed = c.detail.empty();
    } catch (const std::exception& e) {
      c.detail = e.what();
    }
    rep.checks.push_back(std::move(c));
  };

  SidecarOptions so = opt.sidecar;
  so.retries = 0;
  const SidecarClient client(so);
  const ExternalScorer scorer(so, 1);

  const std::vector<PairText> pairs = {
      {"Garlic cures COVID", "eating garlic cures covid, share this"},
      {"Garlic cures COVID", "fact check: false, garlic does not cure covid"},
      {"5G towers spread the virus", "lovely weather at the beach today"},
  };

  check("health", [&]() -> std::string { return client.healthy() ? "" : "/health did not report ready"; });

  check("score.single", [&]() -> std::string {
    scorer.score(pairs[0].claim, pairs[0].text);
    return "";
  });

  check("score.label_closure_and_range", [&]() -> std::string {
    // parse_score_response rejects labels outside the set and confidences outside [0, 1]
    for (const auto& p : pairs) {
      const json raw = client.post("/score", {{"claim", p.claim}, {"text", p.text}});
      parse_score_response(raw);
    }
    return "";
  });

  check("score.batch_order", [&]() -> std::string {
    const auto batch = scorer.score_batch(pairs);
    if (batch.size() != pairs.size()) return "batch size mismatch";
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const auto one = scorer.score(pairs[i].claim, pairs[i].text);
      if (one.label != batch[i].label || std::fabs(one.confidence - batch[i].confidence) > 1e-9) {
        return "batch item " + std::to_string(i) + " differs from the single response";
      }
    }
    return "";
  });

  check("score.deterministic", [&]() -> std::string {
    const auto a = scorer.score(pairs[1].claim, pairs[1].text);
    const auto b = scorer.score(pairs[1].claim, pairs[1].text);
    return a == b ? "" : "identical requests gave different responses";
  });

  check("score.empty_text_is_4xx", [&]() -> std::string {
    const int s = detail::raw_post_status(so, "/score", json{{"claim", "Garlic cures COVID"}, {"text", ""}}.dump());
    return s >= 400 && s < 500 ? "" : "expected 4xx, got " + std::to_string(s);
  });

  check("score.malformed_is_4xx", [&]() -> std::string {
    const int s = detail::raw_post_status(so, "/score", "{not json");
    return s >= 400 && s < 500 ? "" : "expected 4xx, got " + std::to_string(s);
  });

  check("score.missing_field_is_4xx", [&]() -> std::string {
    const int s = detail::raw_post_status(so, "/score", json{{"claim", "Garlic cures COVID"}}.dump());
    return s >= 400 && s < 500 ? "" : "expected 4xx, got " + std::to_string(s);
  });

  if (opt.embed_dim > 0) {
    check("embed.dimension_and_norm", [&]() -> std::string {
      const json res = client.post("/embed", {{"text", "garlic cures covid"}});
      auto it = res.find("vector");
      if (it == res.end() || !it->is_array()) return "missing 'vector'";
      if (it->size() != opt.embed_dim) return "dimension " + std::to_string(it->size());
      double n = 0;
      for (const auto& x : *it) {
        if (!x.is_number()) return "non-number in vector";
        n += x.get<double>() * x.get<double>();
      }
      return std::fabs(std::sqrt(n) - 1.0) < 1e-3 ? "" : "vector is not unit length";
    });
    check("embed.empty_text_is_4xx", [&]() -> std::string {
      const int s = detail::raw_post_status(so, "/embed", json{{"text", ""}}.dump());
      return s >= 400 && s < 500 ? "" : "expected 4xx, got " + std::to_string(s);
    });
  }

  if (opt.check_svo) {
    check("svo.shape", [&]() -> std::string {
      ExternalSvoExtractor(so).extract("Garlic cures COVID");
      return "";
    });
  }
  return rep;
}

}  // namespace misinfo
