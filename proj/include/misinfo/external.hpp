#pragma once

// Sidecar-backed implementations of Scorer, Embedder and SvoExtractor, and
// the scorer binding that selects between baseline and external scoring.

#include <memory>
#include <string>
#include <vector>

#include "misinfo/embed.hpp"
#include "misinfo/scorer.hpp"
#include "misinfo/sidecar.hpp"
#include "misinfo/svo.hpp"

namespace misinfo {

inline ScoreOutput parse_score_response(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kProtocol, "score response is not an object");
  const auto label_str = get_string(j, "label");
  if (!label_str) throw Error(ErrorCode::kProtocol, "score response lacks 'label'");
  const auto label = parse_label(*label_str);
  if (!label || *label_str != to_string(*label)) {
    throw Error(ErrorCode::kProtocol, "label outside the closed set: " + *label_str);
  }
  auto it = j.find("confidence");
  if (it == j.end() || !it->is_number()) throw Error(ErrorCode::kProtocol, "score response lacks 'confidence'");
  const double c = it->get<double>();
  if (!(c >= 0.0 && c <= 1.0)) throw Error(ErrorCode::kProtocol, "confidence outside [0, 1]");
  return {*label, c};
}

class ExternalScorer final : public Scorer {
 public:
  ExternalScorer(SidecarOptions options, std::ptrdiff_t max_in_flight = 4)
      : client_(std::move(options)), limiter_(std::make_unique<InFlightLimiter>(max_in_flight)) {}

  ScoreOutput score(std::string_view claim_text, std::string_view tweet_text) const override {
    require_pair_texts(claim_text, tweet_text);
    const json body = {{"claim", std::string(claim_text)}, {"text", std::string(tweet_text)}};
    return parse_score_response(limiter_->run([&] { return client_.post("/score", body); }));
  }

  std::vector<ScoreOutput> score_batch(const std::vector<PairText>& pairs) const override {
    if (pairs.empty()) return {};
    json body = json::array();
    for (const auto& p : pairs) {
      require_pair_texts(p.claim, p.text);
      body.push_back({{"claim", p.claim}, {"text", p.text}});
    }
    const json res = limiter_->run([&] { return client_.post("/score", body); });
    if (!res.is_array() || res.size() != pairs.size()) {
      throw Error(ErrorCode::kProtocol, "batch response size does not match request");
    }
    std::vector<ScoreOutput> out;
    out.reserve(res.size());
    for (const auto& r : res) out.push_back(parse_score_response(r));
    return out;
  }

 private:
  SidecarClient client_;
  std::unique_ptr<InFlightLimiter> limiter_;
};

class ExternalEmbedder final : public Embedder {
 public:
  ExternalEmbedder(SidecarOptions options, std::size_t dimension) : client_(std::move(options)), dim_(dimension) {}

  std::size_t dimension() const override { return dim_; }

  EmbeddingVector embed(std::string_view text) const override {
    const json res = client_.post("/embed", {{"text", std::string(text)}});
    auto it = res.find("vector");
    if (it == res.end() || !it->is_array()) throw Error(ErrorCode::kProtocol, "embed response lacks 'vector'");
    if (it->size() != dim_) {
      throw Error(ErrorCode::kProtocol, "embed response has dimension " + std::to_string(it->size()) +
                                            ", expected " + std::to_string(dim_));
    }
    EmbeddingVector v;
    for (const auto& x : *it) {
      if (!x.is_number()) throw Error(ErrorCode::kProtocol, "embed vector holds a non-number");
      v.values.push_back(x.get<double>());
    }
    l2_normalize(v);
    return v;
  }

 private:
  SidecarClient client_;
  std::size_t dim_;
};

// Returned phrases are re-tokenized so the terms obey the same token and
// stopword rules as the heuristic extractor.
class ExternalSvoExtractor final : public SvoExtractor {
 public:
  explicit ExternalSvoExtractor(SidecarOptions options) : client_(std::move(options)) {}

  SvoTerms extract(std::string_view text) const override {
    const json res = client_.post("/svo", {{"text", std::string(text)}});
    SvoTerms out;
    auto collect = [&](const char* key, std::set<std::string>& into) {
      auto it = res.find(key);
      if (it == res.end() || !it->is_array()) throw Error(ErrorCode::kProtocol, std::string("svo response lacks '") + key + "'");
      for (const auto& phrase : *it) {
        if (!phrase.is_string()) continue;
        for (auto& tok : text::content_tokens(phrase.get<std::string>(), default_stopwords())) into.insert(tok);
      }
    };
    collect("subjects", out.subjects);
    collect("objects", out.objects);
    out.low_confidence = out.subjects.empty() && out.objects.empty();
    return out;
  }

 private:
  SidecarClient client_;
};

enum class ScorerKind { kBaselineLexical, kExternal };

struct ScorerBinding {
  ScorerKind kind = ScorerKind::kBaselineLexical;
  double tau_match = 0.5;
  SidecarOptions sidecar;
  std::ptrdiff_t max_in_flight = 4;

  std::unique_ptr<Scorer> resolve() const {
    if (kind == ScorerKind::kExternal) return std::make_unique<ExternalScorer>(sidecar, max_in_flight);
    return std::make_unique<BaselineLexicalScorer>(tau_match);
  }
};

}  // namespace misinfo
