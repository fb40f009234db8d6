#pragma once

// Slow reference implementations used only by tests. Each one recomputes a
// quantity from first principles without going through the library's index
// or incremental code paths.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "misinfo/misinfo.hpp"

namespace oracle {

using misinfo::CorpusHandle;

// Exhaustive BM25 over every document, no postings lists.
inline std::vector<std::pair<std::string, double>> bm25_rank(const CorpusHandle& corpus, const std::string& query,
                                                              double k1 = 1.2, double b = 0.75) {
  const auto n = corpus.size();
  std::vector<std::vector<std::string>> toks(n);
  double total = 0;
  for (std::size_t d = 0; d < n; ++d) {
    toks[d] = misinfo::text::tokenize(corpus.at(d).text);
    total += static_cast<double>(toks[d].size());
  }
  const double avgdl = total / static_cast<double>(n);
  std::set<std::string> q;
  for (auto& t : misinfo::text::tokenize(query)) q.insert(t);

  std::vector<std::pair<std::string, double>> out;
  for (std::size_t d = 0; d < n; ++d) {
    double score = 0;
    bool hit = false;
    for (const auto& term : q) {
      const double tf = static_cast<double>(std::count(toks[d].begin(), toks[d].end(), term));
      if (tf == 0) continue;
      hit = true;
      double df = 0;
      for (const auto& other : toks) df += std::find(other.begin(), other.end(), term) != other.end() ? 1 : 0;
      const double idf = std::log((static_cast<double>(n) - df + 0.5) / (df + 0.5) + 1.0);
      const double dl = static_cast<double>(toks[d].size());
      score += idf * tf * (k1 + 1.0) / (tf + k1 * (1.0 - b + b * dl / avgdl));
    }
    if (hit) out.emplace_back(corpus.at(d).id, score);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.second != y.second ? x.second > y.second : x.first < y.first;
  });
  return out;
}

// Whole days between the tweet's UTC date and the debunk date.
inline long long day_offset(const misinfo::Tweet& t, const misinfo::Claim& c) {
  const auto secs = std::chrono::duration_cast<std::chrono::seconds>(t.created_at.time_since_epoch()).count();
  long long tweet_day = secs / 86400;
  if (secs % 86400 < 0) --tweet_day;
  const long long claim_day = c.debunk_date.time_since_epoch().count();
  return tweet_day - claim_day;
}

inline bool in_window(const misinfo::Tweet& t, const misinfo::Claim& c, int before, int after) {
  const auto off = day_offset(t, c);
  return off >= -before && off <= after;
}

// All-pairs extraction: rank every tweet against every claim and replay the
// stage semantics directly.
inline std::set<std::pair<std::string, std::string>> extract_all_pairs(
    const misinfo::ClaimSet& claims, const CorpusHandle& corpus, const misinfo::Scorer& scorer,
    const misinfo::Embedder& embedder, const misinfo::SvoExtractor& svo, std::size_t k_bm25, std::size_t k_rerank,
    int before = 70, int after = 14, double threshold = 0.95) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& claim : claims.claims()) {
    auto ranked = bm25_rank(corpus, claim.text);
    if (ranked.size() > k_bm25) ranked.resize(k_bm25);
    if (ranked.empty()) continue;
    const auto q = embedder.embed(claim.text);
    std::vector<std::pair<std::string, double>> by_cos;
    for (const auto& [id, s] : ranked) {
      const auto v = embedder.embed(corpus.find(id)->text);
      double dot = 0, nq = 0, nv = 0;
      for (std::size_t i = 0; i < v.values.size(); ++i) {
        dot += q.values[i] * v.values[i];
        nq += q.values[i] * q.values[i];
        nv += v.values[i] * v.values[i];
      }
      double c = nv == 0 ? 0 : dot / (std::sqrt(nq) * std::sqrt(nv));
      by_cos.emplace_back(id, std::min(1.0, c));
    }
    std::sort(by_cos.begin(), by_cos.end(), [](const auto& x, const auto& y) {
      return x.second != y.second ? x.second > y.second : x.first < y.first;
    });
    if (by_cos.size() > k_rerank) by_cos.resize(k_rerank);
    const auto terms = svo.extract(claim.text);
    std::set<std::string> so(terms.subjects.begin(), terms.subjects.end());
    so.insert(terms.objects.begin(), terms.objects.end());
    for (const auto& [id, s] : by_cos) {
      const auto* t = corpus.find(id);
      if (!in_window(*t, claim, before, after)) continue;
      const auto r = scorer.score(claim.text, t->text);
      if (r.label != misinfo::Label::kMisinformation) continue;
      bool shares = false;
      for (const auto& tok : misinfo::text::tokenize(t->text)) {
        if (!misinfo::default_stopwords().contains(tok) && so.count(tok)) shares = true;
      }
      if (r.confidence >= threshold || shares) out.emplace(claim.id, id);
    }
  }
  return out;
}

// Cosine of raw trigram count vectors keyed by the gram string itself.
inline double trigram_cosine(const std::string& a, const std::string& b) {
  auto counts = [](const std::string& s) {
    std::map<std::string, double> m;
    for (const auto& g : misinfo::TrigramEmbedder::grams(s)) m[g] += 1;
    return m;
  };
  const auto x = counts(a), y = counts(b);
  double dot = 0, nx = 0, ny = 0;
  for (const auto& [g, v] : x) {
    nx += v * v;
    if (auto it = y.find(g); it != y.end()) dot += v * it->second;
  }
  for (const auto& [g, v] : y) ny += v * v;
  if (nx == 0 || ny == 0) return 0;
  return dot / std::sqrt(nx * ny);
}

// Textbook two-pass Pearson.
inline double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

// Two-sided Student-t p value by composite Simpson integration of the density
// from 0 to |t|.
inline double t_two_sided_p(double t, double df, int steps = 20000) {
  const double c = std::exp(std::lgamma((df + 1) / 2) - std::lgamma(df / 2)) / std::sqrt(df * M_PI);
  auto pdf = [&](double x) { return c * std::pow(1 + x * x / df, -(df + 1) / 2); };
  const double a = std::fabs(t);
  const double h = a / steps;
  double s = pdf(0) + pdf(a);
  for (int i = 1; i < steps; ++i) s += pdf(i * h) * (i % 2 ? 4 : 2);
  const double half_mass = s * h / 3;
  return std::max(0.0, 1 - 2 * half_mass);
}

// Per-bin counts by checking each bin interval explicitly.
struct SpreadTally {
  std::vector<long long> bins;
  long long in_horizon = 0;
};

inline SpreadTally spread_tally(const std::vector<std::string>& ids, const CorpusHandle& corpus,
                                const std::vector<misinfo::SpreadEvent>& events, long long bin_s, long long horizon_s) {
  SpreadTally out;
  const auto nb = horizon_s / bin_s;
  out.bins.assign(static_cast<std::size_t>(nb), 0);
  std::set<std::string> want(ids.begin(), ids.end());
  for (const auto& ev : events) {
    if (!want.count(ev.source_tweet_id)) continue;
    const auto* t = corpus.find(ev.source_tweet_id);
    const long long dt = std::chrono::duration_cast<std::chrono::seconds>(ev.event_time - t->created_at).count();
    for (long long b = 0; b < nb; ++b) {
      if (dt >= b * bin_s && dt < (b + 1) * bin_s) {
        ++out.bins[static_cast<std::size_t>(b)];
        ++out.in_horizon;
      }
    }
  }
  return out;
}

}  // namespace oracle
