#pragma once

// In-memory inverted index with Okapi BM25 ranking.
//
//   score(D, Q) = sum over distinct q in Q of
//                 idf(q) * tf(q,D) * (k1 + 1) / (tf(q,D) + k1 * (1 - b + b * |D| / avgdl))
//   idf(q)      = ln((N - df(q) + 0.5) / (df(q) + 0.5) + 1)
//
// Query terms are deduplicated and accumulated in lexicographic order so the
// floating-point sum for a document does not depend on query word order.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "misinfo/corpus.hpp"
#include "misinfo/error.hpp"
#include "misinfo/text.hpp"

namespace misinfo {

struct Bm25Params {
  double k1 = 1.2;
  double b = 0.75;
};

struct Posting {
  std::uint32_t doc = 0;
  std::uint32_t tf = 0;
  bool operator==(const Posting&) const = default;
};

struct RankedCandidate {
  std::string tweet_id;
  std::size_t doc = 0;
  double bm25_score = 0.0;
  std::optional<double> rerank_score;
};

class InvertedIndex {
 public:
  static constexpr char kMagic[8] = {'M', 'I', 'S', 'I', 'D', 'X', '\0', '\0'};
  static constexpr std::uint32_t kVersion = 1;

  InvertedIndex() = default;

  std::size_t doc_count() const { return doc_lengths_.size(); }
  double avgdl() const { return avgdl_; }
  std::uint32_t doc_length(std::size_t doc) const { return doc_lengths_.at(doc); }
  const std::string& doc_id(std::size_t doc) const { return doc_ids_.at(doc); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<std::string>& terms() const { return terms_; }

  const std::vector<Posting>* postings(std::string_view term) const {
    auto it = lookup_.find(std::string(term));
    return it == lookup_.end() ? nullptr : &postings_[it->second];
  }
  std::size_t df(std::string_view term) const {
    const auto* p = postings(term);
    return p ? p->size() : 0;
  }

  double idf(std::size_t df) const {
    const double n = static_cast<double>(doc_count());
    const double d = static_cast<double>(df);
    return std::log((n - d + 0.5) / (d + 0.5) + 1.0);
  }

  // Layout (little-endian):
  //   magic[8] version:u32 reserved:u32 N:u64 avgdl:f64
  //   N x { length:u32 id_len:u32 id[id_len] }
  //   T:u64, T x { term_len:u32 term[term_len] P:u64 P x { doc:u32 tf:u32 } }
  // Terms are written in lexicographic order.
  void write(std::ostream& out) const {
    out.write(kMagic, sizeof kMagic);
    put<std::uint32_t>(out, kVersion);
    put<std::uint32_t>(out, 0);
    put<std::uint64_t>(out, doc_count());
    put<double>(out, avgdl_);
    for (std::size_t d = 0; d < doc_count(); ++d) {
      put<std::uint32_t>(out, doc_lengths_[d]);
      put_str(out, doc_ids_[d]);
    }
    put<std::uint64_t>(out, terms_.size());
    for (std::size_t t = 0; t < terms_.size(); ++t) {
      put_str(out, terms_[t]);
      put<std::uint64_t>(out, postings_[t].size());
      for (const auto& p : postings_[t]) {
        put<std::uint32_t>(out, p.doc);
        put<std::uint32_t>(out, p.tf);
      }
    }
    if (!out) throw Error(ErrorCode::kIo, "failed writing index");
  }

  static InvertedIndex read(std::istream& in) {
    char magic[8];
    in.read(magic, sizeof magic);
    if (!in || std::memcmp(magic, kMagic, sizeof magic) != 0) {
      throw Error(ErrorCode::kParse, "not an index file (bad magic)");
    }
    const auto version = get<std::uint32_t>(in);
    if (version != kVersion) {
      throw Error(ErrorCode::kParse, "unsupported index version " + std::to_string(version));
    }
    get<std::uint32_t>(in);
    InvertedIndex idx;
    const auto n = get<std::uint64_t>(in);
    idx.avgdl_ = get<double>(in);
    for (std::uint64_t d = 0; d < n; ++d) {
      idx.doc_lengths_.push_back(get<std::uint32_t>(in));
      idx.doc_ids_.push_back(get_str(in));
    }
    const auto t = get<std::uint64_t>(in);
    for (std::uint64_t i = 0; i < t; ++i) {
      std::string term = get_str(in);
      if (!idx.lookup_.emplace(term, idx.terms_.size()).second) {
        throw Error(ErrorCode::kParse, "duplicate term in index");
      }
      idx.terms_.push_back(std::move(term));
      const auto p = get<std::uint64_t>(in);
      std::vector<Posting> list(p);
      for (auto& post : list) {
        post.doc = get<std::uint32_t>(in);
        post.tf = get<std::uint32_t>(in);
        if (post.doc >= n) throw Error(ErrorCode::kParse, "posting references unknown document");
      }
      idx.postings_.push_back(std::move(list));
    }
    return idx;
  }

  std::string to_bytes() const {
    std::ostringstream os(std::ios::binary);
    write(os);
    return std::move(os).str();
  }

  friend InvertedIndex build_index(const CorpusHandle& corpus);

 private:
  template <typename T>
  static void put(std::ostream& out, T v) {
    unsigned char buf[sizeof(T)];
    std::memcpy(buf, &v, sizeof(T));
    if constexpr (std::endian::native == std::endian::big) std::reverse(buf, buf + sizeof(T));
    out.write(reinterpret_cast<const char*>(buf), sizeof(T));
  }
  template <typename T>
  static T get(std::istream& in) {
    unsigned char buf[sizeof(T)];
    in.read(reinterpret_cast<char*>(buf), sizeof(T));
    if (!in) throw Error(ErrorCode::kParse, "truncated index file");
    if constexpr (std::endian::native == std::endian::big) std::reverse(buf, buf + sizeof(T));
    T v;
    std::memcpy(&v, buf, sizeof(T));
    return v;
  }
  static void put_str(std::ostream& out, const std::string& s) {
    put<std::uint32_t>(out, static_cast<std::uint32_t>(s.size()));
    out.write(s.data(), static_cast<std::streamsize>(s.size()));
  }
  static std::string get_str(std::istream& in) {
    const auto len = get<std::uint32_t>(in);
    std::string s(len, '\0');
    in.read(s.data(), len);
    if (!in) throw Error(ErrorCode::kParse, "truncated index file");
    return s;
  }

  std::vector<std::string> terms_;
  std::unordered_map<std::string, std::size_t> lookup_;
  std::vector<std::vector<Posting>> postings_;
  std::vector<std::uint32_t> doc_lengths_;
  std::vector<std::string> doc_ids_;
  double avgdl_ = 0.0;
};

// Documents are the corpus tweets in id order, so doc index order is
// ascending tweet_id order.
inline InvertedIndex build_index(const CorpusHandle& corpus) {
  if (corpus.empty()) throw Error(ErrorCode::kEmptyCorpus, "cannot index an empty corpus");
  std::map<std::string, std::vector<Posting>> by_term;
  InvertedIndex idx;
  std::uint64_t total = 0;
  for (std::size_t d = 0; d < corpus.size(); ++d) {
    const auto tokens = text::tokenize(corpus.at(d).text);
    std::map<std::string, std::uint32_t> tf;
    for (const auto& t : tokens) ++tf[t];
    for (const auto& [term, count] : tf) by_term[term].push_back({static_cast<std::uint32_t>(d), count});
    idx.doc_lengths_.push_back(static_cast<std::uint32_t>(tokens.size()));
    idx.doc_ids_.push_back(corpus.at(d).id);
    total += tokens.size();
  }
  idx.avgdl_ = static_cast<double>(total) / static_cast<double>(corpus.size());
  for (auto& [term, list] : by_term) {
    idx.lookup_.emplace(term, idx.terms_.size());
    idx.terms_.push_back(term);
    idx.postings_.push_back(std::move(list));
  }
  return idx;
}

struct SearchResult {
  std::vector<RankedCandidate> candidates;
  std::string warning;
};

// Distinct query tokens in lexicographic order.
inline std::vector<std::string> query_terms(std::string_view query) {
  auto toks = text::tokenize(query);
  std::sort(toks.begin(), toks.end());
  toks.erase(std::unique(toks.begin(), toks.end()), toks.end());
  return toks;
}

inline bool ranks_before(const RankedCandidate& a, const RankedCandidate& b, double sa, double sb) {
  if (sa != sb) return sa > sb;
  return a.tweet_id < b.tweet_id;
}

// Top-k documents sharing at least one term with the query, by descending
// BM25 score, ties by ascending tweet_id.
inline SearchResult bm25_search(const InvertedIndex& index, std::string_view query, std::size_t k = 20000,
                                const Bm25Params& params = {}) {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  SearchResult result;
  const auto terms = query_terms(query);
  if (terms.empty()) {
    result.warning = "query has no terms after tokenization";
    return result;
  }
  std::vector<double> acc(index.doc_count(), 0.0);
  std::vector<std::uint32_t> touched;
  std::vector<bool> seen(index.doc_count(), false);
  for (const auto& term : terms) {
    const auto* list = index.postings(term);
    if (!list) continue;
    const double idf = index.idf(list->size());
    for (const auto& p : *list) {
      const double tf = p.tf;
      const double norm = params.k1 * (1.0 - params.b + params.b * index.doc_length(p.doc) / index.avgdl());
      acc[p.doc] += idf * tf * (params.k1 + 1.0) / (tf + norm);
      if (!seen[p.doc]) {
        seen[p.doc] = true;
        touched.push_back(p.doc);
      }
    }
  }
  result.candidates.reserve(touched.size());
  for (auto d : touched) result.candidates.push_back({index.doc_id(d), d, acc[d], std::nullopt});
  auto cmp = [](const RankedCandidate& a, const RankedCandidate& b) {
    return ranks_before(a, b, a.bm25_score, b.bm25_score);
  };
  if (result.candidates.size() > k) {
    std::partial_sort(result.candidates.begin(), result.candidates.begin() + static_cast<std::ptrdiff_t>(k),
                      result.candidates.end(), cmp);
    result.candidates.resize(k);
  } else {
    std::sort(result.candidates.begin(), result.candidates.end(), cmp);
  }
  return result;
}

}  // namespace misinfo
