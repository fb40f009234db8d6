#pragma once

#include <cmath>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "misinfo/error.hpp"
#include "misinfo/text.hpp"

namespace misinfo {

struct EmbeddingVector {
  std::vector<double> values;
  bool is_zero = false;

  std::size_t dimension() const { return values.size(); }
};

inline double dot(const EmbeddingVector& a, const EmbeddingVector& b) {
  if (a.dimension() != b.dimension()) {
    throw Error(ErrorCode::kInvalidArgument, "embedding dimension mismatch");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) s += a.values[i] * b.values[i];
  return s;
}

// Cosine similarity; 0 when either side is the zero vector.
inline double cosine(const EmbeddingVector& a, const EmbeddingVector& b) {
  const double na = std::sqrt(dot(a, a));
  const double nb = std::sqrt(dot(b, b));
  if (na == 0.0 || nb == 0.0) return 0.0;
  const double c = dot(a, b) / (na * nb);
  return c > 1.0 ? 1.0 : (c < -1.0 ? -1.0 : c);
}

inline void l2_normalize(EmbeddingVector& v) {
  double n = 0.0;
  for (double x : v.values) n += x * x;
  n = std::sqrt(n);
  v.is_zero = n == 0.0;
  if (v.is_zero) return;
  for (double& x : v.values) x /= n;
}

class Embedder {
 public:
  virtual ~Embedder() = default;
  virtual EmbeddingVector embed(std::string_view text) const = 0;
  virtual std::size_t dimension() const = 0;
};

inline std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// Hashed character-trigram frequencies, L2-normalized.
//
// The text is folded (lowercase, Latin-1 to ASCII) and whitespace runs are
// collapsed to one space with the ends trimmed. Every window of three
// consecutive code points is a gram; a non-empty text shorter than three
// code points is a single gram. Gram g lands in bucket fnv1a64(utf8(g)) % D.
class TrigramEmbedder final : public Embedder {
 public:
  explicit TrigramEmbedder(std::size_t dimension = 512) : dimension_(dimension) {
    if (dimension_ == 0) throw Error(ErrorCode::kInvalidArgument, "embedding dimension must be positive");
  }

  std::size_t dimension() const override { return dimension_; }

  static std::vector<std::string> grams(std::string_view raw) {
    const std::u32string cps = utf8::decode(text::normalize_claim_text(raw));
    std::vector<std::string> out;
    if (cps.empty()) return out;
    const std::size_t width = cps.size() < 3 ? cps.size() : 3;
    for (std::size_t i = 0; i + width <= cps.size(); ++i) {
      std::string g;
      for (std::size_t k = 0; k < width; ++k) utf8::append(g, cps[i + k]);
      out.push_back(std::move(g));
    }
    return out;
  }

  EmbeddingVector embed(std::string_view raw) const override {
    EmbeddingVector v;
    v.values.assign(dimension_, 0.0);
    for (const auto& g : grams(raw)) v.values[fnv1a64(g) % dimension_] += 1.0;
    l2_normalize(v);
    return v;
  }

 private:
  std::size_t dimension_;
};

}  // namespace misinfo
