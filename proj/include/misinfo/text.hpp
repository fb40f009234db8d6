#pragma once

// Shared tokenizer. Every module that counts terms (index, SVO terms,
// baseline scorer, BOW and lexicon features) goes through tokenize() so
// token identity is consistent across the pipeline.
//
// Rules:
//   * whitespace-separated chunks beginning with http://, https:// or www.
//     are dropped, as are chunks beginning with '@' (mentions)
//   * a leading '#' is stripped and the hashtag body is tokenized normally
//   * tokens are maximal runs of word code points (ASCII alphanumerics and
//     non-ASCII letters; general punctuation, symbols and emoji separate)
//   * an apostrophe between two word characters is removed ("don't" -> "dont")
//   * tokens are lowercased and Latin-1 letters are folded to ASCII

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace misinfo {

namespace utf8 {

inline constexpr char32_t kReplacement = 0xFFFD;

// Decodes one code point starting at s[i] and advances i. Invalid sequences
// yield U+FFFD and consume one byte.
inline char32_t next(std::string_view s, std::size_t& i) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) {
    ++i;
    return b0;
  }
  int len = 0;
  char32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    ++i;
    return kReplacement;
  }
  if (i + len > s.size()) {
    ++i;
    return kReplacement;
  }
  for (int k = 1; k < len; ++k) {
    const auto b = static_cast<unsigned char>(s[i + k]);
    if ((b & 0xC0) != 0x80) {
      ++i;
      return kReplacement;
    }
    cp = (cp << 6) | (b & 0x3F);
  }
  i += len;
  return cp;
}

inline void append(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

inline std::u32string decode(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size();) out.push_back(next(s, i));
  return out;
}

}  // namespace utf8

namespace text {

inline bool is_space(char32_t cp) {
  return cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r' || cp == '\f' || cp == '\v' ||
         cp == 0xA0 || cp == 0x1680 || (cp >= 0x2000 && cp <= 0x200A) || cp == 0x2028 ||
         cp == 0x2029 || cp == 0x202F || cp == 0x205F || cp == 0x3000;
}

inline bool is_apostrophe(char32_t cp) { return cp == '\'' || cp == 0x2019 || cp == 0x2018; }

inline bool is_word_char(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z') || (cp >= '0' && cp <= '9');
  }
  if (cp < 0xC0) return cp == 0xAA || cp == 0xB5 || cp == 0xBA;
  if (cp == 0xD7 || cp == 0xF7) return false;
  if (cp >= 0x2000 && cp <= 0x2BFF) return false;  // punctuation, symbols, arrows
  if (cp >= 0x3000 && cp <= 0x303F) return false;  // CJK punctuation
  if (cp >= 0xFE00 && cp <= 0xFE0F) return false;  // variation selectors
  if (cp >= 0xFF00 && cp <= 0xFF0F) return false;  // fullwidth punctuation
  if (cp >= 0x1F000 && cp <= 0x1FAFF) return false;  // emoji and pictographs
  if (cp == utf8::kReplacement) return false;
  return true;
}

// Lowercase + ASCII fold for Latin-1; lowercase only for Greek and Cyrillic.
inline void append_folded(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    if (cp >= 'A' && cp <= 'Z') cp += 'a' - 'A';
    out.push_back(static_cast<char>(cp));
    return;
  }
  if (cp >= 0xC0 && cp <= 0xFF) {
    // Index 0 is U+00C0; entries are the ASCII fold of the lowercase letter.
    static constexpr std::string_view kFold[64] = {
        "a", "a", "a", "a", "a", "a", "ae", "c", "e", "e", "e", "e", "i", "i", "i", "i",
        "d", "n", "o", "o", "o", "o", "o", "",  "o", "u", "u", "u", "u", "y", "th", "ss",
        "a", "a", "a", "a", "a", "a", "ae", "c", "e", "e", "e", "e", "i", "i", "i", "i",
        "d", "n", "o", "o", "o", "o", "o", "",  "o", "u", "u", "u", "u", "y", "th", "y"};
    out.append(kFold[cp - 0xC0]);
    return;
  }
  if (cp >= 0x391 && cp <= 0x3A9) cp += 0x20;
  else if (cp >= 0x410 && cp <= 0x42F) cp += 0x20;
  else if (cp >= 0x400 && cp <= 0x40F) cp += 0x50;
  utf8::append(out, cp);
}

inline std::string fold(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size();) append_folded(out, utf8::next(s, i));
  return out;
}

// ASCII-only lowercase; used for keys such as handles and URLs.
inline std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

inline bool starts_with_ci(std::string_view s, std::string_view prefix) {
  if (s.size() < prefix.size()) return false;
  return ascii_lower(s.substr(0, prefix.size())) == prefix;
}

struct Token {
  std::string text;
  bool is_word = true;
};

// Maps typographic punctuation onto the ASCII mark it stands for.
inline char32_t canonical_punct(char32_t cp) {
  switch (cp) {
    case 0x201C: case 0x201D: case 0x201E: case 0x00AB: case 0x00BB: return '"';
    case 0x2018: case 0x2019: case 0x201A: return '\'';
    case 0x2013: case 0x2014: case 0x2012: case 0x2212: return '-';
    case 0x2026: return '.';
    default: return cp;
  }
}

inline bool is_punct_mark(char32_t cp) {
  cp = canonical_punct(cp);
  return cp < 0x80 && cp > 0x20 && cp != 0x7F && !is_word_char(cp);
}

namespace detail {

inline bool is_dropped_chunk(std::string_view chunk) {
  return starts_with_ci(chunk, "http://") || starts_with_ci(chunk, "https://") ||
         starts_with_ci(chunk, "www.") || (!chunk.empty() && chunk.front() == '@');
}

template <typename Emit>
void scan_chunk(std::string_view chunk, bool emit_punct, Emit&& emit) {
  const std::u32string cps = utf8::decode(chunk);
  std::size_t i = 0;
  if (!cps.empty() && cps[0] == '#') {
    if (emit_punct) emit(Token{"#", false});
    i = 1;
  }
  std::string current;
  auto flush = [&] {
    if (!current.empty()) {
      emit(Token{std::move(current), true});
      current.clear();
    }
  };
  for (; i < cps.size(); ++i) {
    const char32_t cp = cps[i];
    if (is_word_char(cp)) {
      append_folded(current, cp);
      continue;
    }
    if (is_apostrophe(cp) && !current.empty() && i + 1 < cps.size() && is_word_char(cps[i + 1])) {
      continue;
    }
    flush();
    if (emit_punct && is_punct_mark(cp)) {
      emit(Token{std::string(1, static_cast<char>(canonical_punct(cp))), false});
    }
  }
  flush();
}

}  // namespace detail

// Word tokens, optionally interleaved with single-character punctuation marks.
inline std::vector<Token> tokenize_marks(std::string_view text, bool emit_punct) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t start = i;
    // Chunk boundaries use ASCII whitespace plus the multi-byte spaces above.
    while (i < text.size()) {
      std::size_t j = i;
      if (is_space(utf8::next(text, j))) break;
      i = j;
    }
    const std::string_view chunk = text.substr(start, i - start);
    if (!chunk.empty() && !detail::is_dropped_chunk(chunk)) {
      detail::scan_chunk(chunk, emit_punct, [&](Token t) { out.push_back(std::move(t)); });
    }
    if (i < text.size()) utf8::next(text, i);
  }
  return out;
}

inline std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  for (auto& t : tokenize_marks(text, false)) out.push_back(std::move(t.text));
  return out;
}

// Hashtag bodies as they appear in text, lowercased, '#' stripped.
inline std::vector<std::string> extract_hashtags(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t j = i;
    const char32_t cp = utf8::next(text, j);
    if (cp == '#') {
      std::string body;
      std::size_t k = j;
      while (k < text.size()) {
        std::size_t m = k;
        const char32_t c = utf8::next(text, m);
        if (!(is_word_char(c) || c == '_' || c == '-')) break;
        append_folded(body, c);
        k = m;
      }
      if (!body.empty()) out.push_back(std::move(body));
      i = k;
    } else {
      i = j;
    }
  }
  return out;
}

using WordSet = std::unordered_set<std::string>;

// Tokens not in the stopword set, in text order (duplicates kept).
inline std::vector<std::string> content_tokens(std::string_view text, const WordSet& stopwords) {
  std::vector<std::string> out;
  for (auto& tok : tokenize(text)) {
    if (!stopwords.contains(tok)) out.push_back(std::move(tok));
  }
  return out;
}

inline std::set<std::string> content_token_set(std::string_view text, const WordSet& stopwords) {
  auto toks = content_tokens(text, stopwords);
  return {std::make_move_iterator(toks.begin()), std::make_move_iterator(toks.end())};
}

// Lowercase + whitespace collapse + trim; identity key for claim texts.
inline std::string normalize_claim_text(std::string_view s) {
  std::string folded = fold(s);
  std::string out;
  out.reserve(folded.size());
  bool pending_space = false;
  for (char c : folded) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

// Canonical URL key: scheme dropped, host lowercased without "www.",
// fragment dropped, trailing '/' removed. Query string is kept.
inline std::string normalize_url(std::string_view url) {
  std::string_view s = url;
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  if (const auto pos = s.find("://"); pos != std::string_view::npos) s.remove_prefix(pos + 3);
  if (const auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
  const auto host_end = s.find_first_of("/?");
  std::string host = ascii_lower(s.substr(0, host_end));
  if (host.starts_with("www.")) host.erase(0, 4);
  std::string rest = host_end == std::string_view::npos ? "" : std::string(s.substr(host_end));
  const auto q = rest.find('?');
  std::string path = rest.substr(0, q);
  const std::string query = q == std::string::npos ? "" : rest.substr(q);
  while (!path.empty() && path.back() == '/') path.pop_back();
  return host + path + query;
}

inline bool looks_like_url(std::string_view url) {
  const std::string key = normalize_url(url);
  const auto slash = key.find_first_of("/?");
  const std::string host = key.substr(0, slash);
  return !host.empty() && host.find('.') != std::string::npos &&
         host.find(' ') == std::string::npos;
}

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r' || s[b] == '\n')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r' || s[e - 1] == '\n')) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace text
}  // namespace misinfo
