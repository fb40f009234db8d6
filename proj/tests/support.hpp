#pragma once

#include <atomic>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "misinfo/misinfo.hpp"

namespace testsupport {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    std::random_device rd;
    path_ = fs::temp_directory_path() /
            ("misinfo_test_" + std::to_string(rd()) + "_" + std::to_string(counter++));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const fs::path& path() const { return path_; }
  fs::path operator/(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

inline void write_file(const fs::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << content;
}

inline std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

#ifdef MISINFO_FIXTURE_DIR
inline fs::path fixture(const std::string& name) { return fs::path(MISINFO_FIXTURE_DIR) / name; }
#endif
#ifdef MISINFO_DATA_DIR
inline fs::path data_file(const std::string& name) { return fs::path(MISINFO_DATA_DIR) / name; }
#endif

inline misinfo::Tweet tweet(std::string id, std::string text, std::string created = "2020-03-01T12:00:00Z",
                            std::string handle = "someone", std::vector<std::string> urls = {}) {
  misinfo::Tweet t;
  t.id = std::move(id);
  t.text = std::move(text);
  t.author_handle = std::move(handle);
  t.author_id = "a_" + t.author_handle;
  t.created_at = *misinfo::timeutil::parse_timestamp(created);
  for (auto& u : urls) t.urls.push_back(misinfo::text::normalize_url(u));
  t.hashtags = misinfo::text::extract_hashtags(t.text);
  return t;
}

inline misinfo::Claim claim(std::string id, std::string text, std::string date = "2020-03-10",
                            misinfo::Topic topic = misinfo::Topic::kOther, std::string url = "") {
  misinfo::Claim c;
  c.id = std::move(id);
  c.text = std::move(text);
  c.debunk_date = *misinfo::timeutil::parse_date(date);
  c.topic = topic;
  if (!url.empty()) c.debunk_url = misinfo::text::normalize_url(url);
  return c;
}

// Zero-padded ids keep lexicographic and numeric order aligned.
inline std::string pad_id(std::size_t n, int width = 6) {
  std::string s = std::to_string(n);
  return std::string(static_cast<std::size_t>(width) - std::min<std::size_t>(s.size(), width), '0') + s;
}

// Random texts over a small vocabulary so terms repeat across docs.
inline std::vector<std::string> random_docs(std::mt19937_64& rng, std::size_t n, std::size_t vocab,
                                            std::size_t min_len, std::size_t max_len) {
  std::vector<std::string> docs;
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  // Skewed draw so some terms are common and some rare.
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    std::string d;
    const std::size_t L = len(rng);
    for (std::size_t k = 0; k < L; ++k) {
      const auto w = static_cast<std::size_t>(static_cast<double>(vocab) * u(rng) * u(rng));
      if (!d.empty()) d += ' ';
      d += "w" + std::to_string(w);
    }
    docs.push_back(d.empty() ? "w0" : d);
  }
  return docs;
}

}  // namespace testsupport
