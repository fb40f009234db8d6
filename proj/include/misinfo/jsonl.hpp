#pragma once

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "misinfo/error.hpp"

namespace misinfo {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace jsonl {

struct LineError {
  std::size_t line = 0;
  std::string reason;
};

// Calls fn(record, line_no) for each non-blank line. Lines that fail to parse
// or for which fn throws are collected, not propagated.
inline std::vector<LineError> for_each(const std::filesystem::path& path,
                                       const std::function<void(const json&, std::size_t)>& fn) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::vector<LineError> errors;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      fn(json::parse(line), line_no);
    } catch (const json::exception& e) {
      errors.push_back({line_no, e.what()});
    } catch (const Error& e) {
      errors.push_back({line_no, e.what()});
    }
  }
  return errors;
}

inline void write_lines(const std::filesystem::path& path, const std::vector<ordered_json>& records) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  for (const auto& r : records) out << r.dump() << '\n';
}

}  // namespace jsonl

// Field accessors for loosely typed input records. Numbers are accepted
// where ids are expected because raw exports carry numeric ids.
inline std::optional<std::string> get_string(const json& j, const char* key) {
  if (!j.is_object()) return std::nullopt;
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  if (it->is_string()) return it->get<std::string>();
  if (it->is_number_integer()) return std::to_string(it->get<long long>());
  if (it->is_number_unsigned()) return std::to_string(it->get<unsigned long long>());
  return std::nullopt;
}

inline std::string require_string(const json& j, const char* key) {
  auto v = get_string(j, key);
  if (!v || v->empty()) throw Error(ErrorCode::kParse, std::string("missing field '") + key + "'");
  return *v;
}

}  // namespace misinfo
