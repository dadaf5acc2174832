// Copyright 2026 The toribase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TORIBASE_CACHE_HPP
#define TORIBASE_CACHE_HPP

#include <openssl/evp.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "toribase/errors.hpp"

namespace toribase {

/// Lowercase hex SHA-256 of `data`.
inline std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 computation failed");
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 0xf];
  }
  return out;
}

/// Hash of a document with its volatile fields ("timings", "cached",
/// "document_hash") removed. Keys are sorted, so the dump is canonical.
inline std::string document_hash(nlohmann::json doc) {
  doc.erase("timings");
  doc.erase("cached");
  doc.erase("document_hash");
  return sha256_hex(doc.dump());
}

/// Cache directory: an explicit path wins, then TORIBASE_CACHE_DIR, then
/// $XDG_CACHE_HOME/toribase, then ~/.cache/toribase.
inline std::filesystem::path default_cache_dir(const std::string& explicit_dir = {}) {
  if (!explicit_dir.empty()) return explicit_dir;
  if (const char* env = std::getenv("TORIBASE_CACHE_DIR"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    return std::filesystem::path(xdg) / "toribase";
  }
  if (const char* home = std::getenv("HOME"); home && *home) {
    return std::filesystem::path(home) / ".cache" / "toribase";
  }
  return std::filesystem::temp_directory_path() / "toribase-cache";
}

/// Content-addressed store of report documents, one `<key>.json` per entry.
/// Loads are verified: the stored document hash must match its content and
/// the tool version must equal the running one; anything else is a miss.
class ResultCache {
 public:
  using Warn = std::function<void(const std::string&)>;

  ResultCache(std::filesystem::path dir, std::string tool_version, Warn warn = {})
      : dir_(std::move(dir)), version_(std::move(tool_version)), warn_(std::move(warn)) {}

  /// Key of an (instance, flags) pair.
  static std::string key(std::string_view instance_hash, std::string_view flags) {
    std::string s(instance_hash);
    s += '\n';
    s += flags;
    return sha256_hex(s);
  }

  std::filesystem::path path_for(const std::string& key) const { return dir_ / (key + ".json"); }

  std::optional<nlohmann::json> load(const std::string& key,
                                     std::string_view instance_hash) const {
    const auto p = path_for(key);
    std::ifstream in(p);
    if (!in) return std::nullopt;
    std::stringstream buf;
    buf << in.rdbuf();
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(buf.str());
      if (!doc.is_object()) throw std::runtime_error("not an object");
      if (doc.value("tool_version", "") != version_) return std::nullopt;
      if (doc.value("instance_hash", "") != instance_hash) {
        throw std::runtime_error("instance hash mismatch");
      }
      if (doc.value("document_hash", "") != document_hash(doc)) {
        throw std::runtime_error("document hash mismatch");
      }
    } catch (const std::exception& ex) {
      if (warn_) warn_("ignoring corrupt cache entry " + p.string() + ": " + ex.what());
      return std::nullopt;
    }
    return doc;
  }

  /// Writes atomically (temporary file, then rename). Failures only warn.
  void store(const std::string& key, const nlohmann::json& doc) const {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    const auto p = path_for(key);
    auto tmp = p;
    tmp += ".tmp";
    {
      std::ofstream out(tmp, std::ios::trunc);
      out << doc.dump(2) << "\n";
      if (!out) {
        if (warn_) warn_("cannot write cache entry " + p.string());
        return;
      }
    }
    std::filesystem::rename(tmp, p, ec);
    if (ec && warn_) warn_("cannot write cache entry " + p.string() + ": " + ec.message());
  }

 private:
  std::filesystem::path dir_;
  std::string version_;
  Warn warn_;
};

}  // namespace toribase

#endif  // TORIBASE_CACHE_HPP
