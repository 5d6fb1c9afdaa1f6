// Copyright 2026 The pdftables Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pdftables/download.hpp"

#include <curl/curl.h>
#include <unistd.h>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <random>

#include "pdftables/error.hpp"

namespace pdftables {
namespace {

namespace fs = std::filesystem;

class DownloadCache {
 public:
  ~DownloadCache() {
    std::error_code ec;
    if (!dir_.empty()) fs::remove_all(dir_, ec);
  }

  fs::path dir() {
    std::lock_guard lock(mutex_);
    return ensure_dir();
  }

  fs::path fetch(const std::string& url) {
    std::lock_guard lock(mutex_);
    if (auto it = files_.find(url); it != files_.end()) return it->second;
    fs::path target = ensure_dir() / file_name(url);
    download(url, target);
    files_[url] = target;
    return target;
  }

 private:
  fs::path ensure_dir() {
    if (!dir_.empty()) return dir_;
    fs::path base;
    if (const char* env = std::getenv("PDFTABLES_TMPDIR"); env && *env) {
      base = env;
    } else {
      base = fs::temp_directory_path();
    }
    std::random_device rd;
    fs::path dir = base / ("pdftables-" + std::to_string(::getpid()) + "-" + std::to_string(rd() % 1000000));
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create download directory " + dir.string() + ": " + ec.message());
    dir_ = dir;
    return dir_;
  }

  std::string file_name(const std::string& url) {
    std::string path = url.substr(0, url.find_first_of("?#"));
    std::string base = path.substr(path.find_last_of('/') + 1);
    base.erase(std::remove_if(base.begin(), base.end(),
                              [](unsigned char c) {
                                return !(std::isalnum(c) || c == '.' || c == '-' || c == '_');
                              }),
               base.end());
    if (base.empty() || base == "." || base == "..") base = "download.pdf";
    // A counter prefix keeps distinct URLs with equal base names apart.
    return std::to_string(files_.size() + 1) + "-" + base;
  }

  static std::size_t write_cb(char* data, std::size_t size, std::size_t n, void* user) {
    auto* out = static_cast<std::ofstream*>(user);
    out->write(data, static_cast<std::streamsize>(size * n));
    return out->good() ? size * n : 0;
  }

  static void download(const std::string& url, const fs::path& target) {
    static std::once_flag init;
    std::call_once(init, [] { curl_global_init(CURL_GLOBAL_DEFAULT); });
    std::ofstream out(target, std::ios::binary);
    if (!out) throw IoError("cannot write " + target.string());
    CURL* curl = curl_easy_init();
    if (!curl) throw UnreachableError("cannot initialise the HTTP client");
    char errbuf[CURL_ERROR_SIZE] = {0};
    curl_easy_setopt(curl, CURLOPT_URL, url.c_str());
    curl_easy_setopt(curl, CURLOPT_FOLLOWLOCATION, 1L);
    curl_easy_setopt(curl, CURLOPT_MAXREDIRS, 10L);
    curl_easy_setopt(curl, CURLOPT_PROTOCOLS, static_cast<long>(CURLPROTO_HTTP | CURLPROTO_HTTPS));
    curl_easy_setopt(curl, CURLOPT_REDIR_PROTOCOLS, static_cast<long>(CURLPROTO_HTTP | CURLPROTO_HTTPS));
    curl_easy_setopt(curl, CURLOPT_CONNECTTIMEOUT, 30L);
    curl_easy_setopt(curl, CURLOPT_WRITEFUNCTION, write_cb);
    curl_easy_setopt(curl, CURLOPT_WRITEDATA, &out);
    curl_easy_setopt(curl, CURLOPT_ERRORBUFFER, errbuf);
    CURLcode rc = curl_easy_perform(curl);
    long status = 0;
    curl_easy_getinfo(curl, CURLINFO_RESPONSE_CODE, &status);
    curl_easy_cleanup(curl);
    out.close();
    if (rc != CURLE_OK || status < 200 || status >= 300) {
      std::error_code ec;
      fs::remove(target, ec);
      std::string why = rc != CURLE_OK ? (errbuf[0] ? errbuf : curl_easy_strerror(rc))
                                       : "HTTP status " + std::to_string(status);
      throw UnreachableError("cannot download " + url + ": " + why);
    }
  }

  std::mutex mutex_;
  fs::path dir_;
  std::map<std::string, fs::path> files_;
};

DownloadCache& cache() {
  static DownloadCache instance;
  return instance;
}

}  // namespace

bool is_url(std::string_view source) {
  auto starts = [&](std::string_view prefix) {
    if (source.size() < prefix.size()) return false;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      if (std::tolower(static_cast<unsigned char>(source[i])) != prefix[i]) return false;
    }
    return true;
  };
  return starts("http://") || starts("https://");
}

std::filesystem::path download_dir() { return cache().dir(); }

std::filesystem::path fetch_url(const std::string& url) {
  if (!is_url(url)) throw InvalidArgument("not an http(s) URL: " + url);
  return cache().fetch(url);
}

}  // namespace pdftables
