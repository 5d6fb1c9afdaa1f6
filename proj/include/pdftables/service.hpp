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

#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "pdftables/ingest.hpp"
#include "pdftables/model.hpp"

namespace pdftables {

struct ServiceOptions {
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  // Serves this directory at / instead of the built-in page.
  std::optional<std::filesystem::path> ui_dir;
  // Tuning applied to every preview.
  ExtractionOptions extraction;
};

struct HttpReply {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

// HTTP backend for the area picker, bound to one document:
//   GET  /api/doc                      {"n_pages", "dims": [[w, h], ...]}
//   GET  /api/pages/{i}/image?dpi=N    PNG of page i (1-based, default 144 dpi)
//   POST /api/extract                  {page, area: [T, L, B, R], method, col_names}
//   GET  /                             picker page
// Coordinates are points. Errors: 404 unknown page or route, 400 malformed
// request, 422 no table in the selection.
class PickerService {
 public:
  PickerService(DocumentHandle doc, ServiceOptions options);
  ~PickerService();
  PickerService(const PickerService&) = delete;
  PickerService& operator=(const PickerService&) = delete;

  // Binds the listening socket and returns the port.
  int bind();
  // Serves until stop() is called. bind() must have succeeded.
  void run();
  void stop();

  // Request handlers, usable without a socket.
  HttpReply doc_info() const;
  HttpReply page_image(const std::string& page, const std::string& dpi) const;
  HttpReply preview(const std::string& body) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace pdftables
