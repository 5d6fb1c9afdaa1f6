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
#include <vector>

#include "pdftables/model.hpp"
#include "pdftables/pdf/document.hpp"

namespace pdftables {

struct DocumentHandle {
  std::string source;                // path or URL as given
  std::filesystem::path local_path;  // the file actually parsed
  int n_pages = 0;
  std::vector<PageDims> page_dims;
  std::shared_ptr<const pdf::Document> pdf;
};

// Opens a local path or http(s) URL. URL sources are downloaded first (see
// fetch_url). Throws IoError, UnreachableError, NotPdfError, PasswordError
// or ParseError.
DocumentHandle open_document(const std::string& source, const std::string& password = {});

int get_n_pages(const DocumentHandle& doc);

// 1-based page list; all pages when omitted. Throws PageRangeError.
std::vector<PageDims> get_page_dims(const DocumentHandle& doc,
                                    const std::optional<std::vector<int>>& pages = std::nullopt);

// Reading-order text, one string per requested page: lines top to bottom,
// words within a line separated by one space, lines by '\n'. With `area`
// (parallel to the page list), only words whose midpoint lies inside the
// page's rectangle are kept.
std::vector<std::string> extract_text(const DocumentHandle& doc,
                                      const std::optional<std::vector<int>>& pages = std::nullopt,
                                      const std::optional<std::vector<PageRect>>& area = std::nullopt);

struct Metadata {
  std::optional<std::string> title;
  std::optional<std::string> author;
  std::optional<std::string> subject;
  std::optional<std::string> keywords;
  std::optional<std::string> creator;
  std::optional<std::string> producer;
  // ISO 8601, e.g. "2021-03-04T05:06:07+01:00" (offset omitted when the
  // file gives none).
  std::optional<std::string> created;
  std::optional<std::string> modified;
  int n_pages = 0;
};

Metadata extract_metadata(const DocumentHandle& doc);

// Converts a PDF date string ("D:YYYYMMDDHHmmSSOHH'mm'") to ISO 8601.
// Returns nullopt when the year is missing or malformed.
std::optional<std::string> pdf_date_to_iso(const std::string& value);

// Text elements and rulings of one page (1-based), in page coordinates.
PageContent read_page_content(const DocumentHandle& doc, int page);

// Writes `<stem>-<page>.png` for each requested page into `out_dir` and
// returns the paths in page order.
std::vector<std::filesystem::path> make_thumbnails(const DocumentHandle& doc,
                                                   const std::optional<std::vector<int>>& pages,
                                                   double dpi, const std::filesystem::path& out_dir);

// Writes `<stem>-<page>.pdf`, one single-page file per page.
std::vector<std::filesystem::path> split_pdf(const DocumentHandle& doc,
                                             const std::filesystem::path& out_dir);

// Concatenates the pages of every source in order.
DocumentHandle merge_pdfs(const std::vector<std::string>& sources,
                          const std::filesystem::path& out_path);

// Helpers shared with the CLI.
std::string source_stem(const DocumentHandle& doc);
void check_pages(const DocumentHandle& doc, const std::vector<int>& pages);

}  // namespace pdftables
