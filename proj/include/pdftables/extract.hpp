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

#include <vector>

#include "pdftables/ingest.hpp"
#include "pdftables/model.hpp"

namespace pdftables {

// Tables for one page. `areas` empty means detection (guess) or the whole
// page (no guess). Tables without any text are dropped.
std::vector<RawTable> extract_page_tables(const PageContent& content, const ExtractionOptions& options,
                                          const std::vector<PageRect>& areas);

// Full pipeline over the requested pages. With explicit areas, each
// (page, area) pair yields its tables in list order; otherwise pages are
// processed in the given order. Pages are read on a small worker pool.
// Throws PageRangeError, InvalidArgument, or document errors.
std::vector<RawTable> extract_tables(const DocumentHandle& doc, const ExtractionOptions& options);

}  // namespace pdftables
