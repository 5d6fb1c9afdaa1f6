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

#include <optional>
#include <vector>

#include "pdftables/model.hpp"

namespace pdftables {

struct Row {
  double top = 0;
  double bottom = 0;
  std::vector<TextChunk> chunks;  // ordered by left edge
};

// Merges glyph elements into word chunks. Elements are first grouped into
// lines (50% vertical overlap); neighbours on a line merge while the gap to
// the previous element is below max(word_gap_factor * space width,
// min_word_gap).
std::vector<TextChunk> merge_words(const std::vector<TextElement>& elements,
                                   const StreamParams& params = {});

// Keeps chunks whose midpoint lies in `area` and groups them into rows:
// a chunk joins a row when they overlap vertically by at least half of the
// smaller height. Rows are ordered top to bottom.
std::vector<Row> group_rows(const std::vector<TextChunk>& chunks, const PageRect& area);

// Column separators (ascending x positions) inferred from horizontal
// whitespace shared by the rows.
std::vector<double> infer_columns(const std::vector<Row>& rows, const StreamParams& params = {});

// Whitespace-based extraction of one area. `columns`, when given, replaces
// inferred separators. Throws InvalidArgument when the area is malformed
// or extends past the page.
RawTable extract_stream(const PageContent& content, const PageRect& area,
                        const std::optional<std::vector<double>>& columns = std::nullopt,
                        const StreamParams& params = {});

// Builds the rectangular grid for rows and separators; used by
// extract_stream and by the detector.
std::vector<std::vector<std::string>> stream_cells(const std::vector<Row>& rows,
                                                   const std::vector<double>& separators);

// Throws InvalidArgument unless `area` is valid and inside `dims` (a small
// tolerance absorbs rounding in caller-side conversions).
void check_area(const PageRect& area, const PageDims& dims);

}  // namespace pdftables
