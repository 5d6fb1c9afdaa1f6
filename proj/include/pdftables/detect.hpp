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

#include "pdftables/lattice.hpp"
#include "pdftables/model.hpp"

namespace pdftables {

struct DetectedArea {
  PageRect area;
  Method method = Method::kStream;

  friend bool operator==(const DetectedArea&, const DetectedArea&) = default;
};

// Proposes table areas on a page: ruled grids first, then text blocks with
// at least two rows and two inferred columns outside those grids. Blocks are
// split at vertical whitespace of `block_gap_lines` median line heights.
// Overlapping proposals are merged; results are ordered top to bottom, then
// left to right.
std::vector<DetectedArea> detect_tables(const ExtractionOptions& options, const PageContent& content);
std::vector<DetectedArea> detect_tables(const PageContent& content);

// Explicit methods are returned unchanged. kDecide picks lattice when the
// area holds at least four closed cells and the grid is not "under-ruled"
// (see is_under_ruled), stream otherwise.
Method resolve_method(const ExtractionOptions& options, const PageContent& content, const PageRect& area);

// A grid whose rulings only frame columns: some row holds two or more
// non-empty cells that all carry the same number (three or more) of
// vertically aligned text lines, i.e. several table rows share one ruled
// row.
bool is_under_ruled(const LatticeGrid& grid, double tol);

}  // namespace pdftables
