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
#include <string>
#include <string_view>
#include <vector>

namespace pdftables {

// A rectangle in page space: points, origin at the top-left corner of the
// page, y growing downwards.
struct PageRect {
  double top = 0;
  double left = 0;
  double bottom = 0;
  double right = 0;

  double width() const { return right - left; }
  double height() const { return bottom - top; }
  double mid_x() const { return (left + right) / 2; }
  double mid_y() const { return (top + bottom) / 2; }
  // Finite, non-negative and correctly ordered.
  bool valid() const;
  // Closed-rectangle containment.
  bool contains(double x, double y) const {
    return x >= left && x <= right && y >= top && y <= bottom;
  }

  friend bool operator==(const PageRect&, const PageRect&) = default;
};

bool rect_intersects(const PageRect& a, const PageRect& b);
PageRect rect_union(const PageRect& a, const PageRect& b);

struct PageDims {
  double width = 0;
  double height = 0;

  friend bool operator==(const PageDims&, const PageDims&) = default;
};

struct TextElement {
  PageRect bbox;
  std::string text;
  double font_size = 0;
  double width_of_space = 0;

  friend bool operator==(const TextElement&, const TextElement&) = default;
};

struct TextChunk {
  PageRect bbox;
  std::string text;
  std::vector<TextElement> elements;
};

enum class Orientation { kHorizontal, kVertical };

// An axis-aligned segment. `position` is y for horizontal rulings and x for
// vertical ones; [start, end] runs along the other axis.
struct Ruling {
  Orientation orientation = Orientation::kHorizontal;
  double position = 0;
  double start = 0;
  double end = 0;

  bool horizontal() const { return orientation == Orientation::kHorizontal; }
  double length() const { return end - start; }

  friend bool operator==(const Ruling&, const Ruling&) = default;
};

// Everything the extractors need from one page.
struct PageContent {
  int page = 1;
  PageDims dims;
  std::vector<TextElement> elements;
  std::vector<Ruling> rulings;
};

enum class Method { kLattice, kStream, kDecide };

std::string_view method_name(Method method);
// Accepts "lattice", "stream" and "decide"; throws InvalidArgument otherwise.
Method parse_method(std::string_view name);

struct RawTable {
  int page = 1;
  PageRect area;
  Method method = Method::kStream;
  // Row-major and rectangular; absent cells are empty strings.
  std::vector<std::vector<std::string>> cells;

  std::size_t n_rows() const { return cells.size(); }
  std::size_t n_cols() const { return cells.empty() ? 0 : cells.front().size(); }
};

struct StreamParams {
  // Glyphs merge into one chunk when the gap is below
  // max(word_gap_factor * space width, min_word_gap).
  double word_gap_factor = 0.5;
  double min_word_gap = 0.3;
  // A column gutter must be at least this many median space widths wide.
  double column_gap_factor = 1.25;
  // Fraction of rows that must be clear across a gutter.
  double row_clearance = 0.8;
};

struct LatticeParams {
  double snap_tolerance = 2.0;
};

struct DetectParams {
  // Vertical whitespace, in median line heights, that separates two text
  // blocks.
  double block_gap_lines = 3.0;
};

struct ExtractionOptions {
  std::optional<std::vector<int>> pages;  // 1-based
  std::optional<std::vector<PageRect>> area;
  std::optional<std::vector<double>> columns;
  bool guess = true;
  Method method = Method::kDecide;
  bool col_names = true;

  StreamParams stream;
  LatticeParams lattice;
  DetectParams detect;

  // Throws InvalidArgument when the option combination is inconsistent.
  void validate() const;
};

}  // namespace pdftables
