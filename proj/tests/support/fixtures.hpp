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

#include <random>
#include <string>
#include <vector>

#include "pdf_builder.hpp"

namespace fixture {

using Grid = std::vector<std::vector<std::string>>;

struct Rect {
  double top = 0, left = 0, bottom = 0, right = 0;
};

enum class Rules {
  kNone,     // whitespace-separated columns
  kGrid,     // every cell boxed
  kColumns,  // outer frame, rules between columns and under the header only
};

struct TableStyle {
  Rules rules = Rules::kNone;
  double font_size = 10;
  double row_height = 16;
  // Inner padding of ruled cells (left/right); for kNone and kColumns the
  // gap between column extents is `gutters[i]` instead.
  double padding = 4;
  std::vector<double> gutters;
  std::vector<bool> right_align;
};

// Ground truth for one drawn table.
struct PlacedTable {
  int page = 1;
  Grid cells;
  Rules rules = Rules::kNone;
  // Suggested extraction area: the drawn extent plus a small margin.
  Rect area;
  // Midpoints of the whitespace between column extents (x, points).
  std::vector<double> gutter_centers;
};

// Draws `cells` with its top-left corner at (top, left) on the builder's
// current page.
PlacedTable place_table(PdfBuilder& pdf, int page, const Grid& cells, double top, double left,
                        const TableStyle& style);

// Three pages: a fully ruled mtcars extract, two iris blocks (setosa framed
// by column rules only, virginica unruled) and a ruled ToothGrowth extract.
struct SampleFixture {
  std::string pdf;
  std::vector<PlacedTable> tables;  // mtcars, setosa, virginica, toothgrowth
};
SampleFixture sample_fixture();

// Random alphanumeric table: 2-10 rows, 2-8 columns, cells 1-7 characters,
// gutters 1.6-3.5 space widths when unruled. Placed on a new landscape page.
PlacedTable random_table(std::mt19937& rng, PdfBuilder& pdf, int page, Rules rules);

// A document of `pages` pages with a few random text lines each.
std::string random_text_document(std::mt19937& rng, int pages, std::vector<std::vector<std::string>>* lines);

std::string random_word(std::mt19937& rng, int min_len, int max_len);

}  // namespace fixture
