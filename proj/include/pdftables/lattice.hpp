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
#include <vector>

#include "pdftables/model.hpp"

namespace pdftables {

// Merges collinear rulings: same orientation, positions chained within
// `tol`, spans overlapping or separated by at most `tol`. Each merged
// ruling sits at the mean position of its members.
std::vector<Ruling> snap_rulings(const std::vector<Ruling>& rulings, double tol);

// Minimal rectangles closed on all four sides by rulings. Intersections
// (including T-junctions within `tol`) are tried as top-left corners; when
// closed rectangles nest, only the innermost are kept. Ordered by top, then
// left.
std::vector<PageRect> find_cells(const std::vector<Ruling>& horizontal,
                                 const std::vector<Ruling>& vertical, double tol);

struct CellRegion {
  PageRect rect;
  // Text lines inside the cell, top to bottom, and their boxes.
  std::vector<std::string> lines;
  std::vector<PageRect> line_boxes;
  // Lines joined with '\r'.
  std::string text;
  // Grid slot of the cell's top-left corner.
  std::size_t row = 0;
  std::size_t col = 0;
};

// One edge-connected group of cells.
struct LatticeGrid {
  PageRect area;
  std::size_t n_rows = 0;
  std::size_t n_cols = 0;
  std::vector<CellRegion> cells;
};

// Reconstructs ruled grids on the page, or inside `area` when given (rulings
// are clipped to the area, text is kept by midpoint). Grids are ordered by
// top, then left.
std::vector<LatticeGrid> find_grids(const PageContent& content, const std::optional<PageRect>& area,
                                    const LatticeParams& params = {});

RawTable grid_to_table(const LatticeGrid& grid, int page);

// Ruling-based extraction: one table per edge-connected cell group.
std::vector<RawTable> extract_lattice(const PageContent& content,
                                      const std::optional<PageRect>& area = std::nullopt,
                                      const LatticeParams& params = {});

}  // namespace pdftables
