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

#include "pdftables/detect.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "pdftables/geometry.hpp"
#include "pdftables/stream.hpp"

namespace pdftables {
namespace {

constexpr std::size_t kMinCells = 4;
constexpr std::size_t kMinSharedLines = 3;

std::size_t count_cells(const std::vector<LatticeGrid>& grids) {
  std::size_t n = 0;
  for (const LatticeGrid& g : grids) n += g.cells.size();
  return n;
}

std::vector<DetectedArea> merge_overlapping(std::vector<DetectedArea> areas) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < areas.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < areas.size() && !changed; ++j) {
        if (rect_intersects(areas[i].area, areas[j].area)) {
          areas[i].area = rect_union(areas[i].area, areas[j].area);
          // A ruled grid keeps its method when a text block runs into it.
          if (areas[j].method == Method::kLattice) areas[i].method = Method::kLattice;
          areas.erase(areas.begin() + static_cast<std::ptrdiff_t>(j));
          changed = true;
        }
      }
    }
  }
  return areas;
}

}  // namespace

bool is_under_ruled(const LatticeGrid& grid, double tol) {
  std::map<std::size_t, std::vector<const CellRegion*>> by_row;
  for (const CellRegion& c : grid.cells) {
    if (!c.lines.empty()) by_row[c.row].push_back(&c);
  }
  for (const auto& [row, cells] : by_row) {
    if (cells.size() < 2) continue;
    std::size_t lines = cells.front()->lines.size();
    if (lines < kMinSharedLines) continue;
    bool aligned = true;
    for (const CellRegion* c : cells) {
      if (c->lines.size() != lines) {
        aligned = false;
        break;
      }
      for (std::size_t i = 0; i < lines && aligned; ++i) {
        const PageRect& a = c->line_boxes[i];
        const PageRect& b = cells.front()->line_boxes[i];
        if (std::abs(a.mid_y() - b.mid_y()) > std::max(tol, 0.5 * std::min(a.height(), b.height()))) {
          aligned = false;
        }
      }
      if (!aligned) break;
    }
    if (aligned) return true;
  }
  return false;
}

std::vector<DetectedArea> detect_tables(const ExtractionOptions& options, const PageContent& content) {
  const double tol = options.lattice.snap_tolerance;
  std::vector<DetectedArea> areas;
  std::vector<LatticeGrid> grids = find_grids(content, std::nullopt, options.lattice);
  for (const LatticeGrid& g : grids) {
    // A lone box or a pair of boxes is a frame, not a table.
    if (g.cells.size() < kMinCells) continue;
    areas.push_back({g.area, is_under_ruled(g, tol) ? Method::kStream : Method::kLattice});
  }

  // Text outside the ruled areas.
  std::vector<TextChunk> loose;
  for (TextChunk& c : merge_words(content.elements, options.stream)) {
    double x = c.bbox.mid_x(), y = c.bbox.mid_y();
    bool inside = std::any_of(areas.begin(), areas.end(), [&](const DetectedArea& a) {
      return x >= a.area.left - tol && x <= a.area.right + tol && y >= a.area.top - tol &&
             y <= a.area.bottom + tol;
    });
    if (!inside) loose.push_back(std::move(c));
  }
  PageRect page{0, 0, content.dims.height, content.dims.width};
  std::vector<Row> rows = group_rows(loose, page);
  if (!rows.empty()) {
    std::vector<double> heights;
    for (const Row& r : rows) heights.push_back(r.bottom - r.top);
    double split_gap = options.detect.block_gap_lines * median(heights);
    std::vector<std::vector<Row>> blocks(1);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i > 0 && rows[i].top - rows[i - 1].bottom >= split_gap) blocks.emplace_back();
      blocks.back().push_back(rows[i]);
    }
    for (const auto& block : blocks) {
      if (block.size() < 2) continue;
      if (infer_columns(block, options.stream).empty()) continue;
      PageRect box = block.front().chunks.front().bbox;
      for (const Row& r : block) {
        for (const TextChunk& c : r.chunks) box = rect_union(box, c.bbox);
      }
      box.top = std::max(0.0, box.top);
      box.left = std::max(0.0, box.left);
      box.bottom = std::min(content.dims.height, box.bottom);
      box.right = std::min(content.dims.width, box.right);
      areas.push_back({box, Method::kStream});
    }
  }

  areas = merge_overlapping(std::move(areas));
  std::sort(areas.begin(), areas.end(), [](const DetectedArea& a, const DetectedArea& b) {
    if (a.area.top != b.area.top) return a.area.top < b.area.top;
    return a.area.left < b.area.left;
  });
  return areas;
}

std::vector<DetectedArea> detect_tables(const PageContent& content) {
  return detect_tables(ExtractionOptions{}, content);
}

Method resolve_method(const ExtractionOptions& options, const PageContent& content, const PageRect& area) {
  if (options.method != Method::kDecide) return options.method;
  std::vector<LatticeGrid> grids = find_grids(content, area, options.lattice);
  if (count_cells(grids) < kMinCells) return Method::kStream;
  for (const LatticeGrid& g : grids) {
    if (is_under_ruled(g, options.lattice.snap_tolerance)) return Method::kStream;
  }
  return Method::kLattice;
}

}  // namespace pdftables
