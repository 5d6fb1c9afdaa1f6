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

#include "pdftables/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pdftables/geometry.hpp"
#include "pdftables/stream.hpp"

namespace pdftables {
namespace {

struct Point {
  double x, y;
};

std::vector<Ruling> snap_one_orientation(std::vector<Ruling> rulings, double tol) {
  std::sort(rulings.begin(), rulings.end(), [](const Ruling& a, const Ruling& b) {
    if (a.position != b.position) return a.position < b.position;
    return a.start < b.start;
  });
  std::vector<Ruling> out;
  std::size_t i = 0;
  while (i < rulings.size()) {
    // Single-linkage cluster of positions.
    std::size_t j = i + 1;
    while (j < rulings.size() && rulings[j].position - rulings[j - 1].position <= tol) ++j;
    std::vector<Ruling> cluster(rulings.begin() + i, rulings.begin() + j);
    std::sort(cluster.begin(), cluster.end(), [](const Ruling& a, const Ruling& b) {
      if (a.start != b.start) return a.start < b.start;
      return a.position < b.position;
    });
    std::size_t k = 0;
    while (k < cluster.size()) {
      double start = cluster[k].start, end = cluster[k].end, sum = cluster[k].position;
      std::size_t n = 1;
      std::size_t m = k + 1;
      while (m < cluster.size() && cluster[m].start <= end + tol) {
        end = std::max(end, cluster[m].end);
        sum += cluster[m].position;
        ++n;
        ++m;
      }
      out.push_back(Ruling{cluster[k].orientation, sum / static_cast<double>(n), start, end});
      k = m;
    }
    i = j;
  }
  std::sort(out.begin(), out.end(), [](const Ruling& a, const Ruling& b) {
    if (a.position != b.position) return a.position < b.position;
    return a.start < b.start;
  });
  return out;
}

bool covered(const std::vector<Ruling>& rulings, double pos, double from, double to, double tol) {
  for (const Ruling& r : rulings) {
    if (std::abs(r.position - pos) <= tol && r.start <= from + tol && r.end >= to - tol) return true;
  }
  return false;
}

bool contains_rect(const PageRect& outer, const PageRect& inner, double tol) {
  return inner.left >= outer.left - tol && inner.right <= outer.right + tol &&
         inner.top >= outer.top - tol && inner.bottom <= outer.bottom + tol;
}

bool interiors_overlap(const PageRect& a, const PageRect& b, double tol) {
  return std::min(a.right, b.right) - std::max(a.left, b.left) > tol &&
         std::min(a.bottom, b.bottom) - std::max(a.top, b.top) > tol;
}

bool share_edge(const PageRect& a, const PageRect& b, double tol) {
  double v_overlap = std::min(a.bottom, b.bottom) - std::max(a.top, b.top);
  double h_overlap = std::min(a.right, b.right) - std::max(a.left, b.left);
  bool side = (std::abs(a.right - b.left) <= tol || std::abs(b.right - a.left) <= tol) && v_overlap > tol;
  bool stacked = (std::abs(a.bottom - b.top) <= tol || std::abs(b.bottom - a.top) <= tol) && h_overlap > tol;
  return side || stacked;
}

// Sorted representative values of `values`, chaining neighbours within tol.
std::vector<double> cluster_values(std::vector<double> values, double tol) {
  std::sort(values.begin(), values.end());
  std::vector<double> out;
  std::size_t i = 0;
  while (i < values.size()) {
    std::size_t j = i + 1;
    double sum = values[i];
    while (j < values.size() && values[j] - values[j - 1] <= tol) sum += values[j++];
    out.push_back(sum / static_cast<double>(j - i));
    i = j;
  }
  return out;
}

std::size_t nearest_index(const std::vector<double>& edges, double v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (std::abs(edges[i] - v) < std::abs(edges[best] - v)) best = i;
  }
  return best;
}

std::optional<Ruling> clip_ruling(const Ruling& r, const PageRect& box) {
  Ruling out = r;
  if (r.horizontal()) {
    if (r.position < box.top || r.position > box.bottom) return std::nullopt;
    out.start = std::max(r.start, box.left);
    out.end = std::min(r.end, box.right);
  } else {
    if (r.position < box.left || r.position > box.right) return std::nullopt;
    out.start = std::max(r.start, box.top);
    out.end = std::min(r.end, box.bottom);
  }
  if (!(out.end > out.start)) return std::nullopt;
  return out;
}

}  // namespace

std::vector<Ruling> snap_rulings(const std::vector<Ruling>& rulings, double tol) {
  std::vector<Ruling> h, v;
  for (const Ruling& r : rulings) (r.horizontal() ? h : v).push_back(r);
  std::vector<Ruling> out = snap_one_orientation(std::move(h), tol);
  std::vector<Ruling> vs = snap_one_orientation(std::move(v), tol);
  out.insert(out.end(), vs.begin(), vs.end());
  return out;
}

std::vector<PageRect> find_cells(const std::vector<Ruling>& horizontal, const std::vector<Ruling>& vertical,
                                 double tol) {
  std::vector<Point> points;
  for (const Ruling& h : horizontal) {
    for (const Ruling& v : vertical) {
      if (v.position >= h.start - tol && v.position <= h.end + tol && h.position >= v.start - tol &&
          h.position <= v.end + tol) {
        points.push_back({v.position, h.position});
      }
    }
  }
  std::sort(points.begin(), points.end(), [](const Point& a, const Point& b) {
    if (a.y != b.y) return a.y < b.y;
    return a.x < b.x;
  });

  std::vector<PageRect> cells;
  for (const Point& p : points) {
    std::vector<Point> below, right;
    for (const Point& q : points) {
      if (std::abs(q.x - p.x) <= tol && q.y > p.y + tol) below.push_back(q);
      if (std::abs(q.y - p.y) <= tol && q.x > p.x + tol) right.push_back(q);
    }
    std::sort(below.begin(), below.end(), [](const Point& a, const Point& b) { return a.y < b.y; });
    std::sort(right.begin(), right.end(), [](const Point& a, const Point& b) { return a.x < b.x; });
    bool found = false;
    for (const Point& b : below) {
      if (!covered(vertical, p.x, p.y, b.y, tol)) break;
      for (const Point& r : right) {
        if (!covered(horizontal, p.y, p.x, r.x, tol)) break;
        if (covered(horizontal, b.y, p.x, r.x, tol) && covered(vertical, r.x, p.y, b.y, tol)) {
          cells.push_back(PageRect{p.y, p.x, b.y, r.x});
          found = true;
          break;
        }
      }
      if (found) break;
    }
  }

  // Drop duplicates and rectangles that enclose another one, then resolve
  // any remaining partial overlaps in reading order.
  std::vector<PageRect> kept;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < cells.size() && !drop; ++j) {
      if (i == j) continue;
      bool i_in_j = contains_rect(cells[j], cells[i], tol);
      bool j_in_i = contains_rect(cells[i], cells[j], tol);
      if (j_in_i && !i_in_j) drop = true;        // i encloses j
      if (j_in_i && i_in_j && j < i) drop = true;  // duplicate
    }
    if (drop) continue;
    for (const PageRect& k : kept) {
      if (interiors_overlap(k, cells[i], tol)) {
        drop = true;
        break;
      }
    }
    if (!drop) kept.push_back(cells[i]);
  }
  std::sort(kept.begin(), kept.end(), [](const PageRect& a, const PageRect& b) {
    if (a.top != b.top) return a.top < b.top;
    return a.left < b.left;
  });
  return kept;
}

std::vector<LatticeGrid> find_grids(const PageContent& content, const std::optional<PageRect>& area,
                                    const LatticeParams& params) {
  const double tol = params.snap_tolerance;
  std::vector<Ruling> rulings;
  PageRect page_box{0, 0, content.dims.height, content.dims.width};
  PageRect box = page_box;
  if (area) {
    box = PageRect{std::max(0.0, area->top - tol), std::max(0.0, area->left - tol), area->bottom + tol,
                   area->right + tol};
  }
  for (const Ruling& r : content.rulings) {
    if (auto clipped = clip_ruling(r, box)) rulings.push_back(*clipped);
  }
  std::vector<Ruling> h, v;
  for (const Ruling& r : snap_rulings(rulings, tol)) (r.horizontal() ? h : v).push_back(r);
  std::vector<PageRect> cells = find_cells(h, v, tol);
  if (cells.empty()) return {};

  // Union-find over shared edges.
  std::vector<std::size_t> parent(cells.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      if (share_edge(cells[i], cells[j], tol)) parent[find(i)] = find(j);
    }
  }
  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::size_t> group_of(cells.size(), SIZE_MAX);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    std::size_t root = find(i);
    if (group_of[root] == SIZE_MAX) {
      group_of[root] = groups.size();
      groups.emplace_back();
    }
    groups[group_of[root]].push_back(i);
  }

  // Each element goes to the first cell containing its midpoint.
  std::vector<std::vector<TextElement>> cell_elements(cells.size());
  for (const TextElement& e : content.elements) {
    double x = e.bbox.mid_x(), y = e.bbox.mid_y();
    if (area && !area->contains(x, y)) continue;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].contains(x, y)) {
        cell_elements[i].push_back(e);
        break;
      }
    }
  }

  std::vector<LatticeGrid> grids;
  for (const auto& group : groups) {
    LatticeGrid grid;
    grid.area = cells[group.front()];
    std::vector<double> ys, xs;
    for (std::size_t i : group) {
      grid.area = rect_union(grid.area, cells[i]);
      ys.push_back(cells[i].top);
      ys.push_back(cells[i].bottom);
      xs.push_back(cells[i].left);
      xs.push_back(cells[i].right);
    }
    std::vector<double> row_edges = cluster_values(ys, tol);
    std::vector<double> col_edges = cluster_values(xs, tol);
    grid.n_rows = row_edges.size() - 1;
    grid.n_cols = col_edges.size() - 1;
    for (std::size_t i : group) {
      CellRegion cell;
      cell.rect = cells[i];
      cell.row = std::min(nearest_index(row_edges, cells[i].top), grid.n_rows - 1);
      cell.col = std::min(nearest_index(col_edges, cells[i].left), grid.n_cols - 1);
      std::vector<TextChunk> chunks = merge_words(cell_elements[i]);
      for (const auto& band :
           group_into_bands(chunks, [](const TextChunk& c) -> const PageRect& { return c.bbox; })) {
        std::string line;
        PageRect box = chunks[band.front()].bbox;
        for (std::size_t idx : band) {
          if (!line.empty()) line.push_back(' ');
          line += chunks[idx].text;
          box = rect_union(box, chunks[idx].bbox);
        }
        if (!cell.text.empty()) cell.text.push_back('\r');
        cell.text += line;
        cell.lines.push_back(std::move(line));
        cell.line_boxes.push_back(box);
      }
      grid.cells.push_back(std::move(cell));
    }
    grids.push_back(std::move(grid));
  }
  std::sort(grids.begin(), grids.end(), [](const LatticeGrid& a, const LatticeGrid& b) {
    if (a.area.top != b.area.top) return a.area.top < b.area.top;
    return a.area.left < b.area.left;
  });
  return grids;
}

RawTable grid_to_table(const LatticeGrid& grid, int page) {
  RawTable table;
  table.page = page;
  table.area = grid.area;
  table.method = Method::kLattice;
  table.cells.assign(grid.n_rows, std::vector<std::string>(grid.n_cols));
  for (const CellRegion& cell : grid.cells) {
    std::string& slot = table.cells[cell.row][cell.col];
    if (!slot.empty() && !cell.text.empty()) slot.push_back('\r');
    slot += cell.text;
  }
  return table;
}

std::vector<RawTable> extract_lattice(const PageContent& content, const std::optional<PageRect>& area,
                                      const LatticeParams& params) {
  if (area) check_area(*area, content.dims);
  std::vector<RawTable> tables;
  for (const LatticeGrid& grid : find_grids(content, area, params)) {
    tables.push_back(grid_to_table(grid, content.page));
  }
  return tables;
}

}  // namespace pdftables
