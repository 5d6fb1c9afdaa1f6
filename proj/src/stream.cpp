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

#include "pdftables/stream.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pdftables/error.hpp"
#include "pdftables/geometry.hpp"

namespace pdftables {
namespace {

bool is_blank(const std::string& text) {
  return std::all_of(text.begin(), text.end(), [](unsigned char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
  });
}

}  // namespace

std::vector<TextChunk> merge_words(const std::vector<TextElement>& elements, const StreamParams& params) {
  std::vector<TextChunk> chunks;
  auto lines = group_into_bands(elements, [](const TextElement& e) -> const PageRect& { return e.bbox; });
  for (const auto& line : lines) {
    TextChunk current;
    bool open = false;
    double threshold = 0;
    auto flush = [&] {
      if (open) chunks.push_back(std::move(current));
      current = TextChunk{};
      open = false;
    };
    for (std::size_t idx : line) {
      const TextElement& el = elements[idx];
      if (is_blank(el.text)) {
        flush();
        continue;
      }
      if (open && el.bbox.left - current.bbox.right < threshold) {
        current.bbox = rect_union(current.bbox, el.bbox);
        current.text += el.text;
        current.elements.push_back(el);
      } else {
        flush();
        current.bbox = el.bbox;
        current.text = el.text;
        current.elements.push_back(el);
        open = true;
      }
      threshold = std::max(params.word_gap_factor * el.width_of_space, params.min_word_gap);
    }
    flush();
  }
  return chunks;
}

std::vector<Row> group_rows(const std::vector<TextChunk>& chunks, const PageRect& area) {
  std::vector<TextChunk> inside;
  for (const TextChunk& c : chunks) {
    if (area.contains(c.bbox.mid_x(), c.bbox.mid_y())) inside.push_back(c);
  }
  std::vector<Row> rows;
  for (const auto& band : group_into_bands(inside, [](const TextChunk& c) -> const PageRect& { return c.bbox; })) {
    Row row;
    row.top = inside[band.front()].bbox.top;
    row.bottom = inside[band.front()].bbox.bottom;
    for (std::size_t idx : band) {
      row.top = std::min(row.top, inside[idx].bbox.top);
      row.bottom = std::max(row.bottom, inside[idx].bbox.bottom);
      row.chunks.push_back(inside[idx]);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<double> infer_columns(const std::vector<Row>& rows, const StreamParams& params) {
  std::vector<double> spaces, heights, xs;
  for (const Row& row : rows) {
    for (const TextChunk& c : row.chunks) {
      for (const TextElement& e : c.elements) {
        if (e.width_of_space > 0) spaces.push_back(e.width_of_space);
      }
      heights.push_back(c.bbox.height());
      xs.push_back(c.bbox.left);
      xs.push_back(c.bbox.right);
    }
  }
  if (xs.empty()) return {};
  double space = spaces.empty() ? 0.25 * median(heights) : median(spaces);
  double min_gap = params.column_gap_factor * space;
  // Rows allowed to intrude into a gutter.
  auto allowed = static_cast<std::size_t>(std::floor((1.0 - params.row_clearance) * rows.size() + 1e-9));

  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<double> separators;
  double run_start = 0;
  bool in_run = false;
  bool seen_text = false;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    double a = xs[i], b = xs[i + 1];
    std::size_t occupied = 0;
    for (const Row& row : rows) {
      for (const TextChunk& c : row.chunks) {
        if (c.bbox.left <= a && c.bbox.right >= b) {
          ++occupied;
          break;
        }
      }
    }
    bool clear = occupied <= allowed;
    // Runs touching the outer edges are margins, not gutters; the trailing
    // one never closes below.
    if (!clear) seen_text = true;
    if (clear && !in_run && seen_text) {
      in_run = true;
      run_start = a;
    } else if (!clear && in_run) {
      in_run = false;
      if (a - run_start >= min_gap) separators.push_back((run_start + a) / 2);
    }
  }
  return separators;
}

std::vector<std::vector<std::string>> stream_cells(const std::vector<Row>& rows,
                                                   const std::vector<double>& separators) {
  std::vector<std::vector<std::string>> cells;
  for (const Row& row : rows) {
    std::vector<std::string> out(separators.size() + 1);
    for (const TextChunk& c : row.chunks) {
      double mid = c.bbox.mid_x();
      auto col = static_cast<std::size_t>(std::lower_bound(separators.begin(), separators.end(), mid) -
                                          separators.begin());
      std::string& cell = out[col];
      if (!cell.empty()) cell.push_back(' ');
      cell += c.text;
    }
    cells.push_back(std::move(out));
  }
  return cells;
}

void check_area(const PageRect& area, const PageDims& dims) {
  constexpr double kSlack = 0.01;
  if (!area.valid()) throw InvalidArgument("area must satisfy 0 <= top <= bottom and 0 <= left <= right");
  if (area.right > dims.width + kSlack || area.bottom > dims.height + kSlack) {
    throw InvalidArgument("area extends past the page");
  }
}

RawTable extract_stream(const PageContent& content, const PageRect& area,
                        const std::optional<std::vector<double>>& columns, const StreamParams& params) {
  check_area(area, content.dims);
  RawTable table;
  table.page = content.page;
  table.area = area;
  table.method = Method::kStream;

  std::vector<Row> rows = group_rows(merge_words(content.elements, params), area);
  if (rows.empty()) return table;

  std::vector<double> separators;
  if (columns) {
    for (std::size_t i = 0; i < columns->size(); ++i) {
      double x = (*columns)[i];
      if (x < area.left || x > area.right) throw InvalidArgument("column position outside the area");
      if (i > 0 && !(x > (*columns)[i - 1])) throw InvalidArgument("column positions must be strictly ascending");
    }
    separators = *columns;
  } else {
    separators = infer_columns(rows, params);
  }
  table.cells = stream_cells(rows, separators);
  return table;
}

}  // namespace pdftables
