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

#include "fixtures.hpp"

#include <algorithm>

namespace fixture {

PlacedTable place_table(PdfBuilder& pdf, int page, const Grid& cells, double top, double left,
                        const TableStyle& style) {
  PlacedTable out;
  out.page = page;
  out.cells = cells;
  out.rules = style.rules;
  const std::size_t rows = cells.size();
  const std::size_t cols = cells.front().size();
  const double fs = style.font_size;

  std::vector<double> widths(cols, 0);
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < cols; ++c) widths[c] = std::max(widths[c], helvetica_width(row[c], fs));
  }
  auto right_aligned = [&](std::size_t c) { return c < style.right_align.size() && style.right_align[c]; };
  auto gutter = [&](std::size_t c) { return c < style.gutters.size() ? style.gutters[c] : 3 * 0.278 * fs; };

  // Text extents per column.
  std::vector<double> text_left(cols);
  std::vector<double> edges;  // grid x edges for ruled styles
  if (style.rules == Rules::kGrid) {
    double x = left;
    edges.push_back(x);
    for (std::size_t c = 0; c < cols; ++c) {
      text_left[c] = x + style.padding;
      x += widths[c] + 2 * style.padding;
      edges.push_back(x);
    }
    for (std::size_t c = 0; c + 1 < cols; ++c) {
      out.gutter_centers.push_back(edges[c + 1]);
    }
  } else {
    double x = left + (style.rules == Rules::kColumns ? style.padding : 0);
    for (std::size_t c = 0; c < cols; ++c) {
      text_left[c] = x;
      x += widths[c];
      if (c + 1 < cols) {
        out.gutter_centers.push_back(x + gutter(c) / 2);
        x += gutter(c);
      }
    }
  }

  const double text_height = (kHelveticaAscent + kHelveticaDescent) * fs;
  for (std::size_t r = 0; r < rows; ++r) {
    double row_top = top + r * style.row_height;
    double baseline = row_top + (style.row_height - text_height) / 2 + kHelveticaAscent * fs;
    for (std::size_t c = 0; c < cols; ++c) {
      const std::string& s = cells[r][c];
      if (s.empty()) continue;
      double x = right_aligned(c) ? text_left[c] + widths[c] - helvetica_width(s, fs) : text_left[c];
      pdf.text(x, baseline, s, fs);
    }
  }

  double bottom = top + rows * style.row_height;
  double right = 0;
  if (style.rules == Rules::kGrid) {
    right = edges.back();
    for (std::size_t r = 0; r <= rows; ++r) pdf.line(left, top + r * style.row_height, right, top + r * style.row_height);
    for (double x : edges) pdf.line(x, top, x, bottom);
  } else if (style.rules == Rules::kColumns) {
    right = text_left.back() + widths.back() + style.padding;
    pdf.stroke_rect(top, left, bottom, right);
    for (double x : out.gutter_centers) pdf.line(x, top, x, bottom);
    pdf.line(left, top + style.row_height, right, top + style.row_height);
  } else {
    right = text_left.back() + widths.back();
  }
  out.area = Rect{top - 2, left - 2, bottom + 2, right + 2};
  return out;
}

SampleFixture sample_fixture() {
  SampleFixture fx;
  PdfBuilder pdf;

  pdf.add_page();
  Grid mtcars = {
      {"model", "mpg", "cyl", "disp", "hp", "drat", "wt", "qsec", "vs", "am", "gear", "carb"},
      {"Mazda RX4", "21", "6", "160", "110", "3.9", "2.62", "16.46", "0", "1", "4", "4"},
      {"Mazda RX4 Wag", "21", "6", "160", "110", "3.9", "2.875", "17.02", "0", "1", "4", "4"},
      {"Datsun 710", "22.8", "4", "108", "93", "3.85", "2.32", "18.61", "1", "1", "4", "1"},
      {"Hornet 4 Drive", "21.4", "6", "258", "110", "3.08", "3.215", "19.44", "1", "0", "3", "1"},
      {"Hornet Sportabout", "18.7", "8", "360", "175", "3.15", "3.44", "17.02", "0", "0", "3", "2"},
  };
  TableStyle grid;
  grid.rules = Rules::kGrid;
  grid.right_align.assign(12, true);
  grid.right_align[0] = false;
  fx.tables.push_back(place_table(pdf, 1, mtcars, 72, 60, grid));

  pdf.add_page();
  Grid setosa = {
      {"Sepal.Length", "Sepal.Width", "Petal.Length", "Petal.Width", "Species"},
      {"5.10", "3.50", "1.40", "0.20", "setosa"},
      {"4.90", "3.00", "1.40", "0.20", "setosa"},
      {"4.70", "3.20", "1.30", "0.20", "setosa"},
      {"4.60", "3.10", "1.50", "0.20", "setosa"},
      {"5.00", "3.60", "1.40", "0.20", "setosa"},
  };
  Grid virginica = {
      {"Sepal.Length", "Sepal.Width", "Petal.Length", "Petal.Width", "Species"},
      {"6.70", "3.00", "5.20", "2.30", "virginica"},
      {"6.30", "2.50", "5.00", "1.90", "virginica"},
      {"6.50", "3.00", "5.20", "2.00", "virginica"},
      {"6.20", "3.40", "5.40", "2.30", "virginica"},
      {"5.90", "3.00", "5.10", "1.80", "virginica"},
  };
  TableStyle iris;
  iris.rules = Rules::kColumns;
  iris.row_height = 19;
  iris.padding = 6;
  iris.gutters.assign(4, 18);
  iris.right_align = {true, true, true, true, false};
  fx.tables.push_back(place_table(pdf, 2, setosa, 62, 127, iris));
  TableStyle plain = iris;
  plain.rules = Rules::kNone;
  plain.row_height = 19;
  fx.tables.push_back(place_table(pdf, 2, virginica, 392, 133, plain));

  pdf.add_page();
  Grid tooth = {
      {"len", "supp", "dose"}, {"4.2", "VC", "0.5"},  {"11.5", "VC", "0.5"},
      {"7.3", "VC", "0.5"},    {"5.8", "VC", "0.5"},  {"6.4", "VC", "0.5"},
  };
  TableStyle tg = grid;
  tg.right_align = {true, false, true};
  fx.tables.push_back(place_table(pdf, 3, tooth, 90, 90, tg));

  fx.pdf = pdf.build();
  return fx;
}

std::string random_word(std::mt19937& rng, int min_len, int max_len) {
  static const char kAlnum[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789";
  std::uniform_int_distribution<int> len(min_len, max_len);
  std::uniform_int_distribution<int> ch(0, 61);
  std::string s;
  int n = len(rng);
  for (int i = 0; i < n; ++i) s.push_back(kAlnum[ch(rng)]);
  return s;
}

PlacedTable random_table(std::mt19937& rng, PdfBuilder& pdf, int page, Rules rules) {
  std::uniform_int_distribution<int> nrows(2, 10), ncols(2, 8);
  int rows = nrows(rng), cols = ncols(rng);
  Grid cells(rows, std::vector<std::string>(cols));
  for (auto& row : cells) {
    for (auto& cell : row) cell = random_word(rng, 1, 7);
  }
  TableStyle style;
  style.rules = rules;
  style.row_height = rules == Rules::kGrid ? 16 : 14;
  std::uniform_real_distribution<double> gutter(1.6, 3.5);
  std::bernoulli_distribution coin(0.5);
  const double space = 0.278 * style.font_size;
  for (int c = 0; c < cols; ++c) {
    style.gutters.push_back(gutter(rng) * space);
    style.right_align.push_back(coin(rng));
  }
  std::uniform_real_distribution<double> top(40, 200), left(30, 120);
  pdf.add_page(842, 595);
  return place_table(pdf, page, cells, top(rng), left(rng), style);
}

std::string random_text_document(std::mt19937& rng, int pages, std::vector<std::vector<std::string>>* lines) {
  PdfBuilder pdf;
  std::uniform_int_distribution<int> nlines(0, 6), nwords(1, 5);
  if (lines) lines->clear();
  for (int p = 0; p < pages; ++p) {
    pdf.add_page();
    std::vector<std::string> page_lines;
    int n = nlines(rng);
    for (int i = 0; i < n; ++i) {
      std::string line;
      double x = 72;
      double baseline = 100 + 24.0 * i;
      int words = nwords(rng);
      for (int w = 0; w < words; ++w) {
        std::string word = random_word(rng, 1, 9);
        pdf.text(x, baseline, word, 11);
        x += helvetica_width(word + " ", 11);
        if (!line.empty()) line.push_back(' ');
        line += word;
      }
      page_lines.push_back(line);
    }
    if (lines) lines->push_back(page_lines);
  }
  return pdf.build();
}

}  // namespace fixture
