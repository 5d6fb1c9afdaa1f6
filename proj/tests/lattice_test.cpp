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

#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pdftables/ingest.hpp"
#include "pdftables/lattice.hpp"

namespace pdftables {
namespace {

Ruling h(double y, double x0, double x1) { return {Orientation::kHorizontal, y, x0, x1}; }
Ruling v(double x, double y0, double y1) { return {Orientation::kVertical, x, y0, y1}; }

std::vector<Ruling> only(const std::vector<Ruling>& rs, Orientation o) {
  std::vector<Ruling> out;
  for (const Ruling& r : rs) {
    if (r.orientation == o) out.push_back(r);
  }
  return out;
}

PageContent load_page(const std::string& bytes, int page) {
  fixture::TempDir tmp;
  fixture::write_file(tmp.file("l.pdf"), bytes);
  return read_page_content(open_document(tmp.file("l.pdf")), page);
}

PageRect rect(const fixture::Rect& r) { return {r.top, r.left, r.bottom, r.right}; }

TEST(SnapRulingsTest, MergesCollinearPieces) {
  auto snapped = snap_rulings({h(100, 0, 50), h(101, 51, 100), h(200, 0, 100), v(10, 0, 50)}, 2);
  ASSERT_EQ(snapped.size(), 3u);
  auto hs = only(snapped, Orientation::kHorizontal);
  ASSERT_EQ(hs.size(), 2u);
  EXPECT_DOUBLE_EQ(hs[0].position, 100.5);
  EXPECT_DOUBLE_EQ(hs[0].start, 0);
  EXPECT_DOUBLE_EQ(hs[0].end, 100);
}

TEST(SnapRulingsTest, KeepsDistantPiecesApart) {
  auto snapped = snap_rulings({h(100, 0, 50), h(100, 60, 100), h(110, 0, 100)}, 2);
  EXPECT_EQ(snapped.size(), 3u);
}

TEST(SnapRulingsTest, IdempotentProperty) {
  std::mt19937 rng(29);
  std::uniform_real_distribution<double> pos(0, 300), len(1, 100);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Ruling> rs;
    for (int i = 0; i < 30; ++i) {
      double s = pos(rng);
      rs.push_back({coin(rng) ? Orientation::kHorizontal : Orientation::kVertical, pos(rng), s, s + len(rng)});
    }
    auto once = snap_rulings(rs, 2);
    auto twice = snap_rulings(once, 2);
    ASSERT_EQ(once.size(), twice.size());
    EXPECT_LE(once.size(), rs.size());
  }
}

TEST(FindCellsTest, TwoByTwo) {
  std::vector<Ruling> hs{h(0, 0, 100), h(50, 0, 100), h(100, 0, 100)};
  std::vector<Ruling> vs{v(0, 0, 100), v(50, 0, 100), v(100, 0, 100)};
  auto cells = find_cells(hs, vs, 2);
  ASSERT_EQ(cells.size(), 4u);
  EXPECT_EQ(cells[0], (PageRect{0, 0, 50, 50}));
  EXPECT_EQ(cells[3], (PageRect{50, 50, 100, 100}));
}

TEST(FindCellsTest, MergedTopRow) {
  std::vector<Ruling> hs{h(0, 0, 100), h(50, 0, 100), h(100, 0, 100)};
  std::vector<Ruling> vs{v(0, 0, 100), v(50, 50, 100), v(100, 0, 100)};
  auto cells = find_cells(hs, vs, 2);
  ASSERT_EQ(cells.size(), 3u);
  EXPECT_EQ(cells[0], (PageRect{0, 0, 50, 100}));
}

TEST(FindCellsTest, OuterBoxOnly) {
  auto cells = find_cells({h(0, 0, 100), h(100, 0, 100)}, {v(0, 0, 100), v(100, 0, 100)}, 2);
  ASSERT_EQ(cells.size(), 1u);
}

TEST(FindCellsTest, MatchesEnumerationOnGridsWithGaps) {
  // Complete grids with a few interior rulings removed or shortened; the
  // exhaustive enumeration is the reference.
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> step(10, 30);
  for (int trial = 0; trial < 200; ++trial) {
    int m = 1 + trial % 5, n = 1 + (trial / 5) % 5;
    std::vector<double> ys{20}, xs{20};
    for (int i = 0; i < m; ++i) ys.push_back(ys.back() + step(rng));
    for (int j = 0; j < n; ++j) xs.push_back(xs.back() + step(rng));
    std::vector<Ruling> hs, vs;
    std::bernoulli_distribution drop(0.2);
    for (std::size_t i = 0; i < ys.size(); ++i) {
      bool edge = i == 0 || i + 1 == ys.size();
      if (!edge && drop(rng)) {
        std::size_t cut = 1 + rng() % (xs.size() - 1);
        hs.push_back(h(ys[i], xs.front(), xs[cut]));
      } else {
        hs.push_back(h(ys[i], xs.front(), xs.back()));
      }
    }
    for (std::size_t j = 0; j < xs.size(); ++j) {
      bool edge = j == 0 || j + 1 == xs.size();
      if (!edge && drop(rng)) continue;
      vs.push_back(v(xs[j], ys.front(), ys.back()));
    }
    EXPECT_EQ(find_cells(hs, vs, 2), fixture::brute_force_cells(hs, vs, 2)) << "trial " << trial;
  }
}

TEST(ExtractLatticeTest, Mtcars) {
  auto fx = fixture::sample_fixture();
  auto tables = extract_lattice(load_page(fx.pdf, 1));
  ASSERT_EQ(tables.size(), 1u);
  EXPECT_EQ(tables[0].cells, fx.tables[0].cells);
  EXPECT_EQ(tables[0].method, Method::kLattice);
}

TEST(ExtractLatticeTest, IrisColumnFrameStacksLines) {
  auto fx = fixture::sample_fixture();
  auto tables = extract_lattice(load_page(fx.pdf, 2), rect(fx.tables[1].area));
  ASSERT_EQ(tables.size(), 1u);
  ASSERT_EQ(tables[0].n_rows(), 2u);
  ASSERT_EQ(tables[0].n_cols(), 5u);
  EXPECT_EQ(tables[0].cells[0][0], "Sepal.Length");
  EXPECT_EQ(tables[0].cells[1][0], "5.10\r4.90\r4.70\r4.60\r5.00");
  EXPECT_EQ(tables[0].cells[1][4], "setosa\rsetosa\rsetosa\rsetosa\rsetosa");
}

TEST(ExtractLatticeTest, BlankPageAndTwoTables) {
  fixture::PdfBuilder b;
  b.add_page();
  b.add_page();
  fixture::TableStyle s;
  s.rules = fixture::Rules::kGrid;
  auto t1 = fixture::place_table(b, 2, {{"a", "b"}, {"1", "2"}}, 100, 100, s);
  auto t2 = fixture::place_table(b, 2, {{"x", "y", "z"}, {"7", "8", "9"}}, 400, 100, s);
  std::string bytes = b.build();
  EXPECT_TRUE(extract_lattice(load_page(bytes, 1)).empty());
  auto tables = extract_lattice(load_page(bytes, 2));
  ASSERT_EQ(tables.size(), 2u);
  EXPECT_EQ(tables[0].cells, t1.cells);
  EXPECT_EQ(tables[1].cells, t2.cells);
}

TEST(ExtractLatticeTest, SpanningCellRepeatsNothing) {
  // A header cell spanning two columns sits in the first slot; the slot it
  // covers stays empty.
  fixture::PdfBuilder b;
  b.add_page();
  b.line(100, 100, 300, 100);
  b.line(100, 120, 300, 120);
  b.line(100, 140, 300, 140);
  b.line(100, 100, 100, 140);
  b.line(200, 120, 200, 140);
  b.line(300, 100, 300, 140);
  b.text(105, 114, "wide", 10);
  b.text(105, 134, "l", 10);
  b.text(205, 134, "r", 10);
  auto tables = extract_lattice(load_page(b.build(), 1));
  ASSERT_EQ(tables.size(), 1u);
  EXPECT_EQ(tables[0].cells, (std::vector<std::vector<std::string>>{{"wide", ""}, {"l", "r"}}));
}

TEST(ExtractLatticeTest, RandomGrids) {
  for (unsigned seed = 200; seed < 240; ++seed) {
    std::mt19937 rng(seed);
    fixture::PdfBuilder pdf;
    auto placed = fixture::random_table(rng, pdf, 1, fixture::Rules::kGrid);
    auto tables = extract_lattice(load_page(pdf.build(), 1), rect(placed.area));
    ASSERT_EQ(tables.size(), 1u) << "seed " << seed;
    EXPECT_EQ(tables[0].cells, placed.cells) << "seed " << seed;
  }
}

}  // namespace
}  // namespace pdftables
