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
#include "pdftables/error.hpp"
#include "pdftables/ingest.hpp"
#include "pdftables/stream.hpp"

namespace pdftables {
namespace {

// One glyph element per character, laid out with Helvetica advances.
std::vector<TextElement> glyphs(const std::string& s, double left, double top, double size = 10) {
  std::vector<TextElement> out;
  double x = left;
  for (char c : s) {
    double w = fixture::helvetica_width(std::string(1, c), size);
    if (c != ' ') {
      out.push_back({PageRect{top, x, top + size, x + w}, std::string(1, c), size,
                     fixture::helvetica_width(" ", size)});
    }
    x += w;
  }
  return out;
}

PageContent page_of(std::vector<TextElement> elements) {
  PageContent c;
  c.dims = {612, 792};
  c.elements = std::move(elements);
  return c;
}

PageContent load_page(const std::string& bytes, int page) {
  fixture::TempDir tmp;
  fixture::write_file(tmp.file("s.pdf"), bytes);
  return read_page_content(open_document(tmp.file("s.pdf")), page);
}

PageRect rect(const fixture::Rect& r) { return {r.top, r.left, r.bottom, r.right}; }

TEST(MergeWordsTest, AdjacentGlyphsJoin) {
  auto chunks = merge_words(glyphs("21", 100, 100));
  ASSERT_EQ(chunks.size(), 1u);
  EXPECT_EQ(chunks[0].text, "21");
  EXPECT_EQ(chunks[0].elements.size(), 2u);
}

TEST(MergeWordsTest, SpaceGapSplits) {
  auto chunks = merge_words(glyphs("ab  cd", 100, 100));
  ASSERT_EQ(chunks.size(), 2u);
  EXPECT_EQ(chunks[0].text, "ab");
  EXPECT_EQ(chunks[1].text, "cd");
}

TEST(MergeWordsTest, ConservesElementsProperty) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<TextElement> all;
    for (int line = 0; line < 5; ++line) {
      std::string s;
      for (int w = 0; w < 4; ++w) s += fixture::random_word(rng, 1, 6) + "  ";
      auto g = glyphs(s, 50, 50 + 20 * line);
      all.insert(all.end(), g.begin(), g.end());
    }
    std::shuffle(all.begin(), all.end(), rng);
    auto chunks = merge_words(all);
    std::size_t n = 0;
    for (const auto& c : chunks) {
      n += c.elements.size();
      std::string joined;
      for (const auto& e : c.elements) joined += e.text;
      EXPECT_EQ(joined, c.text);
    }
    EXPECT_EQ(n, all.size());
    EXPECT_EQ(chunks.size(), 20u);
  }
}

TEST(InferColumnsTest, FixedPitchGutters) {
  // Three columns, 20 pt gutters.
  std::vector<TextElement> els;
  const double lefts[] = {100, 160, 220};
  for (int r = 0; r < 4; ++r) {
    for (double l : lefts) {
      auto g = glyphs("abcdefgh", l, 100 + 14 * r);  // about 40 pt wide
      els.insert(els.end(), g.begin(), g.end());
    }
  }
  auto rows = group_rows(merge_words(els), PageRect{0, 0, 792, 612});
  ASSERT_EQ(rows.size(), 4u);
  auto cols = infer_columns(rows);
  ASSERT_EQ(cols.size(), 2u);
  double w = fixture::helvetica_width("abcdefgh", 10);
  EXPECT_NEAR(cols[0], (100 + w + 160) / 2, 2);
  EXPECT_NEAR(cols[1], (160 + w + 220) / 2, 2);
}

TEST(InferColumnsTest, SingleColumnHasNoSeparators) {
  std::vector<TextElement> els;
  for (int r = 0; r < 3; ++r) {
    auto g = glyphs("word", 100, 100 + 14 * r);
    els.insert(els.end(), g.begin(), g.end());
  }
  EXPECT_TRUE(infer_columns(group_rows(merge_words(els), PageRect{0, 0, 792, 612})).empty());
}

TEST(StreamCellsTest, MidpointOnSeparatorGoesLeft) {
  Row row;
  row.chunks.push_back({PageRect{0, 0, 10, 20}, "a", {}});
  row.chunks.push_back({PageRect{0, 30, 10, 50}, "b", {}});
  row.chunks.push_back({PageRect{0, 55, 10, 60}, "c", {}});
  auto cells = stream_cells({row}, {10, 52});
  EXPECT_EQ(cells, (std::vector<std::vector<std::string>>{{"a", "b", "c"}}));
  auto joined = stream_cells({row}, {25});
  EXPECT_EQ(joined, (std::vector<std::vector<std::string>>{{"a", "b c"}}));
}

TEST(ExtractStreamTest, IrisBlock) {
  auto fx = fixture::sample_fixture();
  PageContent page = load_page(fx.pdf, 2);
  RawTable t = extract_stream(page, rect(fx.tables[1].area));
  EXPECT_EQ(t.n_rows(), 6u);
  EXPECT_EQ(t.n_cols(), 5u);
  EXPECT_EQ(t.cells, fx.tables[1].cells);
  EXPECT_EQ(t.method, Method::kStream);
  RawTable v = extract_stream(page, rect(fx.tables[2].area));
  EXPECT_EQ(v.cells.back(), (std::vector<std::string>{"5.90", "3.00", "5.10", "1.80", "virginica"}));
}

TEST(ExtractStreamTest, ExplicitColumnsMatchInferred) {
  auto fx = fixture::sample_fixture();
  PageContent page = load_page(fx.pdf, 2);
  const auto& v = fx.tables[2];
  RawTable inferred = extract_stream(page, rect(v.area));
  RawTable given = extract_stream(page, rect(v.area), v.gutter_centers);
  EXPECT_EQ(inferred.cells, given.cells);
  // One separator: everything right of it collapses into one column.
  RawTable two = extract_stream(page, rect(v.area), std::vector<double>{v.gutter_centers[0]});
  EXPECT_EQ(two.n_cols(), 2u);
  EXPECT_EQ(two.cells[1][1], "3.00 5.20 2.30 virginica");
}

TEST(ExtractStreamTest, AreaChecks) {
  PageContent page = page_of(glyphs("x", 10, 10));
  EXPECT_THROW(extract_stream(page, PageRect{10, 10, 5, 20}), InvalidArgument);
  EXPECT_THROW(extract_stream(page, PageRect{0, 0, 800, 100}), InvalidArgument);
  EXPECT_NO_THROW(extract_stream(page, PageRect{0, 0, 792, 612}));
}

TEST(ExtractStreamTest, TranslationInvariance) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    fixture::PdfBuilder pdf;
    auto placed = fixture::random_table(rng, pdf, 1, fixture::Rules::kNone);
    PageContent page = load_page(pdf.build(), 1);
    RawTable base = extract_stream(page, rect(placed.area));
    EXPECT_EQ(base.cells, placed.cells);
    PageContent moved = page;
    const double dx = 37.5, dy = 21.25;
    for (auto& e : moved.elements) e.bbox = {e.bbox.top + dy, e.bbox.left + dx, e.bbox.bottom + dy, e.bbox.right + dx};
    moved.dims = {page.dims.width + dx, page.dims.height + dy};
    PageRect a = rect(placed.area);
    RawTable shifted = extract_stream(moved, PageRect{a.top + dy, a.left + dx, a.bottom + dy, a.right + dx});
    EXPECT_EQ(shifted.cells, base.cells);
  }
}

TEST(ExtractStreamTest, RandomTablesWithRandomSeeds) {
  for (unsigned seed = 100; seed < 140; ++seed) {
    std::mt19937 rng(seed);
    fixture::PdfBuilder pdf;
    auto placed = fixture::random_table(rng, pdf, 1, fixture::Rules::kNone);
    RawTable t = extract_stream(load_page(pdf.build(), 1), rect(placed.area));
    EXPECT_EQ(t.cells, placed.cells) << "seed " << seed;
  }
}

}  // namespace
}  // namespace pdftables
