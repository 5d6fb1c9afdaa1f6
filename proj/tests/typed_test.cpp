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

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "pdftables/error.hpp"
#include "pdftables/typed.hpp"

namespace pdftables {
namespace {

RawTable raw(std::vector<std::vector<std::string>> cells) {
  RawTable t;
  t.cells = std::move(cells);
  return t;
}

TEST(CellParsersTest, Booleans) {
  EXPECT_EQ(parse_boolean("TRUE"), true);
  EXPECT_EQ(parse_boolean("false"), false);
  EXPECT_FALSE(parse_boolean("T").has_value());
  EXPECT_FALSE(parse_boolean("yes").has_value());
}

TEST(CellParsersTest, Numbers) {
  EXPECT_EQ(parse_number("21"), 21);
  EXPECT_EQ(parse_number("-3.5"), -3.5);
  EXPECT_EQ(parse_number("+.5"), 0.5);
  EXPECT_EQ(parse_number("1e3"), 1000);
  EXPECT_EQ(parse_number("5.10"), 5.1);
  for (const char* bad : {"", "1,5", "1.2.3", "e5", "0x10", "inf", "nan", "1 2", " 1", "-", "."}) {
    EXPECT_FALSE(parse_number(bad).has_value()) << bad;
  }
}

TEST(CellParsersTest, Dates) {
  EXPECT_TRUE(is_iso_date("2020-02-29"));
  EXPECT_FALSE(is_iso_date("2021-02-29"));
  EXPECT_FALSE(is_iso_date("2021-13-01"));
  EXPECT_FALSE(is_iso_date("2021-1-01"));
}

TEST(HeaderTest, NamesFromFirstRow) {
  auto h = apply_header(raw({{"a", "", "a", "a"}, {"1", "2", "3", "4"}}), true);
  EXPECT_EQ(h.names, (std::vector<std::string>{"a", "X2", "a_2", "a_3"}));
  EXPECT_EQ(h.rows.size(), 1u);
  auto g = apply_header(raw({{"a", "b"}, {"1", "2"}}), false);
  EXPECT_EQ(g.names, (std::vector<std::string>{"X1", "X2"}));
  EXPECT_EQ(g.rows.size(), 2u);
}

TEST(TypeInferenceTest, Ladder) {
  auto t = make_typed(raw({{"flag", "n", "d", "s", "blank", "mixed"},
                           {"TRUE", "1", "2021-01-02", "VC", "", "1"},
                           {"FALSE", "2.5", "2021-03-04", "OJ", "", "2021-01-01"},
                           {"", "", "", "", "", "x"}}),
                      true);
  EXPECT_EQ(t.types, (std::vector<ColumnType>{ColumnType::kBoolean, ColumnType::kNumber, ColumnType::kDate,
                                              ColumnType::kString, ColumnType::kString, ColumnType::kString}));
}

TEST(TypeInferenceTest, OneBadCellDemotes) {
  auto t = make_typed(raw({{"x"}, {"1"}, {"2"}, {"3a"}}), true);
  EXPECT_EQ(t.types[0], ColumnType::kString);
}

TEST(TypeInferenceTest, RowPermutationInvariant) {
  std::mt19937 rng(41);
  const char* pool[] = {"1", "2.5", "TRUE", "x", "", "2021-05-06", "-7"};
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::vector<std::string>> rows(6, std::vector<std::string>(3));
    for (auto& r : rows) {
      for (auto& c : r) c = pool[rng() % 7];
    }
    std::vector<std::string> names{"a", "b", "c"};
    auto types = infer_column_types(names, rows);
    std::shuffle(rows.begin(), rows.end(), rng);
    EXPECT_EQ(infer_column_types(names, rows), types);
  }
}

TEST(WriteTableTest, CsvQuoting) {
  auto t = make_typed(raw({{"name", "note"}, {"a\"b", "x,y"}, {"line\rbreak", "plain"}}), true);
  std::string csv = write_table(t, Format::kCsv);
  EXPECT_EQ(csv, "name,note\n\"a\"\"b\",\"x,y\"\n\"line\rbreak\",plain\n");
  std::string tsv = write_table(t, Format::kTsv);
  EXPECT_EQ(tsv, "name\tnote\n\"a\"\"b\"\tx,y\n\"line\rbreak\"\tplain\n");
}

TEST(WriteTableTest, CsvRoundTripProperty) {
  std::mt19937 rng(43);
  const std::string alphabet = "ab,\"\r\n\t 1";
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::vector<std::string>> cells(1 + rng() % 5, std::vector<std::string>(1 + rng() % 4));
    for (auto& r : cells) {
      for (auto& c : r) {
        int n = rng() % 6;
        for (int i = 0; i < n; ++i) c.push_back(alphabet[rng() % alphabet.size()]);
      }
    }
    auto t = make_typed(raw(cells), false);
    for (Format f : {Format::kCsv, Format::kTsv}) {
      auto parsed = fixture::parse_delimited(write_table(t, f), f == Format::kCsv ? ',' : '\t');
      ASSERT_EQ(parsed.size(), cells.size() + 1);
      EXPECT_EQ(parsed[0], t.names);
      EXPECT_TRUE(std::equal(cells.begin(), cells.end(), parsed.begin() + 1));
    }
  }
}

TEST(WriteTableTest, JsonValues) {
  auto t = make_typed(raw({{"n", "b", "s", "d"}, {"21", "TRUE", "x", "2021-01-02"}, {"2.5", "", "", ""}}), true);
  EXPECT_EQ(write_table(t, Format::kJson),
            "[{\"n\":21,\"b\":true,\"s\":\"x\",\"d\":\"2021-01-02\"},{\"n\":2.5,\"b\":null,\"s\":null,\"d\":null}]\n");
}

TEST(FormatTest, Names) {
  EXPECT_EQ(parse_format("tsv"), Format::kTsv);
  EXPECT_EQ(format_extension(Format::kJson), "json");
  EXPECT_THROW(parse_format("xlsx"), InvalidArgument);
}

}  // namespace
}  // namespace pdftables
