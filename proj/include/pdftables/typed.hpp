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

#include <json.hpp>

#include "pdftables/model.hpp"

namespace pdftables {

enum class ColumnType { kBoolean, kNumber, kDate, kString };

std::string_view column_type_name(ColumnType type);

struct TypedTable {
  std::vector<std::string> names;
  std::vector<ColumnType> types;
  // Cell text as extracted; typed values are derived on output. Empty
  // strings are missing values.
  std::vector<std::vector<std::string>> rows;
  int page = 1;
  PageRect area;
  Method method = Method::kStream;
};

struct HeaderedRows {
  std::vector<std::string> names;
  std::vector<std::vector<std::string>> rows;
};

// col_names=true takes names from the first row (blank names become "Xi",
// repeats get a "_2", "_3", ... suffix); false generates X1..Xn and keeps
// every row as data.
HeaderedRows apply_header(const RawTable& raw, bool col_names);

// Per column, over non-empty cells: boolean, then number, then ISO date;
// the first that parses every cell wins, otherwise (or when the column is
// empty) string.
std::vector<ColumnType> infer_column_types(const std::vector<std::string>& names,
                                           const std::vector<std::vector<std::string>>& rows);

TypedTable make_typed(const RawTable& raw, bool col_names);

// Cell parsers used by inference. Numbers use the C locale: optional sign,
// digits with at most one decimal point, optional exponent.
std::optional<bool> parse_boolean(std::string_view s);
std::optional<double> parse_number(std::string_view s);
bool is_iso_date(std::string_view s);

enum class Format { kCsv, kTsv, kJson };

// "csv", "tsv" or "json"; throws InvalidArgument otherwise.
Format parse_format(std::string_view name);
std::string_view format_extension(Format format);

// CSV/TSV: header line first, LF line endings, fields quoted when they
// contain the delimiter, a quote, CR or LF. JSON: an array of objects in
// column order; numbers and booleans unquoted, missing values null.
std::string write_table(const TypedTable& table, Format format);

nlohmann::ordered_json table_rows_json(const TypedTable& table);

}  // namespace pdftables
