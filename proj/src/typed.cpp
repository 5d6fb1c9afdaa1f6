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

#include "pdftables/typed.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <set>

#include "pdftables/error.hpp"

namespace pdftables {
namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    char x = a[i], y = b[i];
    if (x >= 'a' && x <= 'z') x = static_cast<char>(x - 'a' + 'A');
    if (y >= 'a' && y <= 'z') y = static_cast<char>(y - 'a' + 'A');
    if (x != y) return false;
  }
  return true;
}

std::string quote_field(const std::string& field, char delimiter) {
  bool needs = field.find_first_of(std::string{delimiter, '"', '\r', '\n'}) != std::string::npos;
  if (!needs) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

nlohmann::ordered_json typed_value(const std::string& cell, ColumnType type) {
  if (cell.empty()) return nullptr;
  switch (type) {
    case ColumnType::kBoolean:
      return *parse_boolean(cell);
    case ColumnType::kNumber: {
      double v = *parse_number(cell);
      if (std::nearbyint(v) == v && std::abs(v) <= 9007199254740992.0) {
        return static_cast<std::int64_t>(v);
      }
      return v;
    }
    default:
      return cell;
  }
}

}  // namespace

std::string_view column_type_name(ColumnType type) {
  switch (type) {
    case ColumnType::kBoolean:
      return "boolean";
    case ColumnType::kNumber:
      return "number";
    case ColumnType::kDate:
      return "date";
    case ColumnType::kString:
      return "string";
  }
  return "string";
}

std::optional<bool> parse_boolean(std::string_view s) {
  if (iequals(s, "TRUE")) return true;
  if (iequals(s, "FALSE")) return false;
  return std::nullopt;
}

std::optional<double> parse_number(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  std::size_t int_digits = 0, frac_digits = 0;
  while (i < s.size() && is_digit(s[i])) ++i, ++int_digits;
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && is_digit(s[i])) ++i, ++frac_digits;
  }
  if (int_digits + frac_digits == 0) return std::nullopt;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    std::size_t exp_digits = 0;
    while (i < s.size() && is_digit(s[i])) ++i, ++exp_digits;
    if (exp_digits == 0) return std::nullopt;
  }
  if (i != s.size()) return std::nullopt;
  std::string_view body = s[0] == '+' ? s.substr(1) : s;
  double value = 0;
  auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
  if (ec == std::errc::result_out_of_range) {
    // Overflow or underflow still reads as a number.
    return body[0] == '-' ? -HUGE_VAL : HUGE_VAL;
  }
  if (ec != std::errc() || ptr != body.data() + body.size()) return std::nullopt;
  return value;
}

bool is_iso_date(std::string_view s) {
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
  for (std::size_t i : {0, 1, 2, 3, 5, 6, 8, 9}) {
    if (!is_digit(s[i])) return false;
  }
  int year = (s[0] - '0') * 1000 + (s[1] - '0') * 100 + (s[2] - '0') * 10 + (s[3] - '0');
  int month = (s[5] - '0') * 10 + (s[6] - '0');
  int day = (s[8] - '0') * 10 + (s[9] - '0');
  if (month < 1 || month > 12 || day < 1) return false;
  static const int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  bool leap = (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
  int limit = kDays[month - 1] + (month == 2 && leap ? 1 : 0);
  return day <= limit;
}

HeaderedRows apply_header(const RawTable& raw, bool col_names) {
  HeaderedRows out;
  std::size_t cols = raw.n_cols();
  if (raw.cells.empty()) return out;
  std::size_t first_data = 0;
  if (col_names) {
    std::map<std::string, int> seen;
    std::set<std::string> taken;
    for (std::size_t c = 0; c < cols; ++c) {
      std::string name = raw.cells[0][c];
      if (name.empty()) name = "X" + std::to_string(c + 1);
      out.names.push_back(name);
    }
    for (const std::string& n : out.names) taken.insert(n);
    for (std::string& n : out.names) {
      int count = ++seen[n];
      if (count == 1) continue;
      std::string candidate;
      do {
        candidate = n + "_" + std::to_string(count++);
      } while (taken.count(candidate));
      taken.insert(candidate);
      n = candidate;
    }
    first_data = 1;
  } else {
    for (std::size_t c = 0; c < cols; ++c) out.names.push_back("X" + std::to_string(c + 1));
  }
  out.rows.assign(raw.cells.begin() + static_cast<std::ptrdiff_t>(first_data), raw.cells.end());
  return out;
}

std::vector<ColumnType> infer_column_types(const std::vector<std::string>& names,
                                           const std::vector<std::vector<std::string>>& rows) {
  std::vector<ColumnType> types;
  for (std::size_t c = 0; c < names.size(); ++c) {
    bool any = false, boolean = true, number = true, date = true;
    for (const auto& row : rows) {
      if (c >= row.size() || row[c].empty()) continue;
      const std::string& cell = row[c];
      any = true;
      boolean = boolean && parse_boolean(cell).has_value();
      number = number && parse_number(cell).has_value();
      date = date && is_iso_date(cell);
    }
    if (!any) {
      types.push_back(ColumnType::kString);
    } else if (boolean) {
      types.push_back(ColumnType::kBoolean);
    } else if (number) {
      types.push_back(ColumnType::kNumber);
    } else if (date) {
      types.push_back(ColumnType::kDate);
    } else {
      types.push_back(ColumnType::kString);
    }
  }
  return types;
}

TypedTable make_typed(const RawTable& raw, bool col_names) {
  HeaderedRows h = apply_header(raw, col_names);
  TypedTable t;
  t.types = infer_column_types(h.names, h.rows);
  t.names = std::move(h.names);
  t.rows = std::move(h.rows);
  t.page = raw.page;
  t.area = raw.area;
  t.method = raw.method;
  return t;
}

Format parse_format(std::string_view name) {
  if (name == "csv") return Format::kCsv;
  if (name == "tsv") return Format::kTsv;
  if (name == "json") return Format::kJson;
  throw InvalidArgument("unknown format '" + std::string(name) + "' (expected csv, tsv or json)");
}

std::string_view format_extension(Format format) {
  switch (format) {
    case Format::kCsv:
      return "csv";
    case Format::kTsv:
      return "tsv";
    case Format::kJson:
      return "json";
  }
  return "csv";
}

nlohmann::ordered_json table_rows_json(const TypedTable& table) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < table.names.size(); ++c) {
      static const std::string kEmpty;
      const std::string& cell = c < row.size() ? row[c] : kEmpty;
      obj[table.names[c]] = typed_value(cell, table.types[c]);
    }
    out.push_back(std::move(obj));
  }
  return out;
}

std::string write_table(const TypedTable& table, Format format) {
  if (format == Format::kJson) return table_rows_json(table).dump() + "\n";
  char delimiter = format == Format::kTsv ? '\t' : ',';
  std::string out;
  auto write_record = [&](const std::vector<std::string>& fields) {
    for (std::size_t c = 0; c < table.names.size(); ++c) {
      if (c > 0) out.push_back(delimiter);
      if (c < fields.size()) out += quote_field(fields[c], delimiter);
    }
    out.push_back('\n');
  };
  write_record(table.names);
  for (const auto& row : table.rows) write_record(row);
  return out;
}

}  // namespace pdftables
