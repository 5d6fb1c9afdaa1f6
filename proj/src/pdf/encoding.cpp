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

#include "pdftables/pdf/encoding.hpp"

#include <algorithm>
#include <charconv>
#include <cstring>

namespace pdftables::pdf {

namespace {

#include "encoding_tables.inc"

CodeTable to_table(const char32_t (&src)[256]) {
  CodeTable t{};
  std::copy(std::begin(src), std::end(src), t.begin());
  return t;
}

bool parse_hex(std::string_view s, char32_t& out) {
  unsigned v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v, 16);
  if (ec != std::errc() || p != s.data() + s.size()) return false;
  out = v;
  return true;
}

}  // namespace

const CodeTable& standard_encoding() {
  static const CodeTable t = to_table(kStandardEncoding);
  return t;
}

const CodeTable& win_ansi_encoding() {
  static const CodeTable t = [] {
    CodeTable w = to_table(kWinAnsiEncoding);
    // Undefined WinAnsi slots render as bullets in practice.
    for (int c : {0x81, 0x8D, 0x8F, 0x90, 0x9D}) w[static_cast<std::size_t>(c)] = 0x2022;
    return w;
  }();
  return t;
}

const CodeTable& mac_roman_encoding() {
  static const CodeTable t = to_table(kMacRomanEncoding);
  return t;
}

char32_t pdf_doc_encoding(unsigned char code) {
  static constexpr char32_t kHigh[33] = {
      0x2022, 0x2020, 0x2021, 0x2026, 0x2014, 0x2013, 0x0192, 0x2044, 0x2039, 0x203A, 0x2212,
      0x2030, 0x201E, 0x201C, 0x201D, 0x2018, 0x2019, 0x201A, 0x2122, 0xFB01, 0xFB02, 0x0141,
      0x0152, 0x0160, 0x0178, 0x017D, 0x0131, 0x0142, 0x0153, 0x0161, 0x017E, 0xFFFD, 0x20AC};
  if (code >= 0x80 && code <= 0xA0) return kHigh[code - 0x80];
  return code;
}

std::optional<char32_t> glyph_name_to_unicode(std::string_view name) {
  // Suffixes such as ".sc" or ".alt" do not change the character.
  std::size_t dot = name.find('.');
  if (dot != std::string_view::npos && dot > 0) name = name.substr(0, dot);
  auto it = std::lower_bound(std::begin(kGlyphList), std::end(kGlyphList), name,
                             [](const GlyphEntry& e, std::string_view n) { return std::string_view(e.name) < n; });
  if (it != std::end(kGlyphList) && std::string_view(it->name) == name) return it->code;
  char32_t cp = 0;
  if (name.size() == 7 && name.substr(0, 3) == "uni" && parse_hex(name.substr(3), cp)) return cp;
  if (name.size() >= 5 && name.size() <= 7 && name[0] == 'u' && parse_hex(name.substr(1), cp)) {
    return cp;
  }
  return std::nullopt;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x110000) {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

}  // namespace pdftables::pdf
