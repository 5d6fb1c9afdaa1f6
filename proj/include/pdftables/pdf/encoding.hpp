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

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace pdftables::pdf {

// 256-entry code-to-Unicode table; 0 marks an unmapped code.
using CodeTable = std::array<char32_t, 256>;

const CodeTable& standard_encoding();
const CodeTable& win_ansi_encoding();
const CodeTable& mac_roman_encoding();
char32_t pdf_doc_encoding(unsigned char code);

// Maps an Adobe glyph name ("A", "eacute", "uni00E9", "u1F600") to Unicode.
std::optional<char32_t> glyph_name_to_unicode(std::string_view name);

void append_utf8(std::string& out, char32_t cp);

}  // namespace pdftables::pdf
