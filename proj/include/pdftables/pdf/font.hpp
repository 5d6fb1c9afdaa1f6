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
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pdftables/pdf/document.hpp"
#include "pdftables/pdf/object.hpp"

namespace pdftables::pdf {

// Code-space and code-to-text mapping read from a CMap (embedded encoding
// CMaps and ToUnicode streams share the syntax).
class CMap {
 public:
  static CMap parse(std::string_view data);
  static CMap identity();

  struct Range {
    std::string low;
    std::string high;
  };

  // Splits the next code off `bytes` starting at `pos`; returns the byte
  // length consumed (at least 1).
  std::size_t code_length(std::string_view bytes, std::size_t pos) const;

  // ToUnicode lookups (UTF-8 result); empty optional when unmapped.
  std::optional<std::string> lookup_text(std::uint32_t code) const;
  // Encoding CMap lookups (code to CID).
  std::uint32_t lookup_cid(std::uint32_t code) const;

  bool empty() const { return ranges_.empty() && text_.empty() && cids_.empty(); }

 private:
  std::vector<Range> ranges_;
  std::map<std::uint32_t, std::string> text_;
  struct CidRange {
    std::uint32_t low, high, cid;
  };
  std::map<std::uint32_t, std::uint32_t> cids_;
  std::vector<CidRange> cid_ranges_;
  bool identity_ = false;
};

// Looks up core-font metrics by base font name. Widths are in 1/1000 em.
struct StandardMetrics {
  std::string name;
  double ascent = 0.75;
  double descent = -0.25;
  bool symbolic = false;
  std::optional<double> width_of(char32_t unicode) const;
  std::optional<double> width_of_code(unsigned code) const;
  std::optional<char32_t> unicode_of_code(unsigned code) const;
  const void* table = nullptr;
};
std::optional<StandardMetrics> standard_font_metrics(std::string_view base_font);

class Font {
 public:
  struct Glyph {
    std::uint32_t code = 0;
    std::size_t byte_length = 1;
    std::string text;     // UTF-8; U+FFFD when the font gives no mapping
    double width = 0;     // advance in text-space units (em fraction)
  };

  static std::shared_ptr<const Font> load(const Document& doc, const Object& font_dict);
  // A Helvetica stand-in used when a font resource is missing.
  static std::shared_ptr<const Font> fallback();

  std::vector<Glyph> decode(std::string_view bytes) const;

  double ascent() const { return ascent_; }
  double descent() const { return descent_; }
  double space_width() const { return space_width_; }
  bool composite() const { return composite_; }
  const std::string& base_font() const { return base_font_; }

 private:
  Font() = default;
  void load_simple(const Document& doc, const Dict& dict);
  void load_composite(const Document& doc, const Dict& dict);
  void load_descriptor(const Document& doc, const Object& descriptor);

  std::string base_font_;
  bool composite_ = false;
  // Simple fonts.
  std::array<char32_t, 256> unicode_{};
  std::array<double, 256> widths_{};
  std::array<bool, 256> has_width_{};
  double missing_width_ = 0;
  // Composite fonts.
  CMap encoding_;
  std::map<std::uint32_t, double> cid_widths_;
  double default_width_ = 1.0;
  bool cid_is_unicode_ = false;

  std::optional<CMap> to_unicode_;
  std::optional<StandardMetrics> standard_;
  double ascent_ = 0.75;
  double descent_ = -0.25;
  double space_width_ = 0.25;
  double width_scale_ = 0.001;
};

}  // namespace pdftables::pdf
