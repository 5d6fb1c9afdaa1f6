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

#include "pdftables/pdf/font.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>

#include "pdftables/pdf/encoding.hpp"
#include "pdftables/pdf/lexer.hpp"

namespace pdftables::pdf {

namespace {

#include "standard_fonts.inc"

std::uint32_t bytes_to_code(std::string_view b) {
  std::uint32_t v = 0;
  for (char c : b) v = (v << 8) | static_cast<unsigned char>(c);
  return v;
}

std::string utf16be_to_utf8(std::string_view b) {
  std::string out;
  for (std::size_t i = 0; i + 1 < b.size(); i += 2) {
    char32_t u = (static_cast<unsigned char>(b[i]) << 8) | static_cast<unsigned char>(b[i + 1]);
    if (u >= 0xD800 && u < 0xDC00 && i + 3 < b.size()) {
      char32_t lo = (static_cast<unsigned char>(b[i + 2]) << 8) | static_cast<unsigned char>(b[i + 3]);
      u = 0x10000 + ((u - 0xD800) << 10) + (lo - 0xDC00);
      i += 2;
    }
    append_utf8(out, u);
  }
  if (b.size() == 1) append_utf8(out, static_cast<unsigned char>(b[0]));
  return out;
}

// Increments the last UTF-16 unit of a bfrange destination.
std::string offset_destination(std::string dst, std::uint32_t delta) {
  if (dst.empty()) return dst;
  std::size_t n = dst.size();
  std::uint32_t last = static_cast<unsigned char>(dst[n - 1]);
  std::uint32_t prev = n >= 2 ? static_cast<unsigned char>(dst[n - 2]) : 0;
  std::uint32_t v = ((prev << 8) | last) + delta;
  if (n >= 2) dst[n - 2] = static_cast<char>((v >> 8) & 0xff);
  dst[n - 1] = static_cast<char>(v & 0xff);
  return dst;
}

std::string strip_subset_prefix(const std::string& name) {
  if (name.size() > 7 && name[6] == '+') {
    bool tag = true;
    for (int i = 0; i < 6; ++i) tag = tag && name[static_cast<std::size_t>(i)] >= 'A' && name[static_cast<std::size_t>(i)] <= 'Z';
    if (tag) return name.substr(7);
  }
  return name;
}

const StdFontEntry* find_standard(std::string_view name) {
  for (const StdFontEntry& e : kStandardFonts) {
    if (name == e.name) return &e;
  }
  return nullptr;
}

}  // namespace

CMap CMap::identity() {
  CMap m;
  m.identity_ = true;
  m.ranges_.push_back({std::string("\x00\x00", 2), std::string("\xff\xff", 2)});
  return m;
}

CMap CMap::parse(std::string_view data) {
  CMap m;
  Lexer lex(data);
  using T = Token::Type;
  std::vector<Token> operands;
  while (true) {
    Token t = lex.next();
    if (t.type == T::kEof) break;
    if (t.type != T::kKeyword) {
      if (t.type == T::kArrayOpen) {
        // Arrays only appear inside bfrange; handled below.
        operands.push_back(t);
        continue;
      }
      operands.push_back(std::move(t));
      if (operands.size() > 64) operands.erase(operands.begin());
      continue;
    }
    const std::string& kw = t.text;
    if (kw == "begincodespacerange") {
      while (true) {
        Token lo = lex.next();
        if (lo.type != T::kHexString) break;
        Token hi = lex.next();
        m.ranges_.push_back({lo.text, hi.text});
      }
    } else if (kw == "beginbfchar") {
      while (true) {
        Token src = lex.next();
        if (src.type != T::kHexString && src.type != T::kString) break;
        Token dst = lex.next();
        if (dst.type == T::kName) {
          auto u = glyph_name_to_unicode(dst.text);
          std::string s;
          if (u) append_utf8(s, *u);
          m.text_[bytes_to_code(src.text)] = s;
        } else {
          m.text_[bytes_to_code(src.text)] = utf16be_to_utf8(dst.text);
        }
      }
    } else if (kw == "beginbfrange") {
      while (true) {
        Token lo = lex.next();
        if (lo.type != T::kHexString && lo.type != T::kString) break;
        Token hi = lex.next();
        Token dst = lex.next();
        std::uint32_t a = bytes_to_code(lo.text);
        std::uint32_t b = bytes_to_code(hi.text);
        if (b < a || b - a > 0xffff) continue;
        if (dst.type == T::kArrayOpen) {
          for (std::uint32_t c = a;; ++c) {
            Token item = lex.next();
            if (item.type == T::kArrayClose || item.type == T::kEof) break;
            if (c <= b) m.text_[c] = utf16be_to_utf8(item.text);
          }
        } else {
          for (std::uint32_t c = a; c <= b; ++c) {
            m.text_[c] = utf16be_to_utf8(offset_destination(dst.text, c - a));
          }
        }
      }
    } else if (kw == "begincidrange") {
      while (true) {
        Token lo = lex.next();
        if (lo.type != T::kHexString && lo.type != T::kString) break;
        Token hi = lex.next();
        Token cid = lex.next();
        m.cid_ranges_.push_back({bytes_to_code(lo.text), bytes_to_code(hi.text),
                                 static_cast<std::uint32_t>(cid.integer)});
      }
    } else if (kw == "begincidchar") {
      while (true) {
        Token src = lex.next();
        if (src.type != T::kHexString && src.type != T::kString) break;
        Token cid = lex.next();
        m.cids_[bytes_to_code(src.text)] = static_cast<std::uint32_t>(cid.integer);
      }
    } else if (kw == "usecmap") {
      if (!operands.empty() && operands.back().type == T::kName &&
          operands.back().text.find("Identity") != std::string::npos) {
        m.identity_ = true;
      }
    }
    operands.clear();
  }
  return m;
}

std::size_t CMap::code_length(std::string_view bytes, std::size_t pos) const {
  std::size_t remaining = bytes.size() - pos;
  for (std::size_t len = 1; len <= 4 && len <= remaining; ++len) {
    for (const Range& r : ranges_) {
      if (r.low.size() != len) continue;
      bool inside = true;
      for (std::size_t k = 0; k < len && inside; ++k) {
        auto b = static_cast<unsigned char>(bytes[pos + k]);
        inside = b >= static_cast<unsigned char>(r.low[k]) && b <= static_cast<unsigned char>(r.high[k]);
      }
      if (inside) return len;
    }
  }
  if (ranges_.empty()) return std::min<std::size_t>(2, remaining);
  // No range matched: consume the shortest declared length.
  std::size_t shortest = 4;
  for (const Range& r : ranges_) shortest = std::min(shortest, r.low.size());
  return std::max<std::size_t>(1, std::min(shortest, remaining));
}

std::optional<std::string> CMap::lookup_text(std::uint32_t code) const {
  auto it = text_.find(code);
  if (it == text_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t CMap::lookup_cid(std::uint32_t code) const {
  auto it = cids_.find(code);
  if (it != cids_.end()) return it->second;
  for (const CidRange& r : cid_ranges_) {
    if (code >= r.low && code <= r.high) return r.cid + (code - r.low);
  }
  return code;  // Identity and unknown CMaps
}

std::optional<double> StandardMetrics::width_of(char32_t unicode) const {
  const auto* e = static_cast<const StdFontEntry*>(table);
  if (!e) return std::nullopt;
  const StdWidth* begin = e->widths;
  const StdWidth* end = e->widths + e->count;
  auto it = std::lower_bound(begin, end, unicode,
                             [](const StdWidth& w, char32_t u) { return w.code < u; });
  if (it != end && it->code == unicode) return it->width;
  return std::nullopt;
}

std::optional<double> StandardMetrics::width_of_code(unsigned code) const {
  return width_of(static_cast<char32_t>(code));
}

std::optional<char32_t> StandardMetrics::unicode_of_code(unsigned code) const {
  if (code > 255) return std::nullopt;
  char32_t u = name == "Symbol" ? kSymbolUnicode[code] : kZapfDingbatsUnicode[code];
  if (u == 0) return std::nullopt;
  return u;
}

std::optional<StandardMetrics> standard_font_metrics(std::string_view base_font) {
  std::string name(base_font);
  // Common aliases used by office producers.
  static const std::pair<const char*, const char*> kAliases[] = {
      {"Arial", "Helvetica"},
      {"Arial,Bold", "Helvetica-Bold"},
      {"Arial-Bold", "Helvetica-Bold"},
      {"Arial-BoldMT", "Helvetica-Bold"},
      {"ArialMT", "Helvetica"},
      {"Arial,Italic", "Helvetica-Oblique"},
      {"Arial-ItalicMT", "Helvetica-Oblique"},
      {"TimesNewRoman", "Times-Roman"},
      {"TimesNewRomanPSMT", "Times-Roman"},
      {"TimesNewRoman,Bold", "Times-Bold"},
      {"TimesNewRomanPS-BoldMT", "Times-Bold"},
      {"CourierNew", "Courier"},
      {"CourierNewPSMT", "Courier"},
  };
  for (const auto& [from, to] : kAliases) {
    if (name == from) name = to;
  }
  const StdFontEntry* e = find_standard(name);
  if (!e) return std::nullopt;
  StandardMetrics m;
  m.name = e->name;
  m.ascent = e->ascent / 1000.0;
  m.descent = e->descent / 1000.0;
  m.symbolic = e->builtin_codes;
  m.table = e;
  return m;
}

std::shared_ptr<const Font> Font::fallback() {
  static const std::shared_ptr<const Font> f = [] {
    std::shared_ptr<Font> font(new Font());
    font->base_font_ = "Helvetica";
    font->standard_ = standard_font_metrics("Helvetica");
    const CodeTable& enc = win_ansi_encoding();
    for (unsigned c = 0; c < 256; ++c) {
      font->unicode_[c] = enc[c];
      if (auto w = font->standard_->width_of(enc[c])) {
        font->widths_[c] = *w;
        font->has_width_[c] = true;
      }
    }
    font->ascent_ = font->standard_->ascent;
    font->descent_ = font->standard_->descent;
    font->space_width_ = font->widths_[32] * 0.001;
    return std::shared_ptr<const Font>(font);
  }();
  return f;
}

std::shared_ptr<const Font> Font::load(const Document& doc, const Object& font_obj) {
  Object resolved = doc.resolve(font_obj);
  if (!resolved.is_dict()) return fallback();
  std::shared_ptr<Font> font(new Font());
  const Dict& dict = resolved.as_dict();
  Object base = doc.resolve(dict_get(dict, "BaseFont"));
  if (base.is_name()) font->base_font_ = strip_subset_prefix(base.as_name());
  Object to_unicode = doc.resolve(dict_get(dict, "ToUnicode"));
  if (to_unicode.is_stream()) {
    try {
      font->to_unicode_ = CMap::parse(doc.decode(to_unicode.as_stream()));
    } catch (const std::exception&) {
      font->to_unicode_.reset();
    }
  }
  if (dict_get(dict, "Subtype").is_name("Type0")) {
    font->load_composite(doc, dict);
  } else {
    font->load_simple(doc, dict);
  }
  if (font->ascent_ <= 0 || font->ascent_ > 2) font->ascent_ = 0.75;
  if (font->descent_ > 0) font->descent_ = -font->descent_;
  if (font->descent_ < -1) font->descent_ = -0.25;
  if (font->ascent_ - font->descent_ < 0.5) {
    font->ascent_ = 0.75;
    font->descent_ = -0.25;
  }
  if (font->space_width_ <= 0) font->space_width_ = 0.25;
  return font;
}

void Font::load_descriptor(const Document& doc, const Object& descriptor_obj) {
  Object fd = doc.resolve(descriptor_obj);
  if (!fd.is_dict()) return;
  Object asc = doc.resolve(fd.get("Ascent"));
  Object desc = doc.resolve(fd.get("Descent"));
  if (asc.is_number() && asc.as_number() != 0) ascent_ = asc.as_number() / 1000.0;
  if (desc.is_number() && desc.as_number() != 0) descent_ = desc.as_number() / 1000.0;
  Object mw = doc.resolve(fd.get("MissingWidth"));
  if (mw.is_number()) missing_width_ = mw.as_number();
}

void Font::load_simple(const Document& doc, const Dict& dict) {
  bool type3 = dict_get(dict, "Subtype").is_name("Type3");
  if (type3) {
    Object fm = doc.resolve(dict_get(dict, "FontMatrix"));
    if (fm.is_array() && !fm.as_array().empty() && fm.as_array()[0].is_number()) {
      width_scale_ = std::abs(fm.as_array()[0].as_number());
    }
  }
  standard_ = standard_font_metrics(base_font_);
  if (standard_) {
    ascent_ = standard_->ascent;
    descent_ = standard_->descent;
  }
  load_descriptor(doc, dict_get(dict, "FontDescriptor"));

  // Base encoding: symbolic core fonts use their built-in table, TrueType
  // fonts default to WinAnsi, everything else to StandardEncoding.
  const CodeTable* base_table = dict_get(dict, "Subtype").is_name("TrueType")
                                    ? &win_ansi_encoding()
                                    : &standard_encoding();
  bool builtin_symbolic = standard_ && standard_->symbolic;
  Object enc = doc.resolve(dict_get(dict, "Encoding"));
  auto table_by_name = [](const std::string& n) -> const CodeTable* {
    if (n == "WinAnsiEncoding") return &win_ansi_encoding();
    if (n == "MacRomanEncoding") return &mac_roman_encoding();
    if (n == "StandardEncoding") return &standard_encoding();
    return nullptr;
  };
  Object differences;
  if (enc.is_name()) {
    if (const CodeTable* t = table_by_name(enc.as_name())) {
      base_table = t;
      builtin_symbolic = false;
    }
  } else if (enc.is_dict()) {
    Object be = doc.resolve(enc.get("BaseEncoding"));
    if (be.is_name()) {
      if (const CodeTable* t = table_by_name(be.as_name())) {
        base_table = t;
        builtin_symbolic = false;
      }
    }
    differences = doc.resolve(enc.get("Differences"));
  }
  for (unsigned c = 0; c < 256; ++c) {
    if (builtin_symbolic) {
      unicode_[c] = standard_->unicode_of_code(c).value_or(0);
    } else {
      unicode_[c] = (*base_table)[c];
    }
  }
  if (differences.is_array()) {
    std::int64_t code = 0;
    for (const Object& item : differences.as_array()) {
      if (item.is_number()) {
        code = item.as_int();
      } else if (item.is_name()) {
        if (code >= 0 && code < 256) {
          auto u = glyph_name_to_unicode(item.as_name());
          unicode_[static_cast<std::size_t>(code)] = u.value_or(0);
        }
        ++code;
      }
    }
  }

  Object widths = doc.resolve(dict_get(dict, "Widths"));
  Object first_char = doc.resolve(dict_get(dict, "FirstChar"));
  if (widths.is_array()) {
    std::int64_t first = first_char.is_number() ? first_char.as_int() : 0;
    const Array& arr = widths.as_array();
    for (std::size_t i = 0; i < arr.size(); ++i) {
      std::int64_t c = first + static_cast<std::int64_t>(i);
      if (c < 0 || c > 255) continue;
      Object w = doc.resolve(arr[i]);
      if (!w.is_number()) continue;
      widths_[static_cast<std::size_t>(c)] = w.as_number();
      has_width_[static_cast<std::size_t>(c)] = true;
    }
  }
  if (standard_) {
    for (unsigned c = 0; c < 256; ++c) {
      if (has_width_[c]) continue;
      std::optional<double> w = standard_->symbolic ? standard_->width_of_code(c)
                                                    : standard_->width_of(unicode_[c]);
      if (w) {
        widths_[c] = *w;
        has_width_[c] = true;
      }
    }
  }

  if (has_width_[32] && widths_[32] > 0) {
    space_width_ = widths_[32] * width_scale_;
  } else {
    double sum = 0;
    int n = 0;
    for (unsigned c = 0; c < 256; ++c) {
      if (has_width_[c] && widths_[c] > 0) {
        sum += widths_[c];
        ++n;
      }
    }
    // Roughly half an average glyph, the usual width of a space.
    space_width_ = n > 0 ? 0.5 * (sum / n) * width_scale_ : 0.25;
  }
}

void Font::load_composite(const Document& doc, const Dict& dict) {
  composite_ = true;
  Object enc = doc.resolve(dict_get(dict, "Encoding"));
  if (enc.is_stream()) {
    try {
      encoding_ = CMap::parse(doc.decode(enc.as_stream()));
    } catch (const std::exception&) {
      encoding_ = CMap::identity();
    }
    if (encoding_.empty()) encoding_ = CMap::identity();
  } else {
    encoding_ = CMap::identity();
    if (enc.is_name() && enc.as_name().find("UCS2") != std::string::npos) cid_is_unicode_ = true;
  }

  Object descendants = doc.resolve(dict_get(dict, "DescendantFonts"));
  Object cid_font;
  if (descendants.is_array() && !descendants.as_array().empty()) {
    cid_font = doc.resolve(descendants.as_array()[0]);
  }
  if (cid_font.is_dict()) {
    load_descriptor(doc, cid_font.get("FontDescriptor"));
    Object dw = doc.resolve(cid_font.get("DW"));
    default_width_ = dw.is_number() ? dw.as_number() : 1000.0;
    Object w = doc.resolve(cid_font.get("W"));
    if (w.is_array()) {
      const Array& arr = w.as_array();
      std::size_t i = 0;
      while (i < arr.size()) {
        Object a = doc.resolve(arr[i]);
        if (!a.is_number() || i + 1 >= arr.size()) break;
        Object b = doc.resolve(arr[i + 1]);
        if (b.is_array()) {
          auto c = static_cast<std::uint32_t>(a.as_int());
          for (const Object& wv : b.as_array()) {
            Object v = doc.resolve(wv);
            if (v.is_number()) cid_widths_[c] = v.as_number();
            ++c;
          }
          i += 2;
        } else if (i + 2 < arr.size()) {
          Object wv = doc.resolve(arr[i + 2]);
          auto lo = static_cast<std::uint32_t>(a.as_int());
          auto hi = static_cast<std::uint32_t>(b.as_int());
          if (wv.is_number() && hi >= lo && hi - lo < 0x10000) {
            for (std::uint32_t c = lo; c <= hi; ++c) cid_widths_[c] = wv.as_number();
          }
          i += 3;
        } else {
          break;
        }
      }
    }
    Object info = doc.resolve(cid_font.get("CIDSystemInfo"));
    Object ordering = doc.resolve(info.get("Ordering"));
    if (ordering.is_string() && ordering.as_string() == "UCS") cid_is_unicode_ = true;
  }

  // Space width: any code whose text is a plain space.
  space_width_ = 0;
  if (to_unicode_) {
    for (std::uint32_t code : {0x20u, 0x0003u, 0x0001u}) {
      auto t = to_unicode_->lookup_text(code);
      if (t && *t == " ") {
        std::uint32_t cid = encoding_.lookup_cid(code);
        auto it = cid_widths_.find(cid);
        space_width_ = (it != cid_widths_.end() ? it->second : default_width_) * width_scale_;
        break;
      }
    }
  }
  if (space_width_ <= 0) {
    double sum = 0;
    for (const auto& [cid, width] : cid_widths_) sum += width;
    double avg = cid_widths_.empty() ? default_width_ : sum / static_cast<double>(cid_widths_.size());
    space_width_ = 0.5 * avg * width_scale_;
  }
}

std::vector<Font::Glyph> Font::decode(std::string_view bytes) const {
  std::vector<Glyph> out;
  std::size_t pos = 0;
  while (pos < bytes.size()) {
    Glyph g;
    if (composite_) {
      g.byte_length = encoding_.code_length(bytes, pos);
      g.code = bytes_to_code(bytes.substr(pos, g.byte_length));
      std::uint32_t cid = encoding_.lookup_cid(g.code);
      auto it = cid_widths_.find(cid);
      g.width = (it != cid_widths_.end() ? it->second : default_width_) * width_scale_;
      std::optional<std::string> text;
      if (to_unicode_) text = to_unicode_->lookup_text(g.code);
      if (!text && cid_is_unicode_) {
        std::string s;
        append_utf8(s, cid);
        text = s;
      }
      g.text = text.value_or("\xEF\xBF\xBD");
    } else {
      g.byte_length = 1;
      g.code = static_cast<unsigned char>(bytes[pos]);
      double w = has_width_[g.code] ? widths_[g.code] : missing_width_;
      g.width = w * width_scale_;
      std::optional<std::string> text;
      if (to_unicode_) text = to_unicode_->lookup_text(g.code);
      if (!text) {
        char32_t u = unicode_[g.code];
        if (u != 0) {
          std::string s;
          append_utf8(s, u);
          text = s;
        }
      }
      g.text = text.value_or("\xEF\xBF\xBD");
    }
    pos += g.byte_length;
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace pdftables::pdf
