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

#include "pdftables/pdf/document.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "pdftables/error.hpp"
#include "pdftables/pdf/encoding.hpp"
#include "pdftables/pdf/filters.hpp"
#include "pdftables/pdf/lexer.hpp"

namespace pdftables::pdf {

namespace {

constexpr int kMaxPageTreeDepth = 64;

bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::array<double, 4> read_box(const Document& doc, const Object& box_obj) {
  Object box = doc.resolve(box_obj);
  if (!box.is_array() || box.as_array().size() < 4) return {0, 0, 612, 792};
  std::array<double, 4> v{};
  for (int i = 0; i < 4; ++i) {
    Object n = doc.resolve(box.as_array()[static_cast<std::size_t>(i)]);
    v[static_cast<std::size_t>(i)] = n.is_number() ? n.as_number() : 0.0;
  }
  return {std::min(v[0], v[2]), std::min(v[1], v[3]), std::max(v[0], v[2]), std::max(v[1], v[3])};
}

}  // namespace

std::shared_ptr<const Document> Document::open_file(const std::filesystem::path& path,
                                                    const std::string& password) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path.string());
  return open_bytes(std::move(buf).str(), password);
}

std::shared_ptr<const Document> Document::open_bytes(std::string bytes,
                                                     const std::string& password) {
  std::shared_ptr<Document> doc(new Document());
  doc->data_ = std::move(bytes);
  doc->load(password);
  return doc;
}

void Document::load(const std::string& password) {
  std::size_t header = data_.substr(0, 1024).find("%PDF-");
  if (header == std::string::npos) throw NotPdfError("not a PDF file (missing %PDF- header)");
  header_offset_ = header;
  std::size_t v_end = header + 5;
  while (v_end < data_.size() && (is_digit(data_[v_end]) || data_[v_end] == '.')) ++v_end;
  version_ = data_.substr(header + 5, v_end - header - 5);

  bool ok = false;
  try {
    std::size_t sx = data_.rfind("startxref");
    if (sx != std::string::npos) {
      Lexer lex(data_, sx + 9);
      Token t = lex.next();
      if (t.type == Token::Type::kInteger && t.integer >= 0) {
        read_xref_chain(static_cast<std::size_t>(t.integer));
        ok = trailer_.count("Root") > 0 && !xref_.empty();
      }
    }
  } catch (const Error&) {
    ok = false;
  }
  if (!ok) reconstruct_xref();

  const Object& enc = dict_get(trailer_, "Encrypt");
  if (!enc.is_null()) {
    if (enc.is_ref()) encrypt_ref_ = enc.as_ref();
    Object enc_dict = resolve(enc);
    if (!enc_dict.is_dict()) throw ParseError("malformed /Encrypt entry");
    std::string first_id;
    Object ids = resolve(dict_get(trailer_, "ID"));
    if (ids.is_array() && !ids.as_array().empty()) {
      Object id0 = resolve(ids.as_array()[0]);
      if (id0.is_string()) first_id = id0.as_string();
    }
    security_ = StandardSecurity::open(enc_dict.as_dict(), first_id, password);
    if (!security_) {
      throw PasswordError(password.empty() ? "document is encrypted; a password is required"
                                           : "incorrect password");
    }
    std::lock_guard lock(mutex_);
    cache_.clear();
    object_streams_.clear();
    if (encrypt_ref_) cache_[encrypt_ref_->num] = enc_dict;
  }

  try {
    build_page_list();
  } catch (const Error&) {
    pages_.clear();
  }
  if (pages_.empty() && ok) {
    // The xref looked healthy but the page tree did not resolve; rebuild.
    reconstruct_xref();
    {
      std::lock_guard lock(mutex_);
      cache_.clear();
      object_streams_.clear();
    }
    build_page_list();
  }
  if (pages_.empty()) throw ParseError("document has no pages");
}

void Document::read_xref_chain(std::size_t offset) {
  std::set<std::size_t> visited;
  std::vector<std::size_t> pending{offset};
  bool first = true;
  while (!pending.empty()) {
    std::size_t off = pending.back();
    pending.pop_back();
    if (!visited.insert(off).second) continue;
    Dict section_trailer;
    std::vector<std::size_t> next;
    if (!read_xref_section(off, section_trailer, next)) {
      if (first) throw ParseError("bad xref offset");
      continue;
    }
    for (auto& [k, v] : section_trailer) {
      if (k == "Prev" || k == "XRefStm") continue;
      if (first || !trailer_.count(k)) trailer_.insert_or_assign(k, v);
    }
    first = false;
    // Prev is pushed first so XRefStm (hybrid files) is read before it.
    for (auto it = next.rbegin(); it != next.rend(); ++it) pending.push_back(*it);
  }
}

bool Document::read_xref_section(std::size_t offset, Dict& trailer_out,
                                 std::vector<std::size_t>& next) {
  using T = Token::Type;
  for (std::size_t candidate : {offset, offset + header_offset_}) {
    if (candidate >= data_.size()) continue;
    Lexer lex(data_, candidate);
    Token t = lex.next();
    if (t.type == T::kKeyword && t.text == "xref") {
      while (true) {
        Token a = lex.next();
        if (a.type == T::kKeyword && a.text == "trailer") break;
        if (a.type != T::kInteger) return false;
        Token count = lex.next();
        if (count.type != T::kInteger) return false;
        for (std::int64_t i = 0; i < count.integer; ++i) {
          Token off = lex.next();
          Token gen = lex.next();
          Token kind = lex.next();
          if (off.type != T::kInteger || gen.type != T::kInteger || kind.type != T::kKeyword) {
            return false;
          }
          int num = static_cast<int>(a.integer + i);
          if (xref_.count(num)) continue;
          XrefEntry e;
          if (kind.text == "n") {
            e.type = XrefEntry::Type::kOffset;
            e.offset = static_cast<std::size_t>(off.integer);
            e.gen = static_cast<int>(gen.integer);
          }
          xref_[num] = e;
        }
      }
      Parser p(data_, lex.pos());
      Object tr = p.parse_object();
      if (!tr.is_dict()) return false;
      trailer_out = tr.as_dict();
      const Object& xs = dict_get(trailer_out, "XRefStm");
      if (xs.is_int()) next.push_back(static_cast<std::size_t>(xs.as_int()));
      const Object& prev = dict_get(trailer_out, "Prev");
      if (prev.is_int()) next.push_back(static_cast<std::size_t>(prev.as_int()));
      return true;
    }
    if (t.type != T::kInteger) continue;

    Parser p(data_, candidate);
    Parser::Indirect ind;
    try {
      ind = p.parse_indirect([this](Ref r) -> std::optional<std::int64_t> {
        Object o = get(r);
        if (o.is_int()) return o.as_int();
        return std::nullopt;
      });
    } catch (const Error&) {
      continue;
    }
    if (!ind.object.is_stream() || !ind.object.get("Type").is_name("XRef")) continue;
    const Stream& s = ind.object.as_stream();
    std::string bytes = decode_stream_data(s.dict, s.raw);
    const Object& w = dict_get(s.dict, "W");
    if (!w.is_array() || w.as_array().size() < 3) return false;
    int widths[3];
    for (int i = 0; i < 3; ++i) widths[i] = static_cast<int>(w.as_array()[static_cast<std::size_t>(i)].as_int());
    std::vector<std::int64_t> index;
    const Object& idx = dict_get(s.dict, "Index");
    if (idx.is_array()) {
      for (const Object& o : idx.as_array()) index.push_back(o.as_int());
    } else {
      index = {0, dict_get(s.dict, "Size").is_int() ? dict_get(s.dict, "Size").as_int() : 0};
    }
    std::size_t row = static_cast<std::size_t>(widths[0] + widths[1] + widths[2]);
    std::size_t pos = 0;
    auto field = [&](int width, std::int64_t fallback) {
      if (width == 0) return fallback;
      std::int64_t v = 0;
      for (int k = 0; k < width; ++k) v = (v << 8) | static_cast<unsigned char>(bytes[pos++]);
      return v;
    };
    for (std::size_t i = 0; i + 1 < index.size(); i += 2) {
      for (std::int64_t j = 0; j < index[i + 1]; ++j) {
        if (pos + row > bytes.size()) break;
        std::int64_t type = field(widths[0], 1);
        std::int64_t f2 = field(widths[1], 0);
        std::int64_t f3 = field(widths[2], 0);
        int num = static_cast<int>(index[i] + j);
        if (xref_.count(num)) continue;
        XrefEntry e;
        if (type == 1) {
          e.type = XrefEntry::Type::kOffset;
          e.offset = static_cast<std::size_t>(f2);
          e.gen = static_cast<int>(f3);
        } else if (type == 2) {
          e.type = XrefEntry::Type::kCompressed;
          e.offset = static_cast<std::size_t>(f2);
          e.gen = static_cast<int>(f3);
        }
        xref_[num] = e;
      }
    }
    trailer_out = s.dict;
    const Object& prev = dict_get(s.dict, "Prev");
    if (prev.is_int()) next.push_back(static_cast<std::size_t>(prev.as_int()));
    return true;
  }
  return false;
}

std::map<int, Document::XrefEntry> Document::scan_object_offsets() const {
  std::map<int, XrefEntry> found;
  std::size_t pos = 0;
  while ((pos = data_.find("obj", pos)) != std::string::npos) {
    std::size_t kw = pos;
    pos += 3;
    if (pos < data_.size() && !is_pdf_whitespace(data_[pos]) && !is_pdf_delimiter(data_[pos])) {
      continue;
    }
    // Walk back over "<num> <gen> ".
    std::size_t i = kw;
    while (i > 0 && is_pdf_whitespace(data_[i - 1])) --i;
    std::size_t gen_end = i;
    while (i > 0 && is_digit(data_[i - 1])) --i;
    if (i == gen_end) continue;
    std::size_t gen_start = i;
    while (i > 0 && is_pdf_whitespace(data_[i - 1])) --i;
    if (i == gen_start) continue;
    std::size_t num_end = i;
    while (i > 0 && is_digit(data_[i - 1])) --i;
    if (i == num_end) continue;
    if (i > 0 && !is_pdf_whitespace(data_[i - 1]) && !is_pdf_delimiter(data_[i - 1])) continue;
    XrefEntry e;
    e.type = XrefEntry::Type::kOffset;
    e.offset = i;
    e.gen = std::stoi(data_.substr(gen_start, gen_end - gen_start));
    found[std::stoi(data_.substr(i, num_end - i))] = e;
  }
  return found;
}

void Document::reconstruct_xref() {
  std::lock_guard lock(mutex_);
  reconstructed_ = scan_object_offsets();
  reconstructed_ready_ = true;

  // Trailers, newest last.
  Dict trailer;
  std::size_t tpos = 0;
  while ((tpos = data_.find("trailer", tpos)) != std::string::npos) {
    Parser p(data_, tpos + 7);
    Object t = p.parse_object();
    if (t.is_dict() && t.has("Root")) trailer = t.as_dict();
    tpos += 7;
  }

  xref_ = reconstructed_;
  cache_.clear();
  object_streams_.clear();

  // Objects that only live inside object streams, and xref-stream trailers.
  std::vector<std::pair<int, XrefEntry>> additions;
  for (auto& [num, entry] : reconstructed_) {
    Object o;
    try {
      o = get(Ref{num, entry.gen});
    } catch (const Error&) {
      continue;
    }
    if (!o.is_stream()) continue;
    if (o.get("Type").is_name("XRef") && o.has("Root") && trailer.empty()) {
      trailer = o.as_dict();
    }
    if (o.get("Type").is_name("ObjStm")) {
      try {
        std::string body = decode(o.as_stream());
        Lexer lex(body);
        auto n = o.get("N");
        std::int64_t count = n.is_int() ? n.as_int() : 0;
        for (std::int64_t k = 0; k < count; ++k) {
          Token objnum = lex.next();
          Token off = lex.next();
          if (objnum.type != Token::Type::kInteger || off.type != Token::Type::kInteger) break;
          XrefEntry c;
          c.type = XrefEntry::Type::kCompressed;
          c.offset = static_cast<std::size_t>(num);
          c.gen = static_cast<int>(k);
          additions.emplace_back(static_cast<int>(objnum.integer), c);
        }
      } catch (const Error&) {
      }
    }
  }
  for (auto& [num, c] : additions) {
    if (!xref_.count(num)) xref_[num] = c;
  }
  cache_.clear();

  if (!trailer.count("Root")) {
    for (auto& [num, entry] : xref_) {
      Object o;
      try {
        o = get(Ref{num, 0});
      } catch (const Error&) {
        continue;
      }
      if (o.is_dict() && o.get("Type").is_name("Catalog")) {
        trailer["Root"] = Ref{num, 0};
        break;
      }
    }
  }
  for (auto& [k, v] : trailer) {
    if (k != "Prev" && k != "XRefStm") trailer_.insert_or_assign(k, v);
  }
  if (!trailer_.count("Root")) throw ParseError("cannot locate document catalog");
}

Object Document::resolve(const Object& obj) const {
  Object cur = obj;
  for (int hops = 0; cur.is_ref() && hops < 32; ++hops) cur = get(cur.as_ref());
  return cur.is_ref() ? Object{} : cur;
}

Object Document::get(Ref ref) const {
  std::lock_guard lock(mutex_);
  auto it = cache_.find(ref.num);
  if (it != cache_.end()) return it->second;
  if (std::find(loading_.begin(), loading_.end(), ref.num) != loading_.end()) return {};
  loading_.push_back(ref.num);
  Object obj;
  try {
    obj = load_uncached(ref);
  } catch (...) {
    loading_.erase(std::find(loading_.begin(), loading_.end(), ref.num));
    throw;
  }
  loading_.erase(std::find(loading_.begin(), loading_.end(), ref.num));
  cache_[ref.num] = obj;
  return obj;
}

Object Document::load_uncached(Ref ref) const {
  auto try_entry = [&](const XrefEntry& e) -> std::optional<Object> {
    try {
      if (e.type == XrefEntry::Type::kOffset) return load_at_offset(ref, e.offset);
      if (e.type == XrefEntry::Type::kCompressed) {
        return load_compressed(ref, static_cast<int>(e.offset), e.gen);
      }
    } catch (const Error&) {
    }
    return std::nullopt;
  };

  auto it = xref_.find(ref.num);
  if (it != xref_.end()) {
    if (it->second.type == XrefEntry::Type::kFree) return {};
    if (auto o = try_entry(it->second)) return *o;
  }
  if (!reconstructed_ready_) {
    // Lazy recovery for a damaged offset: scan once, keep the index.
    reconstructed_ = scan_object_offsets();
    reconstructed_ready_ = true;
  }
  auto rit = reconstructed_.find(ref.num);
  if (rit != reconstructed_.end() && (it == xref_.end() || rit->second.offset != it->second.offset)) {
    if (auto o = try_entry(rit->second)) return *o;
  }
  return {};
}

Object Document::load_at_offset(Ref ref, std::size_t offset) const {
  for (std::size_t candidate : {offset, offset + header_offset_}) {
    if (candidate >= data_.size()) continue;
    Parser p(data_, candidate);
    Parser::Indirect ind;
    try {
      ind = p.parse_indirect([this](Ref r) -> std::optional<std::int64_t> {
        Object o = get(r);
        if (o.is_int()) return o.as_int();
        return std::nullopt;
      });
    } catch (const ParseError&) {
      continue;
    }
    if (ind.ref.num != ref.num) continue;
    if (security_ && !(encrypt_ref_ && encrypt_ref_->num == ref.num)) {
      return decrypt(ind.object, ind.ref);
    }
    return ind.object;
  }
  throw ParseError("object " + std::to_string(ref.num) + " not found at its xref offset");
}

Object Document::load_compressed(Ref ref, int stream_num, int index) const {
  std::shared_ptr<ObjectStream> os;
  auto it = object_streams_.find(stream_num);
  if (it != object_streams_.end()) {
    os = it->second;
  } else {
    Object s = get(Ref{stream_num, 0});
    if (!s.is_stream()) throw ParseError("object stream missing");
    os = std::make_shared<ObjectStream>();
    os->data = decode(s.as_stream());
    Object n = resolve(s.get("N"));
    Object first = resolve(s.get("First"));
    std::size_t base = first.is_int() ? static_cast<std::size_t>(first.as_int()) : 0;
    Lexer lex(os->data);
    for (std::int64_t k = 0; n.is_int() && k < n.as_int(); ++k) {
      Token num = lex.next();
      Token off = lex.next();
      if (num.type != Token::Type::kInteger || off.type != Token::Type::kInteger) break;
      os->offsets.emplace(static_cast<int>(num.integer), base + static_cast<std::size_t>(off.integer));
    }
    object_streams_[stream_num] = os;
  }
  (void)index;
  auto off = os->offsets.find(ref.num);
  if (off == os->offsets.end()) throw ParseError("object not in object stream");
  Parser p(os->data, off->second);
  return p.parse_object();
}

Object Document::decrypt(const Object& obj, Ref ref) const {
  switch (obj.kind()) {
    case Object::Kind::kString: {
      const String& s = obj.as_string_object();
      return String{security_->decrypt_string(ref, s.bytes), s.hex};
    }
    case Object::Kind::kArray: {
      Array out;
      out.reserve(obj.as_array().size());
      for (const Object& o : obj.as_array()) out.push_back(decrypt(o, ref));
      return out;
    }
    case Object::Kind::kDict: {
      Dict out;
      for (const auto& [k, v] : obj.as_dict()) out.emplace(k, decrypt(v, ref));
      return out;
    }
    case Object::Kind::kStream: {
      const Stream& s = obj.as_stream();
      Dict d;
      for (const auto& [k, v] : s.dict) d.emplace(k, decrypt(v, ref));
      std::string raw = security_->decrypt_stream(ref, s.raw, s.dict);
      return make_stream(std::move(d), std::move(raw));
    }
    default:
      return obj;
  }
}

void Document::build_page_list() {
  pages_.clear();
  Object cat = catalog();
  if (!cat.is_dict()) throw ParseError("document catalog is not a dictionary");
  std::vector<Ref> seen;
  collect_pages(cat.get("Pages"), Dict{}, seen, 0);
}

void Document::collect_pages(const Object& node_ref, const Dict& inherited, std::vector<Ref>& seen,
                             int depth) {
  if (depth > kMaxPageTreeDepth) return;
  Ref ref{};
  if (node_ref.is_ref()) {
    ref = node_ref.as_ref();
    if (std::find(seen.begin(), seen.end(), ref) != seen.end()) return;
    seen.push_back(ref);
  }
  Object node = resolve(node_ref);
  if (!node.is_dict()) return;
  const Dict& d = node.as_dict();
  Object kids = resolve(dict_get(d, "Kids"));
  bool is_leaf = dict_get(d, "Type").is_name("Page") || !kids.is_array();
  if (is_leaf) {
    PageNode page;
    page.ref = ref;
    page.dict = d;
    for (const auto& [k, v] : inherited) {
      if (!page.dict.count(k)) page.dict.emplace(k, v);
    }
    page.media_box = read_box(*this, dict_get(page.dict, "MediaBox"));
    pages_.push_back(std::move(page));
    return;
  }
  Dict next = inherited;
  for (const char* key : {"Resources", "MediaBox", "CropBox", "Rotate"}) {
    const Object& v = dict_get(d, key);
    if (!v.is_null()) next.insert_or_assign(key, v);
  }
  for (const Object& kid : kids.as_array()) collect_pages(kid, next, seen, depth + 1);
}

std::string Document::decode(const Stream& stream) const {
  Dict d = stream.dict;
  for (const char* key : {"Filter", "DecodeParms"}) {
    auto it = d.find(key);
    if (it == d.end()) continue;
    Object v = resolve(it->second);
    if (v.is_array()) {
      Array resolved;
      for (const Object& o : v.as_array()) resolved.push_back(resolve(o));
      v = Object(std::move(resolved));
    }
    it->second = v;
  }
  return decode_stream_data(d, stream.raw);
}

int Document::max_object_number() const {
  return xref_.empty() ? 0 : xref_.rbegin()->first;
}

std::string text_string_to_utf8(std::string_view bytes) {
  std::string out;
  if (bytes.size() >= 2 && static_cast<unsigned char>(bytes[0]) == 0xFE &&
      static_cast<unsigned char>(bytes[1]) == 0xFF) {
    for (std::size_t i = 2; i + 1 < bytes.size(); i += 2) {
      char32_t u = (static_cast<unsigned char>(bytes[i]) << 8) | static_cast<unsigned char>(bytes[i + 1]);
      if (u >= 0xD800 && u < 0xDC00 && i + 3 < bytes.size()) {
        char32_t lo = (static_cast<unsigned char>(bytes[i + 2]) << 8) |
                      static_cast<unsigned char>(bytes[i + 3]);
        if (lo >= 0xDC00 && lo < 0xE000) {
          u = 0x10000 + ((u - 0xD800) << 10) + (lo - 0xDC00);
          i += 2;
        }
      }
      append_utf8(out, u);
    }
    return out;
  }
  if (bytes.size() >= 3 && bytes.substr(0, 3) == "\xEF\xBB\xBF") return std::string(bytes.substr(3));
  for (char c : bytes) append_utf8(out, pdf_doc_encoding(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace pdftables::pdf
