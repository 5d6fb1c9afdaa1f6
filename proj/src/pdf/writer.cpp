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

#include "pdftables/pdf/writer.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <set>

#include "pdftables/error.hpp"
#include "pdftables/pdf/lexer.hpp"

namespace pdftables::pdf {
namespace {

void write_number(double v, std::string& out) {
  if (!std::isfinite(v)) v = 0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s = buf;
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  if (s == "-0" || s.empty()) s = "0";
  out += s;
}

void write_name(const std::string& name, std::string& out) {
  static const char kHex[] = "0123456789ABCDEF";
  out.push_back('/');
  for (unsigned char c : name) {
    if (c < 0x21 || c > 0x7e || c == '#' || is_pdf_delimiter(static_cast<char>(c))) {
      out.push_back('#');
      out.push_back(kHex[c >> 4]);
      out.push_back(kHex[c & 15]);
    } else {
      out.push_back(static_cast<char>(c));
    }
  }
}

void write_string(const String& s, std::string& out) {
  static const char kHex[] = "0123456789ABCDEF";
  if (s.hex) {
    out.push_back('<');
    for (unsigned char c : s.bytes) {
      out.push_back(kHex[c >> 4]);
      out.push_back(kHex[c & 15]);
    }
    out.push_back('>');
    return;
  }
  out.push_back('(');
  for (unsigned char c : s.bytes) {
    switch (c) {
      case '(':
      case ')':
      case '\\':
        out.push_back('\\');
        out.push_back(static_cast<char>(c));
        break;
      case '\r':
        out += "\\r";
        break;
      case '\n':
        out += "\\n";
        break;
      default:
        if (c < 0x20 || c == 0x7f) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\%03o", c);
          out += buf;
        } else {
          out.push_back(static_cast<char>(c));
        }
    }
  }
  out.push_back(')');
}

void write_dict(const Dict& dict, std::string& out);

void write_object(const Object& obj, std::string& out) {
  switch (obj.kind()) {
    case Object::Kind::kNull:
      out += "null";
      break;
    case Object::Kind::kBool:
      out += obj.as_bool() ? "true" : "false";
      break;
    case Object::Kind::kInt:
      out += std::to_string(obj.as_int());
      break;
    case Object::Kind::kReal:
      write_number(obj.as_number(), out);
      break;
    case Object::Kind::kString:
      write_string(obj.as_string_object(), out);
      break;
    case Object::Kind::kName:
      write_name(obj.as_name(), out);
      break;
    case Object::Kind::kArray: {
      out.push_back('[');
      bool first = true;
      for (const Object& item : obj.as_array()) {
        if (!first) out.push_back(' ');
        first = false;
        write_object(item, out);
      }
      out.push_back(']');
      break;
    }
    case Object::Kind::kDict:
      write_dict(obj.as_dict(), out);
      break;
    case Object::Kind::kStream:
      throw InvalidArgument("streams must be written as indirect objects");
    case Object::Kind::kRef:
      out += std::to_string(obj.as_ref().num) + " " + std::to_string(obj.as_ref().gen) + " R";
      break;
  }
}

void write_dict(const Dict& dict, std::string& out) {
  out += "<<";
  for (const auto& [key, value] : dict) {
    write_name(key, out);
    out.push_back(' ');
    write_object(value, out);
  }
  out += ">>";
}

// Copies object graphs out of source documents, renumbering as it goes.
class Copier {
 public:
  explicit Copier(std::vector<std::string>& bodies) : bodies_(bodies) {}

  int reserve() {
    bodies_.emplace_back();
    return static_cast<int>(bodies_.size());
  }

  void set_body(int num, std::string body) { bodies_[num - 1] = std::move(body); }

  // Maps (document, ref) pairs that must not be followed: included pages map
  // to their new numbers, everything else in `blocked` becomes null.
  void map_ref(const Document* doc, Ref ref, int num) { mapped_[{doc, ref}] = num; }
  void block(const Document* doc, Ref ref) { blocked_.insert({doc, ref}); }

  Object copy(const Document& doc, const Object& obj) {
    switch (obj.kind()) {
      case Object::Kind::kRef:
        return copy_ref(doc, obj.as_ref());
      case Object::Kind::kArray: {
        Array arr;
        arr.reserve(obj.as_array().size());
        for (const Object& item : obj.as_array()) arr.push_back(copy(doc, item));
        return arr;
      }
      case Object::Kind::kDict:
        return copy_dict(doc, obj.as_dict());
      case Object::Kind::kStream:
        throw InvalidArgument("direct stream object");
      default:
        return obj;
    }
  }

  Dict copy_dict(const Document& doc, const Dict& dict) {
    Dict out;
    for (const auto& [key, value] : dict) out[key] = copy(doc, value);
    return out;
  }

 private:
  Object copy_ref(const Document& doc, Ref ref) {
    auto key = std::make_pair(&doc, ref);
    if (auto it = mapped_.find(key); it != mapped_.end()) return Ref{it->second, 0};
    if (blocked_.count(key)) return Object();
    Object target = doc.get(ref);
    if (target.is_null()) return Object();
    if (target.is_dict()) {
      const Object& type = target.get("Type");
      if (type.is_name("Pages") || type.is_name("Page")) return Object();
    }
    int num = reserve();
    mapped_[key] = num;
    std::string body;
    if (target.is_stream()) {
      const Stream& s = target.as_stream();
      Dict dict = copy_dict(doc, s.dict);
      dict["Length"] = static_cast<std::int64_t>(s.raw.size());
      write_dict(dict, body);
      body += "\nstream\n";
      body += s.raw;
      body += "\nendstream";
    } else {
      write_object(copy(doc, target), body);
    }
    set_body(num, std::move(body));
    return Ref{num, 0};
  }

  std::vector<std::string>& bodies_;
  std::map<std::pair<const Document*, Ref>, int> mapped_;
  std::set<std::pair<const Document*, Ref>> blocked_;
};

}  // namespace

std::string serialize_object(const Object& obj) {
  std::string out;
  write_object(obj, out);
  return out;
}

std::string build_document(const std::vector<PageSource>& pages, const Dict& info) {
  std::vector<std::string> bodies;
  Copier copier(bodies);
  int catalog = copier.reserve();
  int tree = copier.reserve();

  std::vector<int> page_nums;
  for (const PageSource& src : pages) {
    page_nums.push_back(copier.reserve());
    copier.map_ref(src.doc.get(), src.doc->page(src.index).ref, page_nums.back());
  }
  // A page listed twice gets two copies; references from other objects point
  // at the later one.
  std::set<const Document*> seen_docs;
  for (const PageSource& src : pages) {
    if (!seen_docs.insert(src.doc.get()).second) continue;
    for (const PageNode& node : src.doc->pages()) copier.block(src.doc.get(), node.ref);
  }

  Array kids;
  for (std::size_t i = 0; i < pages.size(); ++i) {
    const PageSource& src = pages[i];
    const PageNode& node = src.doc->page(src.index);
    Dict dict;
    for (const auto& [key, value] : node.dict) {
      if (key == "Parent" || key == "B" || key == "StructParents") continue;
      dict[key] = copier.copy(*src.doc, value);
    }
    dict["Type"] = Object::name("Page");
    dict["Parent"] = Ref{tree, 0};
    if (!dict.count("MediaBox")) {
      const auto& mb = node.media_box;
      dict["MediaBox"] = Array{mb[0], mb[1], mb[2], mb[3]};
    }
    std::string body;
    write_dict(dict, body);
    copier.set_body(page_nums[i], std::move(body));
    kids.push_back(Ref{page_nums[i], 0});
  }

  Dict tree_dict{{"Type", Object::name("Pages")},
                 {"Kids", kids},
                 {"Count", static_cast<std::int64_t>(pages.size())}};
  copier.set_body(tree, serialize_object(tree_dict));
  Dict catalog_dict{{"Type", Object::name("Catalog")}, {"Pages", Ref{tree, 0}}};
  copier.set_body(catalog, serialize_object(catalog_dict));

  int info_num = 0;
  if (!info.empty()) {
    info_num = copier.reserve();
    copier.set_body(info_num, serialize_object(info));
  }

  std::string out = "%PDF-1.7\n%\xE2\xE3\xCF\xD3\n";
  std::vector<std::size_t> offsets;
  for (std::size_t i = 0; i < bodies.size(); ++i) {
    offsets.push_back(out.size());
    out += std::to_string(i + 1) + " 0 obj\n";
    out += bodies[i];
    out += "\nendobj\n";
  }
  std::size_t xref = out.size();
  out += "xref\n0 " + std::to_string(bodies.size() + 1) + "\n";
  out += "0000000000 65535 f\r\n";
  for (std::size_t off : offsets) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%010zu 00000 n\r\n", off);
    out += buf;
  }
  Dict trailer{{"Size", static_cast<std::int64_t>(bodies.size() + 1)}, {"Root", Ref{catalog, 0}}};
  if (info_num) trailer["Info"] = Ref{info_num, 0};
  out += "trailer\n" + serialize_object(trailer) + "\nstartxref\n" + std::to_string(xref) + "\n%%EOF\n";
  return out;
}

}  // namespace pdftables::pdf
