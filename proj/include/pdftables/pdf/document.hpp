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
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "pdftables/pdf/crypt.hpp"
#include "pdftables/pdf/object.hpp"

namespace pdftables::pdf {

// One leaf of the page tree with inheritable attributes already pushed down
// (Resources, MediaBox, CropBox, Rotate).
struct PageNode {
  Ref ref;
  Dict dict;
  // llx, lly, urx, ury in default user space.
  std::array<double, 4> media_box{0, 0, 612, 792};
};

// Read-only view of a parsed PDF file. All accessors are safe to call from
// several threads; object loading is serialised internally.
class Document {
 public:
  static std::shared_ptr<const Document> open_file(const std::filesystem::path& path,
                                                   const std::string& password = {});
  static std::shared_ptr<const Document> open_bytes(std::string bytes,
                                                    const std::string& password = {});

  Document(const Document&) = delete;
  Document& operator=(const Document&) = delete;

  // Follows a chain of references; non-references are returned as-is.
  Object resolve(const Object& obj) const;
  Object get(Ref ref) const;

  const Dict& trailer() const { return trailer_; }
  Object catalog() const { return resolve(dict_get(trailer_, "Root")); }
  // Null when the file has no /Info dictionary.
  Object info() const { return resolve(dict_get(trailer_, "Info")); }

  std::size_t page_count() const { return pages_.size(); }
  // Zero-based.
  const PageNode& page(std::size_t index) const { return pages_.at(index); }
  const std::vector<PageNode>& pages() const { return pages_; }

  // Decodes a stream's filters, resolving indirect filter parameters.
  std::string decode(const Stream& stream) const;

  bool encrypted() const { return security_.has_value(); }
  const std::string& version() const { return version_; }
  int max_object_number() const;

 private:
  Document() = default;

  struct XrefEntry {
    enum class Type { kFree, kOffset, kCompressed };
    Type type = Type::kFree;
    std::size_t offset = 0;  // byte offset, or object-stream number
    int gen = 0;             // generation, or index inside the object stream
  };
  struct ObjectStream {
    std::string data;
    std::map<int, std::size_t> offsets;
  };

  void load(const std::string& password);
  void read_xref_chain(std::size_t offset);
  bool read_xref_section(std::size_t offset, Dict& trailer_out, std::vector<std::size_t>& next);
  void reconstruct_xref();
  std::map<int, XrefEntry> scan_object_offsets() const;
  void build_page_list();
  void collect_pages(const Object& node, const Dict& inherited, std::vector<Ref>& seen, int depth);

  Object load_uncached(Ref ref) const;
  Object load_at_offset(Ref ref, std::size_t offset) const;
  Object load_compressed(Ref ref, int stream_num, int index) const;
  Object decrypt(const Object& obj, Ref ref) const;

  std::string data_;
  std::string version_;
  std::size_t header_offset_ = 0;
  std::map<int, XrefEntry> xref_;
  Dict trailer_;
  std::vector<PageNode> pages_;
  std::optional<StandardSecurity> security_;
  std::optional<Ref> encrypt_ref_;

  mutable std::recursive_mutex mutex_;
  mutable std::map<int, Object> cache_;
  mutable std::map<int, std::shared_ptr<ObjectStream>> object_streams_;
  mutable std::map<int, XrefEntry> reconstructed_;
  mutable bool reconstructed_ready_ = false;
  mutable std::vector<int> loading_;
};

// PDF text string (PDFDocEncoding or UTF-16BE with BOM) to UTF-8.
std::string text_string_to_utf8(std::string_view bytes);

}  // namespace pdftables::pdf
