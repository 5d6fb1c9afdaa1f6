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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "pdftables/pdf/object.hpp"

namespace pdftables::pdf {

bool is_pdf_whitespace(char c);
bool is_pdf_delimiter(char c);

struct Token {
  enum class Type {
    kEof,
    kInteger,
    kReal,
    kString,
    kHexString,
    kName,
    kKeyword,
    kArrayOpen,
    kArrayClose,
    kDictOpen,
    kDictClose,
  };
  Type type = Type::kEof;
  // Decoded bytes for strings and names, the raw word for keywords.
  std::string text;
  std::int64_t integer = 0;
  double real = 0;
  std::size_t offset = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view data, std::size_t pos = 0) : data_(data), pos_(pos) {}

  Token next();
  std::size_t pos() const { return pos_; }
  void seek(std::size_t pos) { pos_ = pos; }
  void skip_whitespace_and_comments();
  std::string_view data() const { return data_; }
  bool at_end() const { return pos_ >= data_.size(); }

 private:
  Token read_number();
  Token read_literal_string();
  Token read_hex_string();
  Token read_name();

  std::string_view data_;
  std::size_t pos_;
};

// Resolves an indirect /Length while a stream body is being located.
using LengthResolver = std::function<std::optional<std::int64_t>(Ref)>;

class Parser {
 public:
  explicit Parser(std::string_view data, std::size_t pos = 0) : lexer_(data, pos) {}

  // Parses one direct object. Indirect references are recognised only when
  // `allow_refs` is set (content streams have none).
  Object parse_object(bool allow_refs = true);

  // Parses `N G obj ... endobj` at the current position. Returns the object
  // number pair and the body.
  struct Indirect {
    Ref ref;
    Object object;
  };
  Indirect parse_indirect(const LengthResolver& resolve_length);

  // Continues parsing with `tok` already read from the lexer.
  Object parse_from(Token tok, bool allow_refs);

  Lexer& lexer() { return lexer_; }

 private:
  Object finish_stream(Dict dict, const LengthResolver& resolve_length);

  Lexer lexer_;
};

}  // namespace pdftables::pdf
