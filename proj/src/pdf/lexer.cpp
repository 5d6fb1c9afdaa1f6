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

#include "pdftables/pdf/lexer.hpp"

#include <charconv>
#include <cstring>

#include "pdftables/error.hpp"

namespace pdftables::pdf {

bool is_pdf_whitespace(char c) {
  return c == ' ' || c == '\n' || c == '\r' || c == '\t' || c == '\f' || c == '\0';
}

bool is_pdf_delimiter(char c) {
  return c == '(' || c == ')' || c == '<' || c == '>' || c == '[' || c == ']' || c == '{' ||
         c == '}' || c == '/' || c == '%';
}

namespace {

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

bool is_regular(char c) { return !is_pdf_whitespace(c) && !is_pdf_delimiter(c); }

}  // namespace

void Lexer::skip_whitespace_and_comments() {
  while (pos_ < data_.size()) {
    char c = data_[pos_];
    if (is_pdf_whitespace(c)) {
      ++pos_;
    } else if (c == '%') {
      while (pos_ < data_.size() && data_[pos_] != '\n' && data_[pos_] != '\r') ++pos_;
    } else {
      break;
    }
  }
}

Token Lexer::next() {
  skip_whitespace_and_comments();
  Token tok;
  tok.offset = pos_;
  if (pos_ >= data_.size()) return tok;
  char c = data_[pos_];
  switch (c) {
    case '[':
      ++pos_;
      tok.type = Token::Type::kArrayOpen;
      return tok;
    case ']':
      ++pos_;
      tok.type = Token::Type::kArrayClose;
      return tok;
    case '(':
      return read_literal_string();
    case '/':
      return read_name();
    case '<':
      if (pos_ + 1 < data_.size() && data_[pos_ + 1] == '<') {
        pos_ += 2;
        tok.type = Token::Type::kDictOpen;
        return tok;
      }
      return read_hex_string();
    case '>':
      if (pos_ + 1 < data_.size() && data_[pos_ + 1] == '>') {
        pos_ += 2;
        tok.type = Token::Type::kDictClose;
        return tok;
      }
      // Stray '>': surface it as a keyword so callers can skip it.
      ++pos_;
      tok.type = Token::Type::kKeyword;
      tok.text = ">";
      return tok;
    case ')':
    case '{':
    case '}':
      ++pos_;
      tok.type = Token::Type::kKeyword;
      tok.text = std::string(1, c);
      return tok;
    default:
      break;
  }
  if ((c >= '0' && c <= '9') || c == '+' || c == '-' || c == '.') return read_number();
  std::size_t start = pos_;
  while (pos_ < data_.size() && is_regular(data_[pos_])) ++pos_;
  tok.type = Token::Type::kKeyword;
  tok.text = std::string(data_.substr(start, pos_ - start));
  return tok;
}

Token Lexer::read_number() {
  Token tok;
  tok.offset = pos_;
  std::size_t start = pos_;
  while (pos_ < data_.size() && is_regular(data_[pos_])) ++pos_;
  std::string_view word = data_.substr(start, pos_ - start);

  // Tolerate producer noise such as "--5" or "+.5" by normalising the sign.
  bool negative = false;
  std::size_t i = 0;
  while (i < word.size() && (word[i] == '+' || word[i] == '-')) {
    if (word[i] == '-') negative = !negative;
    ++i;
  }
  std::string_view body = word.substr(i);
  bool has_dot = body.find('.') != std::string_view::npos;
  bool numeric = !body.empty();
  for (char ch : body) {
    if (!((ch >= '0' && ch <= '9') || ch == '.')) numeric = false;
  }
  if (!numeric || body == ".") {
    if (word.find_first_not_of("+-.") == std::string_view::npos) {
      // "-" or "." alone: treat as zero, as most readers do.
      tok.type = Token::Type::kInteger;
      tok.integer = 0;
      return tok;
    }
    tok.type = Token::Type::kKeyword;
    tok.text = std::string(word);
    return tok;
  }
  if (!has_dot) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
    if (ec == std::errc()) {
      tok.type = Token::Type::kInteger;
      tok.integer = negative ? -v : v;
      return tok;
    }
  }
  // Only the first decimal point counts ("0.0.1" reads as 0.0).
  std::size_t dot = body.find('.');
  std::size_t second = body.find('.', dot + 1);
  std::string_view usable = body.substr(0, second);
  double v = 0;
  std::string buf(usable);
  if (!buf.empty() && buf.front() == '.') buf.insert(buf.begin(), '0');
  if (!buf.empty() && buf.back() == '.') buf.pop_back();
  std::from_chars(buf.data(), buf.data() + buf.size(), v);
  tok.type = Token::Type::kReal;
  tok.real = negative ? -v : v;
  return tok;
}

Token Lexer::read_literal_string() {
  Token tok;
  tok.offset = pos_;
  tok.type = Token::Type::kString;
  ++pos_;  // '('
  int depth = 1;
  std::string out;
  while (pos_ < data_.size()) {
    char c = data_[pos_++];
    if (c == '\\') {
      if (pos_ >= data_.size()) break;
      char e = data_[pos_++];
      switch (e) {
        case 'n': out.push_back('\n'); break;
        case 'r': out.push_back('\r'); break;
        case 't': out.push_back('\t'); break;
        case 'b': out.push_back('\b'); break;
        case 'f': out.push_back('\f'); break;
        case '(': out.push_back('('); break;
        case ')': out.push_back(')'); break;
        case '\\': out.push_back('\\'); break;
        case '\r':
          if (pos_ < data_.size() && data_[pos_] == '\n') ++pos_;
          break;
        case '\n':
          break;
        default:
          if (e >= '0' && e <= '7') {
            int v = e - '0';
            for (int k = 0; k < 2 && pos_ < data_.size() && data_[pos_] >= '0' && data_[pos_] <= '7'; ++k) {
              v = v * 8 + (data_[pos_++] - '0');
            }
            out.push_back(static_cast<char>(v & 0xff));
          } else {
            out.push_back(e);
          }
      }
    } else if (c == '(') {
      ++depth;
      out.push_back(c);
    } else if (c == ')') {
      if (--depth == 0) break;
      out.push_back(c);
    } else if (c == '\r') {
      if (pos_ < data_.size() && data_[pos_] == '\n') ++pos_;
      out.push_back('\n');
    } else {
      out.push_back(c);
    }
  }
  tok.text = std::move(out);
  return tok;
}

Token Lexer::read_hex_string() {
  Token tok;
  tok.offset = pos_;
  tok.type = Token::Type::kHexString;
  ++pos_;  // '<'
  std::string out;
  int hi = -1;
  while (pos_ < data_.size()) {
    char c = data_[pos_++];
    if (c == '>') break;
    int v = hex_value(c);
    if (v < 0) continue;
    if (hi < 0) {
      hi = v;
    } else {
      out.push_back(static_cast<char>(hi * 16 + v));
      hi = -1;
    }
  }
  if (hi >= 0) out.push_back(static_cast<char>(hi * 16));
  tok.text = std::move(out);
  return tok;
}

Token Lexer::read_name() {
  Token tok;
  tok.offset = pos_;
  tok.type = Token::Type::kName;
  ++pos_;  // '/'
  std::string out;
  while (pos_ < data_.size() && is_regular(data_[pos_])) {
    char c = data_[pos_++];
    if (c == '#' && pos_ + 1 < data_.size() && hex_value(data_[pos_]) >= 0 &&
        hex_value(data_[pos_ + 1]) >= 0) {
      out.push_back(static_cast<char>(hex_value(data_[pos_]) * 16 + hex_value(data_[pos_ + 1])));
      pos_ += 2;
    } else {
      out.push_back(c);
    }
  }
  tok.text = std::move(out);
  return tok;
}

Object Parser::parse_object(bool allow_refs) { return parse_from(lexer_.next(), allow_refs); }

Object Parser::parse_from(Token tok, bool allow_refs) {
  using T = Token::Type;
  switch (tok.type) {
    case T::kEof:
      return {};
    case T::kInteger: {
      if (allow_refs) {
        std::size_t save = lexer_.pos();
        Token gen = lexer_.next();
        if (gen.type == T::kInteger) {
          Token r = lexer_.next();
          if (r.type == T::kKeyword && r.text == "R") {
            return Ref{static_cast<int>(tok.integer), static_cast<int>(gen.integer)};
          }
        }
        lexer_.seek(save);
      }
      return tok.integer;
    }
    case T::kReal:
      return tok.real;
    case T::kString:
      return String{std::move(tok.text), false};
    case T::kHexString:
      return String{std::move(tok.text), true};
    case T::kName:
      return Name{std::move(tok.text)};
    case T::kArrayOpen: {
      Array arr;
      while (true) {
        Token t = lexer_.next();
        if (t.type == T::kArrayClose || t.type == T::kEof) break;
        if (t.type == T::kDictClose) continue;
        arr.push_back(parse_from(std::move(t), allow_refs));
      }
      return arr;
    }
    case T::kDictOpen: {
      Dict dict;
      while (true) {
        Token t = lexer_.next();
        if (t.type == T::kDictClose || t.type == T::kEof) break;
        if (t.type != T::kName) continue;  // skip junk keys
        std::size_t save = lexer_.pos();
        Token v = lexer_.next();
        if (v.type == T::kDictClose) {
          dict[t.text] = Object{};
          break;
        }
        if (v.type == T::kKeyword && (v.text == "endobj" || v.text == "stream")) {
          lexer_.seek(save);
          break;
        }
        Object value = parse_from(std::move(v), allow_refs);
        if (!value.is_null()) dict[t.text] = std::move(value);
      }
      return dict;
    }
    case T::kArrayClose:
    case T::kDictClose:
      return {};
    case T::kKeyword:
      if (tok.text == "true") return true;
      if (tok.text == "false") return false;
      return {};  // "null" and anything unrecognised
  }
  return {};
}

Parser::Indirect Parser::parse_indirect(const LengthResolver& resolve_length) {
  using T = Token::Type;
  Token num = lexer_.next();
  Token gen = lexer_.next();
  Token kw = lexer_.next();
  if (num.type != T::kInteger || gen.type != T::kInteger || kw.type != T::kKeyword ||
      kw.text != "obj") {
    throw ParseError("expected indirect object at offset " + std::to_string(num.offset));
  }
  Indirect result;
  result.ref = Ref{static_cast<int>(num.integer), static_cast<int>(gen.integer)};
  Object body = parse_object(true);
  std::size_t save = lexer_.pos();
  Token after = lexer_.next();
  if (body.is_dict() && after.type == T::kKeyword && after.text == "stream") {
    body = finish_stream(body.as_dict(), resolve_length);
  } else {
    lexer_.seek(save);
  }
  result.object = std::move(body);
  return result;
}

Object Parser::finish_stream(Dict dict, const LengthResolver& resolve_length) {
  std::string_view data = lexer_.data();
  std::size_t pos = lexer_.pos();
  // The keyword is followed by CRLF or LF (some writers emit a bare CR).
  if (pos < data.size() && data[pos] == '\r') ++pos;
  if (pos < data.size() && data[pos] == '\n') ++pos;
  std::size_t start = pos;

  std::optional<std::int64_t> length;
  const Object& len = dict_get(dict, "Length");
  if (len.is_int()) {
    length = len.as_int();
  } else if (len.is_ref() && resolve_length) {
    length = resolve_length(len.as_ref());
  }

  auto ends_properly = [&](std::size_t end) {
    Lexer probe(data, end);
    Token t = probe.next();
    return t.type == Token::Type::kKeyword && t.text.rfind("endstream", 0) == 0;
  };

  std::size_t end = std::string_view::npos;
  if (length && *length >= 0 && start + static_cast<std::size_t>(*length) <= data.size() &&
      ends_properly(start + static_cast<std::size_t>(*length))) {
    end = start + static_cast<std::size_t>(*length);
  } else {
    std::size_t found = data.find("endstream", start);
    if (found == std::string_view::npos) throw ParseError("unterminated stream");
    end = found;
    if (end > start && data[end - 1] == '\n') --end;
    if (end > start && data[end - 1] == '\r') --end;
  }
  std::string raw(data.substr(start, end - start));
  std::size_t es = data.find("endstream", end);
  lexer_.seek(es == std::string_view::npos ? data.size() : es + 9);
  return make_stream(std::move(dict), std::move(raw));
}

}  // namespace pdftables::pdf
