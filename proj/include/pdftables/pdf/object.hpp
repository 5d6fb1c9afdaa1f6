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

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace pdftables::pdf {

struct Ref {
  int num = 0;
  int gen = 0;
  friend auto operator<=>(const Ref&, const Ref&) = default;
};

struct Name {
  std::string value;
  friend bool operator==(const Name&, const Name&) = default;
};

// A string object. `bytes` holds the decoded (unescaped, decrypted) bytes;
// `hex` only records how it was written so a writer can mirror it.
struct String {
  std::string bytes;
  bool hex = false;
  friend bool operator==(const String&, const String&) = default;
};

class Object;
using Array = std::vector<Object>;
// Keys are stored without the leading slash.
using Dict = std::map<std::string, Object, std::less<>>;

struct Stream;

// Immutable-after-construction PDF value. Composite payloads are shared, so
// copies are cheap and safe to hand across threads.
class Object {
 public:
  enum class Kind { kNull, kBool, kInt, kReal, kString, kName, kArray, kDict, kStream, kRef };

  Object() = default;
  Object(bool v) : value_(v) {}  // NOLINT
  Object(int v) : value_(static_cast<std::int64_t>(v)) {}  // NOLINT
  Object(std::int64_t v) : value_(v) {}  // NOLINT
  Object(double v) : value_(v) {}  // NOLINT
  Object(String v) : value_(std::move(v)) {}  // NOLINT
  Object(Name v) : value_(std::move(v)) {}  // NOLINT
  Object(Array v) : value_(std::make_shared<const Array>(std::move(v))) {}  // NOLINT
  Object(Dict v) : value_(std::make_shared<const Dict>(std::move(v))) {}  // NOLINT
  Object(std::shared_ptr<const Stream> v) : value_(std::move(v)) {}  // NOLINT
  Object(Ref v) : value_(v) {}  // NOLINT

  static Object name(std::string v) { return Object(Name{std::move(v)}); }
  static Object string(std::string v) { return Object(String{std::move(v), false}); }

  Kind kind() const { return static_cast<Kind>(value_.index()); }
  bool is_null() const { return kind() == Kind::kNull; }
  bool is_bool() const { return kind() == Kind::kBool; }
  bool is_int() const { return kind() == Kind::kInt; }
  bool is_number() const { return kind() == Kind::kInt || kind() == Kind::kReal; }
  bool is_string() const { return kind() == Kind::kString; }
  bool is_name() const { return kind() == Kind::kName; }
  bool is_name(std::string_view n) const { return is_name() && as_name() == n; }
  bool is_array() const { return kind() == Kind::kArray; }
  bool is_dict() const { return kind() == Kind::kDict; }
  bool is_stream() const { return kind() == Kind::kStream; }
  bool is_ref() const { return kind() == Kind::kRef; }

  bool as_bool() const { return std::get<bool>(value_); }
  std::int64_t as_int() const;
  double as_number() const;
  const std::string& as_string() const { return std::get<String>(value_).bytes; }
  const String& as_string_object() const { return std::get<String>(value_); }
  const std::string& as_name() const { return std::get<Name>(value_).value; }
  const Array& as_array() const;
  // Dictionaries and streams both answer as_dict(); for a stream this is its
  // stream dictionary.
  const Dict& as_dict() const;
  const Stream& as_stream() const { return *std::get<std::shared_ptr<const Stream>>(value_); }
  std::shared_ptr<const Stream> stream_ptr() const {
    return std::get<std::shared_ptr<const Stream>>(value_);
  }
  Ref as_ref() const { return std::get<Ref>(value_); }

  // Lookup helpers that tolerate a wrong kind by returning a null object.
  const Object& get(std::string_view key) const;
  bool has(std::string_view key) const { return !get(key).is_null(); }

 private:
  std::variant<std::monostate, bool, std::int64_t, double, String, Name,
               std::shared_ptr<const Array>, std::shared_ptr<const Dict>,
               std::shared_ptr<const Stream>, Ref>
      value_;
};

struct Stream {
  Dict dict;
  // Bytes between `stream` and `endstream`, decrypted but still carrying
  // the filters named in the dictionary.
  std::string raw;
};

const Object& null_object();
const Object& dict_get(const Dict& dict, std::string_view key);

// Helpers for building objects in writers and tests.
Object make_stream(Dict dict, std::string raw);

}  // namespace pdftables::pdf
