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

#include "pdftables/pdf/object.hpp"

#include <cmath>

namespace pdftables::pdf {

const Object& null_object() {
  static const Object kNull;
  return kNull;
}

const Object& dict_get(const Dict& dict, std::string_view key) {
  auto it = dict.find(key);
  return it == dict.end() ? null_object() : it->second;
}

std::int64_t Object::as_int() const {
  if (kind() == Kind::kReal) return static_cast<std::int64_t>(std::llround(std::get<double>(value_)));
  return std::get<std::int64_t>(value_);
}

double Object::as_number() const {
  if (kind() == Kind::kInt) return static_cast<double>(std::get<std::int64_t>(value_));
  return std::get<double>(value_);
}

const Array& Object::as_array() const { return *std::get<std::shared_ptr<const Array>>(value_); }

const Dict& Object::as_dict() const {
  if (kind() == Kind::kStream) return as_stream().dict;
  return *std::get<std::shared_ptr<const Dict>>(value_);
}

const Object& Object::get(std::string_view key) const {
  if (kind() != Kind::kDict && kind() != Kind::kStream) return null_object();
  return dict_get(as_dict(), key);
}

Object make_stream(Dict dict, std::string raw) {
  auto s = std::make_shared<Stream>();
  s->dict = std::move(dict);
  s->raw = std::move(raw);
  return Object(std::shared_ptr<const Stream>(std::move(s)));
}

}  // namespace pdftables::pdf
