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
#include <memory>
#include <string>
#include <vector>

#include "pdftables/pdf/document.hpp"
#include "pdftables/pdf/object.hpp"

namespace pdftables::pdf {

// PDF syntax for a direct object. References are written as `N G R`.
std::string serialize_object(const Object& obj);

struct PageSource {
  std::shared_ptr<const Document> doc;
  std::size_t index = 0;  // zero-based
};

// Builds a new, unencrypted PDF holding copies of the given pages in order.
// Each page's object graph is copied with its inherited attributes made
// explicit; references to pages or page-tree nodes that are not part of the
// output are replaced by null. `info` becomes the /Info dictionary when
// non-empty.
std::string build_document(const std::vector<PageSource>& pages, const Dict& info = {});

}  // namespace pdftables::pdf
