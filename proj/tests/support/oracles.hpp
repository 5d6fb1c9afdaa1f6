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

#include <filesystem>
#include <string>
#include <vector>

#include "pdftables/model.hpp"

namespace fixture {

// Every rectangle whose four sides are covered by single rulings (within
// tol) and which encloses no smaller such rectangle. Exhaustive over all
// pairs of distinct ruling positions; only for small inputs.
std::vector<pdftables::PageRect> brute_force_cells(const std::vector<pdftables::Ruling>& horizontal,
                                                   const std::vector<pdftables::Ruling>& vertical, double tol);

// Minimal RFC 4180 reader: records of fields, quotes doubled inside quoted
// fields, LF record separator.
std::vector<std::vector<std::string>> parse_delimited(const std::string& text, char delimiter);

// A fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

std::string read_file(const std::filesystem::path& path);

}  // namespace fixture
