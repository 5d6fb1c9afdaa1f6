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

#include "oracles.hpp"

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <sstream>

namespace fixture {

using pdftables::PageRect;
using pdftables::Ruling;

namespace {

bool side_covered(const std::vector<Ruling>& rulings, double pos, double a, double b, double tol) {
  return std::any_of(rulings.begin(), rulings.end(), [&](const Ruling& r) {
    return std::abs(r.position - pos) <= tol && r.start <= a + tol && r.end >= b - tol;
  });
}

bool encloses(const PageRect& outer, const PageRect& inner) {
  return outer.left <= inner.left && outer.right >= inner.right && outer.top <= inner.top &&
         outer.bottom >= inner.bottom && !(outer == inner);
}

}  // namespace

std::vector<PageRect> brute_force_cells(const std::vector<Ruling>& horizontal, const std::vector<Ruling>& vertical,
                                        double tol) {
  std::vector<double> xs, ys;
  for (const Ruling& v : vertical) xs.push_back(v.position);
  for (const Ruling& h : horizontal) ys.push_back(h.position);
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  std::vector<PageRect> closed;
  for (std::size_t x1 = 0; x1 < xs.size(); ++x1) {
    for (std::size_t x2 = x1 + 1; x2 < xs.size(); ++x2) {
      for (std::size_t y1 = 0; y1 < ys.size(); ++y1) {
        for (std::size_t y2 = y1 + 1; y2 < ys.size(); ++y2) {
          double l = xs[x1], r = xs[x2], t = ys[y1], b = ys[y2];
          if (r - l <= tol || b - t <= tol) continue;
          if (side_covered(horizontal, t, l, r, tol) && side_covered(horizontal, b, l, r, tol) &&
              side_covered(vertical, l, t, b, tol) && side_covered(vertical, r, t, b, tol)) {
            closed.push_back(PageRect{t, l, b, r});
          }
        }
      }
    }
  }
  std::vector<PageRect> minimal;
  for (const PageRect& c : closed) {
    bool has_inner = std::any_of(closed.begin(), closed.end(), [&](const PageRect& o) { return encloses(c, o); });
    if (!has_inner) minimal.push_back(c);
  }
  std::sort(minimal.begin(), minimal.end(), [](const PageRect& a, const PageRect& b) {
    if (a.top != b.top) return a.top < b.top;
    return a.left < b.left;
  });
  return minimal;
}

std::vector<std::vector<std::string>> parse_delimited(const std::string& text, char delimiter) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false, field_started = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
      continue;
    }
    if (c == '"' && !field_started) {
      quoted = true;
      field_started = true;
    } else if (c == delimiter) {
      record.push_back(field);
      field.clear();
      field_started = false;
    } else if (c == '\n') {
      record.push_back(field);
      records.push_back(record);
      record.clear();
      field.clear();
      field_started = false;
    } else {
      field.push_back(c);
      field_started = true;
    }
  }
  if (field_started || !record.empty()) {
    record.push_back(field);
    records.push_back(record);
  }
  return records;
}

TempDir::TempDir() {
  static std::atomic<int> counter{0};
  path_ = std::filesystem::temp_directory_path() /
          ("pdftables-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
  std::filesystem::remove_all(path_);
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace fixture
